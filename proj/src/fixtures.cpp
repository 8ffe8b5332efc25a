#include "qcat/fixtures.hpp"

namespace qcat {

namespace fixtures {

QuantalePtr QL3() {
  static const QuantalePtr q = chain_luk(3);
  return q;
}

QuantalePtr QM3() {
  static const QuantalePtr q = chain_min(3);
  return q;
}

QuantalePtr QN3() {
  static const QuantalePtr q = chain_nilmin(3);
  return q;
}

QuantalePtr Q2x2() {
  static const QuantalePtr q = product(two(), two());
  return q;
}

FiniteLattice D4() {
  return validate_lattice({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}},
                          {"bot", "a", "b", "top"});
}

FiniteLattice N5() {
  // 0 < b < a < 1 and 0 < c < 1 with c incomparable to a and b.
  return validate_lattice({{1, 1, 1, 1, 1},
                           {0, 1, 0, 0, 1},
                           {0, 1, 1, 0, 1},
                           {0, 0, 0, 1, 1},
                           {0, 0, 0, 0, 1}},
                          {"0", "a", "b", "c", "1"});
}

VCategory X2() {
  const auto q = QL3();
  const int h = q->index_of("1/2"), one = q->unit();
  return validate_category(VRelation(q, {{one, h}, {h, one}}), {"p", "q"});
}

VCategory W() {
  const auto q = Q2x2();
  const int top = q->top(), a = q->index_of("(1,0)"), b = q->index_of("(0,1)");
  return validate_category(VRelation(q, {{top, a}, {b, top}}), {"p", "q"});
}

VCategory codiscrete2() {
  return validate_category(VRelation(two(), {{1, 1}, {1, 1}}), {"p", "q"});
}

EvPeriodicSeq alternating() { return EvPeriodicSeq{{}, {0, 1}}; }

}  // namespace fixtures

namespace gen {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

VRelation random_relation(Rng& rng, const QuantalePtr& q, int src, int tgt) {
  VRelation r(q, src, tgt);
  for (int s = 0; s < src; ++s)
    for (int t = 0; t < tgt; ++t) r.set(s, t, uniform(rng, 0, q->size() - 1));
  return r;
}

VRelation reflexive_transitive_closure(VRelation r) {
  const Quantale& q = r.q();
  for (int s = 0; s < r.src(); ++s) r.set(s, s, q.join(r(s, s), q.unit()));
  while (true) {
    VRelation next = join(r, compose(r, r));
    if (next == r) return r;
    r = std::move(next);
  }
}

VCategory random_category(Rng& rng, const QuantalePtr& q, int n) {
  VRelation r = random_relation(rng, q, n, n);
  // Half the entries drop to bottom before closing.
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (uniform(rng, 0, 1)) r.set(s, t, q->bot());
  return validate_category(reflexive_transitive_closure(std::move(r)));
}

ObjectMap random_map(Rng& rng, int n, int m) {
  ObjectMap f(n);
  for (int& v : f) v = uniform(rng, 0, m - 1);
  return f;
}

Weight random_vector(Rng& rng, int base, int n) { return random_map(rng, n, base); }

FunctorSample random_functor(Rng& rng, const QuantalePtr& q, int nx, int ny) {
  VCategory y = random_category(rng, q, ny);
  ObjectMap f = random_map(rng, nx, ny);
  VRelation r = random_relation(rng, q, nx, nx);
  for (int s = 0; s < nx; ++s)
    for (int t = 0; t < nx; ++t) {
      if (uniform(rng, 0, 2) == 0) r.set(s, t, q->bot());
      r.set(s, t, q->meet(r(s, t), y(f[s], f[t])));
    }
  VCategory x = validate_category(reflexive_transitive_closure(std::move(r)));
  if (!is_functor(f, x, y))
    throw Error(ErrorKind::InternalLawViolation, "generated map is not a functor");
  return FunctorSample{std::move(x), std::move(y), std::move(f)};
}

std::vector<ObjectMap> all_functors(const VCategory& x, const VCategory& y) {
  std::vector<ObjectMap> out;
  for_each_vector(y.size(), x.size(), [&](const std::vector<int>& f) {
    if (is_functor(f, x, y)) out.push_back(f);
    return true;
  });
  return out;
}

std::vector<BoolMatrix> all_preorders(int n) {
  std::vector<BoolMatrix> out;
  const int cells = n * n;
  for (long bits = 0; bits < (1L << cells); ++bits) {
    BoolMatrix m(n, std::vector<bool>(n));
    bool ok = true;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) m[s][t] = bits >> (s * n + t) & 1L;
    for (int s = 0; s < n && ok; ++s) ok = m[s][s];
    for (int s = 0; s < n && ok; ++s)
      for (int t = 0; t < n && ok; ++t)
        for (int u = 0; u < n && ok; ++u) ok = !(m[s][t] && m[t][u]) || m[s][u];
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

std::vector<VCategory> all_categories(const QuantalePtr& q, int n) {
  double count = 1;
  for (int i = 0; i < n * n; ++i) count *= q->size();
  require_enumerable(count, "category enumeration");
  std::vector<VCategory> out;
  for_each_vector(q->size(), n * n, [&](const std::vector<int>& cells) {
    VRelation r(q, n, n);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) r.set(s, t, cells[s * n + t]);
    if (check_category(r)) out.push_back(validate_category(std::move(r)));
    return true;
  });
  return out;
}

}  // namespace gen

}  // namespace qcat
