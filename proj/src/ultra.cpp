#include "qcat/ultra.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace qcat {

namespace {

Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

void require_carrier(int n, const std::string& what) {
  if (n < 1 || n > kMaxUltraCarrier)
    throw Error(ErrorKind::SizeLimitExceeded,
                what + ": carrier of size " + std::to_string(n) + " outside 1.." +
                    std::to_string(kMaxUltraCarrier));
}

std::string mask_text(Mask m, int n) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (m >> i & 1u) {
      out += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  return out + "}";
}

struct UCache {
  std::vector<Ultrafilter> list;
  std::unordered_map<std::vector<bool>, int> index;
};

UCache& cache_for(int n) {
  static std::mutex mu;
  static std::map<int, UCache> caches;
  std::lock_guard<std::mutex> lock(mu);
  auto it = caches.find(n);
  if (it != caches.end()) return it->second;
  UCache c;
  for (int x = 0; x < n; ++x) {
    Ultrafilter f = unit_e(n, x);
    auto r = is_ultrafilter(f);
    if (!r)
      throw Error(ErrorKind::InternalLawViolation, "principal family fails " + r.detail, r.witness);
    c.index.emplace(f.member, x);
    c.list.push_back(std::move(f));
  }
  return caches.emplace(n, std::move(c)).first->second;
}

/// Shared pieces of the U-structure of a U-category.
struct UContext {
  int n;
  VRelation ua;        // U_xi a : UUX -> UX
  std::vector<int> m;  // UUX -> UX
  std::vector<int> e;  // X -> UX
};

UContext context(const UCategory& x) {
  const int n = x.size();
  return UContext{n, lax_extension(x.a), m_map(n), e_map(n)};
}

CheckReport udistributor_with(const VRelation& phi, const UCategory& x, const UCategory& y,
                              const UContext& cx) {
  const Quantale& q = x.q();
  require_same_quantale(phi.q(), q);
  require_same_quantale(y.q(), q);
  if (phi.src() != x.size() || phi.tgt() != y.size())
    throw Error(ErrorKind::DimensionMismatch, "U-distributor shape does not match categories");
  const int nuux = cx.ua.src();
  for (int big = 0; big < nuux; ++big)
    for (int r = 0; r < x.size(); ++r)
      for (int t = 0; t < y.size(); ++t) {
        const int lhs = q.tensor(cx.ua(big, r), phi(r, t));
        const int rhs = phi(cx.m[big], t);
        if (!q.leq(lhs, rhs))
          return CheckReport::fail("udistributor.right_action", {big, r, t}, q.name(lhs),
                                   q.name(rhs));
      }
  const VRelation uphi = lax_extension(phi);
  for (int big = 0; big < nuux; ++big)
    for (int s = 0; s < y.size(); ++s)
      for (int t = 0; t < y.size(); ++t) {
        const int lhs = q.tensor(uphi(big, s), y(s, t));
        const int rhs = phi(cx.m[big], t);
        if (!q.leq(lhs, rhs))
          return CheckReport::fail("udistributor.left_action", {big, s, t}, q.name(lhs),
                                   q.name(rhs));
      }
  return CheckReport::pass("udistributor");
}

}  // namespace

Mask Ultrafilter::core() const {
  Mask c = full_mask(n);
  for (Mask s = 0; s < member.size(); ++s)
    if (member[s]) c &= s;
  return c;
}

std::string Ultrafilter::render() const {
  const Mask c = core();
  if (c && !(c & (c - 1)) && contains(c)) {
    int x = 0;
    while (!(c >> x & 1u)) ++x;
    return "e(" + std::to_string(x) + ")";
  }
  return "family" + mask_text(c, n);
}

CheckReport is_ultrafilter(const Ultrafilter& f) {
  const std::string law = "ultrafilter";
  if (f.n < 1 || f.n > kMaxUltraCarrier || f.member.size() != (std::size_t{1} << f.n))
    return CheckReport::fail(law, {}, "-", "-", "malformed family");
  const Mask full = full_mask(f.n);
  if (f.member[0]) return CheckReport::fail(law, {0}, "{}", "-", "contains the empty set");
  for (Mask s = 0; s <= full; ++s) {
    if (f.member[s]) {
      for (int x = 0; x < f.n; ++x)
        if (!(s >> x & 1u) && !f.member[s | Mask{1} << x])
          return CheckReport::fail(law, {static_cast<int>(s), x}, mask_text(s, f.n),
                                   mask_text(s | Mask{1} << x, f.n), "not upward closed");
    }
    if (f.member[s] == f.member[full & ~s])
      return CheckReport::fail(law, {static_cast<int>(s)}, mask_text(s, f.n),
                               mask_text(full & ~s, f.n),
                               "set and complement not exactly one member");
  }
  const Mask c = f.core();
  if (!f.member[c])
    return CheckReport::fail(law, {static_cast<int>(c)}, mask_text(c, f.n), "-",
                             "not closed under intersection");
  return CheckReport::pass(law);
}

const std::vector<Ultrafilter>& ultrafilters(int n) {
  require_carrier(n, "ultrafilters");
  return cache_for(n).list;
}

int ultrafilter_index(const Ultrafilter& f) {
  require_carrier(f.n, "ultrafilter_index");
  const auto& c = cache_for(f.n);
  auto it = c.index.find(f.member);
  if (it == c.index.end())
    throw Error(ErrorKind::InternalLawViolation, "family is not an enumerated ultrafilter");
  return it->second;
}

Ultrafilter unit_e(int n, int x) {
  require_carrier(n, "unit_e");
  if (x < 0 || x >= n) throw Error(ErrorKind::InvalidArgument, "point out of range", {x});
  Ultrafilter f{n, std::vector<bool>(std::size_t{1} << n)};
  for (Mask s = 0; s <= full_mask(n); ++s) f.member[s] = s >> x & 1u;
  return f;
}

Ultrafilter apply_U(const std::vector<int>& f, int tgt, const Ultrafilter& x) {
  require_carrier(tgt, "apply_U");
  if (static_cast<int>(f.size()) != x.n)
    throw Error(ErrorKind::DimensionMismatch, "map length differs from carrier");
  std::vector<Mask> fibre(tgt, 0);
  for (int i = 0; i < x.n; ++i) {
    if (f[i] < 0 || f[i] >= tgt) throw Error(ErrorKind::InvalidArgument, "map value out of range");
    fibre[f[i]] |= Mask{1} << i;
  }
  const std::size_t total = std::size_t{1} << tgt;
  std::vector<Mask> pre(total, 0);
  Ultrafilter out{tgt, std::vector<bool>(total)};
  for (std::size_t a = 1; a < total; ++a) {
    int low = 0;
    while (!(a >> low & 1u)) ++low;
    pre[a] = pre[a & (a - 1)] | fibre[low];
  }
  for (std::size_t a = 0; a < total; ++a) out.member[a] = x.contains(pre[a]);
  return out;
}

Ultrafilter mult_m(int n, const Ultrafilter& big) {
  const auto& ux = ultrafilters(n);
  const int nu = static_cast<int>(ux.size());
  if (big.n != nu) throw Error(ErrorKind::DimensionMismatch, "mult_m expects a family on UX");
  const std::size_t total = std::size_t{1} << n;
  Ultrafilter out{n, std::vector<bool>(total)};
  for (std::size_t a = 0; a < total; ++a) {
    Mask sharp = 0;
    for (int i = 0; i < nu; ++i)
      if (ux[i].contains(static_cast<Mask>(a))) sharp |= Mask{1} << i;
    out.member[a] = big.contains(sharp);
  }
  return out;
}

std::vector<int> e_map(int n) {
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) out[x] = ultrafilter_index(unit_e(n, x));
  return out;
}

std::vector<int> m_map(int n) {
  const int nu = static_cast<int>(ultrafilters(n).size());
  const auto& uux = ultrafilters(nu);
  std::vector<int> out;
  for (const auto& big : uux) out.push_back(ultrafilter_index(mult_m(n, big)));
  return out;
}

std::vector<int> U_map(const std::vector<int>& f, int tgt) {
  const int n = static_cast<int>(f.size());
  std::vector<int> out;
  for (const auto& x : ultrafilters(n)) out.push_back(ultrafilter_index(apply_U(f, tgt, x)));
  return out;
}

std::optional<Ultrafilter> ultrafilter_between(int n, const std::vector<Mask>& filter,
                                               const std::vector<Mask>& ideal) {
  require_carrier(n, "ultrafilter_between");
  Mask inter = full_mask(n), uni = 0;
  for (Mask a : filter) inter &= a;
  for (Mask b : ideal) uni |= b;
  const Mask candidates = inter & ~uni & full_mask(n);
  if (!candidates) return std::nullopt;
  int x = 0;
  while (!(candidates >> x & 1u)) ++x;
  Ultrafilter u = unit_e(n, x);
  for (Mask a : filter)
    if (!u.contains(a)) return std::nullopt;
  for (Mask b : ideal)
    if (u.contains(b)) return std::nullopt;
  return u;
}

int xi(const Quantale& q, const Ultrafilter& v) {
  if (v.n != q.size()) throw Error(ErrorKind::DimensionMismatch, "xi expects a family on V");
  const FiniteLattice& l = q.lattice();
  int meet_of_joins = q.top(), join_of_meets = q.bot();
  for (Mask s = 0; s < v.member.size(); ++s)
    if (v.member[s]) {
      meet_of_joins = q.meet(meet_of_joins, l.join_mask(s));
      join_of_meets = q.join(join_of_meets, l.meet_mask(s));
    }
  if (meet_of_joins != join_of_meets)
    throw Error(ErrorKind::InternalLawViolation, "xi is not self-dual on " + v.render());
  return meet_of_joins;
}

CheckReport xi_hypotheses(const Quantale& q) {
  if (!q.completely_distributive())
    return CheckReport::fail("xi_hypotheses", {}, q.label(), "-",
                             "lattice is not completely distributive");
  return CheckReport::pass("xi_hypotheses");
}

CheckReport check_xi_algebra(const Quantale& q) {
  const int n = q.size();
  for (int u = 0; u < n; ++u)
    if (const int v = xi(q, unit_e(n, u)); v != u)
      return CheckReport::fail("xi.unit", {u}, q.name(v), q.name(u));
  const auto& uv = ultrafilters(n);
  std::vector<int> xis;
  for (const auto& v : uv) xis.push_back(xi(q, v));
  const auto& uuv = ultrafilters(static_cast<int>(uv.size()));
  for (int j = 0; j < static_cast<int>(uuv.size()); ++j) {
    const int lhs = xi(q, mult_m(n, uuv[j]));
    const int rhs = xi(q, apply_U(xis, n, uuv[j]));
    if (lhs != rhs) return CheckReport::fail("xi.multiplication", {j}, q.name(lhs), q.name(rhs));
  }
  return CheckReport::pass("xi_algebra");
}

namespace {

enum class Mode { Lax, Equal };

CheckReport check_binary(const Quantale& q, const std::string& law, Mode mode,
                         const std::function<int(int, int)>& op) {
  const int n = q.size();
  const int nn = n * n;
  require_carrier(nn, law);
  std::vector<int> p1(nn), p2(nn), opm(nn);
  for (int i = 0; i < nn; ++i) {
    p1[i] = i / n;
    p2[i] = i % n;
    opm[i] = op(i / n, i % n);
  }
  const auto& w = ultrafilters(nn);
  for (int j = 0; j < static_cast<int>(w.size()); ++j) {
    const int lhs = op(xi(q, apply_U(p1, n, w[j])), xi(q, apply_U(p2, n, w[j])));
    const int rhs = xi(q, apply_U(opm, n, w[j]));
    const bool ok = mode == Mode::Lax ? q.leq(lhs, rhs) : lhs == rhs;
    if (!ok) return CheckReport::fail(law, {j}, q.name(lhs), q.name(rhs));
  }
  return CheckReport::pass(law);
}

}  // namespace

CheckReport check_tensor_lax(const Quantale& q) {
  return check_binary(q, "tensor_lax", Mode::Lax, [&](int u, int v) { return q.tensor(u, v); });
}

CheckReport check_strict(const Quantale& q) {
  return check_binary(q, "strict", Mode::Equal, [&](int u, int v) { return q.tensor(u, v); });
}

CheckReport check_finite_sup_compatible(const Quantale& q) {
  return check_binary(q, "finite_sup_compatible", Mode::Equal,
                      [&](int u, int v) { return q.join(u, v); });
}

CheckReport check_pointwise_strict(const Quantale& q) {
  const int n = q.size();
  const auto& uv = ultrafilters(n);
  for (int u = 0; u < n; ++u) {
    std::vector<int> t(n);
    for (int v = 0; v < n; ++v) t[v] = q.tensor(u, v);
    for (int j = 0; j < static_cast<int>(uv.size()); ++j) {
      const int lhs = xi(q, apply_U(t, n, uv[j]));
      const int rhs = q.tensor(u, xi(q, uv[j]));
      if (lhs != rhs) return CheckReport::fail("pointwise_strict", {u, j}, q.name(lhs), q.name(rhs));
    }
  }
  return CheckReport::pass("pointwise_strict");
}

CheckReport check_compatible(const LaxMorphism& m) {
  const Quantale& q1 = *m.source;
  const Quantale& q2 = *m.target;
  const auto& uv = ultrafilters(q1.size());
  for (int j = 0; j < static_cast<int>(uv.size()); ++j) {
    const int lhs = xi(q2, apply_U(m.map, q2.size(), uv[j]));
    const int rhs = m(xi(q1, uv[j]));
    if (!q2.leq(lhs, rhs)) return CheckReport::fail("compatible", {j}, q2.name(lhs), q2.name(rhs));
  }
  return CheckReport::pass("compatible");
}

VRelation lax_extension(const VRelation& r) {
  const int nx = r.src(), ny = r.tgt();
  const Quantale& q = r.q();
  require_carrier(nx, "lax_extension source");
  require_carrier(ny, "lax_extension target");
  require_carrier(nx * ny, "lax_extension product carrier");
  require_enumerable(static_cast<double>(nx * ny) * static_cast<double>(std::size_t{1} << (nx * ny)),
                     "lax extension");
  const int nux = static_cast<int>(ultrafilters(nx).size());
  const int nuy = static_cast<int>(ultrafilters(ny).size());
  std::vector<int> p1(nx * ny), p2(nx * ny), rv(nx * ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      p1[x * ny + y] = x;
      p2[x * ny + y] = y;
      rv[x * ny + y] = r(x, y);
    }
  VRelation out(r.quantale(), nux, nuy);
  for (const auto& w : ultrafilters(nx * ny)) {
    const int i = ultrafilter_index(apply_U(p1, nx, w));
    const int j = ultrafilter_index(apply_U(p2, ny, w));
    out.set(i, j, q.join(out(i, j), xi(q, apply_U(rv, q.size(), w))));
  }
  const auto ex = e_map(nx), ey = e_map(ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (out(ex[x], ey[y]) != r(x, y))
        throw Error(ErrorKind::InternalLawViolation,
                    "lax extension differs from the relation on principal ultrafilters", {x, y});
  return out;
}

CheckReport check_ucategory(const VRelation& a) {
  const int n = a.tgt();
  require_carrier(n, "U-category");
  if (a.src() != static_cast<int>(ultrafilters(n).size()))
    throw Error(ErrorKind::DimensionMismatch, "U-structure must have one row per ultrafilter");
  const Quantale& q = a.q();
  const auto e = e_map(n);
  for (int x = 0; x < n; ++x)
    if (!q.leq(q.unit(), a(e[x], x)))
      return CheckReport::fail("ureflexive", {x}, q.name(q.unit()), q.name(a(e[x], x)));
  const VRelation ua = lax_extension(a);
  const auto m = m_map(n);
  for (int big = 0; big < ua.src(); ++big)
    for (int r = 0; r < a.src(); ++r)
      for (int x = 0; x < n; ++x) {
        const int lhs = q.tensor(ua(big, r), a(r, x));
        if (!q.leq(lhs, a(m[big], x)))
          return CheckReport::fail("utransitive", {big, r, x}, q.name(lhs), q.name(a(m[big], x)));
      }
  return CheckReport::pass("ucategory");
}

UCategory validate_ucategory(VRelation a, std::vector<std::string> objects) {
  const int n = a.tgt();
  if (objects.empty())
    for (int i = 0; i < n; ++i) objects.push_back("x" + std::to_string(i));
  if (static_cast<int>(objects.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "object name count differs from carrier");
  auto r = check_ucategory(a);
  if (!r)
    throw Error(r.law == "ureflexive" ? ErrorKind::NotReflexive : ErrorKind::NotTransitive,
                r.law + " fails: " + r.lhs + " vs " + r.rhs, r.witness);
  return UCategory{std::move(a), std::move(objects)};
}

UCategory unit_ucategory(const QuantalePtr& q) {
  return validate_ucategory(VRelation(q, 1, 1, q->unit()), {"*"});
}

UCategory ucategory_from_preorder(const BoolMatrix& order) {
  const int n = static_cast<int>(order.size());
  const auto e = e_map(n);
  VRelation a(two(), n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.set(e[x], y, order[x][y] ? 1 : 0);
  return validate_ucategory(std::move(a));
}

CheckReport is_ufunctor(const ObjectMap& f, const UCategory& x, const UCategory& y) {
  require_same_quantale(x.q(), y.q());
  if (static_cast<int>(f.size()) != x.size())
    throw Error(ErrorKind::DimensionMismatch, "object map length differs from domain size");
  const auto uf = U_map(f, y.size());
  const Quantale& q = x.q();
  for (int i = 0; i < x.a.src(); ++i)
    for (int t = 0; t < x.size(); ++t)
      if (!q.leq(x(i, t), y(uf[i], f[t])))
        return CheckReport::fail("ufunctor", {i, t}, q.name(x(i, t)), q.name(y(uf[i], f[t])));
  return CheckReport::pass("ufunctor");
}

VRelation kleisli_compose(const VRelation& psi, const VRelation& phi) {
  require_same_quantale(psi.q(), phi.q());
  const int nx = phi.src();
  if (psi.src() != static_cast<int>(ultrafilters(phi.tgt()).size()))
    throw Error(ErrorKind::DimensionMismatch, "kleisli_compose: middle carriers differ");
  const VRelation mop = opposite(from_map(phi.quantale(), m_map(nx), nx));
  return compose(psi, compose(lax_extension(phi), mop));
}

CheckReport is_udistributor(const VRelation& phi, const UCategory& x, const UCategory& y) {
  return udistributor_with(phi, x, y, context(x));
}

CheckReport is_adjoint_udist(const VRelation& phi, const VRelation& psi, const UCategory& x,
                             const UCategory& y) {
  if (auto r = is_udistributor(phi, x, y); !r) return r;
  if (auto r = is_udistributor(psi, y, x); !r) return r;
  const VRelation unit = kleisli_compose(psi, phi);
  const VRelation counit = kleisli_compose(phi, psi);
  if (auto r = is_udistributor(unit, x, x); !r) return r;
  if (auto r = is_udistributor(counit, y, y); !r) return r;
  if (auto r = check_leq("uadjoint.unit", x.a, unit); !r) return r;
  if (auto r = check_leq("uadjoint.counit", counit, y.a); !r) return r;
  return CheckReport::pass("uadjoint");
}

VRelation uweight_relation(const UCategory& x, const Weight& w, Side side) {
  const int n = x.size();
  if (static_cast<int>(w.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "U-weight length differs from carrier");
  VRelation r(x.quantale(), side == Side::Left ? 1 : n, side == Side::Left ? n : 1);
  for (int i = 0; i < n; ++i) {
    if (w[i] < 0 || w[i] >= x.q().size())
      throw Error(ErrorKind::InvalidArgument, "weight entry is not an element index");
    if (side == Side::Left)
      r.set(0, i, w[i]);
    else
      r.set(i, 0, w[i]);
  }
  return r;
}

CheckReport is_adjoint_udist(const UCategory& x, const Weight& phi, const Weight& psi) {
  const Quantale& q = x.q();
  const UCategory g = unit_ucategory(x.quantale());
  if (auto r = is_udistributor(uweight_relation(x, phi, Side::Left), g, x); !r) return r;
  if (auto r = is_udistributor(uweight_relation(x, psi, Side::Right), x, g); !r) return r;
  const VRelation uphi = lax_extension(uweight_relation(x, phi, Side::Left));
  int unit = q.bot();
  for (int z = 0; z < x.a.src(); ++z) unit = q.join(unit, q.tensor(psi[z], uphi(0, z)));
  if (!q.leq(q.unit(), unit))
    return CheckReport::fail("uadjoint.unit", {}, q.name(q.unit()), q.name(unit));
  for (int z = 0; z < x.a.src(); ++z)
    for (int t = 0; t < x.size(); ++t) {
      const int lhs = q.tensor(psi[z], phi[t]);
      if (!q.leq(lhs, x(z, t)))
        return CheckReport::fail("uadjoint.counit", {z, t}, q.name(lhs), q.name(x(z, t)));
    }
  return CheckReport::pass("uadjoint");
}

CheckReport is_uweight(const UCategory& x, const Weight& w, Side side) {
  const UCategory g = unit_ucategory(x.quantale());
  const VRelation r = uweight_relation(x, w, side);
  return side == Side::Left ? is_udistributor(r, g, x) : is_udistributor(r, x, g);
}

std::vector<Weight> enumerate_uweights(const UCategory& x, Side side) {
  double count = 1;
  for (int i = 0; i < x.size(); ++i) count *= x.q().size();
  require_enumerable(count, "U-weight enumeration");
  const UCategory g = unit_ucategory(x.quantale());
  const UContext cx = context(x);
  const UContext cg = context(g);
  std::vector<Weight> out;
  for_each_vector(x.q().size(), x.size(), [&](const std::vector<int>& w) {
    const VRelation r = uweight_relation(x, w, side);
    const bool ok = side == Side::Left ? udistributor_with(r, g, x, cg).ok
                                       : udistributor_with(r, x, g, cx).ok;
    if (ok) out.push_back(w);
    return true;
  });
  return out;
}

Weight ulower_star(const UCategory& x, int obj) {
  const int row = e_map(x.size())[obj];
  Weight w(x.size());
  for (int t = 0; t < x.size(); ++t) w[t] = x(row, t);
  return w;
}

Weight uupper_star(const UCategory& x, int obj) {
  Weight w(x.a.src());
  for (int i = 0; i < x.a.src(); ++i) w[i] = x(i, obj);
  return w;
}

UGraph ugraph(const ObjectMap& f, const UCategory& x, const UCategory& y) {
  if (auto r = is_ufunctor(f, x, y); !r)
    throw Error(ErrorKind::NotAFunctor, "U-graph needs a U-functor", r.witness);
  const VRelation uf = from_map(x.quantale(), U_map(f, y.size()), y.a.src());
  const VRelation fop = opposite(from_map(x.quantale(), f, y.size()));
  return UGraph{compose(y.a, uf), compose(fop, y.a)};
}

CheckReport is_ufully_faithful(const ObjectMap& f, const UCategory& x, const UCategory& y) {
  auto g = ugraph(f, x, y);
  return check_eq("ufully_faithful", kleisli_compose(g.upper, g.lower), x.a);
}

CheckReport is_ufully_dense(const ObjectMap& f, const UCategory& x, const UCategory& y) {
  auto g = ugraph(f, x, y);
  return check_eq("ufully_dense", kleisli_compose(g.lower, g.upper), y.a);
}

VCategory underlying_vcat(const UCategory& x) {
  const auto e = e_map(x.size());
  VRelation a0(x.quantale(), x.size(), x.size());
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < x.size(); ++t) a0.set(s, t, x(e[s], t));
  return validate_category(std::move(a0), x.objects);
}

VCategory hat_structure(const UCategory& x) {
  const int n = x.size();
  const VRelation mop = opposite(from_map(x.quantale(), m_map(n), n));
  std::vector<std::string> names;
  for (const auto& u : ultrafilters(n)) names.push_back(u.render());
  return validate_category(compose(lax_extension(x.a), mop), std::move(names));
}

namespace {

Weight phi_M_raw(const UCategory& x, Mask m) {
  const Quantale& q = x.q();
  const auto& ux = ultrafilters(x.size());
  Weight w(x.size(), q.bot());
  for (int i = 0; i < static_cast<int>(ux.size()); ++i)
    if (ux[i].contains(m))
      for (int t = 0; t < x.size(); ++t) w[t] = q.join(w[t], x(i, t));
  return w;
}

}  // namespace

Weight phi_M(const UCategory& x, Mask m) {
  Weight w = phi_M_raw(x, m);
  if (auto r = is_uweight(x, w, Side::Left); !r)
    throw Error(ErrorKind::InternalLawViolation, "phi_M is not a U-distributor", r.witness);
  return w;
}

CheckReport check_phi_meet(const UCategory& x) {
  const Quantale& q = x.q();
  const int n = x.size();
  const std::size_t total = std::size_t{1} << n;
  std::vector<Weight> phis(total);
  for (std::size_t s = 0; s < total; ++s) phis[s] = phi_M_raw(x, static_cast<Mask>(s));
  const auto& ux = ultrafilters(n);
  for (int i = 0; i < static_cast<int>(ux.size()); ++i)
    for (int t = 0; t < n; ++t) {
      int acc = q.top();
      for (std::size_t s = 0; s < total; ++s)
        if (ux[i].contains(static_cast<Mask>(s))) acc = q.meet(acc, phis[s][t]);
      if (acc != x(i, t)) return CheckReport::fail("phi_meet", {i, t}, q.name(x(i, t)), q.name(acc));
    }
  return CheckReport::pass("phi_meet");
}

CheckReport check_phi_laws(const UCategory& x) {
  const Quantale& q = x.q();
  const int n = x.size();
  const Weight empty = phi_M(x, 0);
  for (int t = 0; t < n; ++t)
    if (empty[t] != q.bot())
      return CheckReport::fail("phi_empty", {t}, q.name(empty[t]), q.name(q.bot()));
  const std::size_t total = std::size_t{1} << n;
  std::vector<Weight> phis(total);
  for (std::size_t s = 0; s < total; ++s) phis[s] = phi_M(x, static_cast<Mask>(s));
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b)
      for (int t = 0; t < n; ++t) {
        const int lhs = phis[a | b][t];
        const int rhs = q.join(phis[a][t], phis[b][t]);
        if (lhs != rhs)
          return CheckReport::fail("phi_union", {static_cast<int>(a), static_cast<int>(b), t},
                                   q.name(lhs), q.name(rhs));
      }
  return CheckReport::pass("phi_laws");
}

VCatCHSpace validate_vcat_ch(VCategory x, std::vector<int> alpha) {
  const int n = x.size();
  const Quantale& q = x.q();
  const auto& ux = ultrafilters(n);
  if (alpha.size() != ux.size())
    throw Error(ErrorKind::DimensionMismatch, "alpha must be defined on every ultrafilter");
  for (int v : alpha)
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidArgument, "alpha value out of range");
  const auto e = e_map(n);
  for (int s = 0; s < n; ++s)
    if (alpha[e[s]] != s)
      throw Error(ErrorKind::ValidationFailed, "alpha fails the unit law at " + x.objects[s], {s});
  const auto m = m_map(n);
  const auto ua = U_map(alpha, n);
  for (int j = 0; j < static_cast<int>(m.size()); ++j)
    if (alpha[m[j]] != alpha[ua[j]])
      throw Error(ErrorKind::ValidationFailed, "alpha fails the multiplication law", {j});

  const VRelation ua0 = lax_extension(x.a);
  std::vector<int> functor_witness;
  for (int i = 0; i < ua0.src() && functor_witness.empty(); ++i)
    for (int j = 0; j < ua0.tgt() && functor_witness.empty(); ++j)
      if (!q.leq(ua0(i, j), x(alpha[i], alpha[j]))) functor_witness = {i, j};

  std::vector<int> p1(n * n), p2(n * n), av(n * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      p1[s * n + t] = s;
      p2[s * n + t] = t;
      av[s * n + t] = x(s, t);
    }
  bool ufunctor = true;
  for (const auto& w : ultrafilters(n * n)) {
    const int i = ultrafilter_index(apply_U(p1, n, w));
    const int j = ultrafilter_index(apply_U(p2, n, w));
    const int v = xi(q, apply_U(av, q.size(), w));
    if (!q.leq(q.unit(), q.hom(v, x(alpha[i], alpha[j])))) ufunctor = false;
  }
  if (ufunctor != functor_witness.empty())
    throw Error(ErrorKind::InternalLawViolation,
                "the two forms of compatibility between alpha and the structure disagree");
  if (!functor_witness.empty())
    throw Error(ErrorKind::ValidationFailed, "alpha is not a V-functor", functor_witness);

  if (q.unit_is_top()) {
    for (int s = 0; s < n; ++s)
      for (int u = 0; u < q.size(); ++u) {
        Mask out_ball = 0, in_ball = 0;
        for (int t = 0; t < n; ++t) {
          if (q.leq(u, x(s, t))) out_ball |= Mask{1} << t;
          if (q.leq(u, x(t, s))) in_ball |= Mask{1} << t;
        }
        for (int i = 0; i < static_cast<int>(ux.size()); ++i) {
          const int lim = alpha[i];
          if ((ux[i].contains(out_ball) && !(out_ball >> lim & 1u)) ||
              (ux[i].contains(in_ball) && !(in_ball >> lim & 1u)))
            throw Error(ErrorKind::InternalLawViolation, "closed ball is not closed", {s, u, i});
        }
      }
  }
  return VCatCHSpace{std::move(x), std::move(alpha)};
}

VCatCHSpace quantale_ch_space(const QuantalePtr& q) {
  std::vector<int> alpha;
  for (const auto& v : ultrafilters(q->size())) alpha.push_back(xi(*q, v));
  return validate_vcat_ch(quantale_category(q), std::move(alpha));
}

UCategory functor_K(const VCatCHSpace& s) {
  const int n = s.base.size();
  UCategory k =
      validate_ucategory(compose(s.base.a, from_map(s.base.quantale(), s.alpha, n)), s.base.objects);
  if (underlying_vcat(k).a != s.base.a)
    throw Error(ErrorKind::InternalLawViolation, "underlying structure of K differs from a_0");
  return k;
}

UCategory hom_xi_category(const QuantalePtr& q) {
  const auto& uv = ultrafilters(q->size());
  VRelation a(q, static_cast<int>(uv.size()), q->size());
  for (int i = 0; i < static_cast<int>(uv.size()); ++i)
    for (int v = 0; v < q->size(); ++v) a.set(i, v, q->hom(xi(*q, uv[i]), v));
  return validate_ucategory(std::move(a), q->lattice().names());
}

CheckReport representation_hypotheses(const Quantale& q) {
  const std::string law = "representation_hypotheses";
  if (!q.completely_distributive())
    return CheckReport::fail(law, {}, q.label(), "-", "lattice is not completely distributive");
  if (!q.unit_is_top()) return CheckReport::fail(law, {}, q.name(q.unit()), q.name(q.top()), "unit is not the top");
  if (auto r = is_approximated(q.lattice(), q.totally_below(), q.unit()); !r)
    return CheckReport::fail(law, r.witness, r.lhs, r.rhs, "unit is not approximated");
  return CheckReport::pass(law);
}

Representation representing_ultrafilter(const UCategory& x, const Weight& phi) {
  const Quantale& q = x.q();
  const int n = x.size();
  if (auto h = representation_hypotheses(q); !h) throw Error(ErrorKind::HypothesesUnmet, h.detail);
  if (!is_uweight(x, phi, Side::Left))
    throw Error(ErrorKind::NotLeftAdjoint, "input is not a left U-weight", phi);
  const auto rights = enumerate_uweights(x, Side::Right);
  bool adjoint = false;
  for (const auto& psi : rights)
    if (is_adjoint_udist(x, phi, psi)) {
      adjoint = true;
      break;
    }
  if (!adjoint) throw Error(ErrorKind::NotLeftAdjoint, "no right adjoint exists", phi);

  int total = q.bot();
  for (int v : phi) total = q.join(total, v);
  if (!q.leq(q.unit(), total))
    throw Error(ErrorKind::InternalLawViolation, "left adjoint with join below the unit", phi);
  const auto pointwise_leq = [&](const Weight& a, const Weight& b) {
    for (int t = 0; t < n; ++t)
      if (!q.leq(a[t], b[t])) return false;
    return true;
  };
  if (is_join_irreducible(q.lattice(), q.unit())) {
    const auto lefts = enumerate_uweights(x, Side::Left);
    for (const auto& p1 : lefts)
      for (const auto& p2 : lefts) {
        Weight sup(n);
        for (int t = 0; t < n; ++t) sup[t] = q.join(p1[t], p2[t]);
        if (pointwise_leq(phi, sup) && !pointwise_leq(phi, p1) && !pointwise_leq(phi, p2))
          throw Error(ErrorKind::InternalLawViolation, "left adjoint is not irreducible", phi);
      }
  }

  Representation rep;
  const TotallyBelow& tb = q.totally_below();
  for (int u = 0; u < q.size(); ++u) {
    if (!tb(u, q.unit())) continue;
    Mask a = 0;
    for (int t = 0; t < n; ++t)
      if (q.leq(u, phi[t])) a |= Mask{1} << t;
    if (!a) throw Error(ErrorKind::InternalLawViolation, "empty approximating set", {u});
    rep.filter_base.push_back(a);
  }
  for (Mask a : rep.filter_base)
    for (Mask b : rep.filter_base) {
      bool below = false;
      for (Mask c : rep.filter_base) below = below || (c & ~(a & b)) == 0;
      if (!below) throw Error(ErrorKind::InternalLawViolation, "approximating sets not directed");
    }
  const std::size_t sets = std::size_t{1} << n;
  std::vector<Mask> filter;
  for (std::size_t s = 0; s < sets; ++s)
    for (Mask a : rep.filter_base)
      if ((a & ~static_cast<Mask>(s)) == 0) {
        filter.push_back(static_cast<Mask>(s));
        break;
      }
  std::vector<bool> in_ideal(sets);
  for (std::size_t s = 0; s < sets; ++s)
    if (!pointwise_leq(phi, phi_M(x, static_cast<Mask>(s)))) {
      in_ideal[s] = true;
      rep.ideal.push_back(static_cast<Mask>(s));
    }
  for (Mask a : rep.ideal)
    for (Mask b : rep.ideal)
      if (!in_ideal[a | b]) throw Error(ErrorKind::InternalLawViolation, "ideal not closed under unions");
  for (Mask a : filter)
    if (in_ideal[a]) throw Error(ErrorKind::InternalLawViolation, "filter meets ideal", {static_cast<int>(a)});
  auto u = ultrafilter_between(n, filter, rep.ideal);
  if (!u) throw Error(ErrorKind::InternalLawViolation, "no ultrafilter separates filter and ideal");
  rep.index = ultrafilter_index(*u);
  rep.ultrafilter = std::move(*u);
  for (int t = 0; t < n; ++t)
    if (x(rep.index, t) != phi[t])
      throw Error(ErrorKind::InternalLawViolation, "constructed ultrafilter does not represent the weight",
                  {rep.index, t});
  return rep;
}

CheckReport is_cauchy_complete_ucat(const UCategory& x) {
  if (auto r = check_phi_meet(x); !r)
    throw Error(ErrorKind::InternalLawViolation, "phi_A meet identity fails", r.witness);
  const Quantale& q = x.q();
  const auto lefts = enumerate_uweights(x, Side::Left);
  const auto rights = enumerate_uweights(x, Side::Right);
  require_enumerable(static_cast<double>(lefts.size()) * rights.size(), "U-adjoint pair search");
  std::map<Weight, Weight> right_of, left_of;
  std::vector<Weight> lowers, uppers;
  for (int s = 0; s < x.size(); ++s) {
    lowers.push_back(ulower_star(x, s));
    uppers.push_back(uupper_star(x, s));
  }
  for (const auto& phi : lefts)
    for (const auto& psi : rights) {
      if (!is_adjoint_udist(x, phi, psi)) continue;
      if (auto [it, fresh] = right_of.emplace(phi, psi); !fresh && it->second != psi)
        throw Error(ErrorKind::InternalLawViolation, "a left U-weight has two right adjoints");
      if (auto [it, fresh] = left_of.emplace(psi, phi); !fresh && it->second != phi)
        throw Error(ErrorKind::InternalLawViolation, "a right U-weight has two left adjoints");
      bool represented = false;
      for (int s = 0; s < x.size() && !represented; ++s)
        represented = lowers[s] == phi && uppers[s] == psi;
      if (!represented) {
        Weight wit = phi;
        wit.insert(wit.end(), psi.begin(), psi.end());
        return CheckReport::fail("ucauchy_complete", wit, render_weight(q, phi),
                                 render_weight(q, psi), "adjoint pair not represented by a point");
      }
    }
  return CheckReport::pass("ucauchy_complete");
}

UCategory free_ucategory(const VCategory& x) {
  const int n = x.size();
  const VRelation eop = opposite(from_map(x.quantale(), e_map(n), n));
  return validate_ucategory(compose(eop, lax_extension(x.a)), x.objects);
}

Reflection ureflect_weight(const UCategory& x, const Weight& phi) {
  const Quantale& q = x.q();
  const int n = x.size();
  const VCategory x0 = underlying_vcat(x);
  if (auto r = is_weight(x0, phi, Side::Left); !r)
    throw Error(ErrorKind::NotADistributor, "reflection needs a left weight of X_0", r.witness);
  const auto lefts = enumerate_uweights(x, Side::Left);
  Weight out(n, q.top());
  for (const auto& g : lefts) {
    bool above = true;
    for (int t = 0; t < n && above; ++t) above = q.leq(phi[t], g[t]);
    if (above)
      for (int t = 0; t < n; ++t) out[t] = q.meet(out[t], g[t]);
  }
  if (!is_uweight(x, out, Side::Left))
    throw Error(ErrorKind::InternalLawViolation, "reflection is not a U-weight", out);
  Reflection ref{out, CheckReport::pass("reflection_enriched")};
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    const int lhs = bracket(q, out, lefts[i]);
    const int rhs = bracket(q, phi, lefts[i]);
    if (lhs != rhs) {
      ref.enriched_law =
          CheckReport::fail("reflection_enriched", {static_cast<int>(i)}, q.name(lhs), q.name(rhs));
      break;
    }
  }
  return ref;
}

DistributorSides distributor_sides(const VRelation& phi, const UCategory& x, const UCategory& y) {
  DistributorSides sides;
  sides.distributor = is_udistributor(phi, x, y).ok;
  const Quantale& q = x.q();
  const int nux = phi.src(), ny = phi.tgt();
  const VCategory hat = hat_structure(x);
  bool first = true;
  for (int t = 0; t < ny && first; ++t)
    for (int i = 0; i < nux && first; ++i)
      for (int j = 0; j < nux && first; ++j)
        first = q.leq(hat(j, i), q.hom(phi(i, t), phi(j, t)));
  bool second = true;
  if (first) {
    const int np = nux * ny;
    require_carrier(np, "product carrier");
    std::vector<int> p1(np), p2(np), pv(np);
    for (int i = 0; i < nux; ++i)
      for (int t = 0; t < ny; ++t) {
        p1[i * ny + t] = i;
        p2[i * ny + t] = t;
        pv[i * ny + t] = phi(i, t);
      }
    const auto m = m_map(x.size());
    for (const auto& w : ultrafilters(np)) {
      if (!second) break;
      const int big = ultrafilter_index(apply_U(p1, nux, w));
      const int yy = ultrafilter_index(apply_U(p2, ny, w));
      const int v = xi(q, apply_U(pv, q.size(), w));
      for (int t = 0; t < ny && second; ++t)
        second = q.leq(y(yy, t), q.hom(v, phi(m[big], t)));
    }
  }
  sides.functors = first && second;
  return sides;
}

}  // namespace qcat
