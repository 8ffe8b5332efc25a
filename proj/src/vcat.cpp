#include "qcat/vcat.hpp"

#include <set>

namespace qcat {

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

void require_square(const VRelation& a) {
  if (a.src() != a.tgt()) throw Error(ErrorKind::DimensionMismatch, "structure is not square");
}

}  // namespace

int VCategory::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (objects[i] == name) return i;
  throw Error(ErrorKind::InvalidArgument, "unknown object '" + name + "'");
}

CheckReport check_category(const VRelation& a) {
  require_square(a);
  const Quantale& q = a.q();
  const int n = a.src();
  for (int x = 0; x < n; ++x)
    if (!q.leq(q.unit(), a(x, x)))
      return CheckReport::fail("reflexive", {x}, q.name(q.unit()), q.name(a(x, x)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int lhs = q.tensor(a(x, y), a(y, z));
        if (!q.leq(lhs, a(x, z)))
          return CheckReport::fail("transitive", {x, y, z}, q.name(lhs), q.name(a(x, z)));
      }
  return CheckReport::pass("category");
}

VCategory validate_category(VRelation a, std::vector<std::string> objects) {
  require_square(a);
  if (objects.empty()) objects = default_names(a.src());
  if (static_cast<int>(objects.size()) != a.src())
    throw Error(ErrorKind::DimensionMismatch, "object name count differs from structure size");
  if (std::set<std::string>(objects.begin(), objects.end()).size() != objects.size())
    throw Error(ErrorKind::InvalidArgument, "object names must be distinct");
  auto r = check_category(a);
  if (!r) {
    std::string where;
    for (std::size_t i = 0; i < r.witness.size(); ++i)
      where += (i ? "," : "") + objects[r.witness[i]];
    throw Error(r.law == "reflexive" ? ErrorKind::NotReflexive : ErrorKind::NotTransitive,
                r.law + " fails at (" + where + "): " + r.lhs + " vs " + r.rhs, r.witness);
  }
  if (compose(a, a) != a)
    throw Error(ErrorKind::InternalLawViolation, "a.a differs from a on a valid structure");
  return VCategory{std::move(a), std::move(objects)};
}

VCategory unit_category(const QuantalePtr& q) {
  return validate_category(VRelation(q, 1, 1, q->unit()), {"*"});
}

VCategory quantale_category(const QuantalePtr& q) {
  VRelation a(q, q->size(), q->size());
  for (int u = 0; u < q->size(); ++u)
    for (int v = 0; v < q->size(); ++v) a.set(u, v, q->hom(u, v));
  return validate_category(std::move(a), q->lattice().names());
}

VCategory discrete_category(const QuantalePtr& q, int n) {
  return validate_category(identity_rel(q, n));
}

VCategory preorder_category(const BoolMatrix& order) {
  const int n = static_cast<int>(order.size());
  VRelation a(two(), n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.set(x, y, order[x][y] ? 1 : 0);
  return validate_category(std::move(a));
}

CheckReport is_functor(const ObjectMap& f, const VCategory& x, const VCategory& y) {
  require_same_quantale(x.q(), y.q());
  if (static_cast<int>(f.size()) != x.size())
    throw Error(ErrorKind::DimensionMismatch, "object map length differs from domain size");
  for (int v : f)
    if (v < 0 || v >= y.size()) throw Error(ErrorKind::InvalidArgument, "object map out of range");
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < x.size(); ++t)
      if (!x.q().leq(x(s, t), y(f[s], f[t])))
        return CheckReport::fail("functor", {s, t}, x.q().name(x(s, t)),
                                 y.q().name(y(f[s], f[t])));
  return CheckReport::pass("functor");
}

VCategory dual(const VCategory& x) { return VCategory{opposite(x.a), x.objects}; }

namespace {

VCategory product_with(const VCategory& x, const VCategory& y, bool use_tensor) {
  require_same_quantale(x.q(), y.q());
  const Quantale& q = x.q();
  const int n = x.size() * y.size();
  VRelation a(x.quantale(), n, n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    const int x1 = i / y.size(), y1 = i % y.size();
    names[i] = "(" + x.objects[x1] + "," + y.objects[y1] + ")";
    for (int j = 0; j < n; ++j) {
      const int x2 = j / y.size(), y2 = j % y.size();
      a.set(i, j, use_tensor ? q.tensor(x(x1, x2), y(y1, y2)) : q.meet(x(x1, x2), y(y1, y2)));
    }
  }
  return validate_category(std::move(a), std::move(names));
}

}  // namespace

VCategory tensor_product(const VCategory& x, const VCategory& y) { return product_with(x, y, true); }

VCategory cartesian_product(const VCategory& x, const VCategory& y) {
  return product_with(x, y, false);
}

VCategory power(const QuantalePtr& q, int n) {
  double count = 1;
  for (int i = 0; i < n; ++i) count *= q->size();
  require_enumerable(count * count, "power category");
  const int m = static_cast<int>(count);
  std::vector<Weight> ws(m, Weight(n));
  for (int i = 0; i < m; ++i) {
    int c = i;
    for (int k = n - 1; k >= 0; --k) {
      ws[i][k] = c % q->size();
      c /= q->size();
    }
  }
  VRelation a(q, m, m);
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    names[i] = render_weight(*q, ws[i]);
    for (int j = 0; j < m; ++j) a.set(i, j, bracket(*q, ws[i], ws[j]));
  }
  return validate_category(std::move(a), std::move(names));
}

VCategory restrict(const VCategory& x, const std::vector<int>& objects) {
  const int n = static_cast<int>(objects.size());
  VRelation a(x.quantale(), n, n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(x.objects.at(objects[i]));
    for (int j = 0; j < n; ++j) a.set(i, j, x(objects[i], objects[j]));
  }
  return validate_category(std::move(a), std::move(names));
}

BoolMatrix underlying_order(const VCategory& x) {
  const Quantale& q = x.q();
  const int n = x.size();
  BoolMatrix order(n, std::vector<bool>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) order[s][t] = q.leq(q.unit(), x(s, t));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u)
        if (order[s][t] && order[t][u] && !order[s][u])
          throw Error(ErrorKind::InternalLawViolation, "underlying order is not transitive",
                      {s, t, u});
  return order;
}

CheckReport is_separated(const VCategory& x) {
  const auto order = underlying_order(x);
  for (int s = 0; s < x.size(); ++s)
    for (int t = s + 1; t < x.size(); ++t)
      if (order[s][t] && order[t][s])
        return CheckReport::fail("separated", {s, t}, x.objects[s], x.objects[t],
                                 "distinct isomorphic objects");
  return CheckReport::pass("separated");
}

bool is_symmetric(const VCategory& x) { return x.a == opposite(x.a); }

VCategory change_of_base(const LaxMorphism& m, const VCategory& x) {
  require_same_quantale(*m.source, x.q());
  VRelation a(m.target, x.size(), x.size());
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < x.size(); ++t) a.set(s, t, m(x(s, t)));
  auto r = check_category(a);
  if (!r)
    throw Error(ErrorKind::InternalLawViolation,
                "change of base produced an invalid structure (" + r.law + ")", r.witness);
  return validate_category(std::move(a), x.objects);
}

int bracket(const Quantale& q, const Weight& phi1, const Weight& phi2) {
  if (phi1.size() != phi2.size())
    throw Error(ErrorKind::DimensionMismatch, "bracket of weights of different length");
  int acc = q.top();
  for (std::size_t i = 0; i < phi1.size(); ++i) acc = q.meet(acc, q.hom(phi1[i], phi2[i]));
  return acc;
}

CheckReport is_adjoint_functors(const ObjectMap& f, const ObjectMap& g, const VCategory& x,
                                const VCategory& y) {
  if (auto r = is_functor(f, x, y); !r) return r;
  if (auto r = is_functor(g, y, x); !r) return r;
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < y.size(); ++t)
      if (x(s, g[t]) != y(f[s], t))
        return CheckReport::fail("adjoint_functors", {s, t}, x.q().name(x(s, g[t])),
                                 y.q().name(y(f[s], t)));
  return CheckReport::pass("adjoint_functors");
}

std::string render_weight(const Quantale& q, const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + q.name(w[i]);
  return out + ")";
}

}  // namespace qcat
