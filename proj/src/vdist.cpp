#include "qcat/vdist.hpp"

#include <map>

namespace qcat {

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

void for_each_vector(int base, int n, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> v(n, 0);
  while (true) {
    if (!fn(v)) return;
    int i = n - 1;
    while (i >= 0 && v[i] == base - 1) v[i--] = 0;
    if (i < 0) return;
    ++v[i];
  }
}

CheckReport is_distributor(const VRelation& phi, const VCategory& x, const VCategory& y) {
  require_same_quantale(phi.q(), x.q());
  require_same_quantale(phi.q(), y.q());
  if (phi.src() != x.size() || phi.tgt() != y.size())
    throw Error(ErrorKind::DimensionMismatch, "distributor shape does not match categories");
  if (auto r = check_leq("distributor.right_action", compose(phi, x.a), phi); !r) return r;
  if (auto r = check_leq("distributor.left_action", compose(y.a, phi), phi); !r) return r;
  return CheckReport::pass("distributor");
}

VRelation weight_relation(const VCategory& x, const Weight& w, Side side) {
  if (static_cast<int>(w.size()) != x.size())
    throw Error(ErrorKind::DimensionMismatch, "weight length differs from object count");
  const int n = x.size();
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

CheckReport is_weight(const VCategory& x, const Weight& w, Side side) {
  if (static_cast<int>(w.size()) != x.size())
    throw Error(ErrorKind::DimensionMismatch, "weight length differs from object count");
  const Quantale& q = x.q();
  const std::string law = side == Side::Left ? "left_weight" : "right_weight";
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < x.size(); ++t) {
      if (side == Side::Left) {
        const int lhs = q.tensor(w[s], x(s, t));
        if (!q.leq(lhs, w[t])) return CheckReport::fail(law, {s, t}, q.name(lhs), q.name(w[t]));
      } else {
        const int lhs = q.tensor(x(s, t), w[t]);
        if (!q.leq(lhs, w[s])) return CheckReport::fail(law, {s, t}, q.name(lhs), q.name(w[s]));
      }
    }
  return CheckReport::pass(law);
}

Weight lower_star(const VCategory& x, int obj) {
  Weight w(x.size());
  for (int y = 0; y < x.size(); ++y) w[y] = x(obj, y);
  return w;
}

Weight upper_star(const VCategory& x, int obj) {
  Weight w(x.size());
  for (int y = 0; y < x.size(); ++y) w[y] = x(y, obj);
  return w;
}

GraphWeights graph_weights(const ObjectMap& f, const VCategory& x, const VCategory& y) {
  if (auto r = is_functor(f, x, y); !r)
    throw Error(ErrorKind::NotAFunctor, "graph weights need a functor", r.witness);
  VRelation lower(x.quantale(), x.size(), y.size());
  VRelation upper(x.quantale(), y.size(), x.size());
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < y.size(); ++t) {
      lower.set(s, t, y(f[s], t));
      upper.set(t, s, y(t, f[s]));
    }
  return GraphWeights{std::move(lower), std::move(upper)};
}

CheckReport is_adjoint_dist(const VRelation& phi, const VRelation& psi, const VCategory& x,
                            const VCategory& y) {
  if (auto r = is_distributor(phi, x, y); !r) return r;
  if (auto r = is_distributor(psi, y, x); !r) return r;
  if (auto r = check_leq("adjoint.unit", x.a, compose(psi, phi)); !r) return r;
  if (auto r = check_leq("adjoint.counit", compose(phi, psi), y.a); !r) return r;
  return CheckReport::pass("adjoint");
}

CheckReport is_adjoint_dist(const VCategory& x, const Weight& phi, const Weight& psi) {
  const Quantale& q = x.q();
  if (auto r = is_weight(x, phi, Side::Left); !r) return r;
  if (auto r = is_weight(x, psi, Side::Right); !r) return r;
  int unit = q.bot();
  for (int s = 0; s < x.size(); ++s) unit = q.join(unit, q.tensor(psi[s], phi[s]));
  if (!q.leq(q.unit(), unit))
    return CheckReport::fail("adjoint.unit", {}, q.name(q.unit()), q.name(unit));
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < x.size(); ++t) {
      const int lhs = q.tensor(psi[s], phi[t]);
      if (!q.leq(lhs, x(s, t)))
        return CheckReport::fail("adjoint.counit", {s, t}, q.name(lhs), q.name(x(s, t)));
    }
  return CheckReport::pass("adjoint");
}

CheckReport is_fully_faithful(const ObjectMap& f, const VCategory& x, const VCategory& y) {
  auto g = graph_weights(f, x, y);
  return check_eq("fully_faithful", compose(g.upper, g.lower), x.a);
}

CheckReport is_fully_dense(const ObjectMap& f, const VCategory& x, const VCategory& y) {
  auto g = graph_weights(f, x, y);
  return check_eq("fully_dense", compose(g.lower, g.upper), y.a);
}

std::vector<Weight> enumerate_weights(const VCategory& x, Side side) {
  double count = 1;
  for (int i = 0; i < x.size(); ++i) count *= x.q().size();
  require_enumerable(count, "weight enumeration");
  std::vector<Weight> out;
  for_each_vector(x.q().size(), x.size(), [&](const std::vector<int>& w) {
    if (is_weight(x, w, side)) out.push_back(w);
    return true;
  });
  return out;
}

CheckReport is_cauchy_complete(const VCategory& x) {
  const auto lefts = enumerate_weights(x, Side::Left);
  const auto rights = enumerate_weights(x, Side::Right);
  require_enumerable(static_cast<double>(lefts.size()) * rights.size(), "adjoint pair search");
  const Quantale& q = x.q();
  std::map<Weight, Weight> partner_of_left, partner_of_right;
  for (const auto& phi : lefts)
    for (const auto& psi : rights) {
      if (!is_adjoint_dist(x, phi, psi)) continue;
      auto [it, fresh] = partner_of_left.emplace(phi, psi);
      if (!fresh && it->second != psi)
        throw Error(ErrorKind::InternalLawViolation, "a left weight has two right adjoints");
      auto [jt, fresh2] = partner_of_right.emplace(psi, phi);
      if (!fresh2 && jt->second != phi)
        throw Error(ErrorKind::InternalLawViolation, "a right weight has two left adjoints");
      bool represented = false;
      for (int s = 0; s < x.size() && !represented; ++s)
        represented = lower_star(x, s) == phi && upper_star(x, s) == psi;
      if (!represented) {
        Weight wit = phi;
        wit.insert(wit.end(), psi.begin(), psi.end());
        return CheckReport::fail("cauchy_complete", wit, render_weight(q, phi),
                                 render_weight(q, psi), "adjoint pair not represented by an object");
      }
    }
  return CheckReport::pass("cauchy_complete");
}

CheckReport is_codirected(const VCategory& x, const Weight& phi, const std::vector<Weight>& lefts) {
  const Quantale& q = x.q();
  const int n = x.size();
  const std::string law = "codirected";
  if (auto r = is_weight(x, phi, Side::Left); !r) return r;
  const Weight bottom(n, q.bot());
  if (const int b = bracket(q, phi, bottom); b != q.bot())
    return CheckReport::fail(law, {}, q.name(b), q.name(q.bot()), "[phi,bottom] is not bottom");
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    const Weight& p1 = lefts[i];
    const int b1 = bracket(q, phi, p1);
    for (std::size_t j = i; j < lefts.size(); ++j) {
      const Weight& p2 = lefts[j];
      Weight sup(n);
      for (int s = 0; s < n; ++s) sup[s] = q.join(p1[s], p2[s]);
      const int lhs = bracket(q, phi, sup);
      const int rhs = q.join(b1, bracket(q, phi, p2));
      if (lhs != rhs)
        return CheckReport::fail(law, {static_cast<int>(i), static_cast<int>(j)}, q.name(lhs),
                                 q.name(rhs),
                                 "binary join not preserved at " + render_weight(q, p1) + ", " +
                                     render_weight(q, p2));
    }
    for (int u = 0; u < q.size(); ++u) {
      Weight t(n);
      for (int s = 0; s < n; ++s) t[s] = q.tensor(u, p1[s]);
      const int lhs = bracket(q, phi, t);
      const int rhs = q.tensor(u, b1);
      if (lhs != rhs)
        return CheckReport::fail(law, {static_cast<int>(i), u}, q.name(lhs), q.name(rhs),
                                 "tensor by " + q.name(u) + " not preserved at " +
                                     render_weight(q, p1));
    }
  }
  return CheckReport::pass(law);
}

CheckReport is_codirected(const VCategory& x, const Weight& phi) {
  return is_codirected(x, phi, enumerate_weights(x, Side::Left));
}

CheckReport is_codirected_complete(const VCategory& x) {
  const auto lefts = enumerate_weights(x, Side::Left);
  require_enumerable(static_cast<double>(lefts.size()) * lefts.size() * x.q().size(),
                     "codirected completeness");
  const Quantale& q = x.q();
  for (const auto& phi : lefts) {
    if (!is_codirected(x, phi, lefts)) continue;
    bool found = false;
    for (int y = 0; y < x.size() && !found; ++y) {
      bool ok = true;
      for (int s = 0; s < x.size() && ok; ++s) ok = x(s, y) == bracket(q, phi, lower_star(x, s));
      found = ok;
    }
    if (!found)
      return CheckReport::fail("codirected_complete", phi, render_weight(q, phi), "-",
                               "codirected weight without infimum");
  }
  return CheckReport::pass("codirected_complete");
}

namespace {

int pairing(const Quantale& q, const Weight& phi, const Weight& psi) {
  int acc = q.bot();
  for (std::size_t s = 0; s < phi.size(); ++s) acc = q.join(acc, q.tensor(phi[s], psi[s]));
  return acc;
}

/// Shared body: F(w) = pairing(fixed, w) over `domain`.
CheckReport preserves_infima(const std::string& law, const Quantale& q, const Weight& fixed,
                             const std::vector<Weight>& domain) {
  const int n = static_cast<int>(fixed.size());
  const Weight topw(n, q.top());
  if (const int p = pairing(q, fixed, topw); p != q.top())
    return CheckReport::fail(law, {}, q.name(p), q.name(q.top()), "top weight not preserved");
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const Weight& w1 = domain[i];
    const int p1 = pairing(q, fixed, w1);
    for (std::size_t j = i; j < domain.size(); ++j) {
      const Weight& w2 = domain[j];
      Weight inf(n);
      for (int s = 0; s < n; ++s) inf[s] = q.meet(w1[s], w2[s]);
      const int lhs = pairing(q, fixed, inf);
      const int rhs = q.meet(p1, pairing(q, fixed, w2));
      if (lhs != rhs)
        return CheckReport::fail(law, {static_cast<int>(i), static_cast<int>(j)}, q.name(lhs),
                                 q.name(rhs),
                                 "binary meet not preserved at " + render_weight(q, w1) + ", " +
                                     render_weight(q, w2));
    }
    for (int u = 0; u < q.size(); ++u) {
      Weight c(n);
      for (int s = 0; s < n; ++s) c[s] = q.hom(u, w1[s]);
      const int lhs = pairing(q, fixed, c);
      const int rhs = q.hom(u, p1);
      if (lhs != rhs)
        return CheckReport::fail(law, {static_cast<int>(i), u}, q.name(lhs), q.name(rhs),
                                 "cotensor by " + q.name(u) + " not preserved at " +
                                     render_weight(q, w1));
    }
  }
  return CheckReport::pass(law);
}

}  // namespace

CheckReport is_flat(const VCategory& x, const Weight& psi, const std::vector<Weight>& lefts) {
  if (auto r = is_weight(x, psi, Side::Right); !r) return r;
  return preserves_infima("flat", x.q(), psi, lefts);
}

CheckReport is_flat(const VCategory& x, const Weight& psi) {
  return is_flat(x, psi, enumerate_weights(x, Side::Left));
}

CheckReport pairing_preserves_infima(const VCategory& x, const Weight& phi,
                                     const std::vector<Weight>& rights) {
  if (auto r = is_weight(x, phi, Side::Left); !r) return r;
  return preserves_infima("pairing_preserves_infima", x.q(), phi, rights);
}

CheckReport pairing_preserves_infima(const VCategory& x, const Weight& phi) {
  return pairing_preserves_infima(x, phi, enumerate_weights(x, Side::Right));
}

Weight girard_dual_weight(const GirardStructure& g, const VCategory& x, const Weight& phi) {
  require_same_quantale(*g.quantale, x.q());
  if (auto r = is_weight(x, phi, Side::Left); !r)
    throw Error(ErrorKind::NotADistributor, "dual weight needs a left weight", r.witness);
  const Quantale& q = x.q();
  Weight out(phi.size());
  for (std::size_t s = 0; s < phi.size(); ++s) out[s] = g(phi[s]);
  if (auto r = is_weight(x, out, Side::Right); !r)
    throw Error(ErrorKind::InternalLawViolation, "negated weight is not a right weight", r.witness);
  for (const auto& phi0 : enumerate_weights(x, Side::Left))
    if (g(bracket(q, phi0, phi)) != pairing(q, phi0, out))
      throw Error(ErrorKind::InternalLawViolation, "dual pairing identity fails", phi0);
  return out;
}

}  // namespace qcat
