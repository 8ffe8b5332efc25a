#include "qcat/closure.hpp"

#include <algorithm>

namespace qcat {

namespace {

Mask full_set(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

void require_topology_carrier(int n) {
  if (n < 0 || n > kMaxTopologyCarrier)
    throw Error(ErrorKind::SizeLimitExceeded,
                "topology carrier of size " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxTopologyCarrier));
}

}  // namespace

bool FiniteTopology::is_closed(Mask set) const {
  return std::binary_search(closed_sets.begin(), closed_sets.end(), set);
}

bool FiniteTopology::is_open(Mask set) const { return is_closed(full_set(n) & ~set); }

Mask FiniteTopology::closure(Mask set) const {
  Mask c = full_set(n);
  for (Mask s : closed_sets)
    if ((set & ~s) == 0) c &= s;
  return c;
}

Mask FiniteTopology::neighbourhood(int x) const {
  Mask o = full_set(n);
  for (Mask s : closed_sets)
    if (!(s >> x & 1u)) o &= full_set(n) & ~s;
  return o;
}

CheckReport check_topology(int n, const std::vector<Mask>& closed_sets) {
  require_topology_carrier(n);
  std::vector<bool> in(std::size_t{1} << n);
  for (Mask s : closed_sets) {
    if (s & ~full_set(n)) return CheckReport::fail("topology", {static_cast<int>(s)}, "-", "-", "set outside carrier");
    in[s] = true;
  }
  if (!in[0]) return CheckReport::fail("topology.empty", {}, "-", "-", "empty set not closed");
  if (!in[full_set(n)]) return CheckReport::fail("topology.full", {}, "-", "-", "carrier not closed");
  for (Mask a : closed_sets)
    for (Mask b : closed_sets) {
      if (!in[a | b])
        return CheckReport::fail("topology.union", {static_cast<int>(a), static_cast<int>(b)}, "-", "-");
      if (!in[a & b])
        return CheckReport::fail("topology.intersection", {static_cast<int>(a), static_cast<int>(b)}, "-", "-");
    }
  return CheckReport::pass("topology");
}

FiniteTopology validate_topology(int n, std::vector<Mask> closed_sets) {
  std::sort(closed_sets.begin(), closed_sets.end());
  closed_sets.erase(std::unique(closed_sets.begin(), closed_sets.end()), closed_sets.end());
  if (auto r = check_topology(n, closed_sets); !r)
    throw Error(ErrorKind::ValidationFailed, r.law + " fails", r.witness);
  return FiniteTopology{n, std::move(closed_sets)};
}

FiniteTopology discrete_topology(int n) {
  require_topology_carrier(n);
  std::vector<Mask> all;
  for (Mask s = 0; s <= full_set(n); ++s) all.push_back(s);
  return FiniteTopology{n, std::move(all)};
}

Mask l_closure(const VCategory& x, Mask set) {
  const Quantale& q = x.q();
  Mask out = 0;
  for (int s = 0; s < x.size(); ++s) {
    int acc = q.bot();
    for (int z = 0; z < x.size(); ++z)
      if (set >> z & 1u) acc = q.join(acc, q.tensor(x(s, z), x(z, s)));
    if (q.leq(q.unit(), acc)) out |= Mask{1} << s;
  }
  return out;
}

FiniteTopology induced_topology(const VCategory& x) {
  const Quantale& q = x.q();
  if (auto r = is_join_irreducible(q.lattice(), q.unit()); !r)
    throw Error(ErrorKind::UnitNotJoinIrreducible,
                "unit " + q.name(q.unit()) + " is not join-irreducible in " + q.label(), r.witness);
  const int n = x.size();
  require_topology_carrier(n);
  std::vector<Mask> closed;
  for (Mask s = 0; s <= full_set(n); ++s) {
    const Mask c = l_closure(x, s);
    if (l_closure(x, c) != c)
      throw Error(ErrorKind::InternalLawViolation, "L-closure is not idempotent", {static_cast<int>(s)});
    if (c == s) closed.push_back(s);
  }
  FiniteTopology t = validate_topology(n, std::move(closed));
  for (Mask s = 0; s <= full_set(n); ++s)
    if (t.closure(s) != l_closure(x, s))
      throw Error(ErrorKind::InternalLawViolation, "topological closure differs from L-closure",
                  {static_cast<int>(s)});
  return t;
}

Mask symmetric_ball(const VCategory& x, int obj, int u) {
  const TotallyBelow& tb = x.q().totally_below();
  Mask out = 0;
  for (int y = 0; y < x.size(); ++y)
    if (tb(u, x(obj, y)) && tb(u, x(y, obj))) out |= Mask{1} << y;
  return out;
}

CheckReport check_ball_base(const VCategory& x) {
  const Quantale& q = x.q();
  const FiniteTopology t = induced_topology(x);
  const TotallyBelow& tb = q.totally_below();
  std::vector<int> radii;
  for (int u = 0; u < q.size(); ++u)
    if (tb(u, q.unit())) radii.push_back(u);
  for (int s = 0; s < x.size(); ++s)
    for (int u : radii)
      if (!t.is_open(symmetric_ball(x, s, u)))
        return CheckReport::fail("ball_base.open", {s, u}, q.name(u), "-", "ball is not open");
  for (Mask o = 0; o <= full_set(x.size()); ++o) {
    if (!t.is_open(o)) continue;
    for (int s = 0; s < x.size(); ++s) {
      if (!(o >> s & 1u)) continue;
      bool found = false;
      for (int u : radii) {
        const Mask b = symmetric_ball(x, s, u);
        if ((b >> s & 1u) && (b & ~o) == 0) {
          found = true;
          break;
        }
      }
      if (!found)
        return CheckReport::fail("ball_base.cover", {static_cast<int>(o), s}, "-", "-",
                                 "no ball around the point inside the open set");
    }
  }
  return CheckReport::pass("ball_base");
}

CheckReport is_compact(const VCategory&) { return CheckReport::pass("compact", "finite carrier"); }

CheckReport is_hausdorff_topology(const FiniteTopology& t) {
  for (int s = 0; s < t.n; ++s)
    if (!t.is_closed(Mask{1} << s))
      return CheckReport::fail("hausdorff", {s}, "-", "-", "singleton is not closed");
  if (t.closed_sets.size() != (std::size_t{1} << t.n))
    return CheckReport::fail("hausdorff", {}, "-", "-", "topology is not discrete");
  return CheckReport::pass("hausdorff");
}

FiniteTopology product_topology(const FiniteTopology& tx, const FiniteTopology& ty) {
  const int n = tx.n * ty.n;
  require_topology_carrier(n);
  std::vector<Mask> nx(tx.n), ny(ty.n);
  for (int s = 0; s < tx.n; ++s) nx[s] = tx.neighbourhood(s);
  for (int t = 0; t < ty.n; ++t) ny[t] = ty.neighbourhood(t);
  std::vector<Mask> closed;
  for (Mask c = 0; c <= full_set(n); ++c) {
    const Mask open = full_set(n) & ~c;
    bool ok = true;
    for (int p = 0; p < n && ok; ++p) {
      if (!(open >> p & 1u)) continue;
      for (int s = 0; s < tx.n && ok; ++s)
        for (int t = 0; t < ty.n && ok; ++t)
          if ((nx[p / ty.n] >> s & 1u) && (ny[p % ty.n] >> t & 1u))
            ok = open >> (s * ty.n + t) & 1u;
    }
    if (ok) closed.push_back(c);
  }
  return validate_topology(n, std::move(closed));
}

CheckReport check_monoidal(const VCategory& x, const VCategory& y) {
  const FiniteTopology tp = product_topology(induced_topology(x), induced_topology(y));
  const FiniteTopology tt = induced_topology(tensor_product(x, y));
  for (Mask c : tt.closed_sets)
    if (!tp.is_closed(c))
      return CheckReport::fail("monoidal", {static_cast<int>(c)}, "-", "-",
                               "closed in the tensor but not in the product topology");
  return CheckReport::pass("monoidal");
}

Mask limits(const FiniteTopology& t, const Ultrafilter& u) {
  Mask out = 0;
  for (int s = 0; s < t.n; ++s)
    if (u.contains(t.neighbourhood(s))) out |= Mask{1} << s;
  return out;
}

VCatCHSpace to_ch_space(const VCategory& x) {
  if (auto r = is_separated(x); !r)
    throw Error(ErrorKind::NotCompactSeparated, "category is not separated", r.witness);
  const FiniteTopology t = induced_topology(x);
  if (auto r = is_hausdorff_topology(t); !r)
    throw Error(ErrorKind::NotCompactSeparated, "induced topology is not Hausdorff", r.witness);
  std::vector<int> alpha;
  for (const auto& u : ultrafilters(x.size())) {
    const Mask lim = limits(t, u);
    if (!lim || (lim & (lim - 1)))
      throw Error(ErrorKind::InternalLawViolation, "ultrafilter without a unique limit");
    int s = 0;
    while (!(lim >> s & 1u)) ++s;
    alpha.push_back(s);
  }
  return validate_vcat_ch(x, std::move(alpha));
}

}  // namespace qcat
