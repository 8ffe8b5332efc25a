#pragma once

#include <vector>

#include "qcat/ultra.hpp"

namespace qcat {

/// Topologies on finite carriers as the full family of closed sets.
struct FiniteTopology {
  int n = 0;
  std::vector<Mask> closed_sets;  // sorted ascending

  bool is_closed(Mask set) const;
  bool is_open(Mask set) const;
  /// Smallest closed superset.
  Mask closure(Mask set) const;
  /// Smallest open set containing x.
  Mask neighbourhood(int x) const;
  bool operator==(const FiniteTopology& other) const = default;
};

inline constexpr int kMaxTopologyCarrier = 16;

CheckReport check_topology(int n, const std::vector<Mask>& closed_sets);
FiniteTopology validate_topology(int n, std::vector<Mask> closed_sets);
FiniteTopology discrete_topology(int n);

/// {x : k <= join over z in M of a(x,z) * a(z,x)}.
Mask l_closure(const VCategory& x, Mask set);
/// Fixpoints of the L-closure; requires k join-irreducible.
FiniteTopology induced_topology(const VCategory& x);

/// {y : u << a(x,y) and u << a(y,x)}.
Mask symmetric_ball(const VCategory& x, int obj, int u);
/// Every ball with u << k is open and the balls form a base of the induced topology.
CheckReport check_ball_base(const VCategory& x);

/// Finite spaces are compact.
CheckReport is_compact(const VCategory& x);
/// On a finite carrier: every subset closed.
CheckReport is_hausdorff_topology(const FiniteTopology& t);
/// Product topology on X x Y, points indexed x * |Y| + y.
FiniteTopology product_topology(const FiniteTopology& tx, const FiniteTopology& ty);
/// Every closed set of T(X (x) Y) is closed in T(X) x T(Y).
CheckReport check_monoidal(const VCategory& x, const VCategory& y);

/// Limits of an ultrafilter in a topology.
Mask limits(const FiniteTopology& t, const Ultrafilter& u);
/// Compact separated X with alpha the unique limit map.
VCatCHSpace to_ch_space(const VCategory& x);

}  // namespace qcat
