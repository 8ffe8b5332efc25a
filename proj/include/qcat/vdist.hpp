#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qcat/vcat.hpp"

namespace qcat {

/// Left: G -/-> X, phi(x) * a(x,y) <= phi(y). Right: X -/-> G, a(x,y) * psi(y) <= psi(x).
enum class Side { Left, Right };

const char* to_string(Side side);

/// Calls fn on every vector in {0..base-1}^n, lexicographically; stops when fn returns false.
void for_each_vector(int base, int n, const std::function<bool(const std::vector<int>&)>& fn);

/// phi is an X.size() x Y.size() matrix; checks phi.a <= phi and b.phi <= phi.
CheckReport is_distributor(const VRelation& phi, const VCategory& x, const VCategory& y);
CheckReport is_weight(const VCategory& x, const Weight& w, Side side);
/// Left: 1 x n relation, Right: n x 1.
VRelation weight_relation(const VCategory& x, const Weight& w, Side side);

/// x_* = a(x,-).
Weight lower_star(const VCategory& x, int obj);
/// x^* = a(-,x).
Weight upper_star(const VCategory& x, int obj);

struct GraphWeights {
  VRelation lower;  // f_*(x,y) = b(f x, y)
  VRelation upper;  // f^*(y,x) = b(y, f x)
};

GraphWeights graph_weights(const ObjectMap& f, const VCategory& x, const VCategory& y);

/// phi : X -/-> Y left adjoint to psi : Y -/-> X, i.e. a <= psi.phi and phi.psi <= b.
CheckReport is_adjoint_dist(const VRelation& phi, const VRelation& psi, const VCategory& x,
                            const VCategory& y);
/// Weight form: k <= join_x psi(x)*phi(x) and psi(x)*phi(y) <= a(x,y).
CheckReport is_adjoint_dist(const VCategory& x, const Weight& phi, const Weight& psi);

CheckReport is_fully_faithful(const ObjectMap& f, const VCategory& x, const VCategory& y);
CheckReport is_fully_dense(const ObjectMap& f, const VCategory& x, const VCategory& y);

std::vector<Weight> enumerate_weights(const VCategory& x, Side side);

/// Every adjoint pair of weights is (x_*, x^*) for some x. On failure the
/// witness is phi followed by psi.
CheckReport is_cauchy_complete(const VCategory& x);

CheckReport is_codirected(const VCategory& x, const Weight& phi);
CheckReport is_codirected(const VCategory& x, const Weight& phi, const std::vector<Weight>& lefts);
/// For every codirected phi some y has a(x,y) = [phi, x_*] for all x.
CheckReport is_codirected_complete(const VCategory& x);

/// P(phi) = join_x phi(x)*psi(x) preserves the top weight, binary meets and cotensors.
CheckReport is_flat(const VCategory& x, const Weight& psi);
CheckReport is_flat(const VCategory& x, const Weight& psi, const std::vector<Weight>& lefts);
/// The same three conditions for psi |-> join_x phi(x)*psi(x) over right weights psi.
CheckReport pairing_preserves_infima(const VCategory& x, const Weight& phi);
CheckReport pairing_preserves_infima(const VCategory& x, const Weight& phi,
                                     const std::vector<Weight>& rights);

/// Pointwise negation; asserts the result is a right weight and the pairing
/// identity [phi0, phi]^perp = join_x phi0(x) * phi(x)^perp over every left phi0.
Weight girard_dual_weight(const GirardStructure& g, const VCategory& x, const Weight& phi);

}  // namespace qcat
