#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/vdist.hpp"

namespace qcat {

/// Bitmask carrier bound for explicit set families.
inline constexpr int kMaxUltraCarrier = 20;

/// A family of subsets of {0..n-1}, stored as a membership table over all 2^n masks.
struct Ultrafilter {
  int n = 0;
  std::vector<bool> member;

  bool contains(Mask set) const { return member[set]; }
  bool operator==(const Ultrafilter& other) const { return n == other.n && member == other.member; }
  /// Intersection of all members; a single point for a principal ultrafilter.
  Mask core() const;
  std::string render() const;
};

/// Generic check: upward closed, closed under binary meets, proper, maximal.
CheckReport is_ultrafilter(const Ultrafilter& f);

/// Principal families, each validated by is_ultrafilter. Cached per n.
const std::vector<Ultrafilter>& ultrafilters(int n);
/// Position of f in ultrafilters(f.n); throws if absent.
int ultrafilter_index(const Ultrafilter& f);

Ultrafilter unit_e(int n, int x);
/// Uf(x) = {A subset of Y : f^-1(A) in x}.
Ultrafilter apply_U(const std::vector<int>& f, int tgt, const Ultrafilter& x);
/// m(X) = {A : A# in X}, A# = {i : A in ultrafilters(n)[i]}; X lives on ultrafilters(n).
Ultrafilter mult_m(int n, const Ultrafilter& big);

/// e_X, m_X and Uf as index maps between positions in ultrafilters(-).
std::vector<int> e_map(int n);
std::vector<int> m_map(int n);
std::vector<int> U_map(const std::vector<int>& f, int tgt);

/// x with x in every member of `filter` and in no member of `ideal`, as e_x.
std::optional<Ultrafilter> ultrafilter_between(int n, const std::vector<Mask>& filter,
                                               const std::vector<Mask>& ideal);

/// meet over A in v of join A; asserts equality with the join of meets.
int xi(const Quantale& q, const Ultrafilter& v);
/// Completely distributive lattice, as required for the convergence above.
CheckReport xi_hypotheses(const Quantale& q);

/// Theory-level checkers over all ultrafilters on V or V x V.
CheckReport check_xi_algebra(const Quantale& q);
CheckReport check_tensor_lax(const Quantale& q);
CheckReport check_strict(const Quantale& q);
CheckReport check_pointwise_strict(const Quantale& q);
CheckReport check_finite_sup_compatible(const Quantale& q);
/// xi2 . U phi <= phi . xi1.
CheckReport check_compatible(const LaxMorphism& m);

/// U_xi r : UX -> UY, evaluated by enumerating ultrafilters on X x Y.
VRelation lax_extension(const VRelation& r);

struct UCategory {
  VRelation a;  // |UX| x |X|
  std::vector<std::string> objects;

  const QuantalePtr& quantale() const { return a.quantale(); }
  const Quantale& q() const { return a.q(); }
  int size() const { return a.tgt(); }
  int operator()(int ux, int x) const { return a(ux, x); }
};

/// k <= a(e x, x) and U_xi a(X, x') * a(x', x) <= a(m X, x).
CheckReport check_ucategory(const VRelation& a);
UCategory validate_ucategory(VRelation a, std::vector<std::string> objects = {});
UCategory unit_ucategory(const QuantalePtr& q);
/// a(e_x, y) = order(x, y) over two.
UCategory ucategory_from_preorder(const BoolMatrix& order);
/// a(x, f x') <= b(Uf x, f x').
CheckReport is_ufunctor(const ObjectMap& f, const UCategory& x, const UCategory& y);

/// psi . U_xi phi . m_X^op.
VRelation kleisli_compose(const VRelation& psi, const VRelation& phi);

CheckReport is_udistributor(const VRelation& phi, const UCategory& x, const UCategory& y);
/// a <= psi o phi and phi o psi <= b, with both composites U-distributors.
CheckReport is_adjoint_udist(const VRelation& phi, const VRelation& psi, const UCategory& x,
                             const UCategory& y);
/// k <= join_z psi(z) * xi U phi(z) and psi(z) * phi(x) <= a(z, x).
CheckReport is_adjoint_udist(const UCategory& x, const Weight& phi, const Weight& psi);

/// Left: vectors over X; Right: vectors over UX.
VRelation uweight_relation(const UCategory& x, const Weight& w, Side side);
CheckReport is_uweight(const UCategory& x, const Weight& w, Side side);
std::vector<Weight> enumerate_uweights(const UCategory& x, Side side);
Weight ulower_star(const UCategory& x, int obj);
Weight uupper_star(const UCategory& x, int obj);

struct UGraph {
  VRelation lower;  // b . Uf : UX -> Y
  VRelation upper;  // f^op . b : UY -> X
};
UGraph ugraph(const ObjectMap& f, const UCategory& x, const UCategory& y);
CheckReport is_ufully_faithful(const ObjectMap& f, const UCategory& x, const UCategory& y);
CheckReport is_ufully_dense(const ObjectMap& f, const UCategory& x, const UCategory& y);

/// a_0(x, y) = a(e x, y).
VCategory underlying_vcat(const UCategory& x);
/// Validated V-category on UX with structure U_xi a . m^op.
VCategory hat_structure(const UCategory& x);
/// phi_M(x) = join over ultrafilters z containing M of a(z, x); validated.
Weight phi_M(const UCategory& x, Mask m);
/// a(z, x) = meet over A in z of phi_A(x), everywhere.
CheckReport check_phi_meet(const UCategory& x);
/// phi_empty = bottom and phi_{A u B} = phi_A v phi_B.
CheckReport check_phi_laws(const UCategory& x);

struct VCatCHSpace {
  VCategory base;
  std::vector<int> alpha;  // indexed by position in ultrafilters(n)
};

/// Eilenberg-Moore laws, functoriality of alpha, both sides of the closed-order
/// characterisation, and closedness of balls when the unit is the top.
VCatCHSpace validate_vcat_ch(VCategory x, std::vector<int> alpha);
/// (V, hom) with alpha = xi.
VCatCHSpace quantale_ch_space(const QuantalePtr& q);
/// a = a_0 . alpha; asserts (K S)_0 = a_0.
UCategory functor_K(const VCatCHSpace& s);
/// hom_xi(v, u) = hom(xi v, u), computed directly.
UCategory hom_xi_category(const QuantalePtr& q);

struct Representation {
  Ultrafilter ultrafilter;
  int index = 0;
  std::vector<Mask> filter_base;  // the sets A_u
  std::vector<Mask> ideal;
};

/// The filter/ideal construction for a left adjoint U-weight.
Representation representing_ultrafilter(const UCategory& x, const Weight& phi);
/// Hypotheses of the construction: complete distributivity, k top and approximated.
CheckReport representation_hypotheses(const Quantale& q);

/// Every adjoint pair of U-weights is (x_*, x^*); cross-checks the phi_A identity
/// and uniqueness of adjoints.
CheckReport is_cauchy_complete_ucat(const UCategory& x);

/// (X, e^op . U_xi a_0).
UCategory free_ucategory(const VCategory& x);

struct Reflection {
  Weight weight;
  CheckReport enriched_law;
};

/// Least U-weight above a left weight of X_0.
Reflection ureflect_weight(const UCategory& x, const Weight& phi);

/// Both sides of the distributor/functor characterisation, computed independently.
struct DistributorSides {
  bool distributor = false;
  bool functors = false;
};
DistributorSides distributor_sides(const VRelation& phi, const UCategory& x, const UCategory& y);

}  // namespace qcat
