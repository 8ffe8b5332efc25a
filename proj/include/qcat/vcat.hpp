#pragma once

#include <string>
#include <vector>

#include "qcat/vrel.hpp"

namespace qcat {

using Weight = std::vector<int>;
using ObjectMap = std::vector<int>;

struct VCategory {
  VRelation a;
  std::vector<std::string> objects;

  const QuantalePtr& quantale() const { return a.quantale(); }
  const Quantale& q() const { return a.q(); }
  int size() const { return a.src(); }
  int operator()(int x, int y) const { return a(x, y); }
  int index_of(const std::string& name) const;
};

/// Non-throwing axiom check: k <= a(x,x) and a(x,y)*a(y,z) <= a(x,z).
CheckReport check_category(const VRelation& a);
/// Throws NotReflexive / NotTransitive; also asserts a.a = a.
VCategory validate_category(VRelation a, std::vector<std::string> objects = {});

/// One object, structure k.
VCategory unit_category(const QuantalePtr& q);
/// The quantale with its internal hom.
VCategory quantale_category(const QuantalePtr& q);
/// n objects, structure k on the diagonal and bottom elsewhere.
VCategory discrete_category(const QuantalePtr& q, int n);
/// Preorder (boolean table) seen over two.
VCategory preorder_category(const BoolMatrix& order);

CheckReport is_functor(const ObjectMap& f, const VCategory& x, const VCategory& y);
VCategory dual(const VCategory& x);
/// Objects (x,y) indexed x * |Y| + y.
VCategory tensor_product(const VCategory& x, const VCategory& y);
VCategory cartesian_product(const VCategory& x, const VCategory& y);
/// V^n with the bracket structure; objects indexed in base-|V| order.
VCategory power(const QuantalePtr& q, int n);
/// Full subcategory on the listed objects.
VCategory restrict(const VCategory& x, const std::vector<int>& objects);

BoolMatrix underlying_order(const VCategory& x);
CheckReport is_separated(const VCategory& x);
bool is_symmetric(const VCategory& x);

VCategory change_of_base(const LaxMorphism& m, const VCategory& x);

/// [phi1, phi2] = meet over x of hom(phi1(x), phi2(x)).
int bracket(const Quantale& q, const Weight& phi1, const Weight& phi2);

/// a(x, g y) = b(f x, y) for all x, y.
CheckReport is_adjoint_functors(const ObjectMap& f, const ObjectMap& g, const VCategory& x,
                                const VCategory& y);

std::string render_weight(const Quantale& q, const Weight& w);

}  // namespace qcat
