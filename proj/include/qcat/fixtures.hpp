#pragma once

#include <random>

#include "qcat/closure.hpp"
#include "qcat/sequences.hpp"

namespace qcat {

namespace fixtures {

QuantalePtr QL3();   // chain_luk(3)
QuantalePtr QM3();   // chain_min(3)
QuantalePtr QN3();   // chain_nilmin(3)
QuantalePtr Q2x2();  // product(two, two) on D4
FiniteLattice D4();
FiniteLattice N5();

/// {p, q} over QL3 with a(p,q) = a(q,p) = 1/2.
VCategory X2();
/// {p, q} over Q2x2 with a(p,q) = (1,0), a(q,p) = (0,1).
VCategory W();
/// {p, q} over two with every entry 1.
VCategory codiscrete2();
/// The sequence p, q, p, q, ... on X2.
EvPeriodicSeq alternating();

}  // namespace fixtures

namespace gen {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
VRelation random_relation(Rng& rng, const QuantalePtr& q, int src, int tgt);
/// Random matrix raised to the unit on the diagonal, then closed under a <- a v a.a.
VCategory random_category(Rng& rng, const QuantalePtr& q, int n);
/// Closure of r under reflexivity and transitivity.
VRelation reflexive_transitive_closure(VRelation r);
ObjectMap random_map(Rng& rng, int n, int m);
Weight random_vector(Rng& rng, int base, int n);

struct FunctorSample {
  VCategory x;
  VCategory y;
  ObjectMap f;
};
/// Y random; X a random category below the pullback of Y along a random f.
FunctorSample random_functor(Rng& rng, const QuantalePtr& q, int nx, int ny);

/// All V-functors X -> Y.
std::vector<ObjectMap> all_functors(const VCategory& x, const VCategory& y);
/// All preorders on n points.
std::vector<BoolMatrix> all_preorders(int n);
/// All validated categories on n objects over q.
std::vector<VCategory> all_categories(const QuantalePtr& q, int n);

}  // namespace gen

}  // namespace qcat
