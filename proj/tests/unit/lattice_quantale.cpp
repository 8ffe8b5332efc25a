#include <algorithm>

#include "qcat/fixtures.hpp"
#include "qcat/quantale.hpp"
#include "support.hpp"

using namespace qcat;
using qcat::test::kind_of;

namespace {

// x << y iff every subset whose join is above y has a member above x.
bool totally_below_oracle(const FiniteLattice& l, int x, int y) {
  const int n = l.size();
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (!l.leq(y, l.join_mask(s))) continue;
    bool hit = false;
    for (int i = 0; i < n; ++i)
      if ((s >> i & 1u) && l.leq(x, i)) hit = true;
    if (!hit) return false;
  }
  return true;
}

int hom_oracle(const Quantale& q, int u, int w) {
  int best = q.bot();
  for (int v = 0; v < q.size(); ++v)
    if (q.leq(q.tensor(u, v), w)) best = q.join(best, v);
  return best;
}

std::vector<QuantalePtr> builtins() {
  return {two(), chain_min(3), chain_luk(3), chain_nilmin(3), chain_luk(5), chain_nilmin(5),
          product(two(), two()), product(two(), chain_luk(3)), delta_grid(3, 2, "min")};
}

}  // namespace

TEST_CASE("chain names are reduced fractions") {
  const auto l = chain_lattice(5);
  CHECK(l.names() == std::vector<std::string>{"0", "1/4", "1/2", "3/4", "1"});
  CHECK(chain_lattice(3).name(1) == "1/2");
  CHECK(l.index_of("3/4") == 3);
  CHECK(kind_of([&] { (void)l.index_of("2/3"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("validate_lattice rejects non-orders and non-lattices") {
  CHECK(kind_of([] { validate_lattice({{1, 1}, {1, 1}}); }) == ErrorKind::NotAPartialOrder);
  // Two incomparable maximal elements.
  CHECK(kind_of([] { validate_lattice({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}); }) == ErrorKind::NotALattice);
}

TEST_CASE("lattice tables of D4") {
  const auto d = fixtures::D4();
  const int a = d.index_of("a"), b = d.index_of("b");
  CHECK(d.join(a, b) == d.top());
  CHECK(d.meet(a, b) == d.bot());
  CHECK(d.join_mask(0) == d.bot());
  CHECK(d.meet_mask(0) == d.top());
  CHECK(reverse(d).top() == d.bot());
}

TEST_CASE("totally_below matches the subset definition") {
  std::vector<FiniteLattice> lattices{fixtures::D4(), fixtures::N5(), chain_lattice(2), chain_lattice(4),
                                      product(chain_luk(3), two())->lattice()};
  for (const auto& l : lattices) {
    const auto tb = totally_below(l);
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y) CHECK(tb(x, y) == totally_below_oracle(l, x, y));
  }
  const auto tb2 = totally_below(chain_lattice(2));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(tb2(x, y) == (y == 1));
}

TEST_CASE("complete distributivity and approximation") {
  for (const auto& q : builtins()) CHECK(is_completely_distributive(q->lattice()).ok);
  CHECK_FALSE(is_completely_distributive(fixtures::N5()).ok);
  CHECK(is_approximated(fixtures::QL3()->lattice(), fixtures::QL3()->unit()).ok);
  CHECK_FALSE(is_approximated(fixtures::D4(), fixtures::D4().top()).ok);
  CHECK_FALSE(is_join_irreducible(fixtures::D4(), fixtures::D4().top()).ok);
  CHECK(is_join_irreducible(fixtures::D4(), fixtures::D4().index_of("a")).ok);
}

TEST_CASE("hom is the residual of the tensor") {
  for (const auto& q : builtins()) {
    INFO(q->label());
    CHECK(check_residuation(*q).ok);
    for (int u = 0; u < q->size(); ++u)
      for (int w = 0; w < q->size(); ++w) CHECK(q->hom(u, w) == hom_oracle(*q, u, w));
  }
}

TEST_CASE("closed forms on chains") {
  for (int m : {2, 3, 4, 6}) {
    const auto luk = chain_luk(m), mn = chain_min(m), nil = chain_nilmin(m);
    const int top = m - 1;
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) {
        CHECK(luk->tensor(u, v) == std::max(0, u + v - top));
        CHECK(luk->hom(u, v) == std::min(top, top - u + v));
        CHECK(mn->tensor(u, v) == std::min(u, v));
        CHECK(mn->hom(u, v) == (u <= v ? top : v));
        CHECK(nil->tensor(u, v) == (u + v > top ? std::min(u, v) : 0));
        CHECK(nil->hom(u, v) == (u <= v ? top : std::max(top - u, v)));
      }
  }
}

TEST_CASE("builtin expressions") {
  CHECK(builtin("product(two,chain_min(3))")->size() == 6);
  CHECK(builtin("delta_grid(3,2,min)")->unit() != builtin("delta_grid(3,2,min)")->bot());
  CHECK(builtin("chain_luk(3)")->same_as(*fixtures::QL3()));
  CHECK(kind_of([] { builtin("chain_foo(3)"); }) == ErrorKind::UnknownBuiltin);
  CHECK(kind_of([] { builtin("product(two"); }) == ErrorKind::UnknownBuiltin);
  CHECK(kind_of([] { builtin("two two"); }) == ErrorKind::UnknownBuiltin);
}

TEST_CASE("validate_quantale rejects broken tensors") {
  const auto l = chain_lattice(3);
  // Non-commutative.
  CHECK(kind_of([&] { validate_quantale(l, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}}, 2); }) == ErrorKind::NotCommutative);
  // Unit law fails for u = 1/2.
  CHECK(kind_of([&] { validate_quantale(l, {{0, 0, 0}, {0, 0, 0}, {0, 0, 2}}, 2); }) == ErrorKind::UnitFails);
}

TEST_CASE("lax morphisms and canonical maps") {
  const auto ql = fixtures::QL3(), qm = fixtures::QM3();
  CHECK(is_lax_morphism({0, 1, 2}, *qm, *ql).ok);
  CHECK_FALSE(is_lax_morphism({0, 1, 2}, *ql, *qm).ok);
  CHECK(kind_of([&] { make_lax_morphism({0, 1, 2}, ql, qm); }) == ErrorKind::ValidationFailed);
  const auto i = canonical_i(ql), p = canonical_p(ql);
  CHECK(i.map == std::vector<int>{0, 2});
  CHECK(p.map == std::vector<int>{0, 0, 1});
}

TEST_CASE("dualising elements") {
  const auto g = find_dualizing(fixtures::QL3());
  REQUIRE(g.size() == 1);
  CHECK(fixtures::QL3()->name(g[0].dualizing) == "0");
  CHECK(g[0].neg == std::vector<int>{2, 1, 0});
  CHECK(find_dualizing(fixtures::QM3()).empty());
  for (const auto& s : find_dualizing(fixtures::Q2x2()))
    for (int u = 0; u < 4; ++u) CHECK(s(s(u)) == u);
}
