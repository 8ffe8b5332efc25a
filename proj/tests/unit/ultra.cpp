#include "qcat/closure.hpp"
#include "qcat/fixtures.hpp"
#include "qcat/ultra.hpp"
#include "support.hpp"

using namespace qcat;
using qcat::test::kind_of;

namespace {

Ultrafilter family(int n, const std::vector<Mask>& members) {
  Ultrafilter f{n, std::vector<bool>(std::size_t{1} << n)};
  for (Mask m : members) f.member[m] = true;
  return f;
}

}  // namespace

TEST_CASE("principal ultrafilters") {
  for (int n = 1; n <= 5; ++n) {
    const auto& u = ultrafilters(n);
    REQUIRE(static_cast<int>(u.size()) == n);
    for (int x = 0; x < n; ++x) {
      CHECK(u[x].core() == Mask{1} << x);
      CHECK(u[x] == unit_e(n, x));
      CHECK(ultrafilter_index(u[x]) == x);
      for (Mask m = 0; m < (Mask{1} << n); ++m) CHECK(u[x].contains(m) == bool(m >> x & 1u));
    }
  }
}

TEST_CASE("is_ultrafilter rejects non-maximal and non-upward families") {
  CHECK(is_ultrafilter(unit_e(3, 2)).ok);
  CHECK_FALSE(is_ultrafilter(family(2, {0b11})).ok);
  CHECK_FALSE(is_ultrafilter(family(2, {0b01})).ok);
  CHECK_FALSE(is_ultrafilter(family(2, {0b00, 0b01, 0b10, 0b11})).ok);
  CHECK(kind_of([] { ultrafilter_index(family(2, {0b11})); }) != ErrorKind::ParseError);
}

TEST_CASE("monad structure on principal ultrafilters") {
  const std::vector<int> f{2, 0, 2};
  for (int x = 0; x < 3; ++x) CHECK(apply_U(f, 3, unit_e(3, x)) == unit_e(3, f[x]));
  CHECK(U_map(f, 3) == f);
  CHECK(e_map(4) == std::vector<int>{0, 1, 2, 3});
  CHECK(m_map(3) == std::vector<int>{0, 1, 2});
  CHECK(mult_m(3, unit_e(3, 1)) == unit_e(3, 1));
}

TEST_CASE("xi on principal ultrafilters picks the element") {
  for (const auto& q : {fixtures::QL3(), fixtures::Q2x2(), chain_nilmin(4)}) {
    CHECK(xi_hypotheses(*q).ok);
    for (int u = 0; u < q->size(); ++u) CHECK(xi(*q, unit_e(q->size(), u)) == u);
  }
}

TEST_CASE("lax extension restricts to the relation on principal ultrafilters") {
  gen::Rng rng(31);
  for (const auto& q : {fixtures::QL3(), fixtures::QM3(), two()})
    for (int i = 0; i < 10; ++i) {
      const auto r = gen::random_relation(rng, q, 2, 3);
      CHECK(lax_extension(r) == r);
      const auto ey = opposite(from_map(q, e_map(3), 3));
      CHECK(kleisli_compose(ey, r) == r);
    }
}

TEST_CASE("U-categories from preorders and V-categories") {
  const BoolMatrix order{{1, 1}, {0, 1}};
  const auto u = ucategory_from_preorder(order);
  CHECK(check_ucategory(u.a).ok);
  CHECK(u(0, 1) == 1);
  CHECK(u(1, 0) == 0);
  const auto x2 = fixtures::X2();
  const auto f = free_ucategory(x2);
  CHECK(underlying_vcat(f).a == x2.a);
  CHECK(kind_of([] {
          const auto q = fixtures::QL3();
          validate_ucategory(VRelation(q, {{1, 0}, {0, 2}}));
        }) != ErrorKind::ParseError);
}

TEST_CASE("K of X2 and hom_xi are Cauchy complete") {
  const auto q = fixtures::QL3();
  const auto s = to_ch_space(fixtures::X2());
  CHECK(s.alpha == std::vector<int>{0, 1});
  const auto k = functor_K(s);
  CHECK(k.a == fixtures::X2().a);
  CHECK(is_cauchy_complete_ucat(k).ok);
  CHECK(check_phi_meet(k).ok);
  CHECK(check_phi_laws(k).ok);
  const auto h = hom_xi_category(q);
  CHECK(is_cauchy_complete_ucat(h).ok);
  CHECK(functor_K(quantale_ch_space(q)).a == h.a);
}

TEST_CASE("representing ultrafilters") {
  const auto k = functor_K(to_ch_space(fixtures::X2()));
  for (int p = 0; p < 2; ++p) {
    const auto rep = representing_ultrafilter(k, ulower_star(k, p));
    CHECK(rep.index == p);
    CHECK(rep.ultrafilter == unit_e(2, p));
  }
  CHECK(representation_hypotheses(*fixtures::QL3()).ok);
  CHECK_FALSE(representation_hypotheses(*fixtures::Q2x2()).ok);
  CHECK(kind_of([&] { representing_ultrafilter(k, {0, 0}); }) != ErrorKind::ParseError);
}

TEST_CASE("phi_M is bottom on the empty set and a join on unions") {
  const auto k = functor_K(to_ch_space(fixtures::X2()));
  const auto q = k.q();
  CHECK(phi_M(k, 0) == std::vector<int>{q.bot(), q.bot()});
  CHECK(phi_M(k, 0b01) == ulower_star(k, 0));
}

TEST_CASE("theory-level checks on builtin quantales") {
  for (const auto& q : {two(), fixtures::QM3(), fixtures::QL3()}) {
    CHECK(check_xi_algebra(*q).ok);
    CHECK(check_tensor_lax(*q).ok);
    CHECK(check_compatible(canonical_i(q)).ok);
  }
  CHECK(check_compatible(make_lax_morphism({0, 1, 2}, fixtures::QM3(), fixtures::QL3())).ok);
}
