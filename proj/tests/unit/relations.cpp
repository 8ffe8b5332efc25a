#include <random>

#include "qcat/fixtures.hpp"
#include "qcat/vdist.hpp"
#include "support.hpp"

using namespace qcat;
using qcat::test::kind_of;

namespace {

VRelation compose_oracle(const VRelation& s, const VRelation& r) {
  const Quantale& q = r.q();
  VRelation out(r.quantale(), r.src(), s.tgt(), q.bot());
  for (int x = 0; x < r.src(); ++x)
    for (int z = 0; z < s.tgt(); ++z)
      for (int y = 0; y < r.tgt(); ++y) out.set(x, z, q.join(out(x, z), q.tensor(r(x, y), s(y, z))));
  return out;
}

bool left_weight(const VCategory& x, const Weight& w) {
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < x.size(); ++t)
      if (!x.q().leq(x.q().tensor(w[s], x(s, t)), w[t])) return false;
  return true;
}

bool right_weight(const VCategory& x, const Weight& w) {
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < x.size(); ++t)
      if (!x.q().leq(x.q().tensor(x(s, t), w[t]), w[s])) return false;
  return true;
}

bool adjoint(const VCategory& x, const Weight& phi, const Weight& psi) {
  const Quantale& q = x.q();
  int acc = q.bot();
  for (int s = 0; s < x.size(); ++s) acc = q.join(acc, q.tensor(psi[s], phi[s]));
  if (!q.leq(q.unit(), acc)) return false;
  for (int s = 0; s < x.size(); ++s)
    for (int t = 0; t < x.size(); ++t)
      if (!q.leq(q.tensor(psi[s], phi[t]), x(s, t))) return false;
  return true;
}

std::vector<Weight> all_vectors(int base, int n) {
  std::vector<Weight> out;
  for_each_vector(base, n, [&](const std::vector<int>& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

bool cauchy_complete_oracle(const VCategory& x) {
  const auto vs = all_vectors(x.q().size(), x.size());
  for (const auto& phi : vs) {
    if (!left_weight(x, phi)) continue;
    for (const auto& psi : vs) {
      if (!right_weight(x, psi) || !adjoint(x, phi, psi)) continue;
      bool represented = false;
      for (int p = 0; p < x.size(); ++p) {
        Weight lo, up;
        for (int t = 0; t < x.size(); ++t) {
          lo.push_back(x(p, t));
          up.push_back(x(t, p));
        }
        represented = represented || (lo == phi && up == psi);
      }
      if (!represented) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("composition matches the defining join") {
  gen::Rng rng(11);
  for (const auto& q : {fixtures::QL3(), fixtures::Q2x2(), chain_nilmin(4)})
    for (int i = 0; i < 30; ++i) {
      const auto r = gen::random_relation(rng, q, 2, 3), s = gen::random_relation(rng, q, 3, 2),
                 t = gen::random_relation(rng, q, 2, 4);
      CHECK(compose(s, r) == compose_oracle(s, r));
      CHECK(compose(t, compose(s, r)) == compose(compose(t, s), r));
      CHECK(compose(identity_rel(q, 3), r) == r);
      CHECK(compose(r, identity_rel(q, 2)) == r);
    }
  CHECK(kind_of([] {
          const auto q = fixtures::QL3();
          compose(VRelation(q, 2, 2), VRelation(q, 2, 3));
        }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { compose(VRelation(fixtures::QL3(), 2, 2), VRelation(fixtures::QM3(), 2, 2)); }) ==
        ErrorKind::QuantaleMismatch);
}

TEST_CASE("extension and lifting are the right adjoints of composition") {
  gen::Rng rng(12);
  const auto q = fixtures::QL3();
  for (int i = 0; i < 40; ++i) {
    const auto r = gen::random_relation(rng, q, 2, 3), t = gen::random_relation(rng, q, 2, 2);
    const auto s = gen::random_relation(rng, q, 3, 2);
    CHECK(compose(s, r).leq(t) == s.leq(extension(t, r)));
    const auto u = gen::random_relation(rng, q, 2, 2), rr = gen::random_relation(rng, q, 2, 3),
               tt = gen::random_relation(rng, q, 2, 3);
    CHECK(compose(rr, u).leq(tt) == u.leq(lifting(rr, tt)));
  }
}

TEST_CASE("graphs, opposites and adjoint pairs of relations") {
  const auto q = fixtures::QL3();
  const std::vector<int> f{1, 0, 1};
  const auto g = from_map(q, f, 2);
  CHECK(g(0, 1) == q->unit());
  CHECK(g(0, 0) == q->bot());
  CHECK(opposite(opposite(g)) == g);
  CHECK(is_adjoint_pair(g, opposite(g)).ok);
  CHECK_FALSE(is_adjoint_pair(opposite(g), g).ok);
}

TEST_CASE("category validation") {
  const auto q = fixtures::QL3();
  CHECK(kind_of([&] { validate_category(VRelation(q, {{1, 2}, {2, 2}})); }) == ErrorKind::NotReflexive);
  CHECK(kind_of([&] { validate_category(VRelation(q, {{2, 2, 0}, {0, 2, 2}, {0, 0, 2}})); }) == ErrorKind::NotTransitive);
  const auto x2 = fixtures::X2();
  CHECK(x2.index_of("q") == 1);
  CHECK(is_symmetric(x2));
  CHECK(is_separated(x2).ok);
  CHECK_FALSE(is_separated(fixtures::codiscrete2()).ok);
  CHECK(check_category(quantale_category(q).a).ok);
  CHECK(power(q, 2).size() == 9);
  CHECK(dual(dual(fixtures::W())).a == fixtures::W().a);
}

TEST_CASE("adjoint functors are those with f_* = g^*") {
  gen::Rng rng(13);
  for (const auto& q : {fixtures::QL3(), fixtures::Q2x2()})
    for (int i = 0; i < 20; ++i) {
      const auto x = gen::random_category(rng, q, 2), y = gen::random_category(rng, q, 3);
      for (const auto& f : gen::all_functors(x, y))
        for (const auto& g : gen::all_functors(y, x)) {
          bool adj = true;
          for (int s = 0; s < x.size(); ++s)
            for (int t = 0; t < y.size(); ++t) adj = adj && y(f[s], t) == x(s, g[t]);
          CHECK(is_adjoint_functors(f, g, x, y).ok == adj);
          CHECK((graph_weights(f, x, y).lower == graph_weights(g, y, x).upper) == adj);
        }
    }
}

TEST_CASE("weights enumerated by the library are exactly the weights") {
  gen::Rng rng(14);
  for (int i = 0; i < 20; ++i) {
    const auto x = gen::random_category(rng, fixtures::QL3(), 3);
    std::size_t lefts = 0, rights = 0;
    for (const auto& v : all_vectors(3, 3)) {
      lefts += left_weight(x, v);
      rights += right_weight(x, v);
      CHECK(is_weight(x, v, Side::Left).ok == left_weight(x, v));
      CHECK(is_weight(x, v, Side::Right).ok == right_weight(x, v));
      if (left_weight(x, v)) CHECK(is_adjoint_dist(x, v, upper_star(x, 0)).ok == adjoint(x, v, upper_star(x, 0)));
    }
    CHECK(enumerate_weights(x, Side::Left).size() == lefts);
    CHECK(enumerate_weights(x, Side::Right).size() == rights);
  }
}

TEST_CASE("W is not Cauchy complete, with the pair ((0,1),(1,0)), ((1,1),(1,1))") {
  const auto w = fixtures::W();
  const auto r = is_cauchy_complete(w);
  REQUIRE_FALSE(r.ok);
  const Quantale& q = w.q();
  CHECK(r.witness == std::vector<int>{q.index_of("(0,1)"), q.index_of("(1,0)"), q.top(), q.top()});
  CHECK(r.lhs == "((0,1),(1,0))");
  CHECK_FALSE(cauchy_complete_oracle(w));
}

TEST_CASE("Cauchy completeness agrees with an independent enumeration") {
  gen::Rng rng(15);
  for (const auto& q : {fixtures::Q2x2(), fixtures::QL3(), fixtures::QN3(), two()})
    for (int n : {2, 3})
      for (int i = 0; i < 15; ++i) {
        const auto x = gen::random_category(rng, q, n);
        CHECK(is_cauchy_complete(x).ok == cauchy_complete_oracle(x));
      }
}

TEST_CASE("codirected weights on a chain preorder") {
  const auto x = preorder_category({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(is_codirected(x, lower_star(x, 1)).ok);
  CHECK_FALSE(is_codirected(x, {0, 0, 0}).ok);
  CHECK(is_codirected_complete(x).ok);
  CHECK(is_flat(x, upper_star(x, 2)).ok);
  CHECK(pairing_preserves_infima(x, lower_star(x, 0)).ok);
}

TEST_CASE("fully faithful and fully dense functors") {
  const auto x2 = fixtures::X2();
  CHECK(is_fully_faithful({1, 0}, x2, x2).ok);
  CHECK(is_fully_dense({1, 0}, x2, x2).ok);
  const auto one = unit_category(fixtures::QL3());
  CHECK(is_functor({0}, one, x2).ok);
  CHECK(is_fully_faithful({0}, one, x2).ok);
  CHECK_FALSE(is_fully_dense({0}, one, x2).ok);
}
