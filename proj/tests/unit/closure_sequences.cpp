#include <algorithm>

#include "qcat/closure.hpp"
#include "qcat/fixtures.hpp"
#include "qcat/props.hpp"
#include "qcat/sequences.hpp"
#include "support.hpp"

using namespace qcat;
using qcat::test::kind_of;

namespace {

Mask closure_oracle(const VCategory& x, Mask m) {
  const Quantale& q = x.q();
  Mask out = 0;
  for (int p = 0; p < x.size(); ++p) {
    int acc = q.bot();
    for (int z = 0; z < x.size(); ++z)
      if (m >> z & 1u) acc = q.join(acc, q.tensor(x(p, z), x(z, p)));
    if (q.leq(q.unit(), acc)) out |= Mask{1} << p;
  }
  return out;
}

// Join over N < horizon of the meet of a(x_n, x_m) over N <= n, m < N + window.
int degree_oracle(const VCategory& x, const EvPeriodicSeq& s) {
  const Quantale& q = x.q();
  const int window = 2 * static_cast<int>(s.pre.size() + s.per.size()) + 2;
  int acc = q.bot();
  for (int start = 0; start <= static_cast<int>(s.pre.size()); ++start) {
    int m = q.top();
    for (int i = start; i < start + window; ++i)
      for (int j = start; j < start + window; ++j) m = q.meet(m, x(s.at(i), s.at(j)));
    acc = q.join(acc, m);
  }
  return acc;
}

}  // namespace

TEST_CASE("L-closure matches its defining formula") {
  gen::Rng rng(21);
  for (const auto& q : {fixtures::QL3(), two(), fixtures::QM3()})
    for (int i = 0; i < 20; ++i) {
      const auto x = gen::random_category(rng, q, 4);
      for (Mask m = 0; m < 16; ++m) CHECK(l_closure(x, m) == closure_oracle(x, m));
    }
}

TEST_CASE("topology of X2 and of the codiscrete category") {
  const auto t = induced_topology(fixtures::X2());
  CHECK(t == discrete_topology(2));
  CHECK(t.closure(0b10) == 0b10);
  CHECK(t.neighbourhood(0) == 0b01);
  CHECK(is_hausdorff_topology(t).ok);
  CHECK(check_ball_base(fixtures::X2()).ok);
  const auto c = induced_topology(fixtures::codiscrete2());
  CHECK(c.closed_sets == std::vector<Mask>{0b00, 0b11});
  CHECK_FALSE(is_hausdorff_topology(c).ok);
  CHECK(c.closure(0b01) == 0b11);
  CHECK(kind_of([] { to_ch_space(fixtures::codiscrete2()); }) == ErrorKind::NotCompactSeparated);
  CHECK(kind_of([] { induced_topology(fixtures::W()); }) == ErrorKind::UnitNotJoinIrreducible);
}

TEST_CASE("topology validation") {
  CHECK(check_topology(2, {0b00, 0b01, 0b11}).ok);
  CHECK_FALSE(check_topology(2, {0b01, 0b11}).ok);
  CHECK_FALSE(check_topology(2, {0b00, 0b01, 0b10}).ok);
  const auto p = product_topology(discrete_topology(2), validate_topology(2, {0b00, 0b11}));
  CHECK(p.n == 4);
  CHECK(p.is_closed(0b0011));
  CHECK_FALSE(p.is_closed(0b0001));
}

TEST_CASE("symmetric balls of X2") {
  const auto x = fixtures::X2();
  const int half = x.q().index_of("1/2"), one = x.q().top();
  CHECK(symmetric_ball(x, 0, one) == 0b01);
  CHECK(symmetric_ball(x, 0, half) == 0b11);
}

TEST_CASE("ev-periodic sequences: indexing, parsing and rendering") {
  const EvPeriodicSeq s{{0}, {1, 0}};
  CHECK(s.at(0) == 0);
  CHECK(s.at(1) == 1);
  CHECK(s.at(2) == 0);
  CHECK(s.at(101) == 1);
  const auto x = fixtures::X2();
  CHECK(parse_sequence(x, "pre=[p];per=[q,p]") == s);
  CHECK(render_sequence(x, s) == "pre=[p];per=[q,p]");
  CHECK(parse_sequence(x, " pre=[] ; per=[ q ] ") == constant_sequence(1));
  CHECK(kind_of([&] { parse_sequence(x, "pre=[r];per=[q]"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_sequence(x, "per=[q]"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { validate_sequence(x, EvPeriodicSeq{{}, {}}); }) != ErrorKind::ParseError);
  CHECK(enumerate_sequences(2, 1, 2).size() == 3 * 6);
}

TEST_CASE("alternating sequence on X2") {
  const auto x = fixtures::X2();
  const auto s = fixtures::alternating();
  CHECK(x.q().name(cauchy_degree(x, s)) == "1/2");
  CHECK_FALSE(is_cauchy(x, s));
  const auto w = induced_weights(x, s);
  CHECK(w.phi == std::vector<int>{1, 1});
  CHECK(w.psi == std::vector<int>{1, 1});
  CHECK_FALSE(is_adjoint_dist(x, w.phi, w.psi).ok);
  CHECK_FALSE(converges_to(x, s, 0).ok);
}

TEST_CASE("Cauchy degree and convergence agree with direct evaluation") {
  gen::Rng rng(22);
  std::vector<VCategory> cats{fixtures::X2(), fixtures::codiscrete2()};
  for (int i = 0; i < 6; ++i) cats.push_back(gen::random_category(rng, fixtures::QM3(), 3));
  for (const auto& x : cats)
    for (const auto& s : enumerate_sequences(x.size(), 2, 2)) {
      CHECK(cauchy_degree(x, s) == degree_oracle(x, s));
      for (int p = 0; p < x.size(); ++p) CHECK(converges_to(x, s, p).ok == converges_direct(x, s, p));
    }
}
