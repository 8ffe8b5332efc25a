#include "qcat/fixtures.hpp"
#include "qcat/props.hpp"
#include "support.hpp"

using namespace qcat;
using qcat::test::kind_of;

TEST_CASE("every property suite passes on several seeds") {
  for (std::uint64_t seed : {1ull, 7ull, 99ull})
    for (const auto& name : suite_names()) {
      const auto r = run_suite(name, seed);
      INFO(name << " seed " << seed);
      for (const auto& f : r.failures) INFO(f.law << " " << f.lhs << " vs " << f.rhs << " " << f.detail);
      CHECK(r.ok());
      CHECK(r.cases > 0);
    }
}

TEST_CASE("suites are deterministic in the seed") {
  const auto a = run_suite("functors", 5), b = run_suite("functors", 5);
  CHECK(a.cases == b.cases);
  CHECK(a.notes == b.notes);
}

TEST_CASE("unknown suites are rejected") {
  CHECK(kind_of([] { run_suite("nope", 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("horizon convergence on a constant tail") {
  const auto x = fixtures::X2();
  CHECK(converges_direct(x, EvPeriodicSeq{{0, 1}, {1}}, 1));
  CHECK_FALSE(converges_direct(x, EvPeriodicSeq{{0, 1}, {1}}, 0));
}
