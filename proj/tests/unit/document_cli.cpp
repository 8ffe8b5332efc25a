#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcat/cli.hpp"
#include "qcat/document.hpp"
#include "support.hpp"

using namespace qcat;
using qcat::test::kind_of;
using nlohmann::json;

namespace {

const std::filesystem::path kFixtures = QCAT_FIXTURE_DIR;

std::string fixture(const char* name) { return (kFixtures / name).string(); }

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qcat_unit";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("fixture documents load") {
  const auto doc = load_document(fixture("x2.qcat"));
  CHECK(doc.quantale("QL3").builtin == "chain_luk(3)");
  CHECK(doc.category("X2").cat.objects == std::vector<std::string>{"p", "q"});
  CHECK(doc.sequence("alt").seq.per == std::vector<int>{0, 1});
  CHECK(doc.weight("p_lower").side == Side::Left);
  CHECK(doc.morphism("swap").map == std::vector<int>{1, 0});
  CHECK(kind_of([&] { (void)doc.category("Y"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("serialization round-trips byte for byte") {
  for (const char* name : {"x2.qcat", "w.qcat", "chains.qcat"}) {
    const std::string text = slurp(fixture(name));
    const auto doc = parse_document_text(text);
    CHECK(serialize(doc) == text);
    CHECK(parse_document_text(serialize(doc)) == doc);
  }
}

TEST_CASE("explicit quantales survive a round trip") {
  const auto doc = load_document(fixture("chains.qcat"));
  const auto again = parse_document_text(serialize(doc));
  CHECK(again.quantale("two").q->same_as(*two()));
  CHECK(again.quantale("two").builtin.empty());
}

TEST_CASE("document errors") {
  CHECK(kind_of([] { load_document(fixture("undefined_quantale.qcat")); }) == ErrorKind::ValidationError);
  CHECK(kind_of([] { load_document(fixture("malformed.qcat")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { load_document(fixture("absent.qcat")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_document_text(R"({"extra": {}})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          parse_document_text(R"({"quantales": {"Q": {"builtin": "two"}},
            "categories": {"X": {"quantale": "Q", "objects": ["p"], "structure": [["2"]]}}})");
        }) == ErrorKind::ParseError);
  // Structure is not reflexive.
  CHECK(kind_of([] {
          parse_document_text(R"({"quantales": {"Q": {"builtin": "two"}},
            "categories": {"X": {"quantale": "Q", "objects": ["p"], "structure": [["0"]]}}})");
        }) == ErrorKind::ValidationError);
  try {
    parse_document_text(R"({"quantales": {"Q": {"builtin": "two"}},
      "categories": {"A": {"quantale": "Q", "objects": ["p"], "structure": [["0"]]},
                     "B": {"quantale": "R", "objects": ["p"], "structure": [["1"]]}}})");
    FAIL("expected an error");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("/categories/A") != std::string::npos);
    CHECK(msg.find("/categories/B") != std::string::npos);
  }
}

TEST_CASE("cli: closure, completeness and props") {
  auto r = cli({"closure", fixture("x2.qcat"), "--cat", "X2", "--set", "q"});
  CHECK(r.code == kExitPass);
  CHECK(r.out == "{q}\n");
  r = cli({"closure", fixture("chains.qcat"), "--cat", "Codisc", "--set", "q"});
  CHECK(r.out == "{p,q}\n");

  json report;
  int code = -1;
  std::ostringstream out, err;
  report = run_cli_report({"complete", fixture("w.qcat"), "--cat", "W"}, out, err, code);
  CHECK(code == kExitFail);
  CHECK(report["verdict"] == "fail");
  REQUIRE(report["witnesses"].size() == 1);
  CHECK(report["witnesses"][0]["lhs"] == "((0,1),(1,0))");
  CHECK(report["witnesses"][0]["rhs"] == "((1,1),(1,1))");
  CHECK(report["timings"].empty());

  CHECK(cli({"props", "--suite", "thm1", "--seed", "7"}).code == kExitPass);
  CHECK(cli({"props", "--suite", "bogus"}).code == kExitInvalid);
  CHECK(cli({"complete", fixture("x2.qcat"), "--cat", "X2", "--codirected"}).code == kExitPass);
  CHECK(cli({"complete", fixture("x2.qcat"), "--cat", "KX2", "--ucat"}).code == kExitPass);
  CHECK(cli({"complete", fixture("x2.qcat"), "--cat", "X2", "--ucat", "--codirected"}).code == kExitInvalid);
}

TEST_CASE("cli: exit codes for invalid input") {
  CHECK(cli({}).code == kExitInvalid);
  CHECK(cli({"validate"}).code == kExitInvalid);
  CHECK(cli({"validate", fixture("malformed.qcat")}).code == kExitInvalid);
  CHECK(cli({"check", "functor", fixture("x2.qcat"), "--on", "X2"}).code == kExitInvalid);
  CHECK(cli({"cauchy", fixture("x2.qcat"), "--cat", "X2", "--seq", "pre=[z];per=[p]"}).code == kExitInvalid);
  CHECK(cli({"--help"}).code == kExitPass);
}

TEST_CASE("cli: check laws on every kind of entity") {
  const auto x2 = fixture("x2.qcat"), chains = fixture("chains.qcat");
  CHECK(cli({"check", "residuation", x2, "--on", "QL3"}).code == kExitPass);
  CHECK(cli({"check", "girard", chains, "--on", "QM3"}).code == kExitFail);
  CHECK(cli({"check", "functor", x2, "--on", "swap"}).code == kExitPass);
  CHECK(cli({"check", "fully_faithful", x2, "--on", "collapse"}).code == kExitFail);
  CHECK(cli({"check", "codirected", x2, "--on", "p_lower"}).code == kExitPass);
  CHECK(cli({"check", "lax_morphism", chains, "--on", "min_to_luk"}).code == kExitPass);
  CHECK(cli({"check", "flat", chains, "--on", "up"}).code == kExitPass);
  CHECK(cli({"ucheck", x2, "--ucat", "KX2"}).code == kExitPass);
  CHECK(cli({"kfunctor", x2, "--cat", "X2"}).code == kExitPass);
  CHECK(cli({"kfunctor", chains, "--cat", "Codisc"}).code == kExitFail);
  CHECK(cli({"report", fixture("w.qcat")}).code == kExitPass);
  for (const auto& law : check_laws()) CHECK_FALSE(law.empty());
}

TEST_CASE("cli: sequences") {
  auto r = cli({"cauchy", fixture("x2.qcat"), "--cat", "X2", "--seq", "alt"});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("cauchy degree: 1/2") != std::string::npos);
  r = cli({"cauchy", fixture("x2.qcat"), "--cat", "X2", "--seq", "pre=[p];per=[q]"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("converges to: {q}") != std::string::npos);
}

TEST_CASE("cli: json reports are deterministic and replayable") {
  const auto w = fixture("w.qcat");
  const auto a = temp("a.json"), b = temp("b.json");
  CHECK(cli({"complete", w, "--cat", "W", "--json", a}).code == kExitFail);
  CHECK(cli({"--json", b, "complete", w, "--cat", "W"}).code == kExitFail);
  CHECK(slurp(a) == slurp(b));
  CHECK(cli({"replay", w, a}).code == kExitPass);

  json tampered = json::parse(slurp(a));
  tampered["witnesses"][0]["indices"] = {3, 3, 3, 3};
  const auto c = temp("c.json");
  std::ofstream(c) << tampered.dump();
  const auto r = cli({"replay", w, c});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("NOT reproduced") != std::string::npos);

  const auto t = temp("t.json");
  CHECK(cli({"validate", w, "--json", t, "--timings"}).code == kExitPass);
  CHECK(json::parse(slurp(t))["timings"].contains("total_ms"));
}

TEST_CASE("witness replay for each specialised law") {
  const auto doc = load_document(fixture("chains.qcat"));
  const json sep = {{"law", "separated"}, {"target", {{"kind", "category"}, {"name", "Codisc"}}}, {"indices", {0, 1}}};
  CHECK(replay_witness(doc, sep));
  json self = sep;
  self["indices"] = {0, 0};
  CHECK_FALSE(replay_witness(doc, self));
  json chain = sep;
  chain["target"]["name"] = "Chain3";
  CHECK_FALSE(replay_witness(doc, chain));
}
