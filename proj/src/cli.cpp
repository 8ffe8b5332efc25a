#include "qcat/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "qcat/closure.hpp"
#include "qcat/props.hpp"

namespace qcat {

using nlohmann::json;

namespace {

using LawFn = std::function<CheckReport(const Document&, const std::string&)>;

struct LawSpec {
  std::string target;  // quantale, category, ucategory, weight, morphism
  LawFn fn;
};

CheckReport xi_guarded(const Quantale& q, CheckReport (*fn)(const Quantale&)) {
  if (auto h = xi_hypotheses(q); !h) return h;
  return fn(q);
}

const VCategory& weight_category(const Document& doc, const WeightEntry& w) {
  if (w.on_ucategory) throw Error(ErrorKind::InvalidArgument, "law needs a weight on a V-category");
  return doc.category(w.category).cat;
}

const std::map<std::string, LawSpec>& law_table() {
  static const std::map<std::string, LawSpec> table = [] {
    std::map<std::string, LawSpec> t;
    const auto quantale = [&t](const std::string& law, std::function<CheckReport(const QuantalePtr&)> fn) {
      t[law] = {"quantale", [fn](const Document& d, const std::string& n) { return fn(d.quantale(n).q); }};
    };
    quantale("residuation", [](const QuantalePtr& q) { return check_residuation(*q); });
    quantale("completely_distributive", [](const QuantalePtr& q) { return is_completely_distributive(q->lattice()); });
    quantale("approximated_unit",
             [](const QuantalePtr& q) { return is_approximated(q->lattice(), q->totally_below(), q->unit()); });
    quantale("unit_irreducible", [](const QuantalePtr& q) { return is_join_irreducible(q->lattice(), q->unit()); });
    quantale("xi_algebra", [](const QuantalePtr& q) { return xi_guarded(*q, check_xi_algebra); });
    quantale("tensor_lax", [](const QuantalePtr& q) { return xi_guarded(*q, check_tensor_lax); });
    quantale("strict", [](const QuantalePtr& q) { return xi_guarded(*q, check_strict); });
    quantale("pointwise_strict", [](const QuantalePtr& q) { return xi_guarded(*q, check_pointwise_strict); });
    quantale("finite_sup_compatible", [](const QuantalePtr& q) { return xi_guarded(*q, check_finite_sup_compatible); });
    quantale("girard", [](const QuantalePtr& q) {
      const auto g = find_dualizing(q);
      if (g.empty()) return CheckReport::fail("girard", {}, "-", "-", "no dualising element");
      std::string names;
      for (const auto& s : g) names += (names.empty() ? "" : ",") + q->name(s.dualizing);
      return CheckReport::pass("girard", "dualising: " + names);
    });

    const auto category = [&t](const std::string& law, std::function<CheckReport(const VCategory&)> fn) {
      t[law] = {"category", [fn](const Document& d, const std::string& n) { return fn(d.category(n).cat); }};
    };
    category("separated", [](const VCategory& x) { return is_separated(x); });
    category("symmetric", [](const VCategory& x) {
      return is_symmetric(x) ? CheckReport::pass("symmetric") : CheckReport::fail("symmetric", {}, "-", "-");
    });
    category("cauchy_complete", [](const VCategory& x) { return is_cauchy_complete(x); });
    category("codirected_complete", [](const VCategory& x) { return is_codirected_complete(x); });
    category("hausdorff", [](const VCategory& x) { return is_hausdorff_topology(induced_topology(x)); });
    category("ball_base", [](const VCategory& x) { return check_ball_base(x); });
    category("compact", [](const VCategory& x) { return is_compact(x); });

    t["weight"] = {"weight", [](const Document& d, const std::string& n) {
                     const auto& w = d.weight(n);
                     return w.on_ucategory ? is_uweight(d.ucategory(w.category).cat, w.values, w.side)
                                           : is_weight(d.category(w.category).cat, w.values, w.side);
                   }};
    t["codirected"] = {"weight", [](const Document& d, const std::string& n) {
                         const auto& w = d.weight(n);
                         if (w.side != Side::Left) throw Error(ErrorKind::InvalidArgument, "codirected needs a left weight");
                         return is_codirected(weight_category(d, w), w.values);
                       }};
    t["flat"] = {"weight", [](const Document& d, const std::string& n) {
                   const auto& w = d.weight(n);
                   if (w.side != Side::Right) throw Error(ErrorKind::InvalidArgument, "flat needs a right weight");
                   return is_flat(weight_category(d, w), w.values);
                 }};

    const auto functor = [&t](const std::string& law, bool u,
                              std::function<CheckReport(const Document&, const MorphismEntry&)> fn) {
      t[law] = {"morphism", [fn, u, law](const Document& d, const std::string& n) {
                  const auto& m = d.morphism(n);
                  if (m.kind != (u ? "ufunctor" : "functor"))
                    throw Error(ErrorKind::InvalidArgument, law + " needs a morphism of kind " + (u ? "ufunctor" : "functor"));
                  return fn(d, m);
                }};
    };
    functor("functor", false, [](const Document& d, const MorphismEntry& m) {
      return is_functor(m.map, d.category(m.source).cat, d.category(m.target).cat);
    });
    functor("fully_faithful", false, [](const Document& d, const MorphismEntry& m) {
      return is_fully_faithful(m.map, d.category(m.source).cat, d.category(m.target).cat);
    });
    functor("fully_dense", false, [](const Document& d, const MorphismEntry& m) {
      return is_fully_dense(m.map, d.category(m.source).cat, d.category(m.target).cat);
    });
    functor("ufunctor", true, [](const Document& d, const MorphismEntry& m) {
      return is_ufunctor(m.map, d.ucategory(m.source).cat, d.ucategory(m.target).cat);
    });
    functor("ufully_faithful", true, [](const Document& d, const MorphismEntry& m) {
      return is_ufully_faithful(m.map, d.ucategory(m.source).cat, d.ucategory(m.target).cat);
    });
    functor("ufully_dense", true, [](const Document& d, const MorphismEntry& m) {
      return is_ufully_dense(m.map, d.ucategory(m.source).cat, d.ucategory(m.target).cat);
    });
    const auto lax = [&t](const std::string& law, std::function<CheckReport(const LaxMorphism&)> fn) {
      t[law] = {"morphism", [fn, law](const Document& d, const std::string& n) {
                  const auto& m = d.morphism(n);
                  if (m.kind != "lax") throw Error(ErrorKind::InvalidArgument, law + " needs a morphism of kind lax");
                  return fn(LaxMorphism{d.quantale(m.source).q, d.quantale(m.target).q, m.map});
                }};
    };
    lax("lax_morphism", [](const LaxMorphism& m) { return is_lax_morphism(m.map, *m.source, *m.target); });
    lax("compatible", [](const LaxMorphism& m) {
      if (auto h = xi_hypotheses(*m.source); !h) return h;
      if (auto h = xi_hypotheses(*m.target); !h) return h;
      return check_compatible(m);
    });

    const auto ucat = [&t](const std::string& law, std::function<CheckReport(const UCategory&)> fn) {
      t[law] = {"ucategory", [fn](const Document& d, const std::string& n) { return fn(d.ucategory(n).cat); }};
    };
    ucat("ucategory", [](const UCategory& x) { return check_ucategory(x.a); });
    ucat("phi_meet", [](const UCategory& x) { return check_phi_meet(x); });
    ucat("phi_laws", [](const UCategory& x) { return check_phi_laws(x); });
    ucat("ucauchy_complete", [](const UCategory& x) { return is_cauchy_complete_ucat(x); });
    ucat("underlying_cauchy_complete", [](const UCategory& x) { return is_cauchy_complete(underlying_vcat(x)); });
    return t;
  }();
  return table;
}

json witness_json(const CheckReport& r, const std::string& law, const std::string& kind, const std::string& name) {
  return json{{"law", law},           {"check", r.law},         {"target", {{"kind", kind}, {"name", name}}},
              {"indices", r.witness}, {"lhs", r.lhs},
              {"rhs", r.rhs},         {"detail", r.detail}};
}

std::string render_witness(const CheckReport& r) {
  std::string out = "witness " + r.law + " at (";
  for (std::size_t i = 0; i < r.witness.size(); ++i) out += (i ? "," : "") + std::to_string(r.witness[i]);
  out += "): " + r.lhs + " vs " + r.rhs;
  if (!r.detail.empty()) out += " [" + r.detail + "]";
  return out;
}

std::string render_set(const std::vector<std::string>& names, Mask m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (m >> i & 1u) {
      out += (first ? "" : ",") + names[i];
      first = false;
    }
  return out + "}";
}

Mask parse_set(const VCategory& x, const std::string& text) {
  Mask m = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" {}"), e = item.find_last_not_of(" {}");
    if (b == std::string::npos) continue;
    m |= Mask{1} << x.index_of(item.substr(b, e - b + 1));
  }
  return m;
}

struct Run {
  json report = json{{"verdict", "pass"}, {"witnesses", json::array()}, {"timings", json::object()}};
  std::ostream& out;

  void fail(const CheckReport& r, const std::string& kind, const std::string& name, std::string law = {}) {
    report["verdict"] = "fail";
    report["witnesses"].push_back(witness_json(r, law.empty() ? r.law : law, kind, name));
    out << "  " << render_witness(r) << "\n";
  }
  void check(const CheckReport& r, const std::string& kind, const std::string& name, const std::string& law = {}) {
    out << kind << " " << name << " " << (law.empty() ? r.law : law) << ": " << (r.ok ? "PASS" : "FAIL");
    if (r.ok && !r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
    if (!r.ok) fail(r, kind, name, law);
  }
};

void run_check(Run& run, const Document& doc, const std::string& law, const std::string& name) {
  auto it = law_table().find(law);
  if (it == law_table().end()) throw Error(ErrorKind::InvalidArgument, "unknown law '" + law + "'");
  run.check(it->second.fn(doc, name), it->second.target, name, law);
}

void run_report(Run& run, const Document& doc) {
  std::map<std::string, std::vector<std::string>> by_target;
  for (const auto& [law, spec] : law_table()) by_target[spec.target].push_back(law);
  const auto each = [&](const std::string& kind, const auto& entries, auto&& applicable) {
    for (const auto& [name, entry] : entries)
      for (const auto& law : by_target[kind]) {
        if (!applicable(law, entry)) continue;
        try {
          const CheckReport r = law_table().at(law).fn(doc, name);
          run.out << kind << " " << name << " " << law << ": " << (r.ok ? "PASS" : "FAIL") << "\n";
          run.report["details"][kind][name][law] = r.ok;
        } catch (const Error& e) {
          run.out << kind << " " << name << " " << law << ": n/a (" << to_string(e.kind()) << ")\n";
          run.report["details"][kind][name][law] = to_string(e.kind());
        }
      }
  };
  const auto always = [](const std::string&, const auto&) { return true; };
  each("quantale", doc.quantales, always);
  each("category", doc.categories, [](const std::string& law, const CategoryEntry& c) {
    return c.cat.size() <= 4 || law == "separated" || law == "symmetric" || law == "compact";
  });
  each("ucategory", doc.ucategories, always);
  each("weight", doc.weights, [](const std::string& law, const WeightEntry& w) {
    if (law == "codirected") return !w.on_ucategory && w.side == Side::Left;
    if (law == "flat") return !w.on_ucategory && w.side == Side::Right;
    return true;
  });
  each("morphism", doc.morphisms, [](const std::string& law, const MorphismEntry& m) {
    if (m.kind == "lax") return law == "lax_morphism" || law == "compatible";
    if (m.kind == "ufunctor") return law.rfind("u", 0) == 0;
    return law == "functor" || law == "fully_faithful" || law == "fully_dense";
  });
  run.report["verdict"] = "report";
}

void run_cauchy(Run& run, const Document& doc, const std::string& cat, const std::string& seq_text) {
  const VCategory& x = doc.category(cat).cat;
  const Quantale& q = x.q();
  EvPeriodicSeq s;
  if (seq_text.find('=') != std::string::npos) {
    s = parse_sequence(x, seq_text);
  } else {
    const auto& e = doc.sequence(seq_text);
    if (e.category != cat) throw Error(ErrorKind::InvalidArgument, "sequence belongs to another category");
    s = e.seq;
  }
  const int degree = cauchy_degree(x, s);
  const auto w = induced_weights(x, s);
  const bool cauchy = is_cauchy(x, s);
  const bool adjoint = is_adjoint_dist(x, w.phi, w.psi).ok;
  std::vector<std::string> limits;
  for (int p = 0; p < x.size(); ++p)
    if (converges_to(x, s, p)) limits.push_back(x.objects[p]);
  run.out << "sequence " << render_sequence(x, s) << " in " << cat << "\n";
  run.out << "  cauchy degree: " << q.name(degree) << " (" << (cauchy ? "Cauchy" : "not Cauchy") << ")\n";
  run.out << "  phi_s = " << render_weight(q, w.phi) << ", psi_s = " << render_weight(q, w.psi)
          << (adjoint ? ", adjoint" : ", not adjoint") << "\n";
  std::string lim;
  for (const auto& l : limits) lim += (lim.empty() ? "" : ",") + l;
  run.out << "  converges to: {" << lim << "}\n";
  run.report["details"] = {{"sequence", render_sequence(x, s)}, {"degree", q.name(degree)}, {"cauchy", cauchy},
                           {"phi", render_weight(q, w.phi)},   {"psi", render_weight(q, w.psi)},
                           {"adjoint", adjoint},               {"limits", limits}};
  if (!cauchy) {
    for (int z : s.per)
      for (int v : s.per)
        if (!q.leq(q.unit(), x(z, v))) {
          CheckReport r = CheckReport::fail("cauchy", {z, v}, q.name(q.unit()), q.name(x(z, v)),
                                            "recurring pair below the unit");
          run.fail(r, "category", cat);
          run.report["witnesses"].back()["sequence"] = render_sequence(x, s);
          return;
        }
  }
}

void run_kfunctor(Run& run, const Document& doc, const std::string& cat) {
  const VCategory& x = doc.category(cat).cat;
  try {
    const VCatCHSpace s = to_ch_space(x);
    const UCategory k = functor_K(s);
    const auto& ux = ultrafilters(x.size());
    run.out << "K(" << cat << ") over " << x.q().label() << ":\n";
    json rows = json::array();
    for (int i = 0; i < k.a.src(); ++i) {
      std::vector<std::string> row;
      for (int t = 0; t < k.size(); ++t) row.push_back(x.q().name(k(i, t)));
      std::string line;
      for (const auto& v : row) line += (line.empty() ? "" : " ") + v;
      run.out << "  " << ux[i].render() << " -> " << x.objects[s.alpha[i]] << " | " << line << "\n";
      rows.push_back(row);
    }
    run.report["details"] = {{"structure", rows}, {"alpha", s.alpha}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotCompactSeparated) throw;
    run.out << "K(" << cat << "): not compact separated\n";
    run.fail(CheckReport::fail("compact_separated", e.witness(), "-", "-", e.what()), "category", cat);
  }
}

void run_ucheck(Run& run, const Document& doc, const std::string& name) {
  for (const char* law : {"ucategory", "phi_laws", "phi_meet", "ucauchy_complete", "underlying_cauchy_complete"})
    run_check(run, doc, law, name);
  run.out << "underlying V-category:\n" << render(underlying_vcat(doc.ucategory(name).cat).a) << "\n";
}

void run_props(Run& run, const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  for (const auto& n : names) {
    const SuiteResult r = run_suite(n, seed);
    run.out << "suite " << n << " seed " << seed << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.cases
            << " cases, " << r.failed << " failed)\n";
    for (const auto& note : r.notes) run.out << "  note: " << note << "\n";
    for (const auto& f : r.failures) run.fail(f, "suite", n);
    run.report["details"][n] = {{"cases", r.cases}, {"failed", r.failed}, {"notes", r.notes}};
  }
}

void run_replay(Run& run, const Document& doc, const std::string& report_path) {
  std::ifstream in(report_path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + report_path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid report: ") + e.what());
  }
  if (!j.contains("witnesses") || !j["witnesses"].is_array()) throw Error(ErrorKind::ParseError, "report has no witnesses");
  int n = 0;
  for (const auto& w : j["witnesses"]) {
    const bool ok = replay_witness(doc, w);
    run.out << "replay " << w.value("law", "?") << " on " << w["target"].value("name", "?") << ": "
            << (ok ? "reproduced" : "NOT reproduced") << "\n";
    if (!ok) run.report["verdict"] = "fail";
    ++n;
  }
  run.report["details"] = {{"replayed", n}};
}

}  // namespace

std::vector<std::string> check_laws() {
  std::vector<std::string> out;
  for (const auto& [law, spec] : law_table()) out.push_back(law);
  return out;
}

bool replay_witness(const Document& doc, const json& w) {
  const std::string law = w.at("law").get<std::string>();
  const std::string name = w.at("target").at("name").get<std::string>();
  const std::vector<int> idx = w.at("indices").get<std::vector<int>>();
  const auto pair_split = [&](int n) {
    if (static_cast<int>(idx.size()) != 2 * n) throw Error(ErrorKind::InvalidArgument, "witness length");
    return std::make_pair(Weight(idx.begin(), idx.begin() + n), Weight(idx.begin() + n, idx.end()));
  };
  if (law == "cauchy_complete") {
    const VCategory& x = doc.category(name).cat;
    auto [phi, psi] = pair_split(x.size());
    if (!is_weight(x, phi, Side::Left) || !is_weight(x, psi, Side::Right) || !is_adjoint_dist(x, phi, psi)) return false;
    for (int p = 0; p < x.size(); ++p)
      if (lower_star(x, p) == phi && upper_star(x, p) == psi) return false;
    return true;
  }
  if (law == "ucauchy_complete") {
    const UCategory& x = doc.ucategory(name).cat;
    auto [phi, psi] = pair_split(x.size());
    if (!is_adjoint_udist(x, phi, psi)) return false;
    for (int p = 0; p < x.size(); ++p)
      if (ulower_star(x, p) == phi && uupper_star(x, p) == psi) return false;
    return true;
  }
  if (law == "codirected_complete") {
    const VCategory& x = doc.category(name).cat;
    if (static_cast<int>(idx.size()) != x.size() || !is_weight(x, idx, Side::Left) || !is_codirected(x, idx)) return false;
    for (int y = 0; y < x.size(); ++y) {
      bool inf = true;
      for (int s = 0; s < x.size() && inf; ++s) inf = x(s, y) == bracket(x.q(), idx, lower_star(x, s));
      if (inf) return false;
    }
    return true;
  }
  if (law == "separated") {
    const VCategory& x = doc.category(name).cat;
    const Quantale& q = x.q();
    return idx.size() == 2 && idx[0] != idx[1] && q.leq(q.unit(), x(idx[0], idx[1])) && q.leq(q.unit(), x(idx[1], idx[0]));
  }
  if (law == "cauchy") {
    const VCategory& x = doc.category(name).cat;
    const EvPeriodicSeq s = parse_sequence(x, w.at("sequence").get<std::string>());
    const auto in_period = [&](int v) { return std::find(s.per.begin(), s.per.end(), v) != s.per.end(); };
    return idx.size() == 2 && in_period(idx[0]) && in_period(idx[1]) && !x.q().leq(x.q().unit(), x(idx[0], idx[1]));
  }
  if (law == "compact_separated") {
    const VCategory& x = doc.category(name).cat;
    return !is_separated(x).ok || !is_hausdorff_topology(induced_topology(x)).ok;
  }
  auto it = law_table().find(law);
  if (it == law_table().end()) throw Error(ErrorKind::InvalidArgument, "cannot replay law '" + law + "'");
  const CheckReport r = it->second.fn(doc, name);
  return !r.ok && r.witness == idx && r.lhs == w.value("lhs", "") && r.rhs == w.value("rhs", "");
}

json run_cli_report(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int& exit_code) {
  CLI::App app{"qcat: finite quantale-enriched category toolkit", "qcat"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  bool timings = false;
  app.add_option("--json", json_path, "write the structured report to this path");
  app.add_flag("--timings", timings, "include wall-clock timings in the JSON report");

  std::string file, law, target, cat, set, seq, suite = "all", ucat_name, report_path;
  std::uint64_t seed = 0;
  bool codirected = false, ucat = false;

  auto* validate = app.add_subcommand("validate", "load and validate a document");
  validate->add_option("file", file)->required();
  auto* format = app.add_subcommand("format", "print a document in canonical form");
  format->add_option("file", file)->required();
  auto* check = app.add_subcommand("check", "run one law on a named entity");
  check->add_option("law", law, "law name")->required();
  check->add_option("file", file)->required();
  check->add_option("--on", target, "entity name")->required();
  auto* closure = app.add_subcommand("closure", "L-closure of a set of objects");
  closure->add_option("file", file)->required();
  closure->add_option("--cat", cat)->required();
  closure->add_option("--set", set, "comma separated object names")->required();
  auto* cauchy = app.add_subcommand("cauchy", "Cauchy degree, induced weights and limits of a sequence");
  cauchy->add_option("file", file)->required();
  cauchy->add_option("--cat", cat)->required();
  cauchy->add_option("--seq", seq, "pre=[...];per=[...] or a sequence name")->required();
  auto* complete = app.add_subcommand("complete", "Cauchy completeness");
  complete->add_option("file", file)->required();
  complete->add_option("--cat", cat)->required();
  auto* flag_cod = complete->add_flag("--codirected", codirected, "codirected completeness instead");
  complete->add_flag("--ucat", ucat, "the name refers to a U-category")->excludes(flag_cod);
  auto* props = app.add_subcommand("props", "run a property suite");
  props->add_option("--suite", suite, "suite name or 'all'");
  props->add_option("--seed", seed, "generator seed");
  auto* report = app.add_subcommand("report", "run every applicable law on every entity");
  report->add_option("file", file)->required();
  auto* ucheck = app.add_subcommand("ucheck", "U-category laws and completeness");
  ucheck->add_option("file", file)->required();
  ucheck->add_option("--ucat", ucat_name)->required();
  auto* kfunctor = app.add_subcommand("kfunctor", "lift a compact separated category and apply K");
  kfunctor->add_option("file", file)->required();
  kfunctor->add_option("--cat", cat)->required();
  auto* replay = app.add_subcommand("replay", "replay the witnesses of a JSON report");
  replay->add_option("file", file)->required();
  replay->add_option("report", report_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    exit_code = kExitPass;
    return json{{"command", "help"}, {"verdict", "pass"}, {"witnesses", json::array()}, {"timings", json::object()}};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    exit_code = kExitInvalid;
    return json{{"command", "?"}, {"verdict", "invalid"}, {"witnesses", json::array()}, {"timings", json::object()},
                {"error", e.what()}};
  }

  const auto start = std::chrono::steady_clock::now();
  Run run{json{}, out};
  run.report = json{{"verdict", "pass"}, {"witnesses", json::array()}, {"timings", json::object()}};
  std::string command = app.get_subcommands().front()->get_name();
  run.report["command"] = command;
  try {
    if (command == "props") {
      run_props(run, suite, seed);
    } else {
      const Document doc = load_document(file);
      if (command == "validate") {
        out << "valid: " << doc.quantales.size() << " quantales, " << doc.categories.size() << " categories, "
            << doc.ucategories.size() << " U-categories, " << doc.weights.size() << " weights, "
            << doc.sequences.size() << " sequences, " << doc.morphisms.size() << " morphisms\n";
      } else if (command == "format") {
        out << serialize(doc);
      } else if (command == "check") {
        run_check(run, doc, law, target);
      } else if (command == "closure") {
        const VCategory& x = doc.category(cat).cat;
        const Mask c = l_closure(x, parse_set(x, set));
        out << render_set(x.objects, c) << "\n";
        run.report["details"] = {{"closure", render_set(x.objects, c)}};
      } else if (command == "cauchy") {
        run_cauchy(run, doc, cat, seq);
      } else if (command == "complete") {
        const std::string l = ucat ? "ucauchy_complete" : codirected ? "codirected_complete" : "cauchy_complete";
        run_check(run, doc, l, cat);
      } else if (command == "report") {
        run_report(run, doc);
      } else if (command == "ucheck") {
        run_ucheck(run, doc, ucat_name);
      } else if (command == "kfunctor") {
        run_kfunctor(run, doc, cat);
      } else if (command == "replay") {
        run_replay(run, doc, report_path);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    run.report["verdict"] = "invalid";
    run.report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}, {"witness", e.witness()}};
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    run.report["verdict"] = "invalid";
    run.report["error"] = {{"kind", "ParseError"}, {"message", e.what()}, {"witness", json::array()}};
  }
  const std::string verdict = run.report["verdict"];
  exit_code = verdict == "invalid" ? kExitInvalid : verdict == "fail" ? kExitFail : kExitPass;
  if (timings)
    run.report["timings"]["total_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!json_path.empty()) {
    std::ofstream f(json_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << json_path << "'\n";
      exit_code = kExitInvalid;
    } else {
      f << run.report.dump(2) << "\n";
    }
  }
  return run.report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int code = kExitInvalid;
  run_cli_report(args, out, err, code);
  return code;
}

}  // namespace qcat
