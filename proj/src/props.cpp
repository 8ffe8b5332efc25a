#include "qcat/props.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qcat {

namespace {

constexpr std::size_t kKeptFailures = 8;

using Rng = gen::Rng;

}  // namespace

void SuiteResult::check(const CheckReport& r, const std::string& context) {
  ++cases;
  if (r.ok) return;
  ++failed;
  if (failures.size() < kKeptFailures) {
    CheckReport kept = r;
    if (!context.empty()) kept.detail = context + (kept.detail.empty() ? "" : ": " + kept.detail);
    failures.push_back(std::move(kept));
  }
}

void SuiteResult::check(bool ok, const std::string& law, const std::string& context) {
  check(ok ? CheckReport::pass(law) : CheckReport::fail(law, {}, "-", "-"), context);
}

void SuiteResult::merge(const SuiteResult& other) {
  cases += other.cases;
  failed += other.failed;
  for (const auto& f : other.failures)
    if (failures.size() < kKeptFailures) failures.push_back(f);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

bool converges_direct(const VCategory& x, const EvPeriodicSeq& s, int obj, int horizon) {
  validate_sequence(x, s);
  const Quantale& q = x.q();
  const int tail = static_cast<int>(s.pre.size());
  if (tail >= horizon)
    throw Error(ErrorKind::InvalidArgument, "horizon does not reach the periodic tail");
  std::vector<int> term(horizon);
  for (int p = 0; p < horizon; ++p) {
    const int z = s.at(p);
    term[p] = q.tensor(x(obj, z), x(z, obj));
  }
  for (Mask m = 1; m < (Mask{1} << horizon); ++m) {
    if ((m >> tail) == 0) continue;
    int acc = q.bot();
    for (int p = 0; p < horizon; ++p)
      if (m >> p & 1u) acc = q.join(acc, term[p]);
    if (!q.leq(q.unit(), acc)) return false;
  }
  return true;
}

namespace {

std::string label(const Quantale& q, int i) { return q.label() + " #" + std::to_string(i); }

VCategory random_separated(Rng& rng, const QuantalePtr& q, int n) {
  while (true) {
    VCategory x = gen::random_category(rng, q, n);
    if (is_separated(x)) return x;
  }
}

bool has_right_uadjoint(const UCategory& x, const Weight& phi, const std::vector<Weight>& rights) {
  for (const auto& psi : rights)
    if (is_adjoint_udist(x, phi, psi)) return true;
  return false;
}

// ---------------------------------------------------------------- residuation

SuiteResult suite_residuation(std::uint64_t) {
  SuiteResult r;
  for (const auto& q : {two(), fixtures::QM3(), fixtures::QL3(), fixtures::QN3(), fixtures::Q2x2(),
                       delta_grid(3, 2, "min")})
    r.check(check_residuation(*q), q->label());
  // Closed forms for the minimum and Lukasiewicz chains, on index values i / (m - 1).
  for (int m = 2; m <= 6; ++m) {
    const auto luk = chain_luk(m);
    const auto mn = chain_min(m);
    const int top = m - 1;
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) {
        r.check(luk->hom(u, v) == top - std::max(0, u - v), "hom_closed_form.luk", luk->label());
        r.check(mn->hom(u, v) == (u <= v ? top : v), "hom_closed_form.min", mn->label());
      }
  }
  return r;
}

// ---------------------------------------------------------------- lattice

SuiteResult suite_lattice(std::uint64_t) {
  SuiteResult r;
  const FiniteLattice c2 = chain_lattice(2);
  const TotallyBelow tb2 = totally_below(c2);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) r.check(tb2(s, t) == (t == 1), "two_chain_totally_below");

  const FiniteLattice d4 = fixtures::D4();
  const TotallyBelow tbd = totally_below(d4);
  const int bot = d4.index_of("bot"), a = d4.index_of("a"), b = d4.index_of("b"), top = d4.index_of("top");
  r.check(tbd(bot, top) && tbd(a, top) && tbd(b, top) && !tbd(top, top), "d4_below_top");
  r.check(tbd(a, a), "d4_a_below_a");
  for (int u = 0; u < 4; ++u) r.check(!tbd(u, bot), "d4_nothing_below_bot");

  std::vector<QuantalePtr> quantales{two(),          fixtures::QM3(),        fixtures::QL3(),
                                     fixtures::QN3(), fixtures::Q2x2(),       chain_luk(5),
                                     chain_min(4),   delta_grid(3, 2, "min"), delta_grid(2, 3, "luk")};
  for (const auto& q : quantales) r.check(is_completely_distributive(q->lattice()), q->label());
  r.check(is_completely_distributive(d4), "D4");
  r.check(!is_completely_distributive(fixtures::N5()).ok, "N5_not_completely_distributive");

  r.check(is_approximated(fixtures::QL3()->lattice(), fixtures::QL3()->unit()), "QL3_approximated");
  r.check(is_approximated(fixtures::QM3()->lattice(), fixtures::QM3()->unit()), "QM3_approximated");
  r.check(!is_approximated(d4, top).ok, "D4_top_not_approximated");

  for (const auto& q : quantales) {
    if (!is_approximated(q->lattice(), q->unit())) continue;
    r.check(is_join_irreducible(q->lattice(), q->unit()), "approximated_unit_irreducible." + q->label());
    int acc = q->bot();
    for (int u = 0; u < q->size(); ++u)
      if (q->totally_below()(u, q->unit())) acc = q->join(acc, q->tensor(u, u));
    r.check(acc == q->unit(), "unit_is_join_of_squares." + q->label());
  }
  return r;
}

// ---------------------------------------------------------------- functors

SuiteResult suite_functors(std::uint64_t seed) {
  SuiteResult r;
  Rng rng(seed);
  const std::vector<QuantalePtr> qs{fixtures::QL3(), fixtures::Q2x2()};
  for (int i = 0; i < 200; ++i) {
    const auto& q = qs[i % 2];
    auto s = gen::random_functor(rng, q, gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 4));
    const auto g = graph_weights(s.f, s.x, s.y);
    r.check(is_adjoint_dist(g.lower, g.upper, s.x, s.y), "graph_adjunction." + label(*q, i));
  }
  long adjoint_pairs = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& q = qs[i % 2];
    const VCategory x = gen::random_category(rng, q, gen::uniform(rng, 1, 3));
    const VCategory y = gen::random_category(rng, q, gen::uniform(rng, 1, 3));
    const auto fs = gen::all_functors(x, y);
    const auto gs = gen::all_functors(y, x);
    std::vector<std::pair<int, int>> adjoint;
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
      for (int gi = 0; gi < static_cast<int>(gs.size()); ++gi)
        if (is_adjoint_functors(fs[fi], gs[gi], x, y)) adjoint.emplace_back(fi, gi);
    std::pair<int, int> pick;
    if (!adjoint.empty() && gen::uniform(rng, 0, 1))
      pick = adjoint[gen::uniform(rng, 0, static_cast<int>(adjoint.size()) - 1)];
    else
      pick = {gen::uniform(rng, 0, static_cast<int>(fs.size()) - 1),
              gen::uniform(rng, 0, static_cast<int>(gs.size()) - 1)};
    const ObjectMap& f = fs[pick.first];
    const ObjectMap& g = gs[pick.second];
    const bool adj = is_adjoint_functors(f, g, x, y).ok;
    adjoint_pairs += adj;
    const bool same = graph_weights(f, x, y).lower == graph_weights(g, y, x).upper;
    r.check(adj == same, "adjoint_iff_lower_equals_upper." + label(*q, i));
  }
  r.note("adjoint functor pairs among the 100 sampled: " + std::to_string(adjoint_pairs));
  return r;
}

// ---------------------------------------------------------------- cauchy

SuiteResult suite_cauchy(std::uint64_t seed) {
  SuiteResult r;
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : gen::all_preorders(n))
      r.check(is_cauchy_complete(preorder_category(p)), "preorder_complete.n" + std::to_string(n));

  const VCategory w = fixtures::W();
  const Quantale& q2 = w.q();
  const CheckReport rw = is_cauchy_complete(w);
  const std::vector<int> expected{q2.index_of("(0,1)"), q2.index_of("(1,0)"), q2.top(), q2.top()};
  r.check(!rw.ok, "W_not_complete");
  r.check(rw.witness == expected, "W_witness");

  const auto q = fixtures::QL3();
  for (const auto& x : gen::all_categories(q, 2)) r.check(is_cauchy_complete(x), "QL3_two_objects");
  r.check(is_cauchy_complete(unit_category(q)), "QL3_one_object");
  Rng rng(seed);
  int accepted = 0;
  while (accepted < 200) {
    VRelation a(q, 3, 3);
    for (int s = 0; s < 3; ++s)
      for (int t = 0; t < 3; ++t) a.set(s, t, s == t ? q->unit() : gen::uniform(rng, 0, q->size() - 1));
    if (!check_category(a)) continue;
    ++accepted;
    r.check(is_cauchy_complete(validate_category(a)), "QL3_three_objects #" + std::to_string(accepted));
  }
  return r;
}

// ---------------------------------------------------------------- closure

void closure_laws(SuiteResult& r, const VCategory& x, const std::string& ctx) {
  const int n = x.size();
  const Mask full = (Mask{1} << n) - 1;
  const VCategory op = dual(x);
  const bool irreducible = is_join_irreducible(x.q().lattice(), x.q().unit()).ok;
  std::vector<Mask> cl(full + 1);
  for (Mask m = 0; m <= full; ++m) cl[m] = l_closure(x, m);
  for (Mask m = 0; m <= full; ++m) {
    r.check((m & ~cl[m]) == 0, "closure.extensive", ctx);
    r.check(cl[cl[m]] == cl[m], "closure.idempotent", ctx);
    r.check(l_closure(op, m) == cl[m], "closure.dual_agrees", ctx);
    for (Mask k = 0; k <= full; ++k) {
      if ((m & ~k) == 0) r.check((cl[m] & ~cl[k]) == 0, "closure.monotone", ctx);
      if (irreducible) r.check(cl[m | k] == (cl[m] | cl[k]), "closure.finite_union", ctx);
    }
  }
  if (irreducible) {
    r.check(cl[0] == 0, "closure.empty", ctx);
    const FiniteTopology t = induced_topology(x);
    r.check(check_topology(t.n, t.closed_sets), ctx);
  }
}

void functor_continuity(SuiteResult& r, const gen::FunctorSample& s, const std::string& ctx) {
  const Mask full = (Mask{1} << s.x.size()) - 1;
  for (Mask m = 0; m <= full; ++m) {
    Mask image = 0, image_cl = 0;
    const Mask c = l_closure(s.x, m);
    for (int p = 0; p < s.x.size(); ++p) {
      if (m >> p & 1u) image |= Mask{1} << s.f[p];
      if (c >> p & 1u) image_cl |= Mask{1} << s.f[p];
    }
    r.check((image_cl & ~l_closure(s.y, image)) == 0, "closure.functor_continuity", ctx);
  }
}

void hausdorff_vs_separated(SuiteResult& r, const VCategory& x, const std::string& ctx) {
  const bool haus = is_hausdorff_topology(induced_topology(x)).ok;
  const bool sep = is_separated(x).ok;
  r.check(haus == sep, "hausdorff_iff_separated", ctx);
  if (x.q().unit_is_top() && x.size() <= 3) {
    const VCategory xx = tensor_product(x, x);
    Mask diag = 0;
    for (int p = 0; p < x.size(); ++p) diag |= Mask{1} << (p * x.size() + p);
    r.check((l_closure(xx, diag) == diag) == sep, "separated_iff_diagonal_closed", ctx);
    r.check(check_monoidal(x, x), ctx);
  }
  r.check(check_ball_base(x), ctx);
}

SuiteResult suite_closure(std::uint64_t seed) {
  SuiteResult r;
  Rng rng(seed);
  for (const auto& q : {fixtures::QL3(), two(), fixtures::QM3()})
    for (int i = 0; i < 100; ++i) {
      const int n = gen::uniform(rng, 1, 4);
      const auto s = gen::random_functor(rng, q, n, gen::uniform(rng, 1, 4));
      const std::string ctx = label(*q, i);
      closure_laws(r, s.x, ctx);
      functor_continuity(r, s, ctx);
      if (q == fixtures::QL3()) hausdorff_vs_separated(r, s.x, ctx);
    }
  const auto q = fixtures::QL3();
  for (const auto& x : {fixtures::X2(), quantale_category(q), unit_category(q), discrete_category(q, 3)})
    hausdorff_vs_separated(r, x, "QL3 fixture");
  bool threw = false;
  try {
    induced_topology(fixtures::W());
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::UnitNotJoinIrreducible;
  }
  r.check(threw, "Q2x2_unit_not_irreducible");
  return r;
}

// ---------------------------------------------------------------- lax extension

SuiteResult suite_lax_extension(std::uint64_t seed) {
  SuiteResult r;
  Rng rng(seed);
  for (const auto& q : {two(), fixtures::QM3(), fixtures::QL3()}) {
    const bool strict = check_strict(*q).ok;
    long composition_equal = 0;
    for (int i = 0; i < 100; ++i) {
      const std::string ctx = label(*q, i);
      const int nx = gen::uniform(rng, 1, 3), ny = gen::uniform(rng, 1, 3);
      const int na = gen::uniform(rng, 1, 3), nz = gen::uniform(rng, 1, 3);
      const VRelation rel = gen::random_relation(rng, q, nx, ny);
      const VRelation ur = lax_extension(rel);
      r.check(check_eq("lax_ext.opposite", lax_extension(opposite(rel)), opposite(ur)), ctx);

      const ObjectMap f = gen::random_map(rng, nx, ny);
      const VRelation uf = from_map(q, U_map(f, ny), ur.tgt());
      r.check(check_eq("lax_ext.map", lax_extension(from_map(q, f, ny)), uf), ctx);
      r.check(check_eq("lax_ext.opposite_map", lax_extension(opposite(from_map(q, f, ny))), opposite(uf)),
              ctx);

      const ObjectMap fa = gen::random_map(rng, na, nx);
      const ObjectMap g = gen::random_map(rng, ny, nz);
      const VRelation ug = from_map(q, U_map(g, nz), nz);
      const VRelation ufa = from_map(q, U_map(fa, nx), nx);
      r.check(check_eq("lax_ext.post_map", lax_extension(compose(from_map(q, g, nz), rel)), compose(ug, ur)), ctx);
      r.check(check_eq("lax_ext.pre_map", lax_extension(compose(rel, from_map(q, fa, nx))), compose(ur, ufa)), ctx);

      const VRelation s = gen::random_relation(rng, q, ny, nz);
      const VRelation lhs = compose(lax_extension(s), ur);
      const VRelation rhs = lax_extension(compose(s, rel));
      r.check(check_leq("lax_ext.composition_lax", lhs, rhs), ctx);
      composition_equal += lhs == rhs;
      if (strict) r.check(check_eq("lax_ext.composition_strict", lhs, rhs), ctx);

      const VRelation ex = from_map(q, e_map(nx), nx), ey = from_map(q, e_map(ny), ny);
      r.check(check_leq("lax_ext.e_lax_natural", compose(ey, rel), compose(ur, ex)), ctx);
      const VRelation mx = from_map(q, m_map(nx), nx), my = from_map(q, m_map(ny), ny);
      r.check(check_eq("lax_ext.m_natural", compose(my, lax_extension(ur)), compose(ur, mx)), ctx);
    }
    r.note(q->label() + ": composition held with equality in " + std::to_string(composition_equal) +
           "/100 cases; strict theory check " + (strict ? "passes" : "fails"));
  }
  return r;
}

// ---------------------------------------------------------------- kleisli

SuiteResult suite_kleisli(std::uint64_t seed) {
  SuiteResult r;
  Rng rng(seed);
  for (const auto& q : {two(), fixtures::QM3(), fixtures::QL3()}) {
    const bool strict = check_strict(*q).ok;
    long equal = 0;
    for (int i = 0; i < 100; ++i) {
      const std::string ctx = label(*q, i);
      const int nx = gen::uniform(rng, 1, 3), ny = gen::uniform(rng, 1, 3);
      const int nz = gen::uniform(rng, 1, 3), nw = gen::uniform(rng, 1, 3);
      const VRelation gamma = gen::random_relation(rng, q, nx, ny);
      const VRelation psi = gen::random_relation(rng, q, ny, nz);
      const VRelation phi = gen::random_relation(rng, q, nz, nw);
      const VRelation left = kleisli_compose(phi, kleisli_compose(psi, gamma));
      const VRelation right = kleisli_compose(kleisli_compose(phi, psi), gamma);
      r.check(check_leq("kleisli.lax_associative", right, left), ctx);
      equal += left == right;
      if (strict) r.check(check_eq("kleisli.associative", left, right), ctx);

      const VRelation eop_x = opposite(from_map(q, e_map(nx), nx));
      const VRelation eop_y = opposite(from_map(q, e_map(ny), ny));
      r.check(check_eq("kleisli.right_identity", kleisli_compose(gamma, eop_x), gamma), ctx);
      r.check(check_leq("kleisli.left_identity", gamma, kleisli_compose(eop_y, gamma)), ctx);
      r.check(check_eq("kleisli.principal", kleisli_compose(psi, gamma), compose(psi, gamma)), ctx);
    }
    r.note(q->label() + ": Kleisli associativity held with equality in " + std::to_string(equal) + "/100");
  }
  return r;
}

// ---------------------------------------------------------------- sequences

void sequence_laws(SuiteResult& r, const VCategory& x, const std::string& ctx) {
  const Quantale& q = x.q();
  const auto seqs = enumerate_sequences(x.size(), 3, 3);
  std::vector<std::pair<Weight, Weight>> induced;
  bool all_cauchy_converge = true;
  for (const auto& s : seqs) {
    const auto w = induced_weights(x, s);
    const bool cauchy = is_cauchy(x, s);
    r.check(cauchy == is_adjoint_dist(x, w.phi, w.psi).ok, "sequence.cauchy_iff_adjoint", ctx);
    bool converges_somewhere = false;
    for (int p = 0; p < x.size(); ++p) {
      const bool conv = converges_to(x, s, p).ok;
      converges_somewhere = converges_somewhere || conv;
      r.check(conv == converges_direct(x, s, p), "sequence.reduction_matches_horizon", ctx);
      if (cauchy && q.unit_is_top())
        r.check(conv == (w.phi == lower_star(x, p) && w.psi == upper_star(x, p)),
                "sequence.converges_iff_representable", ctx);
    }
    if (cauchy) {
      induced.emplace_back(w.phi, w.psi);
      all_cauchy_converge = all_cauchy_converge && converges_somewhere;
    }
  }
  const auto lefts = enumerate_weights(x, Side::Left);
  const auto rights = enumerate_weights(x, Side::Right);
  for (const auto& phi : lefts)
    for (const auto& psi : rights)
      if (is_adjoint_dist(x, phi, psi))
        r.check(std::find(induced.begin(), induced.end(), std::make_pair(phi, psi)) != induced.end(),
                "sequence.adjunction_induced_by_sequence", ctx);
  r.check(is_cauchy_complete(x).ok == all_cauchy_converge, "sequence.complete_iff_cauchy_converge", ctx);
}

SuiteResult suite_sequences(std::uint64_t seed) {
  SuiteResult r;
  const VCategory x2 = fixtures::X2();
  sequence_laws(r, x2, "X2");
  const auto alt = fixtures::alternating();
  r.check(cauchy_degree(x2, alt) == x2.q().index_of("1/2"), "alternating.degree_half");
  const auto w = induced_weights(x2, alt);
  r.check(!is_adjoint_dist(x2, w.phi, w.psi).ok, "alternating.no_adjunction");
  Rng rng(seed);
  for (int i = 0; i < 20; ++i)
    sequence_laws(r, gen::random_category(rng, fixtures::QM3(), gen::uniform(rng, 2, 3)),
                      label(*fixtures::QM3(), i));
  return r;
}

// ---------------------------------------------------------------- ucomplete

void representation_checks(SuiteResult& r, const UCategory& u, const std::string& ctx) {
  r.check(is_cauchy_complete_ucat(u), ctx);
  r.check(check_phi_meet(u), ctx);
  const auto rights = enumerate_uweights(u, Side::Right);
  long represented = 0;
  for (const auto& phi : enumerate_uweights(u, Side::Left)) {
    if (!has_right_uadjoint(u, phi, rights)) continue;
    bool ok = true;
    try {
      representing_ultrafilter(u, phi);
      ++represented;
    } catch (const Error&) {
      ok = false;
    }
    r.check(ok, "representing_ultrafilter", ctx);
  }
  r.check(represented > 0, "representing_ultrafilter.some_adjoint", ctx);
}

SuiteResult suite_ucomplete(std::uint64_t seed) {
  SuiteResult r;
  Rng rng(seed);
  const auto q = fixtures::QL3();
  std::vector<VCategory> fixtures_ql3{fixtures::X2(), quantale_category(q), unit_category(q),
                                      discrete_category(q, 2), discrete_category(q, 3)};
  for (int i = 0; i < 20; ++i) fixtures_ql3.push_back(random_separated(rng, q, gen::uniform(rng, 1, 3)));
  for (std::size_t i = 0; i < fixtures_ql3.size(); ++i)
    representation_checks(r, functor_K(to_ch_space(fixtures_ql3[i])), "K image " + label(*q, static_cast<int>(i)));
  representation_checks(r, hom_xi_category(q), "hom_xi QL3");
  r.check(functor_K(quantale_ch_space(q)).a == hom_xi_category(q).a, "K_of_V_is_hom_xi");

  std::vector<UCategory> strict;
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : gen::all_preorders(n)) strict.push_back(ucategory_from_preorder(p));
  const auto qm = fixtures::QM3();
  strict.push_back(hom_xi_category(qm));
  for (int i = 0; i < 10; ++i) {
    strict.push_back(functor_K(to_ch_space(random_separated(rng, qm, gen::uniform(rng, 1, 3)))));
    strict.push_back(free_ucategory(gen::random_category(rng, qm, gen::uniform(rng, 1, 3))));
  }
  long complete = 0;
  for (std::size_t i = 0; i < strict.size(); ++i) {
    if (!is_cauchy_complete_ucat(strict[i])) continue;
    ++complete;
    r.check(is_cauchy_complete(underlying_vcat(strict[i])), "underlying_preserves_completeness #" + std::to_string(i));
  }
  r.note("Cauchy complete strict U-categories: " + std::to_string(complete) + "/" + std::to_string(strict.size()));
  return r;
}

// ---------------------------------------------------------------- codirected

SuiteResult suite_codirected(std::uint64_t seed) {
  SuiteResult r;
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : gen::all_preorders(n))
      r.check(is_codirected_complete(preorder_category(p)), "codirected_complete.preorder");
  const auto q = fixtures::QL3();
  const auto cats = gen::all_categories(q, 2);
  for (const auto& x : cats) r.check(is_codirected_complete(x), "codirected_complete.QL3");

  const auto girard = find_dualizing(q);
  r.check(girard.size() == 1 && girard[0].dualizing == q->index_of("0"), "find_dualizing.QL3");
  if (girard.size() != 1) return r;
  const auto& g = girard[0];

  long literal_mismatch = 0, literal_cases = 0;
  for (const auto& x : cats) {
    const auto lefts = enumerate_weights(x, Side::Left);
    const auto rights = enumerate_weights(x, Side::Right);
    for (const auto& phi : lefts) {
      const Weight dual = girard_dual_weight(g, x, phi);
      for (const auto& phi0 : lefts) {
        int pair = q->bot();
        for (int s = 0; s < x.size(); ++s) pair = q->join(pair, q->tensor(phi0[s], g(phi[s])));
        r.check(g(bracket(*q, phi0, phi)) == pair, "dual_pairing_identity");
      }
      const bool codirected = is_codirected(x, phi, lefts).ok;
      r.check(codirected == pairing_preserves_infima(x, phi, rights).ok, "codirected_iff_pairing_preserves_infima");
      ++literal_cases;
      literal_mismatch += codirected != is_flat(x, dual, lefts).ok;
    }
  }
  r.note("codirected(phi) vs flat(phi^bot), compared literally: " + std::to_string(literal_mismatch) + "/" +
         std::to_string(literal_cases) + " weights disagree");

  Rng rng(seed);
  const auto qm = fixtures::QM3();
  long reflected = 0, enriched_fail = 0;
  for (int i = 0; i < 12; ++i) {
    const VCategory x0 = i % 2 ? random_separated(rng, qm, gen::uniform(rng, 1, 3))
                               : gen::random_category(rng, qm, gen::uniform(rng, 1, 3));
    const UCategory u = i % 2 ? functor_K(to_ch_space(x0)) : free_ucategory(x0);
    const VCategory base = underlying_vcat(u);
    const auto lefts = enumerate_weights(base, Side::Left);
    const auto urights = enumerate_uweights(u, Side::Right);
    for (const auto& phi : lefts) {
      if (!is_codirected(base, phi, lefts)) continue;
      const Reflection ref = ureflect_weight(u, phi);
      ++reflected;
      enriched_fail += !ref.enriched_law.ok;
      r.check(has_right_uadjoint(u, ref.weight, urights), "reflection_left_adjoint", label(*qm, i));
    }
  }
  r.note("codirected weights reflected: " + std::to_string(reflected) +
         "; enriched reflection law failures: " + std::to_string(enriched_fail));
  return r;
}

// ---------------------------------------------------------------- ultra

SuiteResult suite_ultra(std::uint64_t seed) {
  SuiteResult r;
  Rng rng(seed);
  r.check(ultrafilters(2).size() == 2 && ultrafilters(2)[0].contains(1) && ultrafilters(2)[1].contains(2),
          "ultrafilters.two_points");
  for (int n = 1; n <= 4; ++n) {
    const auto e = e_map(n);
    const int nu = static_cast<int>(ultrafilters(n).size());
    const auto m = m_map(n);
    const auto ue = U_map(e, nu);
    const auto e_u = e_map(nu);
    for (int i = 0; i < nu; ++i) {
      r.check(m[ue[i]] == i, "monad.m_Ue");
      r.check(m[e_u[i]] == i, "monad.m_eU");
    }
    const auto mm = m_map(nu);
    const auto um = U_map(m, nu);
    for (int j = 0; j < static_cast<int>(mm.size()); ++j) r.check(m[mm[j]] == m[um[j]], "monad.associative");
    for (int x = 0; x < n; ++x) r.check(is_ultrafilter(unit_e(n, x)), "ultrafilter.valid");
  }
  for (const auto& q : {two(), fixtures::QM3(), fixtures::QL3(), fixtures::Q2x2(), fixtures::QN3()}) {
    r.check(check_xi_algebra(*q), q->label());
    r.check(check_tensor_lax(*q), q->label());
    r.check(check_compatible(canonical_i(q)), q->label());
    if (q->unit_is_top()) r.check(check_compatible(canonical_p(q)), q->label());
  }
  for (const auto& q : {two(), fixtures::QM3(), fixtures::QL3()}) {
    for (int i = 0; i < 20; ++i) {
      const std::string ctx = label(*q, i);
      const VCategory x0 = gen::random_category(rng, q, gen::uniform(rng, 1, 3));
      const UCategory x = free_ucategory(x0);
      r.check(underlying_vcat(x).a == x0.a, "free.underlying", ctx);
      const VCategory y0 = gen::random_category(rng, q, gen::uniform(rng, 1, 2));
      const UCategory y = free_ucategory(y0);
      const VRelation phi = gen::random_relation(rng, q, x.size(), y.size());
      const DistributorSides sides = distributor_sides(phi, x, y);
      r.check(sides.distributor == sides.functors, "udistributor.functor_characterisation", ctx);
      const auto ud = enumerate_uweights(x, Side::Left);
      r.check(check_phi_laws(x), ctx);
      const auto rights = enumerate_uweights(x, Side::Right);
      for (const auto& pl : ud)
        for (const auto& pr : rights)
          if (is_adjoint_udist(x, pl, pr))
            for (const auto& other : ud) {
              const VRelation lhs = kleisli_compose(uweight_relation(x, pr, Side::Right),
                                                    uweight_relation(x, other, Side::Left));
              r.check(lhs(0, 0) == bracket(*q, pl, other), "bracket_is_kleisli", ctx);
            }
      for (int p = 0; p < x.size(); ++p)
        r.check(is_adjoint_udist(x, ulower_star(x, p), uupper_star(x, p)).ok, "point_adjunction", ctx);
      const auto s = gen::random_functor(rng, q, gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3));
      const UCategory fx = free_ucategory(s.x), fy = free_ucategory(s.y);
      r.check(is_ufunctor(s.f, fx, fy).ok, "free.functor", ctx);
      if (is_fully_faithful(s.f, s.x, s.y)) r.check(is_ufully_faithful(s.f, fx, fy).ok, "free.fully_faithful", ctx);
      if (is_fully_dense(s.f, s.x, s.y) && check_strict(*q))
        r.check(is_ufully_dense(s.f, fx, fy).ok, "free.fully_dense", ctx);
      for (const auto& w : ud) {
        const Reflection ref = ureflect_weight(x, w);
        r.check(ref.weight == w, "reflection.fixes_uweights", ctx);
      }
    }
  }
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : gen::all_preorders(n)) {
      const UCategory u = ucategory_from_preorder(p);
      r.check(free_ucategory(preorder_category(p)).a == u.a, "free.preorder_alexandroff");
      if (is_separated(preorder_category(p)))
        r.check(functor_K(to_ch_space(preorder_category(p))).a == u.a, "K.alexandroff");
    }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"residuation", "lattice",  "functors",  "cauchy",
                                              "closure",     "thm1",     "kleisli",   "sequences",
                                              "ucomplete",   "codirected", "ultra"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  static const std::map<std::string, std::function<SuiteResult(std::uint64_t)>> table{
      {"residuation", suite_residuation}, {"lattice", suite_lattice},     {"functors", suite_functors},
      {"cauchy", suite_cauchy},           {"closure", suite_closure},     {"thm1", suite_lax_extension},
      {"kleisli", suite_kleisli},         {"sequences", suite_sequences}, {"ucomplete", suite_ucomplete},
      {"codirected", suite_codirected},   {"ultra", suite_ultra}};
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  SuiteResult r = it->second(seed);
  r.suite = name;
  r.seed = seed;
  return r;
}

}  // namespace qcat
