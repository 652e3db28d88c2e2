#include "wqo/checks.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "wqo/barrier.hpp"
#include "wqo/catalog.hpp"
#include "wqo/deform.hpp"
#include "wqo/elastic.hpp"
#include "wqo/error.hpp"
#include "wqo/generators.hpp"
#include "wqo/reducibility.hpp"
#include "wqo/rng.hpp"

namespace wqo {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ReportOnly: return "report-only";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxWitnesses = 5;

// Collects instances and counterexamples for one check.
struct Tally {
  long long instances = 0;
  long long failures = 0;
  Json counterexamples = Json::array();
  Json observations = Json::array();

  void fail(Json w) {
    ++failures;
    if (counterexamples.size() < kMaxWitnesses) counterexamples.push_back(std::move(w));
  }
  void expect(bool ok, Json w) {
    ++instances;
    if (!ok) fail(std::move(w));
  }
  void observe(Json o) { observations.push_back(std::move(o)); }

  CheckReport report(bool report_only = false) const {
    CheckReport r;
    r.instances = instances;
    if (report_only) r.status = CheckStatus::ReportOnly;
    else r.status = failures == 0 ? CheckStatus::Pass : CheckStatus::Fail;
    r.witnesses = r.status == CheckStatus::Fail ? counterexamples : observations;
    return r;
  }
};

int size_or(const CheckOptions& o, int fallback, int lo, int hi, const char* check) {
  const int s = o.size.value_or(fallback);
  require(s >= lo && s <= hi, ErrorCode::InvalidInput,
          std::string("--size for ") + check + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return s;
}

Json points_json(const DimProfile& p) {
  Json out = Json::array();
  for (const auto& [n, d] : p.points) out.push_back({n, d});
  return out;
}

// --- ordinal -----------------------------------------------------------------

CheckReport check_ordinal(const CheckOptions& o) {
  const int count = size_or(o, 1000, 1, 100000, "ordinal");
  Tally t;
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng::derive(o.seed, "ordinal", static_cast<std::uint64_t>(i));
    const Ordinal a = random_ordinal(rng, 2, 3, 4), b = random_ordinal(rng, 2, 3, 4), c = random_ordinal(rng, 2, 3, 4);
    const Ordinal k = random_ordinal(rng, 1, 2, 3);
    const Json inst{{"a", render(a)}, {"b", render(b)}, {"c", render(c)}};
    t.expect((a + b) + c == a + (b + c), {{"identity", "addition is associative"}, {"instance", inst}});
    t.expect((a * b) * c == a * (b * c), {{"identity", "multiplication is associative"}, {"instance", inst}});
    t.expect(a * (b + c) == a * b + a * c, {{"identity", "left distributivity"}, {"instance", inst}});
    const auto ab = ord_cmp(a, b), ba = ord_cmp(b, a);
    const int trichotomy = (ab < 0) + (ab == 0) + (ab > 0);
    t.expect(trichotomy == 1 && (ab < 0) == (ba > 0) && (ab == 0) == (a == b),
             {{"identity", "comparison is total and antisymmetric"}, {"instance", inst}});
    const Ordinal w = Ordinal::omega_pow(k);
    t.expect(is_indecomposable(w), {{"identity", "w^k is indecomposable"}, {"k", render(k)}});
    if (a < w) t.expect(a + w == w, {{"identity", "a + w^k = w^k below w^k"}, {"a", render(a)}, {"k", render(k)}});
    t.expect(parse_ordinal(render(a)) == a, {{"identity", "parse inverts render"}, {"a", render(a)}});
  }
  auto r = t.report();
  r.statement = "Cantor normal form arithmetic obeys the ordinal identities";
  return r;
}

// --- qorder ------------------------------------------------------------------

CheckReport check_rado(const CheckOptions& o) {
  const int window = size_or(o, 8, 3, 12, "rado");
  Tally t;
  const QuasiOrder rado = PresentedQO::rado(window).truncate();
  const PairTable ident = PairTable::from_function(window, [&](int i, int j) {
    return *rado.index_of("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  });
  const RadoReport rr = rado_condition_check(ident, rado);
  t.expect(rr.violation(), {{"map", "identity into the Rado order"}, {"premise", rr.premise},
                            {"strict_triples", rr.strict_triples.size()}});
  t.observe({{"map", "identity into the Rado order"}, {"window", window}, {"premise", rr.premise},
             {"strict_triples", rr.strict_triples.size()}});

  const QuasiOrder chain = QuasiOrder::chain(window);
  const RadoReport ctrl = rado_condition_check(PairTable::from_function(window, [](int, int j) { return j; }), chain);
  t.expect(ctrl.premise && !ctrl.strict_triples.empty(),
           {{"map", "F({i,j}) = j into (w, <=)"}, {"premise", ctrl.premise}, {"strict_triples", ctrl.strict_triples.size()}});

  const PairMap f = build_pair_map(window);
  const RadoReport fr = rado_condition_check(f.table, f.target);
  t.expect(fr.violation(), {{"map", "F({i,j}) = {i} | (j, N) into L1 under reverse inclusion"}, {"premise", fr.premise},
                            {"strict_triples", fr.strict_triples.size()}});

  const PresentedQO pw = PresentedQO::powerset(PresentedQO::rado(6), 2, 6);
  const BadSequenceResult bad = bad_sequence_search(pw, 4);
  const BadSequenceResult anti = longest_antichain(pw.truncate(), 4);
  t.expect(bad.longest.size() >= 3, {{"search", "bad sequence in the powerset of Rado, truncation 6"}, {"found", bad.labels}});
  t.expect(anti.longest.size() >= 3, {{"search", "antichain in the powerset of Rado, truncation 6"}, {"found", anti.labels}});
  t.observe({{"powerset_bad_sequence", bad.labels}, {"powerset_antichain", anti.labels}});
  auto r = t.report();
  r.statement = "Rado's order admits a pair map with a strict chain premise and no strict triple; its powerset is not wqo";
  return r;
}

// --- setsys ------------------------------------------------------------------

CheckReport check_roundtrip(const CheckOptions& o) {
  const int n = size_or(o, 3, 1, 4, "roundtrip");
  Tally t;
  for (const auto& q : all_quasi_orders(n)) t.expect(roundtrip_check(q), {{"order", to_json(q)}});
  t.observe({{"atoms", n}, {"orders", t.instances}});
  auto r = t.report();
  r.statement = "qo(ss(X)) = X for every quasi-order X on the given number of labelled atoms";
  return r;
}

CheckReport check_fact1(const CheckOptions& o) {
  const int n = size_or(o, 4, 1, 4, "fact1");
  Tally t;
  long long normalized = 0;
  for (int k = 1; k <= n; ++k)
    for (const auto& q : all_quasi_orders(k)) {
      const Fact1Report f = fact1_checks(q);
      normalized += f.empty_set_normalized;
      t.expect(f.ok(), {{"order", to_json(q)},
                        {"ss_is_finclass_of_filters", f.ss_is_finclass_of_filters},
                        {"qo_of_filters_is_q", f.qo_of_filters_is_q}});
    }
  t.observe({{"orders", t.instances}, {"compared_without_empty_set", normalized}});
  auto r = t.report();
  r.statement = "upper sets are finite unions of principal filters, and filters recover the order";
  return r;
}

// --- elastic -----------------------------------------------------------------

CheckReport check_dim_otp(const CheckOptions& o) {
  const int n = size_or(o, 4, 1, 4, "dim-otp");
  Tally t;
  for (const auto& q : all_quasi_orders(n)) {
    const DimOtp d = dim_otp_check(q);
    t.expect(d.ok(), {{"order", to_json(q)}, {"dim", d.dim}, {"otp", d.otp}});
  }
  t.observe({{"atoms", n}, {"orders", t.instances}});
  auto r = t.report();
  r.statement = "dim(ss(X)) equals the maximal order type of X";
  return r;
}

CheckReport check_theorem3_profile(const CheckOptions& o) {
  const int top = size_or(o, 7, 4, 10, "theorem3-profile");
  Tally t;
  const DimProfile l1 = dim_profile([](int n) { return finclass(build_system("L1", n)); }, 3, top);
  const DimProfile sgl = dim_profile([](int n) { return build_system("sgl", n); }, 3, top);
  const DimProfile om = dim_profile([](int n) { return ss(PresentedQO::omega(n).truncate()); }, 3, top);
  t.expect(l1.strictly_increasing && l1.consistent(), {{"profile", "finclass(L1)"}, {"points", points_json(l1)}});
  t.expect(sgl.constant && sgl.points.front().second == 1, {{"profile", "sgl"}, {"points", points_json(sgl)}});
  bool identity = true;
  for (const auto& [n, d] : om.points) identity = identity && n == d;
  t.expect(identity, {{"profile", "ss(w)"}, {"points", points_json(om)}});
  t.observe({{"finclass(L1)", points_json(l1)}, {"sgl", points_json(sgl)}, {"ss(w)", points_json(om)}});
  auto r = t.report();
  r.statement = "dim grows without bound exactly where the induced order is not wqo";
  return r;
}

SetSystem system_with_dim_at_most(Rng& rng, int atoms, int bound) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SetSystem l = random_system(rng, atoms, 3);
    if (dim(l).finite() <= bound) return l;
  }
  // A single member containing everything always has dim 1.
  return SetSystem::over_naturals(atoms, {AtomSet::prefix(atoms)});
}

CheckReport check_ramsey_union(const CheckOptions& o) {
  const int bound = size_or(o, 1, 0, 2, "ramsey-union");
  Tally t;
  const Ramsey33Search r33 = ramsey33_exhaustive();
  t.expect(r33.establishes_six(), {{"search", "two-colourings of K6 and K5"},
                                   {"k6_colorings", r33.k6_colorings},
                                   {"k6_with_mono_triangle", r33.k6_with_mono_triangle},
                                   {"k5_triangle_free", r33.k5_triangle_free.has_value()}});
  t.observe({{"k6_colorings", r33.k6_colorings}, {"k6_with_mono_triangle", r33.k6_with_mono_triangle},
             {"k5_triangle_free_coloring", r33.k5_triangle_free.value_or(0)}});
  long long unverified = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng = Rng::derive(o.seed, "ramsey-union", static_cast<std::uint64_t>(i));
    const int atoms = rng.range(2, 4);
    const SetSystem a = system_with_dim_at_most(rng, atoms, bound);
    const SetSystem b = system_with_dim_at_most(rng, atoms, bound);
    const RamseyUnionReport rep = ramsey_union_check(a, b);
    if (rep.bound && !rep.bound->verified) ++unverified;
    t.expect(rep.holds(), {{"a", to_json(a)}, {"b", to_json(b)}, {"dim_a", rep.dim_a}, {"dim_b", rep.dim_b},
                           {"dim_union", rep.dim_union}, {"bound", rep.bound ? rep.bound->value : -1}});
  }
  t.observe({{"dim_cap", bound}, {"bounds_from_literature", unverified}});
  auto r = t.report();
  r.statement = "dim of a memberwise union is below the Ramsey number of the parts' dims plus two";
  return r;
}

CheckReport check_linearization_probe(const CheckOptions& o) {
  const int count = size_or(o, 20, 1, 200, "linearization-probe");
  Tally t;
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng::derive(o.seed, "linearization-probe", static_cast<std::uint64_t>(i));
    const SetSystem l = random_system(rng, rng.range(2, 4), 4);
    const LinearizationReport rep = linearization_probe(l);
    ++t.instances;
    Json chain = Json::array();
    for (const auto& m : rep.best_chain) chain.push_back(l.render_member(m));
    t.observe({{"system", to_json(l)}, {"system_dim", rep.system_dim}, {"candidates", rep.candidates},
               {"max_candidate_dim", rep.max_candidate_dim}, {"best_chain", chain}});
  }
  auto r = t.report(true);
  r.statement = "inclusion chains through the union closure as candidate linearizations (open question)";
  return r;
}

// --- deform ------------------------------------------------------------------

CheckReport check_theorem1(const CheckOptions& o) {
  const int atoms = size_or(o, 5, 1, 5, "theorem1");
  Tally t;
  for (int i = 0; i < 500; ++i) {
    Rng rng = Rng::derive(o.seed, "theorem1", static_cast<std::uint64_t>(i));
    const int n = rng.range(1, atoms);
    const SetSystem m = random_system(rng, n, 4);
    const Relation r = random_relation(rng, 4, n, 6, 2);
    const Theorem1Result res = theorem1_check(r, m);
    Json rel = Json::array();
    for (const auto& p : r.pairs()) {
      Json v = Json::array();
      for (int a : p.v.atoms()) v.push_back(r.source()[a]);
      rel.push_back({{"x", r.target()[p.x]}, {"v", v}});
    }
    t.expect(res.holds, {{"system", to_json(m)}, {"relation", rel}, {"x", res.x}, {"x2", res.x2}});
  }
  t.observe({{"instances", t.instances}, {"max_atoms", atoms}, {"max_witness", 2}});
  auto r = t.report();
  r.statement = "images of a continuous deformation are upper sets of the derived order";
  return r;
}

CheckReport check_nia_transfer(const CheckOptions& o) {
  const int atoms = size_or(o, 5, 1, 8, "nia-transfer");
  Tally t;
  int worst_gap = 0;
  for (int i = 0; i < 300; ++i) {
    Rng rng = Rng::derive(o.seed, "nia-transfer", static_cast<std::uint64_t>(i));
    const int n = rng.range(1, atoms);
    const SetSystem m = random_system(rng, n, 6);
    const Relation r = random_relation(rng, 5, n, 6, 2);
    const NiaTransfer res = nia_transfer_check(r, m);
    worst_gap = std::max(worst_gap, res.image.size - res.source.size);
    t.expect(res.holds(), {{"system", to_json(m)}, {"source_antichain", res.source.size},
                           {"image_antichain", res.image.size}});
  }
  t.observe({{"instances", t.instances}, {"largest_image_minus_source", worst_gap}});
  auto r = t.report();
  r.statement = "a deformation image has no larger inclusion antichain than its source";
  return r;
}

// --- barrier -----------------------------------------------------------------

CheckReport check_barrier_square(const CheckOptions& o) {
  const int top = size_or(o, 10, 2, 12, "barrier-square");
  Tally t;
  for (int k : {1, 2})
    for (int w = 2; w <= top; ++w) {
      const BarrierFragment b = BarrierFragment::uniform(k, w);
      Json where{{"family", b.family_name()}, {"window", w}};
      try {
        const BSquare sq = b_square(b);
        t.expect(sq.projection_failures.empty(), {{"where", where}, {"law", "projections chain"},
                                                  {"failures", sq.projection_failures.size()}});
        t.expect(sq.validity.ok(), {{"where", where}, {"law", "square is a barrier fragment"}});
        const Ordinal ob = *ot_of(b).value, osq = *ot_of(sq.square).value;
        t.expect(osq == ob * Ordinal::omega(),
                 {{"where", where}, {"law", "ot(B^2) = ot(B) * w"}, {"ot", render(ob)}, {"ot_square", render(osq)}});
        if (w == top) t.observe({{"family", b.family_name()}, {"ot", render(ob)}, {"ot_square", render(osq)},
                                 {"square_blocks", sq.square.blocks().size()}});
      } catch (const Error& e) {
        t.expect(false, {{"where", where}, {"law", "unique decomposition"}, {"error", e.what()}});
      }
      t.expect(validate(b).ok(), {{"where", where}, {"law", "fragment is a barrier fragment"}});
    }
  auto r = t.report();
  r.statement = "squares of uniform barriers decompose uniquely, chain their projections and multiply ot by w";
  return r;
}

CheckReport check_bqo_probe(const CheckOptions& o) {
  const int w = size_or(o, 6, 3, 6, "bqo-probe");
  Tally t;
  auto summary = [](const BqoProbeReport& rep) {
    Json out = Json::array();
    for (const auto& pw : rep.windows)
      out.push_back({{"family", pw.family}, {"window", pw.window}, {"bad", pw.bad_found}, {"nodes", pw.nodes}});
    return out;
  };
  const BqoProbeReport om = bqo_probe(PresentedQO::omega(w), w);
  const BqoProbeReport eq = bqo_probe(PresentedQO::equality_omega(w), w);
  const BqoProbeReport rado = bqo_probe(PresentedQO::rado(w), w);
  t.expect(!om.evidence, {{"order", "omega"}, {"windows", summary(om)}});
  t.expect(eq.evidence && eq.evidence->family == "sgl", {{"order", "eq-omega"}, {"windows", summary(eq)}});
  t.expect(rado.evidence && rado.evidence->family == "pairs", {{"order", "rado"}, {"windows", summary(rado)}});
  bool rado_sgl_good = true;
  for (const auto& pw : rado.windows)
    if (pw.family == "sgl" && pw.window == w) rado_sgl_good = !pw.bad_found;
  t.expect(rado_sgl_good, {{"order", "rado"}, {"law", "no bad map on singletons"}, {"windows", summary(rado)}});
  for (const auto& pw : rado.windows) t.expect(!pw.capped, {{"order", "rado"}, {"window", pw.window}, {"capped", true}});
  if (rado.evidence) t.observe({{"order", "rado"}, {"bad_pair_map", rado.evidence->assignment}});
  auto r = t.report();
  r.statement = "bounded search for bad barrier maps separates (w, <=), (w, =) and Rado's order";
  return r;
}

// --- reducibility ------------------------------------------------------------

CheckReport check_reducibility(const CheckOptions& o) {
  const int w = size_or(o, 16, 1, 62, "reducibility");
  Tally t;
  // (a) codes
  bool codes = true;
  for (std::uint64_t z = 0; z < (1u << 16); ++z) codes = codes && e_encode(e_decode(z)) == z;
  t.expect(codes, {{"law", "E_z round trip below 2^16"}});

  // (b) f_R against apply
  std::vector<std::string> naturals;
  for (int i = 0; i < w; ++i) naturals.push_back(std::to_string(i));
  const int witness_atoms = std::min(w, 6);
  for (int i = 0; i < 200; ++i) {
    Rng rng = Rng::derive(o.seed, "reducibility", static_cast<std::uint64_t>(i));
    std::vector<RelationPair> pairs;
    const int count = rng.range(1, 12);
    for (int p = 0; p < count; ++p) {
      RelationPair rp{rng.range(0, w - 1), {}};
      const int size = rng.range(0, 2);
      for (int k = 0; k < size; ++k) rp.v.insert(rng.range(0, witness_atoms - 1));
      pairs.push_back(rp);
    }
    const Relation r(naturals, naturals, pairs);
    const AtomSet b = random_subset(rng, w);
    const AtomSet img = apply(r, b);
    std::vector<int> a_list = img.atoms(), b_list = b.atoms();
    const ReductionCheck rc = positive_reduce_check(a_list, b_list, f_R_build(r, w), w);
    t.expect(rc.ok, {{"law", "f_R decides membership in the image"}, {"B", b_list}, {"x", rc.witness.value_or(-1)}});
  }

  // (c) initial segments give weak selectors; linear ones give semi-r.e. selectors
  long long segments = 0, linear_segments = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : all_quasi_orders(n)) {
      const Selector psi = selector_from_order(q);
      const Selector full = selector_complete_diagonal(psi);
      for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
        const AtomSet m = AtomSet::from(e_decode(bits));
        if (!initial_segment_check(m, q)) continue;
        ++segments;
        const SelectorCheck weak = selector_check(m, psi, SelectorKind::Weak);
        t.expect(weak.ok, {{"law", "initial segment has a weak selector"}, {"order", to_json(q)}, {"M", m.atoms()}});
        bool linear = true;
        for (int x : m.atoms())
          for (int y : m.atoms()) linear = linear && (q.le(x, y) || q.le(y, x));
        if (!linear) continue;
        ++linear_segments;
        const SelectorCheck semi = selector_check(m, full, SelectorKind::SemiRe);
        t.expect(semi.ok, {{"law", "linear initial segment has a semi-r.e. selector"}, {"order", to_json(q)}, {"M", m.atoms()}});
      }
    }

  // (d) selectors pulled back along a reduction g
  long long pullbacks = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : all_quasi_orders(n)) {
      const Selector psi = selector_from_order(q);
      const Selector full = selector_complete_diagonal(psi);
      std::vector<AtomSet> segs;
      for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
        const AtomSet m = AtomSet::from(e_decode(bits));
        if (initial_segment_check(m, q)) segs.push_back(m);
      }
      long long maps = 1;
      for (int k = 0; k < n; ++k) maps *= n;
      for (long long code = 0; code < maps; ++code) {
        std::vector<int> g(n);
        long long c = code;
        for (int k = 0; k < n; ++k, c /= n) g[k] = static_cast<int>(c % n);
        const Selector weak_pull = selector_compose(psi, g);
        const Selector semi_pull = selector_compose(full, g);
        for (const AtomSet m : segs) {
          AtomSet a;
          for (int x = 0; x < n; ++x)
            if (m.contains(g[x])) a.insert(x);
          ++pullbacks;
          t.expect(selector_check(a, weak_pull, SelectorKind::Weak).ok,
                   {{"law", "pulled-back weak selector"}, {"order", to_json(q)}, {"M", m.atoms()}, {"g", g}});
          if (selector_check(m, full, SelectorKind::SemiRe).ok)
            t.expect(selector_check(a, semi_pull, SelectorKind::SemiRe).ok,
                     {{"law", "pulled-back semi-r.e. selector"}, {"order", to_json(q)}, {"M", m.atoms()}, {"g", g}});
        }
      }
    }
  t.observe({{"reduction_window", w}, {"initial_segments", segments}, {"linear_segments", linear_segments},
             {"pullbacks", pullbacks}});
  auto r = t.report();
  r.statement = "codes, positive reductions and selector functions agree on finite windows";
  return r;
}

// --- catalog -----------------------------------------------------------------

CheckReport check_catalog(const CheckOptions& o) {
  const int top = size_or(o, 7, 3, 10, "catalog");
  Tally t;
  for (const auto& name : catalog_names()) {
    const AttestationReport rep = attestation_suite(name, 3, top);
    for (const auto& c : rep.claims) {
      Json entry{{"entry", name}, {"claim", c.claim}, {"detail", c.detail}};
      if (c.report_only) {
        t.observe(entry);
        continue;
      }
      t.expect(c.passed, entry);
    }
  }
  auto r = t.report();
  r.statement = "each catalog entry meets its recorded analytic facts on windows 3..N";
  return r;
}

CheckReport check_fact15_figures(const CheckOptions& o) {
  const int top = size_or(o, 7, 3, 10, "fact15-figures");
  Tally t;
  const DimProfile filters = dim_profile([](int n) { return principal_filters(PresentedQO::fact15(n).truncate()); }, 3, top);
  const DimProfile upper = dim_profile([](int n) { return ss(PresentedQO::fact15(n).truncate()); }, 3, top);
  t.instances = static_cast<long long>(filters.points.size() + upper.points.size());
  t.observe({{"system", "principal filters"}, {"stated_dim", 1}, {"computed", points_json(filters)}});
  t.observe({{"system", "upper sets"}, {"stated_dim", "unbounded"}, {"computed", points_json(upper)}});
  auto r = t.report(true);
  r.statement = "dim of the filter and upper-set systems of b below a0, a1, ... (stated figures differ)";
  return r;
}

template <CheckReport (*F)(const CheckOptions&)>
CheckInfo entry(const char* name, const char* module, bool report_only = false) {
  return {name, module, report_only, [](const CheckOptions& o) { return F(o); }};
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> reg{
      entry<check_ordinal>("ordinal", "ordinal"),
      entry<check_rado>("rado", "qorder"),
      entry<check_roundtrip>("roundtrip", "setsys"),
      entry<check_fact1>("fact1", "setsys"),
      entry<check_dim_otp>("dim-otp", "elastic"),
      entry<check_theorem3_profile>("theorem3-profile", "elastic"),
      entry<check_ramsey_union>("ramsey-union", "elastic"),
      entry<check_linearization_probe>("linearization-probe", "elastic", true),
      entry<check_theorem1>("theorem1", "deform"),
      entry<check_nia_transfer>("nia-transfer", "deform"),
      entry<check_barrier_square>("barrier-square", "barrier"),
      entry<check_bqo_probe>("bqo-probe", "barrier"),
      entry<check_reducibility>("reducibility", "reducibility"),
      entry<check_catalog>("catalog", "catalog"),
      entry<check_fact15_figures>("fact15-figures", "catalog", true),
  };
  return reg;
}

CheckReport run_check(const std::string& name, const CheckOptions& opts) {
  const auto& reg = check_registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const CheckInfo& c) { return c.name == name; });
  require(it != reg.end(), ErrorCode::UnknownName, "unknown check '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  CheckReport r = it->run(opts);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.check = it->name;
  r.module = it->module;
  if (it->report_only) r.status = CheckStatus::ReportOnly;
  return r;
}

bool SuiteReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.status == CheckStatus::Fail; });
}

SuiteReport run_suite(const CheckOptions& opts, const std::optional<std::string>& only, bool parallel) {
  std::vector<const CheckInfo*> selected;
  for (const auto& c : check_registry())
    if (!only || c.module == *only || c.name == *only) selected.push_back(&c);
  require(!selected.empty(), ErrorCode::UnknownName, "no check matches '" + only.value_or("") + "'");
  // Sizes are per check, so a suite run uses each check's default.
  CheckOptions base{opts.seed, std::nullopt};
  SuiteReport suite{opts.seed, {}};
  if (parallel) {
    std::vector<std::future<CheckReport>> jobs;
    for (const auto* c : selected)
      jobs.push_back(std::async(std::launch::async, [c, base] { return run_check(c->name, base); }));
    for (auto& j : jobs) suite.checks.push_back(j.get());
  } else {
    for (const auto* c : selected) suite.checks.push_back(run_check(c->name, base));
  }
  return suite;
}

Json to_json(const CheckReport& r, bool timing) {
  Json j{{"check", r.check},
         {"module", r.module},
         {"status", status_name(r.status)},
         {"instances", r.instances},
         {"statement", r.statement},
         {"witnesses", r.witnesses}};
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const SuiteReport& r, bool timing) {
  Json checks = Json::array();
  long long passed = 0, failed = 0, reported = 0;
  for (const auto& c : r.checks) {
    checks.push_back(to_json(c, timing));
    passed += c.status == CheckStatus::Pass;
    failed += c.status == CheckStatus::Fail;
    reported += c.status == CheckStatus::ReportOnly;
  }
  return {{"seed", r.seed},
          {"status", r.ok() ? "pass" : "fail"},
          {"summary", {{"pass", passed}, {"fail", failed}, {"report-only", reported}}},
          {"checks", checks}};
}

std::string to_text(const CheckReport& r) {
  std::ostringstream out;
  out << status_name(r.status) << "  " << r.check << " [" << r.module << "]  " << r.instances << " instances  "
      << static_cast<long long>(r.elapsed_ms) << " ms\n";
  out << "    " << r.statement << "\n";
  for (const auto& w : r.witnesses) out << "    " << (r.status == CheckStatus::Fail ? "counterexample: " : "") << w.dump() << "\n";
  return out.str();
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "seed " << r.seed << "\n\n";
  for (const auto& c : r.checks)
    if (c.status != CheckStatus::ReportOnly) out << to_text(c);
  bool header = false;
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::ReportOnly) {
      if (!header) out << "\nreport-only (never affects the exit code)\n";
      header = true;
      out << to_text(c);
    }
  out << "\n" << (r.ok() ? "all checks pass" : "some checks FAIL") << "\n";
  return out.str();
}

}  // namespace wqo
