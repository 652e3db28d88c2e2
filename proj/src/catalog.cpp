#include "wqo/catalog.hpp"

#include <algorithm>

#include "wqo/elastic.hpp"
#include "wqo/error.hpp"

namespace wqo {

namespace {

AtomSet interval(int lo, int hi) {
  AtomSet s;
  for (int k = std::max(lo, 0); k < hi; ++k) s.insert(k);
  return s;
}

SetSystem sgl(int n) {
  std::vector<AtomSet> members;
  for (int i = 0; i < n; ++i) members.push_back(AtomSet::single(i));
  return SetSystem::over_naturals(n, members, n);
}

// {i} | [j, w) for all naturals i, j; i = n or j = n stand for "beyond the window".
SetSystem l1(int n) {
  std::vector<AtomSet> members;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      AtomSet m = interval(j, n);
      if (i < n) m.insert(i);
      if (!m.empty()) members.push_back(m);
    }
  return SetSystem::over_naturals(n, members, n);
}

SetSystem l2(int n) {
  std::vector<AtomSet> members;
  for (int i = 1; i < n; ++i) members.push_back(interval(i, n));
  if (n > 0) members.push_back(AtomSet::single(0));
  return SetSystem::over_naturals(n, members, n);
}

void check_window(int n) {
  require(n >= 1, ErrorCode::InvalidInput, "catalog truncation must be at least 1");
  require(n <= AtomSet::kCapacity, ErrorCode::SizeCap, "catalog truncation exceeds 64 atoms");
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"sgl",     "L1",       "L2",     "L3",       "rado",
                                              "omega",   "eq-omega", "fact15", "F-lemma10"};
  return names;
}

SetSystem build_system(const std::string& name, int n) {
  check_window(n);
  if (name == "sgl") return sgl(n);
  if (name == "L1") return l1(n);
  if (name == "L2") return l2(n);
  if (name == "L3") {
    SetSystem f = finclass(l2(n));
    return SetSystem(f.universe(), f.members(), n);
  }
  fail(ErrorCode::UnknownName, "no set system named '" + name + "' in the catalog");
}

PresentedQO build_order(const std::string& name, int n) {
  check_window(n);
  if (name == "rado") return PresentedQO::rado(n);
  if (name == "omega") return PresentedQO::omega(n);
  if (name == "eq-omega") return PresentedQO::equality_omega(n);
  if (name == "fact15") return PresentedQO::fact15(n);
  fail(ErrorCode::UnknownName, "no quasi-order named '" + name + "' in the catalog");
}

PairMap build_pair_map(int n) {
  check_window(n);
  SetSystem members = l1(n);
  const auto& ms = members.members();
  std::vector<std::string> labels;
  for (const auto& m : ms) labels.push_back(members.render_member(m));
  QuasiOrder target = QuasiOrder::from_predicate(
      labels, [&](int a, int b) { return ms[b].subset_of(ms[a]); });
  PairTable table = PairTable::from_function(n, [&](int i, int j) {
    AtomSet v = interval(j + 1, n);
    v.insert(i);
    return *members.index_of(v);
  });
  return {table, target, members};
}

CatalogStructure build(const std::string& name, int n) {
  if (name == "sgl" || name == "L1" || name == "L2" || name == "L3") return build_system(name, n);
  if (name == "F-lemma10") return build_pair_map(n);
  return build_order(name, n);
}

bool AttestationReport::ok() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const Attestation& a) { return a.report_only || a.passed; });
}

namespace {

std::string range_text(const std::vector<std::pair<int, int>>& points) {
  std::string s;
  for (const auto& [n, v] : points) s += (s.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(v);
  return s;
}

// qo(L) restricted to [0, n - 1) is equality.
bool qo_is_equality_inside(const SetSystem& l, int n) {
  QuasiOrder q = qo_of(l);
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y) {
      const int lx = std::stoi(q.label(x)), ly = std::stoi(q.label(y));
      if (lx >= n - 1 || ly >= n - 1 || lx == ly) continue;
      if (q.le(x, y)) return false;
    }
  return true;
}

Attestation dim_claim(const std::string& claim, const std::string& statement,
                      const std::function<SetSystem(int)>& builder, int n1, int n2,
                      const std::function<bool(const DimProfile&)>& accept, bool report_only = false) {
  DimProfile p = dim_profile(builder, n1, n2);
  Attestation a{claim, statement, report_only, accept(p) && p.consistent(), "dim profile " + range_text(p.points)};
  return a;
}

Attestation ft_claim(const std::string& claim, const std::string& statement,
                     const std::function<SetSystem(int)>& builder, int n1, int n2, bool expect_bounded,
                     std::optional<int> expect_growing = std::nullopt) {
  FtProfile p = ft_profile(builder, n1, n2);
  bool ok = p.bounded_in_range() == expect_bounded;
  if (expect_growing) ok = ok && std::find(p.growing_atoms.begin(), p.growing_atoms.end(), *expect_growing) !=
                                     p.growing_atoms.end();
  std::string growing;
  for (int x : p.growing_atoms) growing += (growing.empty() ? "" : ",") + std::to_string(x);
  return {claim, statement, false, ok, "atoms with growing counts: {" + growing + "}"};
}

Attestation antichain_claim(const std::string& name, int n1, int n2) {
  std::vector<std::pair<int, int>> sizes;
  for (int n = n1; n <= n2; ++n) {
    SetSystem inner = build_system(name, n).restrict_prefix(n - 1);
    sizes.emplace_back(n, max_antichain(inner).size);
  }
  return {"antichain-sizes", "largest inclusion antichains inside [0, N-1)", true, true, range_text(sizes)};
}

}  // namespace

AttestationReport attestation_suite(const std::string& name, int n1, int n2) {
  require(n1 >= 2 && n1 <= n2, ErrorCode::InvalidInput, "attestation range must satisfy 2 <= N1 <= N2");
  const auto& names = catalog_names();
  require(std::find(names.begin(), names.end(), name) != names.end(), ErrorCode::UnknownName,
          "no catalog entry named '" + name + "'");
  AttestationReport rep{name, n1, n2, {}};
  auto sys = [name](int n) { return build_system(name, n); };
  auto& out = rep.claims;

  if (name == "sgl") {
    require(n2 <= 12, ErrorCode::SizeCap, "sgl attestations support N <= 12");
    bool ones = true;
    for (int n = n1; n <= n2; ++n)
      for (int c : ft_counts(sgl(n))) ones = ones && c == 1;
    out.push_back({"finite-thickness", "every point lies in exactly one member", false, ones, ""});
    out.push_back(dim_claim("dim-constant-1", "dim is 1 at every truncation", sys, n1, n2,
                            [](const DimProfile& p) { return p.constant && p.points.front().second == 1; }));
    bool eq = true;
    for (int n = n1; n <= n2; ++n) eq = eq && qo_is_equality_inside(sgl(n), n);
    out.push_back({"qo-equality", "the induced order is equality", false, eq, ""});
    out.push_back(antichain_claim(name, n1, n2));
  } else if (name == "L1") {
    require(n2 <= 10, ErrorCode::SizeCap, "L1 attestations support N <= 10");
    bool eq = true;
    for (int n = n1; n <= n2; ++n) eq = eq && qo_is_equality_inside(l1(n), n);
    out.push_back({"qo-equality", "the induced order is equality", false, eq, ""});
    out.push_back(dim_claim("finclass-dim-increasing", "closure under finite unions has no finite dim",
                            [](int n) { return finclass(l1(n)); }, n1, n2,
                            [](const DimProfile& p) { return p.strictly_increasing; }));
    bool rado = true;
    for (int n = std::max(n1, 3); n <= n2; ++n) {
      PairMap f = build_pair_map(n);
      rado = rado && rado_condition_check(f.table, f.target).violation();
    }
    out.push_back({"reverse-inclusion-not-bqo", "F({i,j}) = {i} | (j, N) meets the chain premise with no strict triple",
                   false, rado, ""});
    out.push_back(antichain_claim(name, n1, n2));
  } else if (name == "L2") {
    out.push_back(ft_claim("finite-thickness", "every point lies in finitely many members", sys, n1, n2, true));
    out.push_back(ft_claim("finclass-thick-at-0", "finite unions put 0 in unboundedly many members",
                           [](int n) { return finclass(l2(n)); }, n1, n2, false, 0));
  } else if (name == "L3") {
    bool same = true;
    for (int n = n1; n <= n2; ++n) same = same && build_system("L3", n).same_family(finclass(l2(n)));
    out.push_back({"finclass-of-L2", "L3 is the finite-union closure of L2", false, same, ""});
    out.push_back(ft_claim("thick-at-0", "0 lies in unboundedly many members", sys, n1, n2, false, 0));
  } else if (name == "omega") {
    PresentedQO q = PresentedQO::omega(n2);
    auto o = otp(q);
    out.push_back({"otp-omega", "maximal order type is w", false, o.value && render(*o.value) == "w", ""});
    const auto bad = bad_sequence_search(q, std::min(n2, 8));
    out.push_back({"no-bad-pair", "growth-bounded bad sequences have length 1", false, bad.longest.size() == 1,
                   "longest " + std::to_string(bad.longest.size())});
    out.push_back(dim_claim("ss-dim-is-N", "dim of the upper sets of a chain of N is N",
                            [](int n) { return ss(PresentedQO::omega(n).truncate()); }, n1, std::min(n2, 10),
                            [](const DimProfile& p) {
                              return std::all_of(p.points.begin(), p.points.end(),
                                                 [](auto pt) { return pt.first == pt.second; });
                            }));
  } else if (name == "eq-omega") {
    const int depth = std::min(n2, 8);
    const auto bad = bad_sequence_search(PresentedQO::equality_omega(n2), depth);
    out.push_back({"antichain-grows", "bad sequences fill every depth", false,
                   static_cast<int>(bad.longest.size()) == depth, "longest " + std::to_string(bad.longest.size())});
  } else if (name == "rado") {
    bool rado = true;
    for (int n = std::max(n1, 3); n <= n2; ++n) {
      QuasiOrder q = PresentedQO::rado(n).truncate();
      PairTable f = PairTable::from_function(
          n, [&](int i, int j) { return *q.index_of("(" + std::to_string(i) + "," + std::to_string(j) + ")"); });
      rado = rado && rado_condition_check(f, q).violation();
    }
    out.push_back({"pair-map-bad", "the identity pair map meets the chain premise with no strict triple", false,
                   rado, ""});
    const auto bad = bad_sequence_search(PresentedQO::rado(n2), 4);
    out.push_back({"rado-bad-length", "growth-bounded bad sequences in the order itself", true, true,
                   "longest " + std::to_string(bad.longest.size())});
  } else if (name == "fact15") {
    bool ppf_ok = true;
    for (int n = n1; n <= n2; ++n) {
      QuasiOrder q = PresentedQO::fact15(n).truncate();
      std::vector<AtomSet> expected{AtomSet::prefix(n + 1)};
      for (int i = 1; i <= n; ++i) expected.push_back(AtomSet::single(i));
      ppf_ok = ppf_ok && principal_filters(q).same_family(SetSystem(q.labels(), expected));
    }
    out.push_back({"filters", "principal filters are the whole set and the singletons {a_i}", false, ppf_ok, ""});
    const int top = std::min(n2, 10);
    out.push_back(dim_claim("ss-dim-grows", "dim of the upper sets is unbounded",
                            [](int n) { return ss(PresentedQO::fact15(n).truncate()); }, n1, top,
                            [](const DimProfile& p) { return p.strictly_increasing; }));
    out.push_back(dim_claim("filters-dim", "dim of the principal-filter system (stated as 1 in the source)",
                            [](int n) { return principal_filters(PresentedQO::fact15(n).truncate()); }, n1, top,
                            [](const DimProfile&) { return true; }, true));
  } else if (name == "F-lemma10") {
    bool rado = true;
    for (int n = std::max(n1, 3); n <= n2; ++n) {
      PairMap f = build_pair_map(n);
      rado = rado && rado_condition_check(f.table, f.target).violation();
    }
    out.push_back({"bad-pair-map", "F meets the chain premise with no strict triple", false, rado, ""});
  }
  return rep;
}

}  // namespace wqo
