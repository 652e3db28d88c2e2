#include "wqo/elastic.hpp"

#include <unordered_map>

#include "wqo/error.hpp"

namespace wqo {

BadSequenceCheck is_bad_sequence(const SetSystem& l, const LearningSequence& s) {
  AtomSet presented;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& [t, member] = s[i];
    require(l.contains(member), ErrorCode::InvalidInput,
            "learning sequence uses " + l.render_member(member) + ", which is not a member");
    if (i > 0 && s[i - 1].member.contains(t))
      return {false, static_cast<int>(i), "datum already lies in the previous member"};
    presented.insert(t);
    if (!presented.subset_of(member))
      return {false, static_cast<int>(i), "member does not contain every presented datum"};
  }
  return {};
}

namespace {

struct StateKey {
  std::uint64_t presented;
  int member;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.presented * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(k.member));
  }
};

struct Choice {
  int rank = 0;
  int t = -1;
  int member = -1;
};

class DimSearch {
 public:
  explicit DimSearch(const SetSystem& l) : l_(l) {}

  Choice rank(AtomSet presented, int last) {
    const StateKey key{presented.bits(), last};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Choice best;
    const AtomSet last_member = l_.members()[last];
    const AtomSet fresh = l_.support() - last_member;
    fresh.for_each([&](int t) {
      const AtomSet next = presented | AtomSet::single(t);
      for (int j = 0; j < l_.size(); ++j) {
        if (!next.subset_of(l_.members()[j])) continue;
        const int r = 1 + rank(next, j).rank;
        if (r > best.rank) best = {r, t, j};
      }
    });
    memo_.emplace(key, best);
    return best;
  }

  Choice root() {
    Choice best;
    l_.support().for_each([&](int t) {
      for (int j = 0; j < l_.size(); ++j) {
        if (!l_.members()[j].contains(t)) continue;
        const int r = 1 + rank(AtomSet::single(t), j).rank;
        if (r > best.rank) best = {r, t, j};
      }
    });
    return best;
  }

  long long states() const { return static_cast<long long>(memo_.size()); }

 private:
  const SetSystem& l_;
  std::unordered_map<StateKey, Choice, StateKeyHash> memo_;
};

}  // namespace

GameTreeRank dim(const SetSystem& l, int atom_cap) {
  const int atoms = l.support().size();
  require(atoms <= atom_cap, ErrorCode::SizeCap,
          "dim supports at most " + std::to_string(atom_cap) + " atoms in the union of members (got " +
              std::to_string(atoms) + ")");
  DimSearch search(l);
  Choice c = search.root();
  GameTreeRank r;
  r.value = Ordinal::natural(static_cast<std::uint64_t>(c.rank));
  AtomSet presented;
  while (c.t >= 0) {
    presented.insert(c.t);
    r.witness.push_back({c.t, l.members()[c.member]});
    c = search.rank(presented, c.member);
  }
  r.states_explored = search.states();
  if (c.rank > atoms + 1 || static_cast<int>(r.witness.size()) > atoms + 1)
    throw std::logic_error("dim exceeded |union L| + 1; bad sequences must use distinct data");
  return r;
}

DimProfile dim_profile(const std::function<SetSystem(int)>& build, int n1, int n2, int atom_cap) {
  require(n1 >= 0 && n1 <= n2, ErrorCode::InvalidInput, "dim_profile needs a range n1..n2 with n1 <= n2");
  DimProfile p;
  p.coherent = true;
  std::optional<SetSystem> prev;
  for (int n = n1; n <= n2; ++n) {
    SetSystem cur = build(n);
    if (prev && !cur.restrict_prefix(prev->universe_size()).same_family(prev->restrict_prefix(prev->universe_size())))
      p.coherent = false;
    p.points.emplace_back(n, dim(cur, atom_cap).finite());
    prev = std::move(cur);
  }
  p.nondecreasing = p.strictly_increasing = p.constant = true;
  for (std::size_t i = 1; i < p.points.size(); ++i) {
    const int a = p.points[i - 1].second, b = p.points[i].second;
    p.nondecreasing = p.nondecreasing && a <= b;
    p.strictly_increasing = p.strictly_increasing && a < b;
    p.constant = p.constant && a == b;
  }
  if (!p.consistent())
    throw std::logic_error("dim decreased along coherent truncations");
  return p;
}

DimOtp dim_otp_check(const QuasiOrder& q) {
  require(check_quasi_order(q).ok, ErrorCode::InvalidInput, "input is not a quasi-order");
  DimOtp r;
  r.otp = count_classes(q);
  require(r.otp <= 5, ErrorCode::SizeCap, "dim_otp_check supports at most 5 equivalence classes");
  r.dim = dim(ss(q)).finite();
  return r;
}

namespace {

void chains_below(const std::vector<AtomSet>& pool, std::vector<AtomSet>& chain,
                  LinearizationReport& rep, const std::vector<std::string>& universe) {
  ++rep.candidates;
  const int d = dim(SetSystem(universe, chain)).finite();
  if (d > rep.max_candidate_dim || rep.best_chain.empty()) {
    rep.max_candidate_dim = d;
    rep.best_chain = chain;
  }
  const AtomSet bottom = chain.back();
  for (AtomSet s : pool)
    if (s != bottom && s.subset_of(bottom)) {
      chain.push_back(s);
      chains_below(pool, chain, rep, universe);
      chain.pop_back();
    }
}

}  // namespace

LinearizationReport linearization_probe(const SetSystem& l) {
  require(l.size() <= 6 && l.support().size() <= 8, ErrorCode::SizeCap,
          "linearization_probe supports at most 6 members over at most 8 atoms");
  LinearizationReport rep;
  rep.system_dim = dim(l).finite();
  if (l.size() == 0) return rep;
  const SetSystem closure = hat(l);
  std::vector<AtomSet> chain{l.support()};
  chains_below(closure.members(), chain, rep, l.universe());
  return rep;
}

RamseyValue ramsey(int n, int m) {
  require(n >= 1 && m >= 1, ErrorCode::InvalidInput, "Ramsey arguments must be positive");
  if (n > m) std::swap(n, m);
  if (n == 1) return {1, true};
  if (n == 2) return {m, true};
  if (n == 3 && m == 3) return {6, true};
  if (n == 3 && m == 4) return {9, false};
  if (n == 4 && m == 4) return {18, false};
  fail(ErrorCode::Unsupported,
       "Ramsey value R(" + std::to_string(n) + "," + std::to_string(m) + ") is not available");
}

namespace {

// Edge index of {u, v} in K_n, u < v.
int edge(int n, int u, int v) { return u * (2 * n - u - 1) / 2 + (v - u - 1); }

bool has_mono_triangle(int n, std::uint32_t colors) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const unsigned x = (colors >> edge(n, a, b)) & 1U;
        if (x == ((colors >> edge(n, a, c)) & 1U) && x == ((colors >> edge(n, b, c)) & 1U)) return true;
      }
  return false;
}

}  // namespace

Ramsey33Search ramsey33_exhaustive() {
  Ramsey33Search r;
  for (std::uint32_t c = 0; c < (1U << 15); ++c) {
    ++r.k6_colorings;
    if (has_mono_triangle(6, c)) ++r.k6_with_mono_triangle;
  }
  for (std::uint32_t c = 0; c < (1U << 10) && !r.k5_triangle_free; ++c)
    if (!has_mono_triangle(5, c)) r.k5_triangle_free = c;
  return r;
}

RamseyUnionReport ramsey_union_check(const SetSystem& a, const SetSystem& b) {
  RamseyUnionReport r;
  r.dim_a = dim(a).finite();
  r.dim_b = dim(b).finite();
  r.dim_union = dim(memberwise_union(a, b)).finite();
  try {
    r.bound = ramsey(r.dim_a + 2, r.dim_b + 2);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unsupported) throw;
  }
  return r;
}

RamseyIntersectionReport ramsey_intersection_check(const QuasiOrder& a, const QuasiOrder& b) {
  require(check_quasi_order(a).ok && check_quasi_order(b).ok, ErrorCode::InvalidInput,
          "intersection check needs two quasi-orders");
  RamseyIntersectionReport r;
  r.otp_a = count_classes(a);
  r.otp_b = count_classes(b);
  r.otp_meet = count_classes(a.intersect(b));
  try {
    r.bound = ramsey(r.otp_a + 1, r.otp_b + 1);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unsupported) throw;
  }
  return r;
}

}  // namespace wqo
