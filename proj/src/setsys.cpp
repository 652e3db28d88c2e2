#include "wqo/setsys.hpp"

#include <algorithm>
#include <unordered_set>

#include "wqo/error.hpp"

namespace wqo {

SetSystem::SetSystem(std::vector<std::string> universe, const std::vector<AtomSet>& members,
                     std::optional<int> truncation)
    : universe_(std::move(universe)), truncation_(truncation) {
  require(universe_.size() <= AtomSet::kCapacity, ErrorCode::SizeCap,
          "set systems are limited to 64 universe atoms");
  const AtomSet all = AtomSet::prefix(universe_size());
  std::unordered_set<AtomSet> seen;
  for (AtomSet m : members) {
    require(m.subset_of(all), ErrorCode::InvalidInput, "member is not a subset of the universe");
    if (seen.insert(m).second) members_.push_back(m);
  }
}

SetSystem SetSystem::over_naturals(int n, const std::vector<AtomSet>& members,
                                   std::optional<int> truncation) {
  return SetSystem(QuasiOrder::numbered_labels(n), members, truncation);
}

AtomSet SetSystem::support() const {
  AtomSet s;
  for (AtomSet m : members_) s |= m;
  return s;
}

bool SetSystem::contains(AtomSet m) const { return index_of(m).has_value(); }

std::optional<int> SetSystem::index_of(AtomSet m) const {
  auto it = std::find(members_.begin(), members_.end(), m);
  if (it == members_.end()) return std::nullopt;
  return static_cast<int>(it - members_.begin());
}

SetSystem SetSystem::restrict_prefix(int n) const {
  n = std::min(n, universe_size());
  const AtomSet window = AtomSet::prefix(n);
  std::vector<AtomSet> out;
  for (AtomSet m : members_)
    if (AtomSet r = m & window; !r.empty()) out.push_back(r);
  return SetSystem(std::vector<std::string>(universe_.begin(), universe_.begin() + n), out, n);
}

std::vector<AtomSet> SetSystem::nonempty_sorted() const {
  std::vector<AtomSet> out;
  for (AtomSet m : members_)
    if (!m.empty()) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

bool SetSystem::same_family(const SetSystem& other) const {
  return universe_ == other.universe_ && nonempty_sorted() == other.nonempty_sorted() &&
         contains(AtomSet{}) == other.contains(AtomSet{});
}

std::string SetSystem::render_member(AtomSet m) const {
  std::string s = "{";
  for (int a : m.atoms()) s += (s.size() > 1 ? "," : "") + universe_[a];
  return s + "}";
}

SetSystem ss(const QuasiOrder& q) {
  require(q.size() <= 16, ErrorCode::SizeCap, "ss supports universes of at most 16 atoms");
  std::vector<AtomSet> ups(q.size());
  for (int x = 0; x < q.size(); ++x) ups[x] = q.up(x);
  std::vector<AtomSet> members;
  const std::uint64_t total = std::uint64_t{1} << q.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const AtomSet u(bits);
    bool closed = true;
    u.for_each([&](int x) { closed = closed && ups[x].subset_of(u); });
    if (closed) members.push_back(u);
  }
  return SetSystem(q.labels(), members);
}

QuasiOrder qo_of(const SetSystem& l) {
  const std::vector<int> atoms = l.support().atoms();
  std::vector<std::string> labels;
  for (int a : atoms) labels.push_back(l.universe()[a]);
  return QuasiOrder::from_predicate(std::move(labels), [&](int i, int j) {
    const int x = atoms[i], y = atoms[j];
    for (AtomSet m : l.members())
      if (m.contains(x) && !m.contains(y)) return false;
    return true;
  });
}

bool roundtrip_check(const QuasiOrder& q) { return qo_of(ss(q)) == q; }

SetSystem finclass(const SetSystem& l) {
  require(l.universe_size() <= 20, ErrorCode::SizeCap,
          "finclass supports universes of at most 20 atoms");
  std::unordered_set<AtomSet> reach;
  std::vector<AtomSet> order;
  for (AtomSet m : l.members()) {
    std::vector<AtomSet> fresh{m};
    for (AtomSet s : order) fresh.push_back(s | m);
    for (AtomSet s : fresh)
      if (reach.insert(s).second) order.push_back(s);
  }
  std::vector<AtomSet> extra;
  for (AtomSet s : order)
    if (!l.contains(s)) extra.push_back(s);
  std::sort(extra.begin(), extra.end());
  std::vector<AtomSet> members = l.members();
  members.insert(members.end(), extra.begin(), extra.end());
  return SetSystem(l.universe(), members, l.truncation());
}

SetSystem hat(const SetSystem& l) { return finclass(l); }

bool is_union_closed(const SetSystem& l) {
  for (AtomSet a : l.members())
    for (AtomSet b : l.members())
      if (!l.contains(a | b)) return false;
  return true;
}

SetSystem memberwise_union(const SetSystem& a, const SetSystem& b) {
  require(a.universe() == b.universe(), ErrorCode::InvalidInput,
          "memberwise union needs set systems over the same universe");
  std::vector<AtomSet> members;
  for (AtomSet x : a.members())
    for (AtomSet y : b.members()) members.push_back(x | y);
  return SetSystem(a.universe(), members);
}

SetSystem principal_filters(const QuasiOrder& q) {
  std::vector<AtomSet> members;
  for (int x = 0; x < q.size(); ++x) members.push_back(q.up(x));
  return SetSystem(q.labels(), members);
}

QuasiOrder pf_order(const QuasiOrder& q) {
  const SetSystem ppf = principal_filters(q);
  std::vector<std::string> labels;
  for (AtomSet m : ppf.members()) labels.push_back(ppf.render_member(m));
  return QuasiOrder::from_predicate(std::move(labels), [&](int i, int j) {
    return ppf.members()[j].subset_of(ppf.members()[i]);
  });
}

std::vector<int> ft_counts(const SetSystem& l) {
  std::vector<int> counts(l.universe_size(), 0);
  for (AtomSet m : l.members()) m.for_each([&](int x) { ++counts[x]; });
  return counts;
}

FtProfile ft_profile(const std::function<SetSystem(int)>& build, int n1, int n2) {
  require(n1 >= 0 && n1 <= n2, ErrorCode::InvalidInput, "ft_profile needs a range n1..n2 with n1 <= n2");
  FtProfile p;
  for (int n = n1; n <= n2; ++n) {
    p.truncations.push_back(n);
    p.counts.push_back(ft_counts(build(n)));
  }
  std::size_t width = 0;
  for (const auto& c : p.counts) width = std::max(width, c.size());
  for (std::size_t x = 0; x < width; ++x) {
    int first = -1;
    for (const auto& c : p.counts) {
      if (x >= c.size()) continue;
      if (first < 0) first = c[x];
      else if (c[x] > first) {
        p.growing_atoms.push_back(static_cast<int>(x));
        break;
      }
    }
  }
  return p;
}

namespace {

struct AntichainSearch {
  std::vector<std::uint64_t> comparable;  // comparable[i]: members comparable with i
  std::uint64_t best_set = 0;
  int best = 0;

  void run(std::uint64_t chosen, int chosen_size, std::uint64_t candidates) {
    if (chosen_size > best) {
      best = chosen_size;
      best_set = chosen;
    }
    if (chosen_size + std::popcount(candidates) <= best || candidates == 0) return;
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t{1} << v;
    run(chosen | bit, chosen_size + 1, candidates & ~bit & ~comparable[v]);
    run(chosen, chosen_size, candidates & ~bit);
  }
};

}  // namespace

Antichain max_antichain(const SetSystem& l) {
  const int n = l.size();
  require(n <= 64, ErrorCode::SizeCap, "max_antichain supports at most 64 members");
  AntichainSearch s;
  s.comparable.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (l.members()[i].subset_of(l.members()[j]) || l.members()[j].subset_of(l.members()[i])))
        s.comparable[i] |= std::uint64_t{1} << j;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  s.run(0, 0, all);
  Antichain a;
  a.size = s.best;
  for (std::uint64_t b = s.best_set; b != 0; b &= b - 1) a.members.push_back(std::countr_zero(b));
  return a;
}

Fact1Report fact1_checks(const QuasiOrder& q) {
  Fact1Report r;
  const SetSystem upper = ss(q);
  const SetSystem unions = finclass(principal_filters(q));
  r.empty_set_normalized = upper.contains(AtomSet{}) != unions.contains(AtomSet{});
  r.ss_is_finclass_of_filters = upper.nonempty_sorted() == unions.nonempty_sorted();
  r.qo_of_filters_is_q = qo_of(principal_filters(q)) == q;
  return r;
}

}  // namespace wqo
