#include "wqo/barrier.hpp"

#include <algorithm>
#include <functional>

#include "wqo/error.hpp"

namespace wqo {

namespace {

bool is_prefix(const Block& p, const Block& seq, std::size_t offset = 0) {
  if (p.size() + offset > seq.size()) return false;
  return std::equal(p.begin(), p.end(), seq.begin() + static_cast<std::ptrdiff_t>(offset));
}

bool subset(const Block& a, const Block& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void combinations(const std::vector<int>& pool, int k, std::size_t start, Block& cur,
                  const std::function<bool(const Block&)>& visit, bool& stop) {
  if (stop) return;
  if (static_cast<int>(cur.size()) == k) {
    stop = !visit(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size() && !stop; ++i) {
    cur.push_back(pool[i]);
    combinations(pool, k, i + 1, cur, visit, stop);
    cur.pop_back();
  }
}

}  // namespace

bool tri_less(const Block& s, const Block& t) {
  Block u;
  std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
  if (u.empty()) return false;
  return is_prefix(s, u) && is_prefix(t, u, 1);
}

std::string render_block(const Block& b) {
  std::string s = "{";
  for (int x : b) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + "}";
}

BarrierFragment::BarrierFragment(std::vector<Block> blocks, int window, std::optional<int> uniform_k)
    : blocks_(std::move(blocks)), window_(window), uniform_k_(uniform_k) {
  for (auto& b : blocks_) {
    require(!b.empty(), ErrorCode::InvalidInput, "barrier blocks must be nonempty");
    std::sort(b.begin(), b.end());
    require(std::adjacent_find(b.begin(), b.end()) == b.end(), ErrorCode::InvalidInput,
            "barrier block has a repeated entry");
    require(b.front() >= 0 && b.back() < window_, ErrorCode::InvalidInput,
            "barrier block " + render_block(b) + " leaves the window");
  }
  std::sort(blocks_.begin(), blocks_.end());
  blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
}

BarrierFragment BarrierFragment::uniform(int k, int window) {
  require(k >= 1, ErrorCode::InvalidInput, "uniform barrier needs k >= 1");
  std::vector<int> pool(std::max(window, 0));
  for (int i = 0; i < window; ++i) pool[i] = i;
  std::vector<Block> blocks;
  Block cur;
  bool stop = false;
  combinations(pool, k, 0, cur, [&](const Block& b) { blocks.push_back(b); return true; }, stop);
  return BarrierFragment(std::move(blocks), window, k);
}

std::optional<int> BarrierFragment::index_of(const Block& b) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), b);
  if (it == blocks_.end() || *it != b) return std::nullopt;
  return static_cast<int>(it - blocks_.begin());
}

std::string BarrierFragment::family_name() const {
  if (!uniform_k_) return "fragment";
  if (*uniform_k_ == 1) return "sgl";
  if (*uniform_k_ == 2) return "pairs";
  return "uniform" + std::to_string(*uniform_k_);
}

FragmentCheck validate(const BarrierFragment& b) {
  FragmentCheck c;
  const auto& blocks = b.blocks();
  if (blocks.empty()) return c;
  for (std::size_t i = 0; i < blocks.size() && !c.nested; ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (i != j && subset(blocks[i], blocks[j])) {
        c.nested = std::make_pair(blocks[i], blocks[j]);
        break;
      }
  std::size_t k = 0;
  std::vector<int> pool;
  for (const auto& blk : blocks) k = std::max(k, blk.size());
  for (int x = 0; x < b.window() - static_cast<int>(k); ++x)
    for (const auto& blk : blocks)
      if (std::binary_search(blk.begin(), blk.end(), x)) {
        pool.push_back(x);
        break;
      }
  Block cur;
  bool stop = false;
  combinations(pool, static_cast<int>(k), 0, cur, [&](const Block& seq) {
    for (const auto& blk : blocks)
      if (is_prefix(blk, seq)) return true;
    c.uncovered = seq;
    return false;
  }, stop);
  return c;
}

BSquare b_square(const BarrierFragment& b) {
  const auto& blocks = b.blocks();
  std::vector<std::pair<Block, std::pair<int, int>>> found;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (tri_less(blocks[i], blocks[j])) {
        Block u;
        std::set_union(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                       std::back_inserter(u));
        found.push_back({u, {static_cast<int>(i), static_cast<int>(j)}});
      }
  std::sort(found.begin(), found.end());
  for (std::size_t i = 1; i < found.size(); ++i)
    if (found[i].first == found[i - 1].first)
      fail(ErrorCode::InvalidInput, "block " + render_block(found[i].first) +
                                        " of B^2 decomposes in more than one way");
  std::vector<Block> square_blocks;
  for (const auto& f : found) square_blocks.push_back(f.first);
  std::optional<int> tag;
  if (b.uniform_k()) tag = *b.uniform_k() + 1;
  BarrierFragment square(square_blocks, b.window(), tag);
  BSquare out{square, {}, {}, {}};
  for (const auto& blk : square.blocks()) {
    auto it = std::lower_bound(found.begin(), found.end(), blk,
                               [](const auto& e, const Block& key) { return e.first < key; });
    out.decomposition.push_back({blk, it->second.first, it->second.second});
  }
  const auto& sq = out.decomposition;
  for (std::size_t i = 0; i < sq.size(); ++i)
    for (std::size_t j = 0; j < sq.size(); ++j)
      if (tri_less(sq[i].block, sq[j].block) && sq[i].pi1 != sq[j].pi0)
        out.projection_failures.emplace_back(static_cast<int>(i), static_cast<int>(j));
  out.validity = validate(square);
  return out;
}

SmoothCheck smooth_check(const BarrierFragment& b) {
  for (const auto& s : b.blocks())
    for (const auto& t : b.blocks()) {
      if (s.size() >= t.size()) continue;
      bool some_less = false;
      for (std::size_t i = 0; i < s.size(); ++i) some_less = some_less || s[i] < t[i];
      if (!some_less) return {false, std::make_pair(s, t)};
    }
  return {};
}

OtResult ot_of(const BarrierFragment& b) {
  if (b.uniform_k())
    return {Ordinal::omega_pow(Ordinal::natural(static_cast<std::uint64_t>(*b.uniform_k()))),
            "lexicographic type of [w]^" + std::to_string(*b.uniform_k())};
  return {Ordinal::natural(b.blocks().size()), "untagged fragment: finite lexicographic type"};
}

GoodBad good_bad(const std::vector<int>& f, const BarrierFragment& b, const QuasiOrder& q) {
  const auto& blocks = b.blocks();
  require(f.size() == blocks.size(), ErrorCode::InvalidInput, "block function is not total on the fragment");
  for (int v : f)
    require(v >= 0 && v < q.size(), ErrorCode::InvalidInput, "block function value outside the quasi-order");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (tri_less(blocks[i], blocks[j]) && q.le(f[i], f[j]))
        return {Goodness::Good, std::make_pair(static_cast<int>(i), static_cast<int>(j))};
  return {};
}

namespace {

// Backtracking search for a bad map in block order; first hit is the
// lexicographically least assignment.
class BadMapSearch {
 public:
  BadMapSearch(const BarrierFragment& b, const QuasiOrder& q, const std::vector<int>& birth)
      : b_(b), q_(q) {
    const auto& blocks = b.blocks();
    const int n = static_cast<int>(blocks.size());
    before_.assign(n, {});
    after_.assign(n, {});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) {
        if (tri_less(blocks[j], blocks[i])) before_[i].push_back(j);
        if (tri_less(blocks[i], blocks[j])) after_[i].push_back(j);
      }
    const int first = birth.empty() ? 0 : *std::min_element(birth.begin(), birth.end());
    allowed_.assign(n, {});
    for (int i = 0; i < n; ++i)
      for (int x = 0; x < q.size(); ++x)
        if (birth[x] <= blocks[i].back() + first) allowed_[i].push_back(x);
    f_.assign(n, -1);
  }

  bool run(int i = 0) {
    if (++nodes_ > kProbeNodeCap) {
      capped_ = true;
      return false;
    }
    if (i == static_cast<int>(f_.size())) return true;
    for (int x : allowed_[i]) {
      bool ok = true;
      for (int j : before_[i]) ok = ok && !q_.le(f_[j], x);
      for (int j : after_[i]) ok = ok && !q_.le(x, f_[j]);
      if (!ok) continue;
      f_[i] = x;
      if (run(i + 1)) return true;
      if (capped_) return false;
    }
    f_[i] = -1;
    return false;
  }

  const std::vector<int>& assignment() const { return f_; }
  long long nodes() const { return nodes_; }
  bool capped() const { return capped_; }

 private:
  const BarrierFragment& b_;
  const QuasiOrder& q_;
  std::vector<std::vector<int>> before_, after_, allowed_;
  std::vector<int> f_;
  long long nodes_ = 0;
  bool capped_ = false;
};

}  // namespace

BqoProbeReport bqo_probe(const PresentedQO& p, int max_window) {
  require(max_window >= 2 && max_window <= 6, ErrorCode::SizeCap, "bqo_probe supports windows 2..6");
  BqoProbeReport rep;
  const QuasiOrder q = p.truncate_at(max_window);
  const std::vector<int> birth = p.births(max_window);
  for (int k : {1, 2}) {
    for (int w = k + 1; w <= max_window; ++w) {
      const BarrierFragment frag = BarrierFragment::uniform(k, w);
      BadMapSearch search(frag, q, birth);
      ProbeWindow pw;
      pw.family = frag.family_name();
      pw.window = w;
      pw.bad_found = search.run();
      pw.nodes = search.nodes();
      pw.capped = search.capped();
      if (pw.bad_found)
        for (int x : search.assignment()) pw.assignment.push_back(q.label(x));
      rep.windows.push_back(pw);
      if (w == max_window && pw.bad_found && !rep.evidence) rep.evidence = pw;
    }
  }
  return rep;
}

}  // namespace wqo
