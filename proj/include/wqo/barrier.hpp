#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wqo/ordinal.hpp"
#include "wqo/qorder.hpp"

namespace wqo {

// Strictly increasing finite sequence of naturals (a finite set read in order).
using Block = std::vector<int>;

// s <| t: s is a prefix of u = sort(s | t) and t is a prefix of u minus min u.
bool tri_less(const Block& s, const Block& t);

// Finite piece of a barrier: the blocks whose entries are below `window`.
// A tag `uniform_k` marks the piece as drawn from [w]^k (k = 1 is the
// singleton barrier), which carries analytic facts the blocks alone cannot.
class BarrierFragment {
 public:
  BarrierFragment(std::vector<Block> blocks, int window, std::optional<int> uniform_k = std::nullopt);

  static BarrierFragment singletons(int window) { return uniform(1, window); }
  static BarrierFragment pairs(int window) { return uniform(2, window); }
  static BarrierFragment uniform(int k, int window);

  const std::vector<Block>& blocks() const { return blocks_; }
  int window() const { return window_; }
  std::optional<int> uniform_k() const { return uniform_k_; }
  std::optional<int> index_of(const Block& b) const;
  std::string family_name() const;

 private:
  std::vector<Block> blocks_;
  int window_;
  std::optional<int> uniform_k_;
};

std::string render_block(const Block& b);

struct FragmentCheck {
  std::optional<std::pair<Block, Block>> nested;  // s inside t
  std::optional<Block> uncovered;  // increasing sequence with no prefix in B
  bool ok() const { return !nested && !uncovered; }
};

// Antichain law plus the windowed prefix law: every increasing sequence of
// length k = max block length drawn from (union B) & [0, window - k) has a
// prefix among the blocks.
FragmentCheck validate(const BarrierFragment& b);

struct SquareBlock {
  Block block;
  int pi0 = 0, pi1 = 0;  // indices into the source fragment
};

struct BSquare {
  BarrierFragment square;
  std::vector<SquareBlock> decomposition;  // parallel to square.blocks()
  // <|-pairs t <| t2 inside the square with pi1(t) != pi0(t2).
  std::vector<std::pair<int, int>> projection_failures;
  FragmentCheck validity;
};

// B^2 = { s | t : s, t in B, s <| t } with its projections. Throws
// InvalidInput when some block decomposes in more than one way.
BSquare b_square(const BarrierFragment& b);

struct SmoothCheck {
  bool ok = true;
  std::optional<std::pair<Block, Block>> witness;  // (s, t), #s < #t, s_i >= t_i for all i
};

SmoothCheck smooth_check(const BarrierFragment& b);

struct OtResult {
  std::optional<Ordinal> value;
  std::string note;
};

// Lexicographic order type: w^k for [w]^k, the block count for untagged
// fragments.
OtResult ot_of(const BarrierFragment& b);

enum class Goodness { Good, BadWithinWindow };

struct GoodBad {
  Goodness verdict = Goodness::BadWithinWindow;
  std::optional<std::pair<int, int>> witness;  // (s, t) block indices, s <| t, f(s) <= f(t)
};

// f[i] is the atom of q assigned to block i.
GoodBad good_bad(const std::vector<int>& f, const BarrierFragment& b, const QuasiOrder& q);

struct ProbeWindow {
  std::string family;
  int window = 0;
  bool bad_found = false;
  std::vector<std::string> assignment;  // labels, parallel to the fragment's blocks
  long long nodes = 0;
  bool capped = false;
};

struct BqoProbeReport {
  std::vector<ProbeWindow> windows;
  // A bad assignment at the largest window of some family.
  std::optional<ProbeWindow> evidence;
};

inline constexpr long long kProbeNodeCap = 10'000'000;

// Searches for bad maps on singleton windows 2..max_window and pair windows
// 3..max_window. With m the first nonempty truncation, block s may only take
// values already present in truncation max(s) + m, so a bad map must be bad
// "from the start"; unbounded values would make every truncation of (w, <=)
// look bad. Only the largest window carries evidence: small windows admit
// bad maps even for well-behaved orders.
BqoProbeReport bqo_probe(const PresentedQO& q, int max_window);

}  // namespace wqo
