#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wqo/atom_set.hpp"
#include "wqo/qorder.hpp"
#include "wqo/relation.hpp"

namespace wqo {

// z = sum of 2^i over i in S. Entries must be below 62.
std::uint64_t e_encode(const std::vector<int>& s);
std::vector<int> e_decode(std::uint64_t z);

// f_R(x) = sum over R(x, v) of 2^(code v), for x in [0, window). Source and
// target labels of r are read as naturals; every code must be below 64.
std::vector<std::uint64_t> f_R_build(const Relation& r, int window);

struct ReductionCheck {
  bool ok = true;
  std::optional<int> witness;  // first x where membership and the code disagree
};

// x in A iff some y in E_{f(x)} has E_y inside B, for every x < window.
ReductionCheck positive_reduce_check(const std::vector<int>& a, const std::vector<int>& b,
                                     const std::vector<std::uint64_t>& f, int window);

// Partial two-argument function on [0, window) returning one of its
// arguments.
class Selector {
 public:
  explicit Selector(int window);

  int window() const { return window_; }
  std::optional<int> at(int x, int y) const;
  void set(int x, int y, int value);
  void clear(int x, int y);
  // Distinct equivalent pairs resolved to the first argument.
  const std::vector<std::pair<int, int>>& ties() const { return ties_; }
  void note_tie(int x, int y) { ties_.emplace_back(x, y); }

  bool operator==(const Selector& o) const { return window_ == o.window_ && table_ == o.table_; }

 private:
  int window_;
  std::vector<int> table_;
  std::vector<std::pair<int, int>> ties_;
};

// x when x <= y and x != y, else y when y <= x and x != y, else undefined.
Selector selector_from_order(const QuasiOrder& q);

// Copy of psi with psi(x, x) = x on the diagonal. The order-built selector
// leaves the diagonal undefined, which the semi-r.e. condition rejects for
// x in M.
Selector selector_complete_diagonal(const Selector& psi);

enum class SelectorKind { Weak, SemiRe, Semirec };

struct SelectorCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> violation;
};

SelectorCheck selector_check(AtomSet m, const Selector& psi, SelectorKind kind);

// psi'(x, y) = x if psi(g x, g y) = g x, else y if it is g y, else undefined.
Selector selector_compose(const Selector& psi, const std::vector<int>& g);

// Every member of m is strictly below every non-member.
bool initial_segment_check(AtomSet m, const QuasiOrder& q);

}  // namespace wqo
