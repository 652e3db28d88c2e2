#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wqo/ordinal.hpp"
#include "wqo/qorder.hpp"
#include "wqo/setsys.hpp"

namespace wqo {

// (t_i, A_{i+1}): datum t_i presented, learner answers with member A_{i+1}.
struct LearningPair {
  int t = 0;
  AtomSet member;
  bool operator==(const LearningPair&) const = default;
};
using LearningSequence = std::vector<LearningPair>;

struct BadSequenceCheck {
  bool ok = true;
  std::optional<int> first_violation;  // index of the offending pair
  std::string reason;
};

// Checks {t_0..t_i} <= A_{i+1} and t_{i+1} not in A_{i+1}. Throws
// InvalidInput if some A is not a member of L.
BadSequenceCheck is_bad_sequence(const SetSystem& l, const LearningSequence& s);

// Rank of the tree of bad learning sequences. Finite systems always have a
// finite rank; `infinite` is never set by dim() and exists for reports on
// presented families.
struct GameTreeRank {
  Ordinal value;
  bool infinite = false;
  LearningSequence witness;  // a bad sequence of maximal length
  long long states_explored = 0;

  int finite() const { return static_cast<int>(value.finite_value()); }
};

inline constexpr int kDimAtomCap = 12;

// Exact dim by memoized search over (presented atoms, last member).
GameTreeRank dim(const SetSystem& l, int atom_cap = kDimAtomCap);

struct DimProfile {
  std::vector<std::pair<int, int>> points;  // (N, dim)
  bool coherent = false;  // build(N) is the restriction of build(N+1) throughout
  bool nondecreasing = false;
  bool strictly_increasing = false;
  bool constant = false;
  // Coherent truncations make dim monotone; a dip under coherence is a bug.
  bool consistent() const { return !coherent || nondecreasing; }
};

DimProfile dim_profile(const std::function<SetSystem(int)>& build, int n1, int n2,
                       int atom_cap = kDimAtomCap);

struct DimOtp {
  int dim = 0;
  int otp = 0;
  bool ok() const { return dim == otp; }
};

// dim(ss(q)) against the number of equivalence classes (<= 5 classes).
DimOtp dim_otp_check(const QuasiOrder& q);

// Candidate linearizations: inclusion chains inside hat(L) that contain the
// union of L (hence cover every member). Reported, never asserted.
struct LinearizationReport {
  long long candidates = 0;
  int max_candidate_dim = 0;
  std::vector<AtomSet> best_chain;
  int system_dim = 0;
};

LinearizationReport linearization_probe(const SetSystem& l);

struct RamseyValue {
  int value = 0;
  // False for literature constants that are not re-derived here.
  bool verified = false;
};

// Two-colour Ramsey numbers with max(n, m) <= 4. Throws Unsupported otherwise.
RamseyValue ramsey(int n, int m);

struct Ramsey33Search {
  long long k6_colorings = 0;
  long long k6_with_mono_triangle = 0;
  std::optional<std::uint32_t> k5_triangle_free;  // edge colour bitmask
  bool establishes_six() const {
    return k6_colorings == k6_with_mono_triangle && k5_triangle_free.has_value();
  }
};

// Exhaustive 2-colourings of K6 and K5.
Ramsey33Search ramsey33_exhaustive();

struct RamseyUnionReport {
  int dim_a = 0, dim_b = 0, dim_union = 0;
  std::optional<RamseyValue> bound;  // empty: Ramsey value unknown
  bool holds() const { return bound && dim_union + 1 < bound->value; }
};

RamseyUnionReport ramsey_union_check(const SetSystem& a, const SetSystem& b);

struct RamseyIntersectionReport {
  int otp_a = 0, otp_b = 0, otp_meet = 0;
  std::optional<RamseyValue> bound;
  bool holds() const { return bound && otp_meet < bound->value; }
};

RamseyIntersectionReport ramsey_intersection_check(const QuasiOrder& a, const QuasiOrder& b);

}  // namespace wqo
