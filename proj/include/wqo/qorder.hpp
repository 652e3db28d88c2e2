#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wqo/atom_set.hpp"
#include "wqo/ordinal.hpp"
#include "wqo/relation.hpp"

namespace wqo {

// A finite binary relation on labelled atoms, intended to be a quasi-order.
// The relation is stored as given; check_quasi_order() validates it.
class QuasiOrder {
 public:
  QuasiOrder() = default;
  QuasiOrder(std::vector<std::string> labels, std::vector<std::uint8_t> matrix);

  static QuasiOrder from_pairs(std::vector<std::string> labels,
                               const std::vector<std::pair<int, int>>& pairs);
  static QuasiOrder from_predicate(std::vector<std::string> labels,
                                   const std::function<bool(int, int)>& le);
  static QuasiOrder chain(int n);
  static QuasiOrder antichain(int n);
  static std::vector<std::string> numbered_labels(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  bool le(int x, int y) const { return matrix_[idx(x, y)] != 0; }
  // Strict part: x <= y and not y <= x.
  bool lt(int x, int y) const { return le(x, y) && !le(y, x); }
  bool equiv(int x, int y) const { return le(x, y) && le(y, x); }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

  // Upward closure {y : x <= y}; needs size() <= 64.
  AtomSet up(int x) const;
  // Induced suborder on the listed atoms, in the listed order.
  QuasiOrder restrict(const std::vector<int>& atoms) const;
  QuasiOrder reflexive_transitive_closure() const;
  // Relation intersection; both sides must share the label list.
  QuasiOrder intersect(const QuasiOrder& other) const;

  bool operator==(const QuasiOrder&) const = default;

 private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * labels_.size() + static_cast<std::size_t>(y);
  }

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> matrix_;
};

struct QoViolation {
  enum class Kind { NotReflexive, NotTransitive } kind;
  // NotReflexive: x. NotTransitive: x <= y, y <= z, not x <= z.
  int x = 0, y = 0, z = 0;
};

struct QoCheck {
  bool ok = true;
  std::optional<QoViolation> witness;
};

QoCheck check_quasi_order(const QuasiOrder& q);

// Every labelled quasi-order on n atoms, in a fixed enumeration order.
// n <= 4 (29 orders for n = 3, 355 for n = 4).
std::vector<QuasiOrder> all_quasi_orders(int n);

// v <=AE v2  iff  every element of v2 dominates some element of v.
bool powerset_le(const QuasiOrder& q, AtomSet v, AtomSet v2);

// x [= x'  iff  for every R(x, v) there is R(x', v') with v <=AE v'.
// Domain is the relation's target alphabet; witness atoms are looked up in
// `base` by label.
QuasiOrder build_QR(const Relation& r, const QuasiOrder& base);

// Table F on 2-subsets {i < j} of [0, window), values are atoms of a order.
class PairTable {
 public:
  PairTable(int window, std::vector<int> values);
  static PairTable from_function(int window, const std::function<int(int, int)>& f);

  int window() const { return window_; }
  int at(int i, int j) const;

 private:
  int window_;
  std::vector<int> values_;
};

struct RadoReport {
  int window = 0;
  // F({i,j}) < F({i,j+1}) for all i < j < window - 1.
  bool premise = false;
  std::optional<std::array<int, 2>> premise_failure;  // (i, j)
  // Triples i < j < k with F({i,j}) < F({j,k}).
  std::vector<std::array<int, 3>> strict_triples;

  bool violation() const { return premise && strict_triples.empty(); }
};

RadoReport rado_condition_check(const PairTable& f, const QuasiOrder& q);

// A finitely presented quasi-order, materialized by truncation.
class PresentedQO {
 public:
  enum class Kind { Omega, EqualityOmega, Rado, Product, DisjointSum, Powerset, Fact15, FiniteExplicit };

  static PresentedQO omega(int truncation);
  static PresentedQO equality_omega(int truncation);
  // Elements (i, j), i < j; (i,j) <= (k,l) iff (i = k and j <= l) or j < k.
  static PresentedQO rado(int truncation);
  static PresentedQO product(PresentedQO a, PresentedQO b, int truncation);
  static PresentedQO disjoint_sum(PresentedQO a, PresentedQO b, int truncation);
  // Subsets of the inner truncation with at most `max_subset` elements,
  // ordered by <=AE.
  static PresentedQO powerset(PresentedQO inner, int max_subset, int truncation);
  // b below each of a0, a1, ...
  static PresentedQO fact15(int truncation);
  static PresentedQO finite(QuasiOrder q);

  Kind kind() const { return kind_; }
  int truncation() const { return truncation_; }
  PresentedQO with_truncation(int n) const;
  std::string name() const;
  // Whether the family is known to be a well quasi-order.
  std::optional<bool> known_wqo() const;

  QuasiOrder truncate() const { return truncate_at(truncation_); }
  QuasiOrder truncate_at(int n) const;
  // For each atom of truncate_at(n): the least 1 <= m <= n whose truncation
  // already contains it (matched by label).
  std::vector<int> births(int n) const;

 private:
  PresentedQO(Kind kind, int truncation) : kind_(kind), truncation_(truncation) {}

  Kind kind_;
  int truncation_;
  int max_subset_ = 2;
  std::vector<PresentedQO> parts_;
  std::shared_ptr<const QuasiOrder> finite_;
};

struct BadSequenceResult {
  std::vector<int> longest;  // atom indices into the searched order
  std::vector<std::string> labels;
  long long nodes = 0;

  // None when the longest bad sequence is shorter than 2.
  std::optional<std::vector<std::string>> witness() const {
    if (longest.size() < 2) return std::nullopt;
    return labels;
  }
};

// Longest x1..xd (d <= depth) with xi not<= xj for all i < j, found by
// depth-first search in canonical atom order.
BadSequenceResult longest_bad_sequence(const QuasiOrder& q, int depth);

// Growth-bounded probe on a presented order: with m the first nonempty
// truncation, the k-th element (0-based) must already exist in truncation
// m + k, and all elements lie in truncation().
// Finite data cannot see "x is bad because it starts high"; this bound is
// what separates (w, <=) from (w, =) at desk scale.
BadSequenceResult bad_sequence_search(const PresentedQO& q, int depth);

// Longest pairwise incomparable x1..xd (d <= depth), atoms in increasing
// index order. A truncation is an induced suborder, so no growth bound is
// needed: an antichain found here is an antichain of the whole structure.
BadSequenceResult longest_antichain(const QuasiOrder& q, int depth);

struct Linearizations {
  std::vector<std::vector<int>> classes;
  // Each entry lists class indices from bottom to top.
  std::vector<std::vector<int>> extensions;
};

// Equivalence classes and every linear extension of the quotient (<= 8 classes).
Linearizations classes_and_linearizations(const QuasiOrder& q);
int count_classes(const QuasiOrder& q);

struct OtpResult {
  std::optional<Ordinal> value;
  std::vector<std::pair<int, int>> lower_bounds;  // (truncation, #classes)
  std::string note;
};

// Maximal order type. Equivalence classes are collapsed before linearizing.
OtpResult otp(const QuasiOrder& q);
OtpResult otp(const PresentedQO& q);

}  // namespace wqo
