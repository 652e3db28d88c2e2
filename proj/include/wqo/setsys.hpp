#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wqo/atom_set.hpp"
#include "wqo/qorder.hpp"

namespace wqo {

// A finite family of subsets of a labelled universe (at most 64 atoms).
// Members are deduplicated and keep their first-occurrence order, which is
// the canonical order used by every search over the system.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(std::vector<std::string> universe, const std::vector<AtomSet>& members,
            std::optional<int> truncation = std::nullopt);
  // Universe {"0", ..., "n-1"}.
  static SetSystem over_naturals(int n, const std::vector<AtomSet>& members,
                                 std::optional<int> truncation = std::nullopt);

  const std::vector<std::string>& universe() const { return universe_; }
  int universe_size() const { return static_cast<int>(universe_.size()); }
  const std::vector<AtomSet>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  std::optional<int> truncation() const { return truncation_; }

  // Union of all members.
  AtomSet support() const;
  bool contains(AtomSet m) const;
  std::optional<int> index_of(AtomSet m) const;

  // {A & [0, n) : A in L} without the empty set; universe cut to n atoms.
  SetSystem restrict_prefix(int n) const;
  // Nonempty members, sorted; the comparison key for truncation coherence.
  std::vector<AtomSet> nonempty_sorted() const;
  bool same_family(const SetSystem& other) const;

  std::string render_member(AtomSet m) const;

 private:
  std::vector<std::string> universe_;
  std::vector<AtomSet> members_;
  std::optional<int> truncation_;
};

// All upper-closed subsets of q, including the empty set and the universe.
// |universe| <= 16.
SetSystem ss(const QuasiOrder& q);

// x <= y on the union of L iff every member containing x contains y.
QuasiOrder qo_of(const SetSystem& l);

bool roundtrip_check(const QuasiOrder& q);

// Unions of nonempty finite subfamilies. Original members come first, new
// unions follow in bitmask order. |universe| <= 20.
SetSystem finclass(const SetSystem& l);
// Closure under arbitrary unions; on a finite universe this is finclass.
SetSystem hat(const SetSystem& l);
bool is_union_closed(const SetSystem& l);

SetSystem memberwise_union(const SetSystem& a, const SetSystem& b);

// {up(x) : x in universe}, deduplicated.
SetSystem principal_filters(const QuasiOrder& q);
// principal_filters(q) ordered by reverse inclusion.
QuasiOrder pf_order(const QuasiOrder& q);

// Number of members containing each universe atom.
std::vector<int> ft_counts(const SetSystem& l);

struct FtProfile {
  std::vector<int> truncations;
  std::vector<std::vector<int>> counts;  // counts[k][x] at truncations[k]
  std::vector<int> growing_atoms;        // atoms whose count rose within the range

  bool bounded_in_range() const { return growing_atoms.empty(); }
};

// Atom i of build(N) must be atom i of build(N+1) (prefix-stable universes).
FtProfile ft_profile(const std::function<SetSystem(int)>& build, int n1, int n2);

struct Antichain {
  int size = 0;
  std::vector<int> members;  // indices into the system
};

// Largest family of pairwise incomparable members under inclusion (exact,
// branch and bound; at most 64 members).
Antichain max_antichain(const SetSystem& l);

struct Fact1Report {
  bool ss_is_finclass_of_filters = false;  // compared with the empty set removed
  bool qo_of_filters_is_q = false;
  bool empty_set_normalized = false;       // true when the comparison had to drop {}
  bool ok() const { return ss_is_finclass_of_filters && qo_of_filters_is_q; }
};

Fact1Report fact1_checks(const QuasiOrder& q);

}  // namespace wqo
