#pragma once

#include <string>
#include <vector>

#include "wqo/atom_set.hpp"

namespace wqo {

// One witness pair R(x, v): atom x of the target alphabet is produced by any
// argument that contains the finite set v of source atoms.
struct RelationPair {
  int x = 0;
  AtomSet v;
  bool operator==(const RelationPair&) const = default;
};

// Finite relation between a target alphabet and finite subsets of a source
// alphabet. Pairs are deduplicated and kept in insertion order.
class Relation {
 public:
  Relation() = default;
  Relation(std::vector<std::string> target, std::vector<std::string> source,
           std::vector<RelationPair> pairs);

  const std::vector<std::string>& target() const { return target_; }
  const std::vector<std::string>& source() const { return source_; }
  const std::vector<RelationPair>& pairs() const { return pairs_; }

  // Same relation with witness sets re-indexed onto `labels`. Throws
  // InvalidInput if a witness atom is missing there.
  Relation over_source(const std::vector<std::string>& labels) const;

  // Drops pairs whose witness set is not inside `support`.
  Relation restricted_to(AtomSet support) const;

 private:
  std::vector<std::string> target_;
  std::vector<std::string> source_;
  std::vector<RelationPair> pairs_;
};

}  // namespace wqo
