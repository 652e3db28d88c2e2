#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wqo/relation.hpp"
#include "wqo/setsys.hpp"

namespace wqo {

// O_R(M) = { x : R(x, v) for some v inside M }. `m` is over r.source().
AtomSet apply(const Relation& r, AtomSet m);

// Explicit deformation table: rows[bits] is the image of the source subset
// whose bitmask is `bits`. Alphabet of at most 5 atoms.
struct DeformTable {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<AtomSet> rows;
};

DeformTable table_of(const Relation& r);

struct TableRelation {
  // Saturated: every (x, v) with x in rows[v].
  Relation relation;
  bool monotone = true;
  // (A, B) with A inside B but rows[A] not inside rows[B].
  std::optional<std::pair<AtomSet, AtomSet>> counterexample;
};

TableRelation relation_from_table(const DeformTable& table);

// Drops (x, v) whenever some (x, w) with w strictly inside v is present.
Relation minimized(const Relation& r);

// Images of all members; witness atoms are matched to the system's universe
// by label and the image lives over r.target().
SetSystem image(const Relation& r, const SetSystem& m);

struct Theorem1Result {
  bool holds = true;
  // Image member that is not upper-closed, with x in it, x [= x2, x2 not in it.
  std::optional<AtomSet> member;
  int x = -1, x2 = -1;
};

// Every image member is upper-closed for Q_R(qo(M)), i.e. lies in its ss.
Theorem1Result theorem1_check(const Relation& r, const SetSystem& m);

struct FessTransfer {
  int source_dim = 0;
  int image_dim = 0;
  std::string caveat;
};

FessTransfer fess_transfer_check(const Relation& r, const SetSystem& m);

struct NiaTransfer {
  Antichain source;
  Antichain image;
  bool holds() const { return image.size <= source.size; }
};

NiaTransfer nia_transfer_check(const Relation& r, const SetSystem& m);

}  // namespace wqo
