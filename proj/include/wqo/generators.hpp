#pragma once

#include "wqo/ordinal.hpp"
#include "wqo/relation.hpp"
#include "wqo/rng.hpp"
#include "wqo/setsys.hpp"

namespace wqo {

// Random subset of [0, atoms); each atom kept with probability 1/2.
AtomSet random_subset(Rng& rng, int atoms);

// System over [0, atoms) with 1..max_members random nonempty members.
SetSystem random_system(Rng& rng, int atoms, int max_members);

// Relation from target alphabet x0.. onto source labels "0".."atoms-1",
// 1..max_pairs pairs with witness sets of at most max_v atoms.
Relation random_relation(Rng& rng, int targets, int atoms, int max_pairs, int max_v);

// CNF ordinal with at most `terms` terms per level, exponents nested up to
// `depth`, coefficients in [1, max_coeff].
Ordinal random_ordinal(Rng& rng, int depth, int terms, int max_coeff);

}  // namespace wqo
