#include "wqo/generators.hpp"

#include <string>

namespace wqo {

AtomSet random_subset(Rng& rng, int atoms) {
  AtomSet s;
  for (int a = 0; a < atoms; ++a)
    if (rng.coin()) s.insert(a);
  return s;
}

SetSystem random_system(Rng& rng, int atoms, int max_members) {
  const int count = rng.range(1, max_members);
  std::vector<AtomSet> members;
  for (int i = 0; i < count; ++i) {
    AtomSet m = random_subset(rng, atoms);
    if (m.empty()) m.insert(rng.range(0, atoms - 1));
    members.push_back(m);
  }
  return SetSystem::over_naturals(atoms, members);
}

Relation random_relation(Rng& rng, int targets, int atoms, int max_pairs, int max_v) {
  std::vector<std::string> target, source;
  for (int i = 0; i < targets; ++i) target.push_back("x" + std::to_string(i));
  for (int i = 0; i < atoms; ++i) source.push_back(std::to_string(i));
  const int count = rng.range(1, max_pairs);
  std::vector<RelationPair> pairs;
  for (int i = 0; i < count; ++i) {
    RelationPair p{rng.range(0, targets - 1), {}};
    const int size = rng.range(0, max_v);
    for (int k = 0; k < size; ++k) p.v.insert(rng.range(0, atoms - 1));
    pairs.push_back(p);
  }
  return Relation(target, source, pairs);
}

Ordinal random_ordinal(Rng& rng, int depth, int terms, int max_coeff) {
  if (depth <= 0) return Ordinal::natural(static_cast<std::uint64_t>(rng.range(0, max_coeff)));
  std::vector<Ordinal::Term> ts;
  const int count = rng.range(0, terms);
  for (int i = 0; i < count; ++i)
    ts.push_back({random_ordinal(rng, depth - 1, terms, max_coeff), static_cast<std::uint64_t>(rng.range(1, max_coeff))});
  return Ordinal::from_terms(ts);
}

}  // namespace wqo
