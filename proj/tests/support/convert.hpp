#pragma once

#include "oracles.hpp"
#include "wqo/ordinal.hpp"
#include "wqo/qorder.hpp"
#include "wqo/setsys.hpp"

namespace convert {

inline oracle::Order order(const wqo::QuasiOrder& q) {
  return {q.size(), [q](int x, int y) { return q.le(x, y); }};
}

inline oracle::Set set(wqo::AtomSet a) {
  oracle::Set s;
  for (int x : a.atoms()) s.insert(x);
  return s;
}

inline wqo::AtomSet atoms(const oracle::Set& s) {
  wqo::AtomSet a;
  for (int x : s) a.insert(x);
  return a;
}

inline oracle::Family family(const wqo::SetSystem& l) {
  oracle::Family f;
  for (const auto& m : l.members()) f.push_back(set(m));
  return f;
}

inline wqo::Ordinal ordinal(const oracle::SmallOrdinal& a) {
  std::vector<wqo::Ordinal::Term> terms;
  for (int k = a.degree(); k >= 0; --k)
    if (a.c[k] > 0) terms.push_back({wqo::Ordinal::natural(static_cast<std::uint64_t>(k)), a.c[k]});
  return wqo::Ordinal::from_terms(terms);
}

}  // namespace convert
