#pragma once

// Naive reference implementations written straight from the definitions.
// They share no code with the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Set = std::set<int>;
using Family = std::vector<Set>;

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Set unite(const Set& a, const Set& b) {
  Set u = a;
  u.insert(b.begin(), b.end());
  return u;
}

// Ordinals below w^w as coefficient vectors: c[k] is the coefficient of w^k.
struct SmallOrdinal {
  std::vector<std::uint64_t> c;

  static SmallOrdinal from(std::vector<std::uint64_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return {v};
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  bool operator==(const SmallOrdinal& o) const { return c == o.c; }
};

inline int compare(const SmallOrdinal& a, const SmallOrdinal& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k)
    if (a.c[k] != b.c[k]) return a.c[k] < b.c[k] ? -1 : 1;
  return 0;
}

// a + 1 repeated: successor step.
inline SmallOrdinal succ(SmallOrdinal a) {
  if (a.c.empty()) a.c.push_back(0);
  a.c[0] += 1;
  return a;
}

// a + w^k by the limit definition: a + w^k = sup_n (a + w^(k-1) * n) for
// k > 0. The terms of a below w^k are swallowed by the supremum, so the
// sequence stabilizes to "keep a's terms of degree >= k, add one w^k".
inline SmallOrdinal add_power(const SmallOrdinal& a, int k) {
  if (k == 0) return succ(a);
  std::vector<std::uint64_t> v(std::max<std::size_t>(a.c.size(), k + 1), 0);
  for (int i = k; i <= a.degree(); ++i) v[i] = a.c[i];
  v[k] += 1;
  return SmallOrdinal::from(v);
}

// a + b, building b one w^k at a time from its highest term down.
inline SmallOrdinal add(SmallOrdinal a, const SmallOrdinal& b) {
  for (int k = b.degree(); k >= 0; --k)
    for (std::uint64_t n = 0; n < b.c[k]; ++n) a = add_power(a, k);
  return a;
}

// a * b by recursion on b: a * 0 = 0, a * (b + 1) = a * b + a and
// a * w^k = w^(deg a + k) for a > 0 and k > 0.
inline SmallOrdinal mul(const SmallOrdinal& a, const SmallOrdinal& b) {
  SmallOrdinal out;
  if (a.zero()) return out;
  for (int k = b.degree(); k >= 0; --k)
    for (std::uint64_t n = 0; n < b.c[k]; ++n) {
      if (k == 0) {
        out = add(out, a);
      } else {
        std::vector<std::uint64_t> v(a.degree() + k + 1, 0);
        v.back() = 1;
        out = add(out, SmallOrdinal::from(v));
      }
    }
  return out;
}

// Quasi-order given as a predicate on [0, n).
struct Order {
  int n = 0;
  std::function<bool(int, int)> le;
};

inline bool upper_closed(const Order& q, const Set& u) {
  for (int x : u)
    for (int y = 0; y < q.n; ++y)
      if (q.le(x, y) && !u.count(y)) return false;
  return true;
}

inline Family all_subsets(int n) {
  Family out;
  for (int bits = 0; bits < (1 << n); ++bits) {
    Set s;
    for (int i = 0; i < n; ++i)
      if (bits >> i & 1) s.insert(i);
    out.push_back(s);
  }
  return out;
}

inline Family upper_sets(const Order& q) {
  Family out;
  for (const auto& s : all_subsets(q.n))
    if (upper_closed(q, s)) out.push_back(s);
  return out;
}

inline int classes(const Order& q) {
  int count = 0;
  for (int x = 0; x < q.n; ++x) {
    bool first = true;
    for (int y = 0; y < x; ++y) first = first && !(q.le(x, y) && q.le(y, x));
    count += first;
  }
  return count;
}

// x <= y iff every member containing x contains y.
inline bool qo_le(const Family& l, int x, int y) {
  for (const auto& m : l)
    if (m.count(x) && !m.count(y)) return false;
  return true;
}

inline Family normalized(Family f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

// Unions of nonempty subfamilies, by enumerating the subfamilies.
inline Family finite_unions(const Family& l) {
  Family out;
  const int m = static_cast<int>(l.size());
  for (int bits = 1; bits < (1 << m); ++bits) {
    Set u;
    for (int i = 0; i < m; ++i)
      if (bits >> i & 1) u = unite(u, l[i]);
    out.push_back(u);
  }
  return normalized(out);
}

// Longest bad learning sequence by plain depth-first search.
inline int longest_bad_learning(const Family& l, int atoms) {
  std::function<int(const Set&, const Set*)> go = [&](const Set& shown, const Set* last) {
    int best = 0;
    for (int t = 0; t < atoms; ++t) {
      if (shown.count(t) || (last && last->count(t))) continue;
      Set next = shown;
      next.insert(t);
      for (const auto& a : l)
        if (subset(next, a)) best = std::max(best, 1 + go(next, &a));
    }
    return best;
  };
  return go({}, nullptr);
}

inline bool antichain(const Family& l, const std::vector<int>& pick) {
  for (int i : pick)
    for (int j : pick)
      if (i != j && subset(l[i], l[j])) return false;
  return true;
}

inline int max_antichain(const Family& l) {
  const int m = static_cast<int>(l.size());
  int best = 0;
  for (int bits = 0; bits < (1 << m); ++bits) {
    std::vector<int> pick;
    for (int i = 0; i < m; ++i)
      if (bits >> i & 1) pick.push_back(i);
    if (static_cast<int>(pick.size()) > best && antichain(l, pick)) best = static_cast<int>(pick.size());
  }
  return best;
}

// O_R(M) for R given as (x, v) pairs.
inline Set apply(const std::vector<std::pair<int, Set>>& r, const Set& m) {
  Set out;
  for (const auto& [x, v] : r)
    if (subset(v, m)) out.insert(x);
  return out;
}

// Every element of v2 dominates some element of v.
inline bool forall_exists(const Order& q, const Set& v, const Set& v2) {
  for (int b : v2) {
    bool dominated = false;
    for (int a : v) dominated = dominated || q.le(a, b);
    if (!dominated) return false;
  }
  return true;
}

// s <| t on sorted sequences, straight from the definition.
inline bool tri(const std::vector<int>& s, const std::vector<int>& t) {
  std::vector<int> u = s;
  for (int x : t)
    if (std::find(u.begin(), u.end(), x) == u.end()) u.push_back(x);
  std::sort(u.begin(), u.end());
  if (u.empty() || s.size() > u.size() || t.size() + 1 > u.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != u[i]) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != u[i + 1]) return false;
  return true;
}

// Rado's order on pairs (i, j), i < j.
inline bool rado_le(int i, int j, int k, int l) { return (i == k && j <= l) || j < k; }

// Whether some 2-colouring of K_n has no monochromatic triangle.
inline bool triangle_free_colouring_exists(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  const int e = static_cast<int>(edges.size());
  auto colour = [&](std::uint32_t bits, int a, int b) {
    for (int i = 0; i < e; ++i)
      if (edges[i] == std::make_pair(std::min(a, b), std::max(a, b))) return (bits >> i) & 1;
    return 0u;
  };
  for (std::uint32_t bits = 0; bits < (1u << e); ++bits) {
    bool mono = false;
    for (int a = 0; a < n && !mono; ++a)
      for (int b = a + 1; b < n && !mono; ++b)
        for (int c = b + 1; c < n && !mono; ++c)
          mono = colour(bits, a, b) == colour(bits, b, c) && colour(bits, b, c) == colour(bits, a, c);
    if (!mono) return true;
  }
  return false;
}

}  // namespace oracle
