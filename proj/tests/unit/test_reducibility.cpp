#include "doctest.h"

#include "../support/oracles.hpp"
#include "wqo/deform.hpp"
#include "wqo/error.hpp"
#include "wqo/generators.hpp"
#include "wqo/qorder.hpp"
#include "wqo/reducibility.hpp"
#include "wqo/rng.hpp"

using namespace wqo;

namespace {

Relation naturals(int targets, int atoms, std::vector<RelationPair> pairs) {
  return Relation(QuasiOrder::numbered_labels(targets), QuasiOrder::numbered_labels(atoms), std::move(pairs));
}

std::vector<AtomSet> initial_segments(const QuasiOrder& q) {
  std::vector<AtomSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << q.size()); ++bits)
    if (initial_segment_check(AtomSet(bits), q)) out.push_back(AtomSet(bits));
  return out;
}

}  // namespace

TEST_CASE("code examples") {
  CHECK(e_encode({1, 2}) == 6);
  CHECK(e_decode(6) == std::vector<int>{1, 2});
  CHECK(e_encode({}) == 0);
  CHECK(e_encode({0, 2}) == 5);
  CHECK(e_encode({61}) == (std::uint64_t{1} << 61));
  try {
    (void)e_encode({62});
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("property: codes round trip below 2^16") {
  for (std::uint64_t z = 0; z < (1u << 16); ++z) {
    const auto s = e_decode(z);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(e_encode(s) == z);
  }
}

TEST_CASE("reduction code examples") {
  const auto two = f_R_build(naturals(1, 2, {{0, AtomSet{0}}, {0, AtomSet{1}}}), 1);
  CHECK(two[0] == 6);
  CHECK(f_R_build(naturals(1, 1, {{0, AtomSet{}}}), 1)[0] == 1);
  CHECK(f_R_build(naturals(2, 1, {{1, AtomSet{}}}), 2)[0] == 0);
  CHECK_THROWS_AS(f_R_build(naturals(1, 7, {{0, AtomSet{6}}}), 1), Error);
}

TEST_CASE("positive reduction examples") {
  const int w = 8;
  CHECK(positive_reduce_check({}, {1, 2}, std::vector<std::uint64_t>(w, 0), w).ok);
  std::vector<int> all(w);
  for (int i = 0; i < w; ++i) all[i] = i;
  CHECK(positive_reduce_check(all, {}, std::vector<std::uint64_t>(w, 1), w).ok);
  const auto bad = positive_reduce_check({3}, {}, std::vector<std::uint64_t>(w, 0), w);
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness == 3);
}

TEST_CASE("property: the reduction code agrees with apply") {
  for (int i = 0; i < 200; ++i) {
    Rng rng = Rng::derive(16, "reduction-unit", static_cast<std::uint64_t>(i));
    const int window = rng.range(1, 32);
    const Relation drawn = random_relation(rng, window, 6, 8, 2);
    const Relation r(QuasiOrder::numbered_labels(window), drawn.source(), drawn.pairs());
    const AtomSet b = random_subset(rng, 6);
    const auto f = f_R_build(r, window);
    const std::vector<int> a = apply(r, b).atoms();
    CHECK(positive_reduce_check(a, b.atoms(), f, window).ok);
    for (int x = 0; x < window; ++x) {
      bool member = false;
      for (int y : e_decode(f[static_cast<std::size_t>(x)])) {
        bool inside = true;
        for (int e : e_decode(static_cast<std::uint64_t>(y))) inside = inside && b.contains(e);
        member = member || inside;
      }
      CHECK(member == apply(r, b).contains(x));
    }
  }
}

TEST_CASE("selector examples") {
  const Selector psi = selector_from_order(QuasiOrder::chain(8));
  CHECK(psi.at(2, 5) == 2);
  CHECK(psi.at(5, 2) == 2);
  CHECK_FALSE(psi.at(3, 3));
  CHECK_FALSE(selector_from_order(QuasiOrder::antichain(2)).at(0, 1));
  const Selector tie = selector_from_order(QuasiOrder::from_predicate({"a", "b"}, [](int, int) { return true; }));
  CHECK(tie.at(0, 1) == 0);
  CHECK(tie.at(1, 0) == 1);
  CHECK(tie.ties().size() == 2);
  Selector s(3);
  CHECK_THROWS_AS(s.set(0, 1, 2), Error);
}

TEST_CASE("selector check examples") {
  const Selector psi = selector_from_order(QuasiOrder::chain(4));
  CHECK(selector_check(AtomSet{}, psi, SelectorKind::Weak).ok);
  CHECK(selector_check(AtomSet{0, 1}, psi, SelectorKind::Weak).ok);
  const auto wrong = selector_check(AtomSet{2}, psi, SelectorKind::Weak);
  CHECK_FALSE(wrong.ok);
  CHECK_FALSE(selector_check(AtomSet{0}, psi, SelectorKind::SemiRe).ok);
  CHECK(selector_check(AtomSet{0}, selector_complete_diagonal(psi), SelectorKind::SemiRe).ok);
  CHECK_FALSE(selector_check(AtomSet{0}, selector_from_order(QuasiOrder::antichain(2)), SelectorKind::Semirec).ok);
}

TEST_CASE("property: initial segments admit weak selectors") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : all_quasi_orders(n)) {
      const Selector psi = selector_from_order(q);
      for (AtomSet m : initial_segments(q)) CHECK(selector_check(m, psi, SelectorKind::Weak).ok);
    }
}

TEST_CASE("property: linearly ordered initial segments admit semi-r.e. selectors") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : all_quasi_orders(n)) {
      const Selector psi = selector_complete_diagonal(selector_from_order(q));
      for (AtomSet m : initial_segments(q)) {
        bool linear = true;
        m.for_each([&](int x) { m.for_each([&](int y) { linear = linear && (x == y || q.lt(x, y) || q.lt(y, x)); }); });
        if (linear) CHECK(selector_check(m, psi, SelectorKind::SemiRe).ok);
      }
    }
}

TEST_CASE("composition examples") {
  const Selector psi = selector_from_order(QuasiOrder::chain(4));
  CHECK(selector_compose(psi, {0, 1, 2, 3}) == psi);
  const Selector c = selector_compose(psi, {3, 1, 1, 0});
  CHECK(c.at(0, 1) == 1);
  CHECK_FALSE(c.at(1, 2));
  CHECK(selector_compose(selector_complete_diagonal(psi), {3, 1, 1, 0}).at(1, 2) == 1);
  CHECK_THROWS_AS(selector_compose(psi, {0, 4, 1, 2}), Error);
}

TEST_CASE("property: selectors pull back along maps") {
  // Every map g on a 4-element window, every initial segment M of every
  // 4-element order, A = g^-1(M).
  for (const auto& q : all_quasi_orders(4)) {
    const Selector weak = selector_from_order(q);
    const Selector semi = selector_complete_diagonal(weak);
    const auto segments = initial_segments(q);
    for (int code = 0; code < 256; ++code) {
      const std::vector<int> g{code & 3, (code >> 2) & 3, (code >> 4) & 3, (code >> 6) & 3};
      const Selector cw = selector_compose(weak, g), cs = selector_compose(semi, g);
      for (AtomSet m : segments) {
        AtomSet a;
        for (int x = 0; x < 4; ++x)
          if (m.contains(g[x])) a.insert(x);
        CHECK(selector_check(a, cw, SelectorKind::Weak).ok);
        if (selector_check(m, semi, SelectorKind::SemiRe).ok) CHECK(selector_check(a, cs, SelectorKind::SemiRe).ok);
      }
    }
  }
}

TEST_CASE("initial segment examples") {
  const QuasiOrder w = QuasiOrder::chain(5);
  CHECK(initial_segment_check(AtomSet{0, 1}, w));
  CHECK_FALSE(initial_segment_check(AtomSet{1}, w));
  CHECK(initial_segment_check(AtomSet{}, w));
  CHECK(initial_segment_check(AtomSet::prefix(5), w));
}
