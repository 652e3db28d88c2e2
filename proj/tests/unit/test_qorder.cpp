#include "doctest.h"

#include "../support/convert.hpp"
#include "wqo/error.hpp"
#include "wqo/generators.hpp"
#include "wqo/qorder.hpp"
#include "wqo/rng.hpp"

using namespace wqo;

namespace {

QuasiOrder labelled(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& pairs) {
  return QuasiOrder::from_pairs(std::move(labels), pairs).reflexive_transitive_closure();
}

int rado_index(const QuasiOrder& q, int i, int j) {
  return *q.index_of("(" + std::to_string(i) + "," + std::to_string(j) + ")");
}

}  // namespace

TEST_CASE("quasi-order validation") {
  CHECK(check_quasi_order(QuasiOrder::antichain(3)).ok);
  const QuasiOrder broken = QuasiOrder::from_pairs({"a", "b"}, {{1, 1}});
  const auto c = check_quasi_order(broken);
  CHECK_FALSE(c.ok);
  REQUIRE(c.witness);
  CHECK(c.witness->kind == QoViolation::Kind::NotReflexive);
  CHECK(c.witness->x == 0);
  const QuasiOrder intransitive = QuasiOrder::from_pairs({"a", "b", "c"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
  const auto t = check_quasi_order(intransitive);
  CHECK_FALSE(t.ok);
  CHECK(t.witness->kind == QoViolation::Kind::NotTransitive);
  CHECK(check_quasi_order(PresentedQO::rado(5).truncate()).ok);
}

TEST_CASE("rado truncation agrees with the pair oracle") {
  const QuasiOrder q = PresentedQO::rado(6).truncate();
  CHECK(q.size() == 15);
  for (int j = 1; j < 6; ++j)
    for (int i = 0; i < j; ++i)
      for (int l = 1; l < 6; ++l)
        for (int k = 0; k < l; ++k)
          CHECK(q.le(rado_index(q, i, j), rado_index(q, k, l)) == oracle::rado_le(i, j, k, l));
}

TEST_CASE("all labelled quasi-orders") {
  CHECK(all_quasi_orders(3).size() == 29);
  CHECK(all_quasi_orders(4).size() == 355);
  for (const auto& q : all_quasi_orders(3)) CHECK(check_quasi_order(q).ok);
}

TEST_CASE("powerset order examples") {
  const QuasiOrder anti = QuasiOrder::antichain(2);
  CHECK(powerset_le(anti, AtomSet{0, 1}, AtomSet{0}));
  CHECK_FALSE(powerset_le(anti, AtomSet{0}, AtomSet{0, 1}));
  CHECK(powerset_le(anti, AtomSet{0}, AtomSet{}));
  CHECK(powerset_le(anti, AtomSet{}, AtomSet{}));
}

TEST_CASE("property: powerset order is a quasi-order that contains reverse inclusion") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& q : all_quasi_orders(n)) {
      const auto o = convert::order(q);
      const int subsets = 1 << n;
      for (int a = 0; a < subsets; ++a) {
        const AtomSet va(static_cast<std::uint64_t>(a));
        CHECK(powerset_le(q, va, va));
        for (int b = 0; b < subsets; ++b) {
          const AtomSet vb(static_cast<std::uint64_t>(b));
          const bool le = powerset_le(q, va, vb);
          CHECK(le == oracle::forall_exists(o, convert::set(va), convert::set(vb)));
          if (vb.subset_of(va)) CHECK(le);
          if (!le) continue;
          for (int c = 0; c < subsets; ++c) {
            const AtomSet vc(static_cast<std::uint64_t>(c));
            if (powerset_le(q, vb, vc)) CHECK(powerset_le(q, va, vc));
          }
        }
      }
    }
}

TEST_CASE("Q_R construction examples") {
  const QuasiOrder base = labelled({"p", "q"}, {{0, 1}});
  const Relation r({"x", "y"}, {"p", "q"}, {{0, AtomSet{0}}, {1, AtomSet{1}}});
  const QuasiOrder qr = build_QR(r, base);
  CHECK(qr.le(0, 1));
  CHECK_FALSE(qr.le(1, 0));

  const Relation partial({"x", "y", "z"}, {"p", "q"}, {{1, AtomSet{0}}, {2, AtomSet{1}}});
  const QuasiOrder vac = build_QR(partial, base);
  for (int x = 0; x < 3; ++x) CHECK(vac.le(0, x));

  const Relation bottom({"x", "y"}, {"p", "q"}, {{0, AtomSet{}}, {1, AtomSet{0, 1}}});
  // The empty witness set is the top of the powerset order.
  CHECK_FALSE(build_QR(bottom, base).le(0, 1));
  CHECK(build_QR(bottom, base).le(1, 0));
  CHECK(powerset_le(base, AtomSet{0, 1}, AtomSet{}));
  CHECK_FALSE(powerset_le(base, AtomSet{}, AtomSet{0}));
}

TEST_CASE("property: Q_R is always a quasi-order") {
  for (int i = 0; i < 500; ++i) {
    Rng rng = Rng::derive(5, "qr", static_cast<std::uint64_t>(i));
    const int atoms = rng.range(1, 4);
    const auto orders = all_quasi_orders(atoms);
    const QuasiOrder& base = orders[rng.below(orders.size())];
    const Relation r = random_relation(rng, 4, atoms, 6, 2);
    CHECK(check_quasi_order(build_QR(r, base)).ok);
  }
}

TEST_CASE("Rado condition examples") {
  const QuasiOrder rado = PresentedQO::rado(8).truncate();
  const PairTable f = PairTable::from_function(8, [&](int i, int j) { return rado_index(rado, i, j); });
  const RadoReport r = rado_condition_check(f, rado);
  CHECK(r.premise);
  CHECK(r.strict_triples.empty());
  CHECK(r.violation());

  const QuasiOrder omega = QuasiOrder::chain(6);
  const RadoReport o = rado_condition_check(PairTable::from_function(6, [](int, int j) { return j; }), omega);
  CHECK(o.premise);
  CHECK_FALSE(o.strict_triples.empty());
  CHECK_FALSE(o.violation());

  const RadoReport c = rado_condition_check(PairTable::from_function(4, [](int, int) { return 0; }), QuasiOrder::chain(1));
  CHECK_FALSE(c.premise);
  REQUIRE(c.premise_failure);

  CHECK_THROWS_AS(PairTable(4, {0, 0}), Error);
}

TEST_CASE("bad sequence search examples") {
  const auto eq = bad_sequence_search(PresentedQO::equality_omega(5), 5);
  REQUIRE(eq.witness());
  CHECK(*eq.witness() == std::vector<std::string>{"0", "1", "2", "3", "4"});

  for (int n = 1; n <= 7; ++n) {
    const auto om = bad_sequence_search(PresentedQO::omega(n), 5);
    CHECK(om.longest.size() == 1);
    CHECK_FALSE(om.witness());
  }

  const PresentedQO pw = PresentedQO::powerset(PresentedQO::rado(6), 2, 6);
  const auto bad = bad_sequence_search(pw, 4);
  CHECK(bad.longest.size() >= 3);
  const QuasiOrder pq = pw.truncate();
  const auto anti = longest_antichain(pq, 4);
  REQUIRE(anti.longest.size() >= 3);
  for (std::size_t i = 0; i < anti.longest.size(); ++i)
    for (std::size_t j = 0; j < anti.longest.size(); ++j)
      if (i != j) CHECK_FALSE(pq.le(anti.longest[i], anti.longest[j]));
}

TEST_CASE("property: bad sequences are bad") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : all_quasi_orders(n)) {
      const auto r = longest_bad_sequence(q, 4);
      for (std::size_t i = 0; i < r.longest.size(); ++i)
        for (std::size_t j = i + 1; j < r.longest.size(); ++j) CHECK_FALSE(q.le(r.longest[i], r.longest[j]));
    }
}

TEST_CASE("classes and linearizations examples") {
  const auto a = classes_and_linearizations(QuasiOrder::antichain(2));
  CHECK(a.classes.size() == 2);
  CHECK(a.extensions.size() == 2);
  const auto c = classes_and_linearizations(QuasiOrder::chain(3));
  CHECK(c.classes.size() == 3);
  CHECK(c.extensions.size() == 1);
  const auto e = classes_and_linearizations(labelled({"a", "b", "c"}, {{0, 1}, {1, 0}}));
  CHECK(e.classes.size() == 2);
  CHECK(e.extensions.size() == 2);
}

TEST_CASE("otp examples") {
  CHECK(*otp(QuasiOrder::antichain(2)).value == Ordinal::natural(2));
  CHECK(*otp(PresentedQO::omega(5)).value == Ordinal::omega());
  const auto eq = otp(PresentedQO::equality_omega(5));
  CHECK_FALSE(eq.value);
  CHECK_FALSE(eq.lower_bounds.empty());
}

TEST_CASE("property: otp counts classes and equals the size of partial orders") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : all_quasi_orders(n)) {
      const int cls = oracle::classes(convert::order(q));
      CHECK(otp(q).value->finite_value() == static_cast<std::uint64_t>(cls));
      bool partial = true;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) partial = partial && (x == y || !q.equiv(x, y));
      if (partial) CHECK(cls == n);
    }
}

TEST_CASE("presented truncations are coherent") {
  const std::vector<PresentedQO> families{
      PresentedQO::omega(7), PresentedQO::equality_omega(7), PresentedQO::rado(7), PresentedQO::fact15(7),
      PresentedQO::product(PresentedQO::omega(4), PresentedQO::equality_omega(4), 7),
      PresentedQO::disjoint_sum(PresentedQO::omega(4), PresentedQO::rado(4), 7)};
  for (const auto& p : families)
    for (int n = 1; n < 7; ++n) {
      const QuasiOrder small = p.truncate_at(n), big = p.truncate_at(n + 1);
      CHECK(check_quasi_order(big).ok);
      for (int x = 0; x < small.size(); ++x)
        for (int y = 0; y < small.size(); ++y) {
          const auto bx = big.index_of(small.label(x)), by = big.index_of(small.label(y));
          REQUIRE(bx);
          REQUIRE(by);
          CHECK(small.le(x, y) == big.le(*bx, *by));
        }
    }
}
