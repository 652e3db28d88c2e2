#include "doctest.h"

#include "../support/convert.hpp"
#include "wqo/catalog.hpp"
#include "wqo/error.hpp"
#include "wqo/generators.hpp"
#include "wqo/rng.hpp"
#include "wqo/setsys.hpp"

using namespace wqo;

namespace {

std::vector<AtomSet> sorted(std::vector<AtomSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

QuasiOrder equivalent_pair() { return QuasiOrder::from_predicate({"a", "b"}, [](int, int) { return true; }); }

SetSystem sys(int n, std::vector<AtomSet> members) { return SetSystem::over_naturals(n, members); }

}  // namespace

TEST_CASE("ss examples") {
  CHECK(sorted(ss(QuasiOrder::chain(2)).members()) == sorted({AtomSet{}, AtomSet{1}, AtomSet{0, 1}}));
  CHECK(ss(QuasiOrder::antichain(2)).size() == 4);
  CHECK(sorted(ss(equivalent_pair()).members()) == sorted({AtomSet{}, AtomSet{0, 1}}));
}

TEST_CASE("property: ss is the family of upper sets") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& q : all_quasi_orders(n)) {
      const auto o = convert::order(q);
      const SetSystem s = ss(q);
      for (const auto& m : s.members()) CHECK(oracle::upper_closed(o, convert::set(m)));
      CHECK(oracle::normalized(convert::family(s)) == oracle::normalized(oracle::upper_sets(o)));
    }
}

TEST_CASE("qo examples") {
  const QuasiOrder c = qo_of(ss(QuasiOrder::chain(2)));
  CHECK(c.le(0, 1));
  CHECK_FALSE(c.le(1, 0));
  CHECK(qo_of(build_system("sgl", 4)) == QuasiOrder::antichain(4));
  CHECK(qo_of(sys(3, {AtomSet{}})).size() == 0);
}

TEST_CASE("qo agrees with the membership oracle") {
  for (int i = 0; i < 200; ++i) {
    Rng rng = Rng::derive(1, "qo-oracle", static_cast<std::uint64_t>(i));
    const SetSystem l = random_system(rng, 5, 5);
    const QuasiOrder q = qo_of(l);
    const auto f = convert::family(l);
    const auto support = l.support().atoms();
    REQUIRE(q.size() == static_cast<int>(support.size()));
    for (int x = 0; x < q.size(); ++x)
      for (int y = 0; y < q.size(); ++y) CHECK(q.le(x, y) == oracle::qo_le(f, support[x], support[y]));
  }
}

TEST_CASE("roundtrip examples") {
  for (const auto& q : all_quasi_orders(3)) CHECK(roundtrip_check(q));
  CHECK(roundtrip_check(QuasiOrder::chain(4)));
  CHECK(roundtrip_check(equivalent_pair()));
}

TEST_CASE("finclass examples") {
  CHECK(sorted(finclass(sys(2, {AtomSet{0}, AtomSet{1}})).members()) ==
        sorted({AtomSet{0}, AtomSet{1}, AtomSet{0, 1}}));
  CHECK(finclass(sys(1, {AtomSet{}})).members() == std::vector<AtomSet>{AtomSet{}});
  const SetSystem l2 = build_system("L2", 5);
  const SetSystem f = finclass(l2);
  CHECK(oracle::normalized(convert::family(f)) == oracle::finite_unions(convert::family(l2)));
  CHECK(f.contains(AtomSet{0, 3, 4}));
}

TEST_CASE("hat examples") {
  CHECK(sorted(hat(sys(2, {AtomSet{0}, AtomSet{1}})).members()) == sorted({AtomSet{0}, AtomSet{1}, AtomSet{0, 1}}));
  const SetSystem c = ss(QuasiOrder::chain(2));
  CHECK(is_union_closed(c));
  CHECK(sorted(hat(c).members()) == sorted(c.members()));
  const SetSystem h = hat(build_system("sgl", 3));
  CHECK(h.size() == 7);
  for (const auto& m : h.members()) CHECK_FALSE(m.empty());
}

TEST_CASE("property: finclass matches the subfamily oracle, equals hat and is monotone") {
  for (int i = 0; i < 200; ++i) {
    Rng rng = Rng::derive(2, "finclass", static_cast<std::uint64_t>(i));
    const SetSystem l = random_system(rng, 5, 5);
    const SetSystem f = finclass(l);
    CHECK(oracle::normalized(convert::family(f)) == oracle::finite_unions(convert::family(l)));
    CHECK(sorted(f.members()) == sorted(hat(l).members()));
    CHECK(is_union_closed(f));
    std::vector<AtomSet> more = l.members();
    more.push_back(random_subset(rng, 5) | AtomSet{0});
    const SetSystem g = finclass(sys(5, more));
    for (const auto& m : f.members()) CHECK(g.contains(m));
  }
}

TEST_CASE("tested guess: qo(L) = qo(finclass L) on systems with at most four members") {
  int instances = 0;
  for (int i = 0; i < 300; ++i) {
    Rng rng = Rng::derive(4, "qo-finclass", static_cast<std::uint64_t>(i));
    const SetSystem l = random_system(rng, 4, 4);
    CHECK(qo_of(l) == qo_of(finclass(l)));
    ++instances;
  }
  CHECK(instances == 300);
}

TEST_CASE("memberwise union examples") {
  CHECK(memberwise_union(sys(2, {AtomSet{0}}), sys(2, {AtomSet{1}})).members() == std::vector<AtomSet>{AtomSet{0, 1}});
  const SetSystem s3 = build_system("sgl", 3);
  const SetSystem u = memberwise_union(s3, s3);
  CHECK(u.size() == 6);
  for (const auto& m : u.members()) CHECK((m.size() == 1 || m.size() == 2));
  const SetSystem l = sys(3, {AtomSet{0}, AtomSet{1, 2}});
  CHECK(sorted(memberwise_union(l, sys(3, {AtomSet{}})).members()) == sorted(l.members()));
  CHECK_THROWS_AS(memberwise_union(sys(2, {AtomSet{0}}), sys(3, {AtomSet{0}})), Error);
}

TEST_CASE("principal filter examples") {
  CHECK(sorted(principal_filters(QuasiOrder::chain(2)).members()) == sorted({AtomSet{0, 1}, AtomSet{1}}));
  const QuasiOrder pf = pf_order(QuasiOrder::chain(2));
  const SetSystem filters = principal_filters(QuasiOrder::chain(2));
  const int whole = *filters.index_of(AtomSet{0, 1}), top = *filters.index_of(AtomSet{1});
  CHECK(pf.le(whole, top));
  CHECK_FALSE(pf.le(top, whole));

  const QuasiOrder f15 = PresentedQO::fact15(3).truncate();
  const SetSystem ppf = principal_filters(f15);
  CHECK(sorted(ppf.members()) == sorted({AtomSet::prefix(4), AtomSet{1}, AtomSet{2}, AtomSet{3}}));
  CHECK(principal_filters(equivalent_pair()).members() == std::vector<AtomSet>{AtomSet{0, 1}});
}

TEST_CASE("FT and antichain examples") {
  for (int c : ft_counts(build_system("sgl", 6))) CHECK(c == 1);
  const FtProfile l2 = ft_profile([](int n) { return build_system("L2", n); }, 3, 7);
  CHECK(l2.bounded_in_range());
  const FtProfile f2 = ft_profile([](int n) { return finclass(build_system("L2", n)); }, 3, 7);
  CHECK_FALSE(f2.bounded_in_range());
  CHECK(std::find(f2.growing_atoms.begin(), f2.growing_atoms.end(), 0) != f2.growing_atoms.end());

  const Antichain a = max_antichain(sys(2, {AtomSet{0}, AtomSet{1}, AtomSet{0, 1}}));
  CHECK(a.size == 2);
  CHECK(a.members == std::vector<int>{0, 1});
}

TEST_CASE("property: max antichain agrees with brute force") {
  for (int i = 0; i < 200; ++i) {
    Rng rng = Rng::derive(6, "antichain", static_cast<std::uint64_t>(i));
    const SetSystem l = random_system(rng, 5, 8);
    const Antichain a = max_antichain(l);
    CHECK(a.size == oracle::max_antichain(convert::family(l)));
    CHECK(oracle::antichain(convert::family(l), a.members));
  }
}

TEST_CASE("filter closure examples and exhaustive run") {
  CHECK(fact1_checks(QuasiOrder::chain(3)).ok());
  CHECK(fact1_checks(QuasiOrder::antichain(2)).ok());
  CHECK(fact1_checks(equivalent_pair()).ok());
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : all_quasi_orders(n)) {
      const auto r = fact1_checks(q);
      CHECK(r.ok());
      CHECK(r.empty_set_normalized);
    }
}

TEST_CASE("set system construction") {
  CHECK_THROWS_AS(SetSystem::over_naturals(2, {AtomSet{3}}), Error);
  const SetSystem d = sys(3, {AtomSet{0}, AtomSet{0}, AtomSet{1}});
  CHECK(d.size() == 2);
  CHECK(d.restrict_prefix(1).members() == std::vector<AtomSet>{AtomSet{0}});
}
