#include "doctest.h"

#include "../support/convert.hpp"
#include "wqo/deform.hpp"
#include "wqo/error.hpp"
#include "wqo/generators.hpp"
#include "wqo/rng.hpp"

using namespace wqo;

namespace {

std::vector<std::pair<int, oracle::Set>> oracle_pairs(const Relation& r) {
  std::vector<std::pair<int, oracle::Set>> out;
  for (const auto& p : r.pairs()) out.emplace_back(p.x, convert::set(p.v));
  return out;
}

std::vector<AtomSet> sorted(std::vector<AtomSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

DeformTable table(int atoms, std::vector<std::string> target, const std::function<AtomSet(AtomSet)>& op) {
  DeformTable t;
  for (int i = 0; i < atoms; ++i) t.source.push_back(std::string(1, static_cast<char>('p' + i)));
  t.target = std::move(target);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << atoms); ++bits) t.rows.push_back(op(AtomSet(bits)));
  return t;
}

Relation identity(int n) {
  std::vector<RelationPair> pairs;
  for (int i = 0; i < n; ++i) pairs.push_back({i, AtomSet{i}});
  return Relation(QuasiOrder::numbered_labels(n), QuasiOrder::numbered_labels(n), pairs);
}

}  // namespace

TEST_CASE("apply examples") {
  const Relation c({"x"}, {"p", "q"}, {{0, AtomSet{}}});
  CHECK(apply(c, AtomSet{}) == AtomSet{0});
  const Relation both({"x"}, {"p", "q"}, {{0, AtomSet{0, 1}}});
  CHECK(apply(both, AtomSet{0}).empty());
  const Relation split({"x", "y"}, {"p", "q"}, {{0, AtomSet{0}}, {1, AtomSet{1}}});
  CHECK(apply(split, AtomSet{0, 1}) == AtomSet{0, 1});
}

TEST_CASE("property: apply matches the oracle and is monotone") {
  for (int i = 0; i < 1000; ++i) {
    Rng rng = Rng::derive(12, "apply", static_cast<std::uint64_t>(i));
    const Relation r = random_relation(rng, 5, 6, 6, 3);
    const AtomSet m = random_subset(rng, 6);
    const AtomSet bigger = m | random_subset(rng, 6);
    const AtomSet img = apply(r, m);
    CHECK(convert::set(img) == oracle::apply(oracle_pairs(r), convert::set(m)));
    CHECK(img.subset_of(apply(r, bigger)));
  }
}

TEST_CASE("table examples") {
  const DeformTable grow = table(2, {"p", "q", "x"}, [](AtomSet a) { return a | AtomSet{2}; });
  const TableRelation g = relation_from_table(grow);
  CHECK(g.monotone);
  CHECK(table_of(g.relation).rows == grow.rows);

  const DeformTable comp = table(2, {"p", "q"}, [](AtomSet a) { return AtomSet::prefix(2) - a; });
  const TableRelation c = relation_from_table(comp);
  CHECK_FALSE(c.monotone);
  REQUIRE(c.counterexample);
  CHECK(c.counterexample->first == AtomSet{});
  CHECK(c.counterexample->second == AtomSet{0});

  const DeformTable constant = table(2, {"x"}, [](AtomSet) { return AtomSet{0}; });
  const TableRelation k = relation_from_table(constant);
  CHECK(k.monotone);
  const Relation m = minimized(k.relation);
  REQUIRE(m.pairs().size() == 1);
  CHECK(m.pairs()[0] == RelationPair{0, AtomSet{}});

  DeformTable partial = constant;
  partial.rows.pop_back();
  CHECK_THROWS_AS(relation_from_table(partial), Error);
}

TEST_CASE("property: table round trip on three atoms") {
  // Every monotone table on 3 atoms with 2 target atoms.
  int monotone = 0;
  for (std::uint32_t code = 0; code < (1u << 16); ++code) {
    DeformTable t = table(3, {"x", "y"}, [&](AtomSet a) { return AtomSet((code >> (2 * a.bits())) & 3u); });
    bool mono = true;
    for (std::uint64_t a = 0; a < 8; ++a)
      for (std::uint64_t b = 0; b < 8; ++b)
        if ((a & ~b) == 0 && !t.rows[a].subset_of(t.rows[b])) mono = false;
    const TableRelation r = relation_from_table(t);
    CHECK(r.monotone == mono);
    if (!mono) continue;
    ++monotone;
    CHECK(table_of(r.relation).rows == t.rows);
    CHECK(table_of(minimized(r.relation)).rows == t.rows);
  }
  CHECK(monotone > 0);
  for (int i = 0; i < 300; ++i) {
    Rng rng = Rng::derive(13, "saturate", static_cast<std::uint64_t>(i));
    const Relation r = random_relation(rng, 3, 3, 5, 3);
    const Relation back = relation_from_table(table_of(r)).relation;
    CHECK(table_of(back).rows == table_of(r).rows);
    for (const auto& p : r.pairs()) CHECK(std::find(back.pairs().begin(), back.pairs().end(), p) != back.pairs().end());
    CHECK(table_of(relation_from_table(table_of(back)).relation).rows == table_of(back).rows);
  }
}

TEST_CASE("image examples") {
  const SetSystem m = SetSystem::over_naturals(3, {AtomSet{0}, AtomSet{1, 2}, AtomSet{2}});
  const Relation c({"x"}, QuasiOrder::numbered_labels(3), {{0, AtomSet{}}});
  CHECK(image(c, m).members() == std::vector<AtomSet>{AtomSet{0}});
  CHECK(image(identity(3), m).members() == m.members());
  const Relation split({"x", "y"}, {"p", "q"}, {{0, AtomSet{0}}, {1, AtomSet{1}}});
  const SetSystem sgl({"p", "q"}, {AtomSet{0}, AtomSet{1}});
  CHECK(sorted(image(split, sgl).members()) == sorted({AtomSet{0}, AtomSet{1}}));
}

TEST_CASE("image inclusion examples") {
  const SetSystem chain = ss(QuasiOrder::chain(2));
  CHECK(theorem1_check(identity(2), chain).holds);
  const Relation empty({"x"}, QuasiOrder::numbered_labels(2), {});
  CHECK(image(empty, chain).members() == std::vector<AtomSet>{AtomSet{}});
  CHECK(theorem1_check(empty, chain).holds);
  for (int i = 0; i < 500; ++i) {
    Rng rng = Rng::derive(14, "theorem1-unit", static_cast<std::uint64_t>(i));
    const SetSystem m = random_system(rng, 5, 5);
    const Relation r = random_relation(rng, 4, 5, 6, 2);
    CHECK(theorem1_check(r, m).holds);
  }
}

TEST_CASE("fess transfer examples") {
  const SetSystem m = ss(QuasiOrder::antichain(2));
  const auto id = fess_transfer_check(identity(2), m);
  CHECK(id.source_dim == id.image_dim);
  const Relation c({"x"}, QuasiOrder::numbered_labels(2), {{0, AtomSet{}}});
  CHECK(fess_transfer_check(c, m).image_dim == 1);
  const Relation split({"x", "y"}, QuasiOrder::numbered_labels(2), {{0, AtomSet{0}}, {1, AtomSet{1}}});
  const auto s = fess_transfer_check(split, m);
  CHECK(s.source_dim == 2);
  CHECK_FALSE(s.caveat.empty());
}

TEST_CASE("nia transfer examples") {
  const SetSystem m = ss(QuasiOrder::antichain(3));
  const auto id = nia_transfer_check(identity(3), m);
  CHECK(id.image.size == id.source.size);
  const Relation c({"x"}, QuasiOrder::numbered_labels(3), {{0, AtomSet{}}});
  CHECK(nia_transfer_check(c, m).image.size == 1);
  for (int i = 0; i < 300; ++i) {
    Rng rng = Rng::derive(15, "nia-unit", static_cast<std::uint64_t>(i));
    const SetSystem src = random_system(rng, 5, 7);
    const Relation r = random_relation(rng, 4, 5, 6, 2);
    const auto t = nia_transfer_check(r, src);
    CHECK(t.holds());
    CHECK(t.image.size == oracle::max_antichain(convert::family(image(r, src))));
  }
}
