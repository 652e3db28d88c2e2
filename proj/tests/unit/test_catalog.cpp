#include "doctest.h"

#include "../support/convert.hpp"
#include "wqo/catalog.hpp"
#include "wqo/error.hpp"

using namespace wqo;

namespace {

std::vector<AtomSet> sorted(std::vector<AtomSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

AtomSet range(int lo, int hi) { return AtomSet::prefix(hi) - AtomSet::prefix(lo); }

}  // namespace

TEST_CASE("build examples") {
  CHECK(sorted(build_system("sgl", 3).members()) == sorted({AtomSet{0}, AtomSet{1}, AtomSet{2}}));
  const SetSystem l1 = build_system("L1", 4);
  CHECK(l1.contains(AtomSet{0, 2, 3}));
  std::set<AtomSet> expected;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      const AtomSet m = (i < 4 ? AtomSet::single(i) : AtomSet{}) | range(j, 4);
      if (!m.empty()) expected.insert(m);
    }
  CHECK(std::set<AtomSet>(l1.members().begin(), l1.members().end()) == expected);
  CHECK(sorted(build_system("L2", 4).members()) == sorted({range(1, 4), range(2, 4), range(3, 4), AtomSet{0}}));
  CHECK(sorted(build_system("L3", 5).members()) == sorted(finclass(build_system("L2", 5)).members()));
  CHECK_THROWS_AS(build("L4", 3), Error);
  CHECK(catalog_names().size() == 9);
}

TEST_CASE("property: every entry is coherent under truncation") {
  for (const auto& name : catalog_names())
    for (int n = 1; n < 8; ++n) {
      const CatalogStructure small = build(name, n), big = build(name, n + 1);
      if (const auto* s = std::get_if<SetSystem>(&small)) {
        CHECK(s->same_family(std::get<SetSystem>(big).restrict_prefix(n)));
      } else if (const auto* p = std::get_if<PresentedQO>(&small)) {
        const QuasiOrder a = p->truncate(), b = std::get<PresentedQO>(big).truncate();
        for (int x = 0; x < a.size(); ++x)
          for (int y = 0; y < a.size(); ++y)
            CHECK(a.le(x, y) == b.le(*b.index_of(a.label(x)), *b.index_of(a.label(y))));
      } else {
        const PairMap& pm = std::get<PairMap>(small);
        const PairMap& pb = std::get<PairMap>(big);
        for (int j = 1; j < n; ++j)
          for (int i = 0; i < j; ++i) {
            const AtomSet m = pm.members.members()[pm.table.at(i, j)];
            const AtomSet mb = pb.members.members()[pb.table.at(i, j)];
            CHECK(m == (mb & AtomSet::prefix(n)));
          }
      }
    }
}

TEST_CASE("pair map of the L1 filters") {
  const PairMap pm = build_pair_map(8);
  for (int j = 1; j < 8; ++j)
    for (int i = 0; i < j; ++i) CHECK(pm.members.members()[pm.table.at(i, j)] == (AtomSet::single(i) | range(j + 1, 8)));
  CHECK(rado_condition_check(pm.table, pm.target).violation());
}

TEST_CASE("attestations") {
  for (const auto& name : catalog_names()) {
    const AttestationReport r = attestation_suite(name, 3, 7);
    CHECK_MESSAGE(r.ok(), name);
    CHECK_FALSE(r.claims.empty());
    for (const auto& c : r.claims) CHECK_FALSE(c.statement.empty());
  }
  const auto sgl = attestation_suite("sgl", 3, 7);
  bool has_ft = false;
  for (const auto& c : sgl.claims) has_ft = has_ft || (c.claim == "finite-thickness" && c.passed);
  CHECK(has_ft);
}

TEST_CASE("L1 shape away from the boundary") {
  for (int n = 3; n <= 7; ++n) {
    const SetSystem l1 = build_system("L1", n);
    const QuasiOrder q = qo_of(l1);
    for (int x = 0; x < n - 1; ++x)
      for (int y = 0; y < n - 1; ++y) CHECK(q.le(x, y) == (x == y));
  }
}
