#include "wqo/deform.hpp"

#include "wqo/elastic.hpp"
#include "wqo/error.hpp"
#include "wqo/qorder.hpp"

namespace wqo {

AtomSet apply(const Relation& r, AtomSet m) {
  AtomSet out;
  for (const auto& p : r.pairs())
    if (p.v.subset_of(m)) out.insert(p.x);
  return out;
}

DeformTable table_of(const Relation& r) {
  const int n = static_cast<int>(r.source().size());
  require(n <= 5, ErrorCode::SizeCap, "deformation tables support alphabets of at most 5 atoms");
  DeformTable t{r.source(), r.target(), {}};
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) t.rows.push_back(apply(r, AtomSet(bits)));
  return t;
}

TableRelation relation_from_table(const DeformTable& table) {
  const int n = static_cast<int>(table.source.size());
  require(n <= 5, ErrorCode::SizeCap, "deformation tables support alphabets of at most 5 atoms");
  require(table.rows.size() == (std::size_t{1} << n), ErrorCode::InvalidInput,
          "deformation table is partial: expected one row per subset of the alphabet");
  const AtomSet target_all = AtomSet::prefix(static_cast<int>(table.target.size()));
  std::vector<RelationPair> pairs;
  for (std::uint64_t bits = 0; bits < table.rows.size(); ++bits) {
    require(table.rows[bits].subset_of(target_all), ErrorCode::InvalidInput,
            "deformation table row leaves the target alphabet");
    table.rows[bits].for_each([&](int x) { pairs.push_back({x, AtomSet(bits)}); });
  }
  TableRelation out{Relation(table.target, table.source, std::move(pairs)), true, std::nullopt};
  // Monotone iff monotone along single-atom extensions.
  for (std::uint64_t bits = 0; bits < table.rows.size() && out.monotone; ++bits)
    for (int p = 0; p < n; ++p) {
      const AtomSet a(bits), b = a | AtomSet::single(p);
      if (a == b) continue;
      if (!table.rows[a.bits()].subset_of(table.rows[b.bits()])) {
        out.monotone = false;
        out.counterexample = std::make_pair(a, b);
        break;
      }
    }
  return out;
}

Relation minimized(const Relation& r) {
  std::vector<RelationPair> keep;
  for (const auto& p : r.pairs()) {
    bool redundant = false;
    for (const auto& q : r.pairs())
      if (q.x == p.x && q.v != p.v && q.v.subset_of(p.v)) redundant = true;
    if (!redundant) keep.push_back(p);
  }
  return Relation(r.target(), r.source(), std::move(keep));
}

SetSystem image(const Relation& r, const SetSystem& m) {
  const Relation mapped = r.source() == m.universe() ? r : r.over_source(m.universe());
  std::vector<AtomSet> members;
  for (AtomSet a : m.members()) members.push_back(apply(mapped, a));
  return SetSystem(r.target(), members);
}

Theorem1Result theorem1_check(const Relation& r, const SetSystem& m) {
  // Witness sets must live inside the union of M; other pairs never fire on M.
  const Relation mapped =
      (r.source() == m.universe() ? r : r.over_source(m.universe())).restricted_to(m.support());
  const QuasiOrder base = qo_of(m);
  const QuasiOrder refined = build_QR(mapped, base);
  const SetSystem closed = ss(refined);
  Theorem1Result res;
  for (AtomSet a : m.members()) {
    const AtomSet img = apply(mapped, a);
    if (closed.contains(img)) continue;
    res.holds = false;
    res.member = img;
    for (int x : img.atoms())
      for (int y = 0; y < refined.size(); ++y)
        if (refined.le(x, y) && !img.contains(y)) {
          res.x = x;
          res.x2 = y;
          return res;
        }
    return res;
  }
  return res;
}

FessTransfer fess_transfer_check(const Relation& r, const SetSystem& m) {
  FessTransfer f;
  f.source_dim = dim(m).finite();
  f.image_dim = dim(image(r, m)).finite();
  f.caveat =
      "finite relations are continuous by construction; the transfer needs the deformation "
      "to be defined on the whole powerset of the source union, not just on the members";
  return f;
}

NiaTransfer nia_transfer_check(const Relation& r, const SetSystem& m) {
  return {max_antichain(m), max_antichain(image(r, m))};
}

}  // namespace wqo
