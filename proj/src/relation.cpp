#include "wqo/relation.hpp"

#include <algorithm>

#include "wqo/error.hpp"

namespace wqo {

Relation::Relation(std::vector<std::string> target, std::vector<std::string> source,
                   std::vector<RelationPair> pairs)
    : target_(std::move(target)), source_(std::move(source)) {
  require(target_.size() <= AtomSet::kCapacity && source_.size() <= AtomSet::kCapacity,
          ErrorCode::SizeCap, "relation alphabets are limited to 64 atoms");
  const AtomSet src = AtomSet::prefix(static_cast<int>(source_.size()));
  for (const auto& p : pairs) {
    require(p.x >= 0 && p.x < static_cast<int>(target_.size()), ErrorCode::InvalidInput,
            "relation pair refers to a target atom outside the alphabet");
    require(p.v.subset_of(src), ErrorCode::InvalidInput,
            "relation witness set leaves the source alphabet");
    if (std::find(pairs_.begin(), pairs_.end(), p) == pairs_.end()) pairs_.push_back(p);
  }
}

Relation Relation::over_source(const std::vector<std::string>& labels) const {
  std::vector<int> remap(source_.size(), -1);
  for (std::size_t a = 0; a < source_.size(); ++a) {
    auto it = std::find(labels.begin(), labels.end(), source_[a]);
    if (it != labels.end()) remap[a] = static_cast<int>(it - labels.begin());
  }
  std::vector<RelationPair> pairs;
  for (const auto& p : pairs_) {
    AtomSet v;
    p.v.for_each([&](int a) {
      require(remap[a] >= 0, ErrorCode::InvalidInput,
              "witness atom '" + source_[a] + "' is not in the source universe");
      v.insert(remap[a]);
    });
    pairs.push_back({p.x, v});
  }
  return Relation(target_, labels, std::move(pairs));
}

Relation Relation::restricted_to(AtomSet support) const {
  std::vector<RelationPair> pairs;
  for (const auto& p : pairs_)
    if (p.v.subset_of(support)) pairs.push_back(p);
  return Relation(target_, source_, std::move(pairs));
}

}  // namespace wqo
