#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "wqo/barrier.hpp"
#include "wqo/elastic.hpp"
#include "wqo/qorder.hpp"
#include "wqo/relation.hpp"
#include "wqo/setsys.hpp"

namespace wqo {

using Json = nlohmann::json;

// Truncation used when a presented structure names none.
inline constexpr int kDefaultTruncation = 6;

// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json load_json(const std::string& text_or_path);

// {"universe": [...], "le": [[x, y], ...]} (closed reflexively and
// transitively) or {"family": ..., "truncate": N, "of": ...}.
PresentedQO parse_presented(const Json& j, std::optional<int> truncate = std::nullopt);
QuasiOrder parse_quasi_order(const Json& j, std::optional<int> truncate = std::nullopt);

// {"universe": [...], "members": [[...], ...]}, {"family": ..., "of": ...,
// "truncate": N} or {"construct": "finclass" | "hat" | "mwunion", "of": ...}.
SetSystem parse_system(const Json& j, std::optional<int> truncate = std::nullopt);

// {"pairs": [{"x": "x1", "v": ["p", "q"]}, ...]} with optional "target" and
// "source" alphabets.
Relation parse_relation(const Json& j);

// {"blocks": [[0, 2], ...], "window": N, "family": "sgl" | "pairs" | null}.
BarrierFragment parse_barrier(const Json& j, std::optional<int> truncate = std::nullopt);

Json to_json(const QuasiOrder& q);
Json to_json(const SetSystem& l);
Json to_json(const GameTreeRank& r, const SetSystem& l);
Json to_json(const BarrierFragment& b);

}  // namespace wqo
