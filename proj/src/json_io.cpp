#include "wqo/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wqo/catalog.hpp"
#include "wqo/error.hpp"

namespace wqo {

Json load_json(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  std::string text = text_or_path;
  if (first == std::string::npos || (text_or_path[first] != '{' && text_or_path[first] != '[')) {
    std::ifstream in(text_or_path);
    require(in.good(), ErrorCode::InvalidInput, "cannot read input file '" + text_or_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

namespace {

std::string label_of(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(ErrorCode::InvalidInput, "labels must be strings or integers, got " + v.dump());
}

std::vector<std::string> labels_of(const Json& arr, const char* what) {
  require(arr.is_array(), ErrorCode::InvalidInput, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(label_of(v));
  return out;
}

int index_in(const std::vector<std::string>& labels, const std::string& l, const char* what) {
  auto it = std::find(labels.begin(), labels.end(), l);
  require(it != labels.end(), ErrorCode::InvalidInput, "unknown " + std::string(what) + " '" + l + "'");
  return static_cast<int>(it - labels.begin());
}

int truncation_of(const Json& j, std::optional<int> override_n) {
  if (override_n) return *override_n;
  if (j.contains("truncate")) {
    require(j["truncate"].is_number_integer(), ErrorCode::InvalidInput, "\"truncate\" must be an integer");
    return j["truncate"].get<int>();
  }
  return kDefaultTruncation;
}

std::string family_of(const Json& j) {
  require(j.is_object(), ErrorCode::InvalidInput, "expected a JSON object, got " + j.dump());
  if (!j.contains("family")) return {};
  require(j["family"].is_string(), ErrorCode::InvalidInput, "\"family\" must be a string");
  return j["family"].get<std::string>();
}

}  // namespace

PresentedQO parse_presented(const Json& j, std::optional<int> truncate) {
  const std::string family = family_of(j);
  if (family.empty()) {
    require(j.contains("universe"), ErrorCode::InvalidInput, "quasi-order needs \"universe\" or \"family\"");
    auto labels = labels_of(j["universe"], "\"universe\"");
    std::vector<std::pair<int, int>> pairs;
    if (j.contains("le")) {
      require(j["le"].is_array(), ErrorCode::InvalidInput, "\"le\" must be an array of pairs");
      for (const auto& p : j["le"]) {
        require(p.is_array() && p.size() == 2, ErrorCode::InvalidInput, "each \"le\" entry must be a pair");
        pairs.emplace_back(index_in(labels, label_of(p[0]), "atom"), index_in(labels, label_of(p[1]), "atom"));
      }
    }
    QuasiOrder q = QuasiOrder::from_pairs(labels, pairs).reflexive_transitive_closure();
    return PresentedQO::finite(q);
  }
  const int n = truncation_of(j, truncate);
  require(n >= 1, ErrorCode::InvalidInput, "truncation must be at least 1");
  if (family == "powerset") {
    require(j.contains("of"), ErrorCode::InvalidInput, "powerset needs \"of\"");
    const int max_subset = j.value("max_subset", 2);
    return PresentedQO::powerset(parse_presented(j["of"], n), max_subset, n);
  }
  if (family == "product" || family == "sum") {
    require(j.contains("of") && j["of"].is_array() && j["of"].size() == 2, ErrorCode::InvalidInput,
            family + " needs \"of\" with two orders");
    PresentedQO a = parse_presented(j["of"][0], n), b = parse_presented(j["of"][1], n);
    return family == "product" ? PresentedQO::product(a, b, n) : PresentedQO::disjoint_sum(a, b, n);
  }
  return build_order(family, n);
}

QuasiOrder parse_quasi_order(const Json& j, std::optional<int> truncate) {
  return parse_presented(j, truncate).truncate();
}

SetSystem parse_system(const Json& j, std::optional<int> truncate) {
  require(j.is_object(), ErrorCode::InvalidInput, "expected a set system object, got " + j.dump());
  if (j.contains("construct")) {
    const std::string c = j["construct"].get<std::string>();
    require(j.contains("of"), ErrorCode::InvalidInput, "construct needs \"of\"");
    const Json& of = j["of"];
    if (c == "mwunion") {
      require(of.is_array() && of.size() == 2, ErrorCode::InvalidInput, "mwunion needs two systems");
      return memberwise_union(parse_system(of[0], truncate), parse_system(of[1], truncate));
    }
    const SetSystem inner = parse_system(of.is_array() && of.size() == 1 ? of[0] : of, truncate);
    if (c == "finclass") return finclass(inner);
    if (c == "hat") return hat(inner);
    fail(ErrorCode::UnknownName, "unknown construct '" + c + "'");
  }
  const std::string family = family_of(j);
  if (family.empty()) {
    require(j.contains("universe") && j.contains("members"), ErrorCode::InvalidInput,
            "set system needs \"universe\" and \"members\"");
    auto universe = labels_of(j["universe"], "\"universe\"");
    require(j["members"].is_array(), ErrorCode::InvalidInput, "\"members\" must be an array");
    std::vector<AtomSet> members;
    for (const auto& m : j["members"]) {
      AtomSet s;
      for (const auto& l : labels_of(m, "member")) s.insert(index_in(universe, l, "atom"));
      members.push_back(s);
    }
    return SetSystem(universe, members);
  }
  if (family == "ss" || family == "pf") {
    require(j.contains("of"), ErrorCode::InvalidInput, family + " needs \"of\"");
    std::optional<int> n = truncate;
    if (!n && j.contains("truncate")) n = truncation_of(j, std::nullopt);
    const QuasiOrder q = parse_quasi_order(j["of"], n);
    return family == "ss" ? ss(q) : principal_filters(q);
  }
  return build_system(family, truncation_of(j, truncate));
}

Relation parse_relation(const Json& j) {
  require(j.is_object() && j.contains("pairs") && j["pairs"].is_array(), ErrorCode::InvalidInput,
          "relation needs a \"pairs\" array");
  std::vector<std::string> target, source;
  const bool fixed_target = j.contains("target"), fixed_source = j.contains("source");
  if (fixed_target) target = labels_of(j["target"], "\"target\"");
  if (fixed_source) source = labels_of(j["source"], "\"source\"");
  auto intern = [](std::vector<std::string>& labels, bool fixed, const std::string& l, const char* what) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it != labels.end()) return static_cast<int>(it - labels.begin());
    require(!fixed, ErrorCode::InvalidInput, "unknown " + std::string(what) + " '" + l + "'");
    labels.push_back(l);
    return static_cast<int>(labels.size()) - 1;
  };
  std::vector<RelationPair> pairs;
  for (const auto& p : j["pairs"]) {
    require(p.is_object() && p.contains("x") && p.contains("v"), ErrorCode::InvalidInput,
            "each pair needs \"x\" and \"v\"");
    RelationPair rp;
    rp.x = intern(target, fixed_target, label_of(p["x"]), "target atom");
    for (const auto& l : labels_of(p["v"], "\"v\"")) rp.v.insert(intern(source, fixed_source, l, "source atom"));
    pairs.push_back(rp);
  }
  return Relation(target, source, pairs);
}

BarrierFragment parse_barrier(const Json& j, std::optional<int> truncate) {
  require(j.is_object(), ErrorCode::InvalidInput, "expected a barrier object, got " + j.dump());
  const int window = truncate ? *truncate : j.value("window", kDefaultTruncation);
  std::optional<int> k;
  if (j.contains("family") && !j["family"].is_null()) {
    const std::string f = j["family"].get<std::string>();
    if (f == "sgl") k = 1;
    else if (f == "pairs") k = 2;
    else fail(ErrorCode::UnknownName, "unknown barrier family '" + f + "'");
  }
  if (!j.contains("blocks")) {
    require(k.has_value(), ErrorCode::InvalidInput, "barrier needs \"blocks\" or a family");
    return BarrierFragment::uniform(*k, window);
  }
  std::vector<Block> blocks;
  for (const auto& b : j["blocks"]) {
    require(b.is_array(), ErrorCode::InvalidInput, "each block must be an array of naturals");
    Block blk;
    for (const auto& v : b) {
      require(v.is_number_integer(), ErrorCode::InvalidInput, "block entries must be integers");
      blk.push_back(v.get<int>());
    }
    blocks.push_back(blk);
  }
  return BarrierFragment(blocks, window, k);
}

Json to_json(const QuasiOrder& q) {
  Json le = Json::array();
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y)
      if (x != y && q.le(x, y)) le.push_back({q.label(x), q.label(y)});
  return {{"universe", q.labels()}, {"le", le}};
}

Json to_json(const SetSystem& l) {
  Json members = Json::array();
  for (const auto& m : l.members()) {
    Json mem = Json::array();
    for (int a : m.atoms()) mem.push_back(l.universe()[a]);
    members.push_back(mem);
  }
  return {{"universe", l.universe()}, {"members", members}};
}

Json to_json(const GameTreeRank& r, const SetSystem& l) {
  Json witness = Json::array();
  for (const auto& p : r.witness) witness.push_back({{"t", l.universe()[p.t]}, {"member", l.render_member(p.member)}});
  return {{"dim", r.finite()}, {"witness", witness}, {"states_explored", r.states_explored}};
}

Json to_json(const BarrierFragment& b) {
  Json family = nullptr;
  if (b.uniform_k()) family = b.family_name();
  return {{"blocks", b.blocks()}, {"window", b.window()}, {"family", family}};
}

}  // namespace wqo
