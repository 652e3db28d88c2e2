#include "wqo/wqo.h"

#include <cstdlib>
#include <cstring>
#include <variant>

#include "wqo/catalog.hpp"
#include "wqo/checks.hpp"
#include "wqo/deform.hpp"
#include "wqo/error.hpp"
#include "wqo/json_io.hpp"

using namespace wqo;

struct wqo_structure {
  wqo_kind kind;
  std::variant<PresentedQO, SetSystem, Relation, BarrierFragment> value;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wqo_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput: return WQO_ERR_INVALID_INPUT;
    case ErrorCode::SizeCap: return WQO_ERR_SIZE_CAP;
    case ErrorCode::Overflow: return WQO_ERR_OVERFLOW;
    case ErrorCode::UnknownName: return WQO_ERR_UNKNOWN_NAME;
    case ErrorCode::Unsupported: return WQO_ERR_UNSUPPORTED;
  }
  return WQO_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes and the thread's last error.
template <typename F>
wqo_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return WQO_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const Json::exception& e) {
    last_error = std::string("malformed input: ") + e.what();
    return WQO_ERR_INVALID_INPUT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WQO_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  require(p != nullptr, ErrorCode::InvalidInput, std::string(what) + " is required");
}

std::string members_text(const SetSystem& l) {
  std::string s;
  for (const auto& m : l.members()) s += (s.empty() ? "" : ", ") + l.render_member(m);
  return s;
}

std::string order_text(const QuasiOrder& q) {
  std::string s;
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y)
      if (x != y && q.le(x, y)) s += (s.empty() ? "" : ", ") + q.label(x) + " <= " + q.label(y);
  return s.empty() ? "equality on " + std::to_string(q.size()) + " atoms" : s;
}

Json system_result(const SetSystem& l) {
  Json j = to_json(l);
  j["value"] = members_text(l);
  return j;
}

template <typename T>
const T& as(const wqo_structure* s, const char* what) {
  need(s, what);
  const T* v = std::get_if<T>(&s->value);
  require(v != nullptr, ErrorCode::InvalidInput, std::string(what) + " has the wrong kind");
  return *v;
}

Json eval(const std::string& target, const wqo_structure* a, const wqo_structure* b) {
  if (target == "dim") {
    const auto& l = as<SetSystem>(a, "set system");
    const GameTreeRank r = dim(l);
    Json j = to_json(r, l);
    j["value"] = std::to_string(r.finite());
    return j;
  }
  if (target == "otp") {
    const auto& q = as<PresentedQO>(a, "quasi-order");
    const OtpResult o = otp(q);
    Json bounds = Json::array();
    for (const auto& [n, c] : o.lower_bounds) bounds.push_back({n, c});
    Json j{{"otp", o.value ? Json(render(*o.value)) : Json(nullptr)}, {"lower_bounds", bounds}, {"note", o.note}};
    j["value"] = o.value ? render(*o.value) : "unknown";
    return j;
  }
  if (target == "ot") {
    const auto& f = as<BarrierFragment>(a, "barrier");
    const OtResult o = ot_of(f);
    return {{"ot", o.value ? Json(render(*o.value)) : Json(nullptr)}, {"note", o.note},
            {"value", o.value ? render(*o.value) : "unknown"}};
  }
  if (target == "qo") {
    const QuasiOrder q = qo_of(as<SetSystem>(a, "set system"));
    Json j = to_json(q);
    j["value"] = order_text(q);
    return j;
  }
  if (target == "ss") return system_result(ss(as<PresentedQO>(a, "quasi-order").truncate()));
  if (target == "finclass") return system_result(finclass(as<SetSystem>(a, "set system")));
  if (target == "image")
    return system_result(image(as<Relation>(a, "relation"), as<SetSystem>(b, "set system")));
  fail(ErrorCode::UnknownName, "unknown evaluation target '" + target + "'");
}

}  // namespace

extern "C" {

const char* wqo_version(void) { return "1.0.0"; }

const char* wqo_last_error(void) { return last_error.c_str(); }

void wqo_string_free(char* s) { std::free(s); }

wqo_status wqo_structure_parse(wqo_kind kind, const char* json_or_path, int truncate, wqo_structure** out) {
  return guarded([&] {
    need(json_or_path, "input");
    need(out, "output handle");
    *out = nullptr;
    const Json j = load_json(json_or_path);
    std::optional<int> n;
    if (truncate > 0) n = truncate;
    switch (kind) {
      case WQO_KIND_ORDER: *out = new wqo_structure{kind, parse_presented(j, n)}; return;
      case WQO_KIND_SYSTEM: *out = new wqo_structure{kind, parse_system(j, n)}; return;
      case WQO_KIND_RELATION: *out = new wqo_structure{kind, parse_relation(j)}; return;
      case WQO_KIND_BARRIER: *out = new wqo_structure{kind, parse_barrier(j, n)}; return;
    }
    fail(ErrorCode::InvalidInput, "unknown structure kind");
  });
}

void wqo_structure_free(wqo_structure* s) { delete s; }

wqo_kind wqo_structure_kind(const wqo_structure* s) { return s->kind; }

wqo_status wqo_eval(const char* target, const wqo_structure* first, const wqo_structure* second, char** out_json) {
  return guarded([&] {
    need(target, "target");
    need(out_json, "output");
    *out_json = dup(eval(target, first, second).dump());
  });
}

wqo_status wqo_profile(const char* system_json, int n1, int n2, char** out_json) {
  return guarded([&] {
    need(system_json, "system");
    need(out_json, "output");
    require(n1 >= 1 && n1 <= n2, ErrorCode::InvalidInput, "range must satisfy 1 <= N1 <= N2");
    const Json j = load_json(system_json);
    auto build = [&](int n) { return parse_system(j, n); };
    const DimProfile d = dim_profile(build, n1, n2);
    const FtProfile f = ft_profile(build, n1, n2);
    Json points = Json::array();
    std::string text;
    for (const auto& [n, v] : d.points) {
      points.push_back({n, v});
      text += (text.empty() ? "" : " ") + std::to_string(v);
    }
    Json out{{"dim", points},
             {"coherent", d.coherent},
             {"nondecreasing", d.nondecreasing},
             {"strictly_increasing", d.strictly_increasing},
             {"constant", d.constant},
             {"ft_growing_atoms", f.growing_atoms},
             {"value", text}};
    *out_json = dup(out.dump());
  });
}

wqo_status wqo_attest(const char* name, int n1, int n2, char** out_json) {
  return guarded([&] {
    need(name, "name");
    need(out_json, "output");
    const AttestationReport rep = attestation_suite(name, n1, n2);
    Json claims = Json::array();
    for (const auto& c : rep.claims)
      claims.push_back({{"claim", c.claim},
                        {"statement", c.statement},
                        {"status", c.report_only ? "report-only" : (c.passed ? "pass" : "fail")},
                        {"detail", c.detail}});
    Json out{{"entry", rep.name}, {"range", {rep.n1, rep.n2}}, {"status", rep.ok() ? "pass" : "fail"}, {"claims", claims}};
    *out_json = dup(out.dump());
  });
}

wqo_status wqo_check_run(const char* name, uint64_t seed, int size, char** out_json) {
  return guarded([&] {
    need(name, "check name");
    need(out_json, "output");
    CheckOptions o{seed, std::nullopt};
    if (size > 0) o.size = size;
    *out_json = dup(to_json(run_check(name, o)).dump());
  });
}

wqo_status wqo_suite_run(uint64_t seed, const char* only, int parallel, int timing, char** out_json) {
  return guarded([&] {
    need(out_json, "output");
    std::optional<std::string> filter;
    if (only != nullptr) filter = only;
    *out_json = dup(to_json(run_suite({seed, std::nullopt}, filter, parallel != 0), timing != 0).dump());
  });
}

wqo_status wqo_check_names(char** out) {
  return guarded([&] {
    need(out, "output");
    std::string s;
    for (const auto& c : check_registry()) s += (s.empty() ? "" : " ") + c.name;
    *out = dup(s);
  });
}

wqo_status wqo_ordinal_normalize(const char* a, char** out) {
  return guarded([&] {
    need(a, "ordinal");
    need(out, "output");
    *out = dup(render(parse_ordinal(a)));
  });
}

wqo_status wqo_ordinal_add(const char* a, const char* b, char** out) {
  return guarded([&] {
    need(a, "ordinal");
    need(b, "ordinal");
    need(out, "output");
    *out = dup(render(parse_ordinal(a) + parse_ordinal(b)));
  });
}

wqo_status wqo_ordinal_mul(const char* a, const char* b, char** out) {
  return guarded([&] {
    need(a, "ordinal");
    need(b, "ordinal");
    need(out, "output");
    *out = dup(render(parse_ordinal(a) * parse_ordinal(b)));
  });
}

wqo_status wqo_ordinal_compare(const char* a, const char* b, int* out) {
  return guarded([&] {
    need(a, "ordinal");
    need(b, "ordinal");
    need(out, "output");
    const auto c = ord_cmp(parse_ordinal(a), parse_ordinal(b));
    *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
  });
}

}  // extern "C"
