#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wqo/wqo.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Owned {
  char* s = nullptr;
  ~Owned() { wqo_string_free(s); }
};

struct Handle {
  wqo_structure* h = nullptr;
  ~Handle() { wqo_structure_free(h); }
};

// Thrown after printing a library error; maps to exit code 2.
struct InputError {};

void check(wqo_status st) {
  if (st == WQO_OK) return;
  std::cerr << "error: " << wqo_last_error() << "\n";
  throw InputError{};
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--range", "expected N1..N2");
  try {
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--range", "expected N1..N2 with integer bounds");
  }
}

void print_witnesses(const Json& witnesses, bool failing) {
  for (const auto& w : witnesses) std::cout << "    " << (failing ? "counterexample: " : "") << w.dump() << "\n";
}

void print_check_text(const Json& r) {
  std::cout << r["status"].get<std::string>() << "  " << r["check"].get<std::string>() << " [" << r["module"].get<std::string>()
            << "]  " << r["instances"].get<long long>() << " instances  "
            << static_cast<long long>(r.value("elapsed_ms", 0.0)) << " ms\n";
  std::cout << "    " << r["statement"].get<std::string>() << "\n";
  print_witnesses(r["witnesses"], r["status"] == "fail");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well quasi-order and elastic set system workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.set_version_flag("--version", std::string(wqo_version()));

  std::string target, system_in, order_in, barrier_in, relation_in;
  int truncate = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate dim, otp, ot, qo, ss, finclass or image");
  eval->add_option("target", target, "What to evaluate")
      ->required()
      ->check(CLI::IsMember({"dim", "otp", "ot", "qo", "ss", "finclass", "image"}));
  eval->add_option("--system", system_in, "Set system (inline JSON or file)");
  eval->add_option("--order", order_in, "Quasi-order (inline JSON or file)");
  eval->add_option("--barrier", barrier_in, "Barrier fragment (inline JSON or file)");
  eval->add_option("--relation", relation_in, "Witness relation (inline JSON or file)");
  eval->add_option("--truncate", truncate, "Override the truncation of presented inputs")->check(CLI::PositiveNumber);

  std::string check_name;
  std::uint64_t seed = 7;
  int size = 0;
  auto* chk = app.add_subcommand("check", "Run one named check");
  chk->add_option("name", check_name, "Check name")->required();
  chk->add_option("--seed", seed, "Seed for randomized instances");
  chk->add_option("--size", size, "Structural cap for the check")->check(CLI::PositiveNumber);

  std::string only;
  bool parallel = false;
  auto* suite = app.add_subcommand("suite", "Run every check");
  suite->add_option("--seed", seed, "Seed for randomized instances");
  suite->add_option("--only", only, "Restrict to one module or check");
  suite->add_flag("--parallel", parallel, "Run checks concurrently");

  std::string range = "3..7";
  auto* profile = app.add_subcommand("profile", "dim and thickness profiles across truncations");
  profile->add_option("--system", system_in, "Set system (inline JSON or file)")->required();
  profile->add_option("--range", range, "Truncations N1..N2");

  std::string entry;
  auto* attest = app.add_subcommand("attest", "Check a catalog entry's recorded facts across truncations");
  attest->add_option("name", entry, "Catalog entry")->required();
  attest->add_option("--range", range, "Truncations N1..N2");

  std::string ord_a, ord_add, ord_mul, ord_cmp;
  auto* ordinal = app.add_subcommand("ordinal", "Normalize, add, multiply or compare ordinals");
  ordinal->add_option("value", ord_a, "Ordinal, e.g. \"w^2*3 + 1\"")->required();
  auto* add_opt = ordinal->add_option("--plus", ord_add, "Add on the right");
  auto* mul_opt = ordinal->add_option("--times", ord_mul, "Multiply on the right");
  auto* cmp_opt = ordinal->add_option("--compare", ord_cmp, "Compare with another ordinal");
  add_opt->excludes(mul_opt)->excludes(cmp_opt);
  mul_opt->excludes(cmp_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (*eval) {
      auto parse = [&](wqo_kind kind, const std::string& in, const char* flag) {
        if (in.empty()) {
          std::cerr << "error: eval " << target << " needs " << flag << "\n";
          throw InputError{};
        }
        auto h = std::make_unique<Handle>();
        check(wqo_structure_parse(kind, in.c_str(), truncate, &h->h));
        return h;
      };
      std::unique_ptr<Handle> a, b;
      if (target == "dim" || target == "qo" || target == "finclass") a = parse(WQO_KIND_SYSTEM, system_in, "--system");
      else if (target == "otp" || target == "ss") a = parse(WQO_KIND_ORDER, order_in, "--order");
      else if (target == "ot") a = parse(WQO_KIND_BARRIER, barrier_in, "--barrier");
      else {
        a = parse(WQO_KIND_RELATION, relation_in, "--relation");
        b = parse(WQO_KIND_SYSTEM, system_in, "--system");
      }
      Owned out;
      check(wqo_eval(target.c_str(), a->h, b ? b->h : nullptr, &out.s));
      const Json r = Json::parse(out.s);
      if (json) {
        std::cout << r.dump() << "\n";
      } else {
        std::cout << r["value"].get<std::string>() << "\n";
        if (r.contains("witness") && !r["witness"].empty()) std::cout << "witness: " << r["witness"].dump() << "\n";
        if (r.contains("note") && !r["note"].get<std::string>().empty()) std::cout << "note: " << r["note"].get<std::string>() << "\n";
      }
      return kExitPass;
    }
    if (*chk) {
      Owned out;
      check(wqo_check_run(check_name.c_str(), seed, size, &out.s));
      const Json r = Json::parse(out.s);
      if (json) std::cout << r.dump() << "\n";
      else print_check_text(r);
      return r["status"] == "fail" ? kExitFail : kExitPass;
    }
    if (*suite) {
      Owned out;
      check(wqo_suite_run(seed, only.empty() ? nullptr : only.c_str(), parallel ? 1 : 0, 1, &out.s));
      const Json r = Json::parse(out.s);
      if (json) {
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << "seed " << r["seed"].get<std::uint64_t>() << "\n\n";
        bool header = false;
        for (const auto& c : r["checks"])
          if (c["status"] != "report-only") print_check_text(c);
        for (const auto& c : r["checks"])
          if (c["status"] == "report-only") {
            if (!header) std::cout << "\n-- report-only (never affects the exit code) --\n";
            header = true;
            print_check_text(c);
          }
        const auto& s = r["summary"];
        std::cout << "\n" << s["pass"] << " pass, " << s["fail"] << " fail, " << s["report-only"] << " report-only\n";
      }
      return r["status"] == "fail" ? kExitFail : kExitPass;
    }
    if (*profile || *attest) {
      const auto [n1, n2] = parse_range(range);
      Owned out;
      if (*profile) check(wqo_profile(system_in.c_str(), n1, n2, &out.s));
      else check(wqo_attest(entry.c_str(), n1, n2, &out.s));
      const Json r = Json::parse(out.s);
      if (json) {
        std::cout << r.dump() << "\n";
      } else if (*profile) {
        std::cout << "dim " << r["value"].get<std::string>() << "\n";
        for (const char* k : {"coherent", "nondecreasing", "strictly_increasing", "constant"})
          std::cout << k << " " << (r[k].get<bool>() ? "yes" : "no") << "\n";
        std::cout << "atoms with growing thickness " << r["ft_growing_atoms"].dump() << "\n";
      } else {
        for (const auto& c : r["claims"]) {
          std::cout << c["status"].get<std::string>() << "  " << c["claim"].get<std::string>() << ": "
                    << c["statement"].get<std::string>();
          if (!c["detail"].get<std::string>().empty()) std::cout << " (" << c["detail"].get<std::string>() << ")";
          std::cout << "\n";
        }
      }
      if (*attest) return r["status"] == "fail" ? kExitFail : kExitPass;
      return kExitPass;
    }
    if (*ordinal) {
      Owned out;
      if (*add_opt) check(wqo_ordinal_add(ord_a.c_str(), ord_add.c_str(), &out.s));
      else if (*mul_opt) check(wqo_ordinal_mul(ord_a.c_str(), ord_mul.c_str(), &out.s));
      else if (*cmp_opt) {
        int c = 0;
        check(wqo_ordinal_compare(ord_a.c_str(), ord_cmp.c_str(), &c));
        const char* word = c < 0 ? "<" : (c > 0 ? ">" : "=");
        if (json) std::cout << Json{{"compare", c}}.dump() << "\n";
        else std::cout << word << "\n";
        return kExitPass;
      } else check(wqo_ordinal_normalize(ord_a.c_str(), &out.s));
      if (json) std::cout << Json{{"value", out.s}}.dump() << "\n";
      else std::cout << out.s << "\n";
      return kExitPass;
    }
  } catch (const InputError&) {
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
