#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wqo/qorder.hpp"
#include "wqo/setsys.hpp"

namespace wqo {

// F({i,j}) = {i} | (j, N) as a map from pairs into (L1|N, reverse inclusion).
struct PairMap {
  PairTable table;
  QuasiOrder target;
  SetSystem members;  // the atoms of target, in order
};

using CatalogStructure = std::variant<SetSystem, PresentedQO, PairMap>;

const std::vector<std::string>& catalog_names();

// Window-N piece of a named structure. Set systems are truncated as
// {A & [0, N)} with the empty set dropped, which keeps every entry coherent:
// build(name, N) = restrict_prefix(build(name, N + 1), N).
CatalogStructure build(const std::string& name, int n);

SetSystem build_system(const std::string& name, int n);
PresentedQO build_order(const std::string& name, int n);
PairMap build_pair_map(int n);

struct Attestation {
  std::string claim;
  std::string statement;  // the analytic fact being sampled
  bool report_only = false;
  bool passed = true;
  std::string detail;
};

struct AttestationReport {
  std::string name;
  int n1 = 0, n2 = 0;
  std::vector<Attestation> claims;

  bool ok() const;
};

// Limit properties (qo shape, antichains) are read on [0, N - 1) so the top
// element of the window does not distort them.
AttestationReport attestation_suite(const std::string& name, int n1, int n2);

}  // namespace wqo
