#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semih/block_matrices.hpp"

namespace semih {

enum class OperatorClass {
  Generic,
  ASelfadjoint,
  APositive,
  ANormal,
  AIsometry,
  AUnitary,
  Nilpotent,
  CommutingPair,
  DoubleCommutingPair,
};

std::string to_string(OperatorClass c);
OperatorClass operator_class_from_string(const std::string& s);

/// Deterministic instance recipe: same spec, same bits.
struct InstanceSpec {
  std::uint64_t seed = 0;
  int dim = 2;
  int rank = 2;
  std::vector<OperatorClass> classes;
};

struct Instance {
  SemiInnerSpace space;
  std::vector<CMatrix> ops;
  InstanceSpec spec;
};

/// Builds A = Q diag(d, 0) Q^* with log-uniform d in [1e-2, 1e2] and the
/// requested operators in A's eigenbasis (block recipes derived from the
/// Douglas condition), then verifies every advertised class via classify.
Instance generate(const InstanceSpec& spec);

struct SlackPolicy {
  double eps_abs = 1e-9;
  double eps_rel = 1e-7;
};

/// One inequality evaluation. For one-sided checks pass means
/// lhs <= rhs + slack (margin = rhs - lhs >= -slack); equality checks
/// demand |margin| <= slack.
struct CheckResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double slack = 0.0;
  bool pass = false;
  bool two_sided = false;
  InstanceSpec instance;
  std::map<std::string, double> aux;
  std::string note;
};

struct CheckDef {
  std::string name;
  std::vector<OperatorClass> classes;
  bool two_sided = false;
};

const std::vector<CheckDef>& check_registry();
bool is_registered_check(const std::string& name);

CheckResult run_check(const std::string& name, const Instance& inst,
                      const EngineParams& params = {}, const SlackPolicy& slack = {});

struct CampaignConfig {
  std::vector<int> dims = {2, 3, 4, 6, 8};
  std::vector<std::string> ranks = {"full", "n-1", "half"};
  int trials_per_check = 200;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;  // empty = all registered checks
  SlackPolicy slack;
  EngineParams engine;
  int threads = 0;  // 0 = hardware concurrency
};

struct CheckStats {
  std::string name;
  int trials = 0;
  int failures = 0;
  double min_margin = 0.0;
  double mean_margin = 0.0;
  CheckResult worst;
};

struct Report {
  CampaignConfig config;
  std::string config_digest;
  std::vector<CheckStats> checks;
  int total_failures = 0;
};

/// Runs trials_per_check deterministic trials for every selected check,
/// cycling dims and rank policies. Failures are data, not exceptions.
Report campaign(const CampaignConfig& config);

/// The paper-level equality cases: A-normal upper sharpness, scaled-identity
/// nilpotent lower sharpness, A-selfadjoint norm equality, the involution
/// identity, and the swap-matrix radius equality.
std::vector<CheckResult> sharpness_scenarios(std::uint64_t seed = 7,
                                             const EngineParams& params = {});

} // namespace semih
