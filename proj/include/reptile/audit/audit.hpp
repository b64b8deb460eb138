#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reptile/fiedler/fiedler.hpp"
#include "reptile/io/json.hpp"

namespace reptile {

/// One machine-checked step of the non-existence argument for k-reptile tetrahedra.
struct AuditStep {
  std::string id;
  std::string claim;
  Json inputs = Json::object();
  Json certificate = Json::object();
  std::string verdict;  ///< "pass", "fail" or "inapplicable"
  std::vector<std::string> notes;

  bool passed() const { return verdict == "pass"; }
};

/// Result of re-validating a certificate from its recorded inputs, by a method independent of the step.
struct CheckOutcome {
  bool ok = false;
  std::string detail;
};

struct AuditReport {
  std::int64_t k = 0;
  std::vector<AuditStep> steps;
  std::vector<CheckOutcome> checks;  ///< parallel to steps
  std::string conclusion;            ///< "excluded", "not excluded" or "Hill construction exists"
  Json annotation;                   ///< cube k: the verified Hill dissection
};

// Symbolic matrices in the indeterminates s, t, u over Q(phi).
GoldenMatrix tripod_matrix();
GoldenMatrix path_matrix();
GoldenMatrix multiples_matrix();
GoldenMatrix path_complement_matrix();
/// -(s^2 + t^2 + st + s + t - 1)(s - t/phi^2 + 1/phi)(t - s/phi^2 + 1/phi)
GoldenPoly path_det_product();
/// -phi s + t/phi - 1
GoldenPoly path_lambda1();

/// k x^3 - 1 has no rational root, so rho = k^(-1/3) has degree 3. Cubes are "inapplicable".
AuditStep rho_degree_step(std::int64_t k);
/// No quadratic (n11 n22 - n12 n21) rho^2 - (n11 + n22) rho + 1 vanishes at rho, plus a residual scan
/// over all 0 <= n_ij <= bound.
AuditStep two_length_step(std::int64_t k, int bound = 10);
AuditStep tripod_identity_step();
AuditStep multiples_case_step();
AuditStep path_complement_step();
AuditStep beta_constraints_step();
AuditStep path_det_factorization_step();
AuditStep bound_chain_step();
AuditStep exclude_pi_over_5_step();
AuditStep final_cases_step();

/// Step ids in report order.
const std::vector<std::string>& step_ids();
/// Runs one step by id; `k` feeds the k-dependent steps. Throws std::invalid_argument for an unknown id.
AuditStep run_step(const std::string& id, std::int64_t k = 2);

/// Independent checker: re-validates a step's certificate from its inputs without the search that
/// produced it (Laplace expansion instead of Leibniz, random rational evaluations, separate root
/// filtering, direct inequality checks).
CheckOutcome check_step(const AuditStep& step);

/// One report per k in [2, k_max]. Throws std::invalid_argument when k_max < 2.
std::vector<AuditReport> run_full_audit(std::int64_t k_max);

Json audit_step_json(const AuditStep& step, const CheckOutcome* check = nullptr);
Json audit_report_json(const AuditReport& report);
Json full_audit_json(const std::vector<AuditReport>& reports);

}  // namespace reptile
