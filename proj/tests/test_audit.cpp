#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "reptile/audit/audit.hpp"

using namespace reptile;

namespace {

const std::vector<AuditReport>& audit_to_8() {
  static const std::vector<AuditReport> reports = run_full_audit(8);
  return reports;
}

const AuditStep& shared(const std::string& id) {
  for (const auto& s : audit_to_8().front().steps)
    if (s.id == id) return s;
  throw std::logic_error("missing step " + id);
}

double dec(const Json& j) { return std::stod(j.get<std::string>()); }

}  // namespace

TEST_CASE("rho degree") {
  CHECK(rho_degree_step(2).verdict == "pass");
  CHECK(rho_degree_step(7).verdict == "pass");
  CHECK(rho_degree_step(7).certificate.at("candidates").size() == 4);
  CHECK(rho_degree_step(12).certificate.at("candidates").size() == 12);
  const AuditStep cube = rho_degree_step(8);
  CHECK(cube.verdict == "inapplicable");
  CHECK(cube.certificate.at("rational_root") == "1/2");
  CHECK(check_step(cube).ok);
  CHECK(check_step(rho_degree_step(6)).ok);
  CHECK_THROWS_AS(rho_degree_step(1), std::invalid_argument);
}

TEST_CASE("two length scan") {
  const AuditStep step = two_length_step(2, 10);
  CHECK(step.passed());
  CHECK(step.certificate.at("systems") == 14640);
  CHECK(step.certificate.at("excluded_degenerate") == 1);
  CHECK(dec(step.certificate.at("min_abs_residual")) == doctest::Approx(0.0074394854).epsilon(1e-8));
  CHECK(step.certificate.at("argmin") == Json::array({2, 1, 5, 8}));
  CHECK(check_step(step).ok);

  const AuditStep five = two_length_step(5, 6);
  CHECK(five.passed());
  CHECK(five.certificate.at("systems") == 7 * 7 * 7 * 7 - 1);
  CHECK(check_step(five).ok);

  CHECK(two_length_step(27).verdict == "inapplicable");

  AuditStep tampered = step;
  tampered.certificate["min_abs_residual"] = "1.000000e-02";
  CHECK_FALSE(check_step(tampered).ok);
  tampered = step;
  tampered.certificate["argmin"] = Json::array({1, 1, 1, 1});
  CHECK_FALSE(check_step(tampered).ok);
}

TEST_CASE("tripod identity") {
  const AuditStep& step = shared("tripod_identity");
  CHECK(step.passed());
  CHECK(step.certificate.at("identity") == true);
  CHECK(step.certificate.at("spot_check").at("equal") == true);
  CHECK(step.certificate.at("negative_control").at("identity_holds") == false);
  CHECK(step.certificate.at("random_points").size() == 20);
  CHECK(check_step(step).ok);

  AuditStep tampered = step;
  tampered.inputs["matrix"][1][2] = golden_poly_json(GoldenPoly(0));
  tampered.inputs["matrix"][2][1] = golden_poly_json(GoldenPoly(0));
  CHECK_FALSE(check_step(tampered).ok);
}

TEST_CASE("multiples of the minimal angle") {
  const AuditStep& step = shared("multiples_case");
  CHECK(step.passed());
  CHECK(step.certificate.at("row_sum_matches") == true);
  CHECK(step.certificate.at("u_free") == true);
  const Json& n4 = step.certificate.at("bookkeeping")[1];
  CHECK(n4.at("n") == 4);
  CHECK(n4.at("admissible_m") == Json::array({3}));
  CHECK(n4.at("beta") == "3pi/4");
  CHECK(step.certificate.at("subcases").at("single_vertex").at("n") == 2);
  CHECK(step.certificate.at("instance").at("verified") == true);
  CHECK(check_step(step).ok);

  AuditStep tampered = step;
  tampered.certificate["combination"] = Json::array({1, 1, 0, 0});
  CHECK_FALSE(check_step(tampered).ok);
  tampered = step;
  tampered.certificate["bookkeeping"][1]["admissible_m"] = Json::array({2, 3});
  CHECK_FALSE(check_step(tampered).ok);
}

TEST_CASE("path with supplementary angles") {
  const AuditStep& step = shared("path_complement");
  CHECK(step.passed());
  const Json& numeric = step.certificate.at("numeric").at("row_sum");
  CHECK(numeric[0] == Json::array({"0", "0"}));
  CHECK(numeric[1] == Json::array({"-1/3", "0"}));
  CHECK(numeric[2] == Json::array({"-1/3", "0"}));
  CHECK(step.certificate.at("negative_control").at("row_sum_matches") == false);
  CHECK(check_step(step).ok);
}

TEST_CASE("beta constraints") {
  const AuditStep& step = shared("beta_constraints");
  CHECK(step.passed());
  CHECK(step.certificate.at("feasible") == Json::array({Json::array({1, 1})}));
  for (const auto& e : step.certificate.at("table")) {
    if (e.at("n1") == 1 && e.at("n2") == 2) CHECK(e.at("violates") == "beta1 + 2 beta2 > pi");
    if (e.at("n1") == 2 && e.at("n2") == 1) CHECK(e.at("violates") == "2 beta1 + beta2 > pi");
    if (e.at("n1") == 1 && e.at("n2") == 1) CHECK(e.at("x_range") == Json::array({"0", "1"}));
  }
  CHECK(check_step(step).ok);
}

TEST_CASE("path determinant factorization") {
  const AuditStep& step = shared("path_det_factorization");
  CHECK(step.passed());
  // The displayed product is det/phi^2; the step records that honestly.
  CHECK(step.certificate.at("literal_identity") == false);
  CHECK(step.certificate.at("scaled_identity") == true);
  CHECK(step.certificate.at("lambda1_root") == true);
  CHECK(step.certificate.at("lambda1_spot").at("lambda1") == Json::array({"-1/2", "0"}));
  CHECK(step.certificate.at("lambda1_spot").at("char_poly_value") == Json::array({"0", "0"}));
  const Json& spot = step.certificate.at("spot_check");
  const GoldenNumber det = golden_from_json(spot.at("det")), product = golden_from_json(spot.at("product"));
  CHECK(det == GoldenNumber(Rational(1), Rational(1)) * product);
  CHECK(check_step(step).ok);

  AuditStep tampered = step;
  tampered.certificate["literal_identity"] = true;
  CHECK_FALSE(check_step(tampered).ok);
  tampered = step;
  tampered.inputs["lambda1"] = golden_poly_json(path_lambda1() + GoldenPoly(1));
  CHECK_FALSE(check_step(tampered).ok);
}

TEST_CASE("bound chain") {
  const AuditStep& step = shared("bound_chain");
  CHECK(step.passed());
  const Json& s_min = step.certificate.at("s_min");
  CHECK(s_min.at("value") == Json::array({"2", "-3/2"}));
  CHECK(dec(s_min.at("decimal")) == doctest::Approx(-0.427051).epsilon(1e-6));
  CHECK(s_min.at("enclosed") == true);
  CHECK(s_min.at("above_rounded_constant") == true);
  CHECK(step.certificate.at("beta2_over_pi").at("decided") == true);
  CHECK(step.certificate.at("n_values") == Json::array({3, 4, 5}));
  CHECK(check_step(step).ok);

  AuditStep tampered = step;
  tampered.certificate["s_min"]["value"] = Json::array({"-1/2", "0"});
  CHECK_FALSE(check_step(tampered).ok);
}

TEST_CASE("excluding pi/5") {
  const AuditStep& step = shared("exclude_pi_over_5");
  CHECK(step.passed());
  CHECK(step.certificate.at("lambda1_at_boundary") == Json::array({"0", "0"}));
  CHECK(step.certificate.at("slope_in_s") == Json::array({"0", "-1"}));
  CHECK(step.certificate.at("negative_control").at("forces_positive") == false);
  CHECK(check_step(step).ok);
}

TEST_CASE("final cases") {
  const AuditStep& step = shared("final_cases");
  CHECK(step.passed());
  const Json& cases = step.certificate.at("cases");
  REQUIRE(cases.size() == 3);
  const std::vector<std::vector<double>> expected{{-0.618034, 0.618034}, {-0.427051, 0.151388}, {-0.347943, -0.131441}};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(cases[i].at("count") == 2);
    CHECK(cases[i].at("decimals_match") == true);
    std::vector<double> got;
    for (const auto& r : cases[i].at("roots")) {
      got.push_back(dec(r.at("decimal")));
      CHECK(r.at("rational_angle").is_null());
      for (const auto& [deg, gap] : r.at("min_catalog_gap").items()) CHECK(dec(gap) > 0);
    }
    std::sort(got.begin(), got.end());
    std::vector<double> want = expected[i];
    std::sort(want.begin(), want.end());
    for (std::size_t j = 0; j < 2; ++j) CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-5));
  }
  CHECK(check_step(step).ok);

  AuditStep tampered = step;
  tampered.certificate["cases"][1]["roots"].erase(0);
  CHECK_FALSE(check_step(tampered).ok);
}

TEST_CASE("full audit") {
  CHECK_THROWS_AS(run_full_audit(1), std::invalid_argument);
  CHECK_THROWS_AS(run_step("no_such_step"), std::invalid_argument);
  const auto& reports = audit_to_8();
  REQUIRE(reports.size() == 7);
  for (const auto& r : reports) {
    CHECK(r.steps.size() == step_ids().size());
    for (std::size_t i = 0; i < r.steps.size(); ++i) CHECK(r.steps[i].id == step_ids()[i]);
    if (r.k == 8) {
      CHECK(r.conclusion == "Hill construction exists");
      CHECK(r.annotation.at("m") == 2);
      CHECK(r.annotation.at("verification").at("all_ok") == true);
      CHECK(r.annotation.at("verification").at("pieces") == 8);
    } else {
      CHECK(r.conclusion == "excluded");
      for (const auto& c : r.checks) CHECK(c.ok);
    }
  }
  const std::string first = full_audit_json(reports).dump(2);
  const std::string second = full_audit_json(run_full_audit(8)).dump(2);
  CHECK(first == second);
  CHECK(first.find("rational multiple of pi") != std::string::npos);
}
