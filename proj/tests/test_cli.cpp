#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "reptile/io/json.hpp"

using namespace reptile;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("reptile_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string bin() {
  const char* env = std::getenv("REPTILE_FORGE_BIN");
  REQUIRE_MESSAGE(env != nullptr, "REPTILE_FORGE_BIN is not set");
  return env;
}

/// Runs `reptile-forge <args>` through sh; `args` may pipe back into the binary as "$B".
/// `env` is an optional VAR=value exported first.
Run run(const std::string& args, const std::string& stdin_text = "", const std::string& env = "") {
  const fs::path in = scratch() / "stdin", out = scratch() / "stdout", err = scratch() / "stderr";
  const fs::path script = scratch() / "run.sh";
  spit(in, stdin_text);
  std::string body = "B='" + bin() + "'\n";
  if (!env.empty()) body += "export " + env + "\n";
  body += "{ \"$B\" " + args + "; } < '" + in.string() + "' > '" + out.string() + "' 2> '" + err.string() + "'\n";
  spit(script, body);
  const int status = std::system(("sh '" + script.string() + "'").c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

int count_lines(const std::string& text, const std::string& prefix) {
  int n = 0;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

const char* kRegular = "--upper 1/3,1/3,1/3,1/3,1/3,1/3";

}  // namespace

TEST_CASE("fiedler exit codes") {
  CHECK(run(std::string("fiedler check ") + kRegular).code == 0);
  // tripod with 1 - 2s - 3t^2 != 0
  const Run tripod = run("fiedler check --upper 1/2,1/2,1/2,1/5,1/5,1/5");
  CHECK(tripod.code == 1);
  CHECK(parse_json_text(tripod.out).at("failure") == "nonsingular");
  CHECK(tripod.err.find("not realizable") != std::string::npos);
  // the symmetric pyramid: s = 1/8 at t = 1/2
  CHECK(run("fiedler check --upper 1/2,1/2,1/2,1/8,1/8,1/8").code == 0);

  const Run rec = run(std::string("fiedler reconstruct ") + kRegular);
  REQUIRE(rec.code == 0);
  const Json j = parse_json_text(rec.out);
  CHECK(j.at("cosine_residual").get<double>() < 1e-10);
  CHECK(j.at("simplex").at("mode") == "certified_float");

  // JSON input from stdin, radical shorthand accepted
  const std::string doc = R"({"dim": 2, "cos": [[-1, "1/2", "1/2"], ["1/2", -1, "1/2"], ["1/2", "1/2", -1]]})";
  CHECK(run("fiedler check -", doc).code == 0);
  const std::string golden = R"({"dim": 2, "cos": [[-1, "sqrt(2)/2", "0"], ["sqrt(2)/2", -1, "sqrt(2)/2"], ["0", "sqrt(2)/2", -1]]})";
  CHECK(run("fiedler check -", golden).code == 0);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("hill subdivide --frobnicate").code == 2);
  CHECK(run("hill subdivide --m 1").code == 2);
  spit(scratch() / "m.json", "{}");
  CHECK(run("fiedler check " + (scratch() / "m.json").string() + " " + kRegular).code == 2);  // exclusive
  const Run bad = run("fiedler check -", "{\n  \"dim\": 3,\n  \"cos\": [1, ]\n}");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(run("fiedler check -", R"({"dim": 1, "cos": [[-1, 0.5], [0.5, -1]]})").code == 2);  // float entries
  CHECK(run("fiedler check --upper 1/2,1/2").code == 2);
  CHECK(run("fiedler check --upper \"1/2,sqrt(-1),0,0,0,0\"").code == 2);
  CHECK(run("hill verify " + (scratch() / "missing.json").string()).code == 2);
  CHECK(run("audit step no_such_step").code == 2);
  CHECK(run("audit run --kmax 1").code == 2);
  CHECK(run(std::string("fiedler check ") + kRegular, "", "REPTILE_FORGE_PRECISION=nonsense").code == 2);
  CHECK(run(std::string("fiedler check ") + kRegular, "", "REPTILE_FORGE_PRECISION=1e-40").code == 0);
  const Run help = run("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("audit") != std::string::npos);
}

TEST_CASE("hill pipeline") {
  const Run piped = run("hill subdivide --dim 3 --m 2 | \"$B\" hill verify -");
  CHECK(piped.code == 0);
  const Json report = parse_json_text(piped.out);
  CHECK(report.at("all_ok") == true);
  CHECK(report.at("pieces") == 8);
  CHECK(report.at("exact") == true);

  const Run sub = run("hill subdivide --dim 2 --m 3");
  REQUIRE(sub.code == 0);
  Json doc = parse_json_text(sub.out);
  CHECK(doc.at("pieces").size() == 9);
  // round trip through the reader
  CHECK(subdivision_json(subdivision_from_json(doc)).dump() == doc.dump());

  doc["pieces"].erase(3);
  CHECK(run("hill verify -", doc.dump()).code == 1);

  CHECK(run("hill subdivide --dim 3 --m 2 --cos 1/2 | \"$B\" hill verify -").code == 0);
  CHECK(run("hill subdivide --dim 3 --m 2 --cos \"(sqrt(5)-1)/4\" | \"$B\" hill verify -").code == 0);

  const Run gen = run("hill generate --dim 4 --out " + (scratch() / "s4.json").string());
  CHECK(gen.code == 0);
  const Json s4 = parse_json_text(slurp(scratch() / "s4.json"));
  CHECK(s4.at("dim") == 4);
  CHECK(simplex_json(simplex_from_json(s4)).dump() == s4.dump());

  const Run grow = run("hill grow --dim 3 --m 2 --generations 2");
  CHECK(grow.code == 0);
  CHECK(parse_json_text(grow.out).at("cells") == 64);
}

TEST_CASE("obj export") {
  const fs::path obj = scratch() / "eight.obj";
  CHECK(run("hill subdivide --dim 3 --m 2 --obj " + obj.string()).code == 0);
  const std::string text = slurp(obj);
  CHECK(count_lines(text, "f ") == 32);
  CHECK(count_lines(text, "v ") <= 32);
  CHECK(count_lines(text, "g ") == 8);

  const Run single = run("hill generate --dim 3 | \"$B\" export -");
  CHECK(single.code == 0);
  CHECK(count_lines(single.out, "f ") == 4);
  CHECK(count_lines(single.out, "v ") == 4);

  const Run from_sub = run("hill subdivide --dim 3 --m 2 | \"$B\" export -");
  CHECK(from_sub.code == 0);
  CHECK(count_lines(from_sub.out, "f ") == 32);

  const fs::path grown = scratch() / "grown.obj";
  CHECK(run("hill grow --dim 3 --m 2 --generations 2 --obj " + grown.string()).code == 0);
  CHECK(count_lines(slurp(grown), "f ") == 256);

  CHECK(run("hill generate --dim 2 | \"$B\" export -").code == 2);
  CHECK(run("hill grow --dim 2 --m 2 --obj " + (scratch() / "x.obj").string()).code == 2);
}

TEST_CASE("angles") {
  const Run c = run("angles classify \"(sqrt(5)-1)/4\"");
  CHECK(c.code == 0);
  CHECK(parse_json_text(c.out).at("rational_angle") == "2pi/5");
  CHECK(parse_json_text(run("angles classify \"phi - 1\"").out).at("rational_angle").is_null());
  const Run cat = run("angles catalog --degree 4");
  CHECK(cat.code == 0);
  CHECK(parse_json_text(cat.out).at("count") == 20);
}

TEST_CASE("audit") {
  const Run step = run("audit step two_length --k 7");
  CHECK(step.code == 0);
  const Json j = parse_json_text(step.out);
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("checker").at("ok") == true);
  CHECK(parse_json_text(run("audit step rho_degree --k 27").out).at("verdict") == "inapplicable");

  const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
  const Run first = run("audit run --kmax 8 --json " + a.string());
  CHECK(first.code == 0);
  CHECK(run("audit run --kmax 8 --json " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  const Json report = parse_json_text(slurp(a));
  REQUIRE(report.at("reports").size() == 7);
  for (const auto& r : report.at("reports")) {
    if (r.at("k") == 8) CHECK(r.at("conclusion") == "Hill construction exists");
    else CHECK(r.at("conclusion") == "excluded");
  }
  CHECK(first.err.find("k = 7: excluded") != std::string::npos);
}
