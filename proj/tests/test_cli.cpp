#include "doctest.h"
#include "support.hpp"

#include "schottky/certificate.hpp"
#include "schottky/schedule.hpp"

#include <json.hpp>

#include <regex>

using namespace schottky;
using test_support::read_file;
using test_support::run;
using test_support::write_file;

namespace {

std::string cli(const std::string& args) { return std::string(SCHOTTKY_CLI_PATH) + " " + args; }

std::size_t count_circles(const std::string& svg) {
  const std::regex circle("<circle ");
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(svg.begin(), svg.end(), circle),
                                                std::sregex_iterator()));
}

}  // namespace

TEST_CASE("schedule subcommand") {
  const auto dir = test_support::scratch_dir("cli-schedule");
  const auto path = dir / "s6.json";
  REQUIRE(run(cli("schedule --paper --count 6 --out " + path.string())).exit_code == 0);
  const std::string text = read_file(path);
  const auto s = schedule_from_json(text);
  CHECK(s.size() == 6);
  CHECK(s.entry(1).center == 0);
  CHECK(s.entry(1).radius == Rational(1, 4));
  CHECK(validate_schedule(s).empty());
  CHECK(s == paper_schedule(6));

  const auto one = run(cli("schedule --paper --count 1"));
  CHECK(one.exit_code == 0);
  CHECK(schedule_from_json(one.output).size() == 1);

  CHECK(run(cli("schedule --count 0")).exit_code == 2);
  CHECK(run(cli("schedule --count 3 --out /nonexistent-dir/x.json")).exit_code == 3);
}

TEST_CASE("certify subcommand exit codes") {
  const auto dir = test_support::scratch_dir("cli-certify");
  const auto out = dir / "cert.json";
  const auto ok = run(cli("certify --k 2 --alpha 1/4 --m 6 --n 4 --out " + out.string()));
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("verdict: certified") != std::string::npos);
  const std::string text = read_file(out);
  CHECK(nlohmann::json::parse(text)["verdict"] == "certified");
  CHECK(verify_certificate_json(text).empty());

  const auto bad = run(cli("certify --k 2 --alpha 1/100"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("verdict: not certified") != std::string::npos);
  CHECK(bad.output.find("center_control") != std::string::npos);

  CHECK(run(cli("certify --alpha 0")).exit_code == 2);
  CHECK(run(cli("certify --alpha 3/2")).exit_code == 2);
  CHECK(run(cli("certify --alpha abc")).exit_code == 2);
  CHECK(run(cli("certify --m 1")).exit_code == 2);
  CHECK(run(cli("certify --backend hiprec:32")).exit_code == 2);
  CHECK(run(cli("certify --bogus")).exit_code == 2);
  CHECK(run(cli("certify --schedule /nonexistent/schedule.json")).exit_code == 3);
}

TEST_CASE("certify with a user schedule file") {
  const auto dir = test_support::scratch_dir("cli-user");
  const auto path = dir / "user.json";
  write_file(path, R"({"model":"upper-half-plane","provenance":"user","entries":[
    {"i":1,"c":"0","r":"1/1048576"},{"i":2,"c":"100","r":"1/1048576"},
    {"i":3,"c":"10000","r":"1/1048576"},{"i":4,"c":"1000000","r":"1/1048576"}]})");
  const auto r = run(cli("certify --schedule " + path.string() + " --k 1 --m 3 --n 2 --alpha 1/2"));
  // Only a closed-form tail earns "certified" and exit 0.
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
  CHECK(r.output.find("verdict: window-only") != std::string::npos);

  const auto bad = dir / "bad.json";
  write_file(bad, R"({"model":"upper-half-plane","provenance":"user","entries":[
    {"i":1,"c":"0","r":"1"},{"i":2,"c":"1","r":"1"}]})");
  CHECK(run(cli("certify --schedule " + bad.string() + " --k 0 --m 2")).exit_code == 2);
}

TEST_CASE("config file precedence") {
  const auto dir = test_support::scratch_dir("cli-config");
  const auto cfg = dir / "cfg.json";
  write_file(cfg, R"({"subcommand":"certify","k":2,"alpha":"1/100"})");
  CHECK(run(cli("certify --config " + cfg.string())).exit_code == 1);
  // Flags win over the file.
  CHECK(run(cli("certify --config " + cfg.string() + " --alpha 1/4")).exit_code == 0);

  const auto unknown = dir / "unknown.json";
  write_file(unknown, R"({"colour":"red"})");
  CHECK(run(cli("certify --config " + unknown.string())).exit_code == 2);

  const auto other = dir / "other.json";
  write_file(other, R"({"subcommand":"render"})");
  CHECK(run(cli("certify --config " + other.string())).exit_code == 2);

  const auto broken = dir / "broken.json";
  write_file(broken, "{");
  CHECK(run(cli("certify --config " + broken.string())).exit_code == 2);
  CHECK(run(cli("certify --config " + (dir / "missing.json").string())).exit_code == 3);
}

TEST_CASE("estimate subcommand") {
  const auto r = run(cli("estimate --k 2 --m 4 --n 3"));
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,alpha_n,residual");
  std::vector<double> alphas;
  double slope = -1;
  while (std::getline(lines, line)) {
    if (line.rfind("box_slope,", 0) == 0) {
      slope = std::stod(line.substr(10));
      continue;
    }
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    alphas.push_back(std::stod(line.substr(first + 1, second - first - 1)));
  }
  REQUIRE(alphas.size() == 3);
  CHECK(alphas[1] <= alphas[0]);
  CHECK(alphas[2] <= alphas[1]);
  CHECK(slope >= 0);
  CHECK(slope <= 0.35);

  // Unit radii leave level one without a root; the failure is reported on its row.
  const auto dir = test_support::scratch_dir("cli-estimate");
  const auto path = dir / "unit.json";
  write_file(path, R"({"model":"upper-half-plane","provenance":"user","entries":[
    {"i":1,"c":"0","r":"1"},{"i":2,"c":"10","r":"1"}]})");
  const auto unit = run(cli("estimate --schedule " + path.string() + " --k 0 --m 2 --n 2 --box-depth 2"));
  CHECK(unit.exit_code == 0);
  CHECK(unit.output.find("\n1,error,") != std::string::npos);
  CHECK(unit.output.find("\n2,0.") != std::string::npos);
  CHECK(run(cli("estimate --m 1")).exit_code == 2);
}

TEST_CASE("render subcommand") {
  const auto d1 = run(cli("render --k 2 --m 3 --depth 1"));
  REQUIRE(d1.exit_code == 0);
  CHECK(count_circles(d1.output) == 3);
  const auto d2 = run(cli("render --k 2 --m 3 --depth 2"));
  CHECK(count_circles(d2.output) == 3 + 6);
  CHECK(d2.output.find("<svg") != std::string::npos);
  CHECK(d2.output.find("tiny") != std::string::npos);
  CHECK(run(cli("render --k 2 --m 3 --depth 2")).output == d2.output);
  CHECK(run(cli("render --depth 6")).exit_code == 2);
}

TEST_CASE("explore subcommand") {
  const auto dir = test_support::scratch_dir("cli-explore");
  const auto summary = dir / "summary.json";
  const auto profile = dir / "profile.csv";
  const auto periodic = run(cli("explore --word 1,2,1,2 --periodic --out " + profile.string() +
                                " --summary " + summary.string()));
  CHECK(periodic.exit_code == 0);
  const auto doc = nlohmann::json::parse(read_file(summary));
  CHECK(doc["classification"] == "recurrent-consistent");
  CHECK(read_file(profile).rfind("t,D_t,ball_n\n", 0) == 0);

  CHECK(run(cli("explore --word 1,1")).exit_code == 2);
  CHECK(run(cli("explore --word 1,2,1 --periodic")).exit_code == 2);
  CHECK(run(cli("explore")).exit_code == 2);
}
