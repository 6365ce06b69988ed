#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "siglat/report.hpp"

using namespace siglat;

namespace {

PairReport analyze(const std::string& name, const std::string& partition) {
  for (const GroupSpec& s : builtin_corpus())
    if (s.name == name) {
      GroupWork gw = GroupWork::build(s.build());
      return analyze_pair(gw, parse_partition(partition));
    }
  REQUIRE(false);
  return {};
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SIGLAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "siglat_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = temp_dir() / name;
  std::ofstream out(path);
  out << text;
  out.close();
  return path.string();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("report JSON round-trip is a fixed point") {
  for (const char* name : {"S3", "Q8", "S4", "C2xC2"}) {
    for (const char* part : {"sigma0", "pi:2"}) {
      PairReport r = analyze(name, part);
      std::string once = report_to_json(r);
      std::string twice = report_to_json(report_from_json(once));
      CAPTURE(name);
      CHECK(once == twice);
    }
  }
  PairReport skip = analyze("A5", "pi:2");
  CHECK_FALSE(skip.sigma_full);
  CHECK(report_to_json(skip) ==
        report_to_json(report_from_json(report_to_json(skip))));
}

TEST_CASE("markdown summary") {
  std::vector<PairReport> rs = {analyze("S3", "sigma0"),
                                analyze("A5", "pi:2")};
  std::string md = reports_to_markdown(rs, 1234);
  CHECK(md.find("| S3 | 6 | sigma0 | yes |") != std::string::npos);
  CHECK(md.find("| A5 | 60 | pi:2 | no |") != std::string::npos);
  CHECK(md.find("skipped") != std::string::npos);
  CHECK(md.find("1234 ms") != std::string::npos);
  CHECK(reports_to_markdown(rs).find("ms") == std::string::npos);
}

TEST_CASE("sweep is deterministic and sorted") {
  std::vector<GroupSpec> mini;
  for (const GroupSpec& s : builtin_corpus())
    if (s.name == "S4" || s.name == "S3" || s.name == "Q8" ||
        s.name == "C2xC2")
      mini.push_back(s);
  std::vector<PrimePartition> parts = {parse_partition("sigma0"),
                                       parse_partition("pi:2")};
  auto a = run_sweep(mini, parts, Caps{}, 1);
  auto b = run_sweep(mini, parts, Caps{}, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(report_to_json(a[i]) == report_to_json(b[i]));
    if (i > 0)
      CHECK(std::tie(a[i - 1].group, a[i - 1].partition) <
            std::tie(a[i].group, a[i].partition));
  }
}

TEST_CASE("modularity findings") {
  std::vector<PairReport> rs = {analyze("Q8", "sigma0"),
                                analyze("S4", "sigma0"),
                                analyze("A5", "pi:2")};
  auto findings = hunt_modularity(rs);
  REQUIRE(findings.size() == 2);  // the non-sigma-full pair is dropped
  for (const auto& f : findings) CHECK(f.modular);
  std::string json = findings_to_json(findings);
  CHECK(json.find("\"findings\"") != std::string::npos);
  CHECK(json.find("Q8") != std::string::npos);
}

TEST_CASE("cli analyze exit codes and output") {
  std::string s3 =
      write_temp("s3.json",
                 R"json({"name":"S3","degree":3,"generators":["(1 2)","(1 2 3)"]})json");
  RunResult ok = run_cli("analyze --group " + s3 + " --partition sigma0");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("\"schema_version\": 1") != std::string::npos);
  CHECK(ok.output.find("\"verdict\": \"consistent\"") != std::string::npos);

  RunResult bad_json = run_cli(
      "analyze --group " + write_temp("bad.json", "{nope") + "");
  CHECK(bad_json.exit_code == 2);

  RunResult bad_part =
      run_cli("analyze --group " + s3 + " --partition pi:4");
  CHECK(bad_part.exit_code == 2);

  RunResult missing = run_cli("analyze --group /nonexistent.json");
  CHECK(missing.exit_code == 2);

  RunResult usage = run_cli("frobnicate");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("cli cap handling and SIGLAT_MAX_ORDER") {
  std::string a5 =
      write_temp("a5.json",
                 R"json({"name":"A5","degree":5,"generators":["(1 2 3 4 5)","(1 2 3)"]})json");
  RunResult capped =
      run_cli("--max-order 10 analyze --group " + a5 + "");
  CHECK(capped.exit_code == 0);  // reported, not fatal, without --strict
  CHECK(capped.output.find("order cap exceeded") != std::string::npos);

  RunResult strict =
      run_cli("--max-order 10 --strict analyze --group " + a5 + "");
  CHECK(strict.exit_code == 3);

  std::string cmd = std::string("SIGLAT_MAX_ORDER=10 ") + SIGLAT_CLI_PATH +
                    " --strict analyze --group " + a5 + " 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("cli analyze writes report files") {
  auto dir = temp_dir() / "out";
  std::filesystem::remove_all(dir);
  std::string s3 =
      write_temp("s3b.json",
                 R"json({"name":"S3","degree":3,"generators":["(1 2)","(1 2 3)"]})json");
  RunResult r = run_cli("analyze --group " + s3 +
                        " --partition pi:2,3 --out " + dir.string());
  CHECK(r.exit_code == 0);
  auto file = dir / "S3_pi_2_3.json";
  REQUIRE(std::filesystem::exists(file));
  PairReport back = report_from_json(slurp(file));
  CHECK(back.group == "S3");
  CHECK(back.partition == "pi:2,3");
}
