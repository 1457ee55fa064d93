#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CSEXT_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const Run& r, const std::string& needle) { return r.out.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("ext queries") {
  auto r = run("ext gl --p 3 --lambda 2,2,0,0 --mu 1,1,1,1");
  CHECK(r.code == 0);
  CHECK(r.out == "dim=1 witness=(1,1,1,1)\n");

  r = run("ext gl --p 3 --lambda 2,2,0,0 --mu 2,2,0,0");
  CHECK(r.code == 0);
  CHECK(r.out == "dim=0\n");

  r = run("ext sym --p 2 --lambda 2,2 --mu 4");
  CHECK(r.code == 2);
  CHECK(has(r, "CharTwo"));

  r = run("ext sym --p 3 --lambda 2,2 --mu 4");
  CHECK(r.code == 0);
  CHECK(r.out == "dim=1 witness=(4)\n");

  r = run("ext gl --p 3 --lambda 4,1,0,0,0 --mu 2,1,1,1,0");
  CHECK(r.code == 2);
  CHECK(has(r, "NotPRestricted"));

  r = run("ext gl --p 3 --lambda 2,2,0,0 --mu 1,1,1,1 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("dim") == 1);
}

TEST_CASE("inspect") {
  auto r = run("inspect --p 7 --weight 5,5,5,4,3,1,1,1");
  CHECK(r.code == 0);
  CHECK(has(r, "big=true"));
  CHECK(has(r, "hat=(5,4,4,4,3,2,2,1)"));

  r = run("inspect --p 3 --partition 2,2");
  CHECK(r.code == 0);
  CHECK(has(r, "chi=2"));
  CHECK(has(r, "big=true"));
  CHECK(has(r, "tilde=(4)"));

  r = run("inspect --p 3 --partition 3,1");
  CHECK(r.code == 0);
  CHECK(has(r, "chi=4"));
  CHECK(has(r, "cs=false"));
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 1);
  CHECK(run("ext gl --p 4 --lambda 1,0 --mu 1,0").code == 1);
  CHECK(run("ext gl --p 3 --lambda 1,x --mu 1,0").code == 1);
  CHECK(run("ext gl --p 3 --lambda 1,0 --mu 1,0,0").code == 1);
  CHECK(run("inspect --p 3").code == 1);
  CHECK(run("inspect --p 3 --partition 1,2").code == 1);
  CHECK(run("verify sym --p 3 --m 9").code == 1);
  CHECK(run("no-such-command").code == 1);
  CHECK(run("ext sym --p 3 --lambda 2,2 --mu 4 --format csv").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify and table") {
  auto r = run("verify sym --p 3 --m 4");
  CHECK(r.code == 0);
  CHECK(has(r, "mismatches=0"));

  r = run("verify comb --p 2,3,5,7 --n 8 --max-entry 6");
  CHECK(r.code == 0);
  CHECK(has(r, "mismatches=0"));

  r = run("table --p 3 --m 5");
  CHECK(r.code == 0);
  CHECK(has(r, "(5) chi=1 cs=true"));
  CHECK(has(r, "(3,2) chi=3 cs=true big=true -> (4,1)"));
  CHECK_FALSE(has(r, "(4,1) chi"));
}

TEST_CASE("verify writes reports and uses the cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "csext-cli-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto report = dir / "report.json";
  auto r = run("verify sym --p 3,5 --m 4,5 --format json --threads 2 --cache-dir " + (dir / "cache").string() +
               " --output " + report.string());
  CHECK(r.code == 0);
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  CHECK(j.at("summary").at("mismatches") == 0);
  CHECK(j.at("rows").size() > 10);
  CHECK(std::filesystem::exists(dir / "cache" / "p3_2-2.spc"));

  r = run("verify sym --p 3 --m 4 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("check,", 0) == 0);
  std::filesystem::remove_all(dir);
}
