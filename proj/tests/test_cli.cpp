#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "quandlekit/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string &args)
{
  std::string cmd = std::string(QUANDLEKIT_CLI) + " " + args + " 2>/dev/null";
  Run r{-1, {}};
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0)
    r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path dir()
{
  static auto d = [] {
    auto p = std::filesystem::temp_directory_path() / "quandlekit-cli-test";
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
  }();
  return d;
}

std::string write(const std::string &name, const std::string &text)
{
  auto p = dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

} // namespace

TEST_CASE("cli: make and check")
{
  auto file = (dir() / "r5.json").string();
  CHECK(run("make dihedral 5 -o " + file).code == 0);
  auto r = run("--json check " + file);
  CHECK(r.code == 0);
  auto j = quandlekit::parse_json_text(r.out);
  CHECK(j["command"] == "check");
  CHECK(j.contains("outputs"));
  CHECK(j.contains("timing"));
  CHECK(run("check named:tetrahedral").code == 0);
}

TEST_CASE("cli: exit codes")
{
  CHECK(run("make alexander 6 2").code == 2);
  CHECK(run("make nosuchfamily 3").code == 2);
  CHECK(run("check " + write("ragged.json", R"({"table": [[0, 1], [0]]})")).code == 3);
  CHECK(run("check " + write("range.json", R"({"table": [[0, 5], [0, 1]]})")).code == 3);
  CHECK(run("check " + write("bad.json", "{oops")).code == 3);
  CHECK(run("check " + (dir() / "missing.json").string()).code == 3);
  auto axiom = run("--json check " + write("axiom.json", R"({"table": [[1, 0], [0, 1]]})"));
  CHECK(axiom.code == 4);
  CHECK(axiom.out.find("idempotence") != std::string::npos);
  CHECK(run("enumerate 7").code == 5);
  CHECK(run("enumerate 4").code == 0);
}

TEST_CASE("cli: ring isomorphism with the stored matrices")
{
  auto x = (dir() / "x.json").string(), y = (dir() / "y.json").string();
  CHECK(run("make named cex1-x -o " + x).code == 0);
  CHECK(run("make named cex1-y -o " + y).code == 0);
  auto r = run("--json iso " + x + " " + y + " --ring-domain F3 --matrix cex1");
  CHECK(r.code == 0);
  auto j = quandlekit::parse_json_text(r.out);
  CHECK(j["outputs"]["quandle"]["isomorphic"] == false);
  CHECK(j["outputs"]["ring"]["isomorphism"] == true);
  CHECK(run("iso " + x + " " + y + " --ring-domain F5 --matrix cex1").code == 1);
}

TEST_CASE("cli: delta and verify")
{
  auto r = run("--json delta --dihedral 5 --kmax 2");
  CHECK(r.code == 0);
  auto j = quandlekit::parse_json_text(r.out);
  for (const auto &e : j["outputs"]["series"])
    CHECK(e["shape"]["torsion"] == quandlekit::Json::array({5}));
  CHECK(run("verify --inject-fault \"Inn(R_5) has order 10\"").code == 1);
}
