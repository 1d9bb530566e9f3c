#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(QTILT_CLI) + " " + args + " 2>&1";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(QTILT_TMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

const std::string kSpec = QTILT_DATA_DIR "/q3a_2_2.qspec";

}  // namespace

TEST_CASE("built-in scenario: pass with exit code 0") {
  Result r = run("paper");
  CHECK(r.code == 0);
  CHECK(r.out.find("gldim 4, domdim 4") != std::string::npos);
  CHECK(r.out.find("verdict: pass") != std::string::npos);
}

TEST_CASE("info reports dimension and projective vectors") {
  Result r = run("info --algebra " + kSpec);
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension: 36") != std::string::npos);
  CHECK(r.out.find("P1: [4,4,2]") != std::string::npos);
  CHECK(r.out.find("P2: [4,8,4]") != std::string::npos);
  CHECK(r.out.find("P3: [2,4,4]") != std::string::npos);
}

TEST_CASE("ext between summands") {
  Result r = run("ext --from M_2 --to M_3 --degrees 1,2");
  CHECK(r.code == 0);
  CHECK(r.out == "Ext^1(M2,M3) = 0\nExt^2(M2,M3) = 0\n");
}

TEST_CASE("resolve, parse, endo and bench run") {
  CHECK(run("resolve --module S1 --terms 5").code == 0);
  Result p = run("parse --algebra " + kSpec);
  CHECK(p.code == 0);
  CHECK(p.out.find("# fingerprint") != std::string::npos);
  Result e = run("endo --json");
  CHECK(e.code == 0);
  CHECK(e.out.find("\"dimension\": 95") != std::string::npos);
  Result b = run("bench --repeat 2");
  CHECK(b.code == 0);
  CHECK(b.out.find("outputs identical across runs: yes") != std::string::npos);
}

TEST_CASE("certify exit codes") {
  CHECK(run("certify --algebra " + kSpec).code == 0);
  CHECK(run("certify --algebra " + kSpec + " --modules P1,P2,P3").code == 1);
  CHECK(run("certify --algebra " + kSpec + " --bound 3").code == 2);
  CHECK(run("paper --threads 1 --seed 9").code == 0);
}

TEST_CASE("input errors exit with code 3") {
  CHECK(run("certify --algebra /nonexistent/file.qspec").code == 3);
  CHECK(run("frobnicate").code == 3);
  CHECK(run("paper --modules P1,Q7").code == 3);
  CHECK(run("paper --modules P1,P1").code == 3);
  CHECK(run("ext --from M2 --to M3 --degrees 1,x").code == 3);

  Result bad = run("parse --algebra " + write_temp("qtilt_bad.qspec", "field 2\nquiver 2\narrow a 1 7\n"));
  CHECK(bad.code == 3);
  CHECK(bad.out.find("qtilt_bad.qspec:3:") != std::string::npos);

  CHECK(run("certify --algebra " + write_temp("qtilt_semisimple.qspec", "field 2\nquiver 1\n")).code == 3);

  // a*b*a*b*... never vanishes: not finite-dimensional.
  Result inf = run("info --algebra " +
                   write_temp("qtilt_infinite.qspec", "field 2\nquiver 2\narrow a 1 2\narrow b 2 1\n"));
  CHECK(inf.code == 3);
  CHECK(inf.out.find("frontier") != std::string::npos);
}

TEST_CASE("report file matches JSON output") {
  const std::string path = std::string(QTILT_TMP_DIR) + "/qtilt_report.json";
  Result r = run("paper --json --no-timings --report " + path);
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(file == r.out);
}
