// End-to-end runs of the command-line tool.  The harness passes the
// binary path as the first argument; every case shells out and checks
// the exit code and the printed text.  Codes: 0 success or property
// holds, 1 property fails, 2 bad input, 3 internal invariant violation.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

std::string g_cli;

struct RunResult {
  int code = -1;
  std::string out;  // stdout and stderr merged
};

RunResult run_cli(const std::string& args) {
  std::string cmd = "\"" + g_cli + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  if (WIFEXITED(st)) r.code = WEXITSTATUS(st);
  return r;
}

const std::string& tmpdir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/arcstrip_cli_XXXXXX";
    char* r = mkdtemp(tmpl);
    if (!r) std::abort();
    return std::string(r);
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  std::string path = tmpdir() + "/" + name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool has(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

const char* kFamilyLines =
    "U(-2,1)\nC(-2,2)\nC(-2,-2)\nC(1,2)\nC(1,-2)\nL(-2,2)\n";

std::string t1_file() {
  static std::string p = write_file("t1.txt", kFamilyLines);
  return p;
}

std::string t2_file() {
  static std::string p = write_file(
      "t2.txt", std::string(kFamilyLines) + "fan U from=L(1) q>=3\n");
  return p;
}

std::string t3_file() {
  static std::string p = write_file(
      "t3.txt", std::string(kFamilyLines) + "fan C from=L(1) q<=-5\n");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}

TEST_CASE("check: report fields and input errors") {
  RunResult r1 = run_cli("check " + t1_file());
  CHECK(r1.code == 0);
  CHECK(has(r1.out, "ptolemy: yes"));
  CHECK(has(r1.out, "tau compact: yes"));
  CHECK(has(r1.out, "tau-inv compact: yes"));

  RunResult r2 = run_cli("check " + t2_file());
  CHECK(r2.code == 0);
  CHECK(has(r2.out, "tau compact: no"));
  CHECK(has(r2.out, "tau-inv compact: yes"));
  CHECK(has(r2.out, "(l1 upper-right)"));

  RunResult bad = run_cli("check " + write_file("edge.txt", "U(0,1)\n"));
  CHECK(bad.code == 2);
  CHECK(has(bad.out, "error:"));
  CHECK(has(bad.out, "line 1"));

  CHECK(run_cli("check " + tmpdir() + "/no_such_file").code == 2);
}

TEST_CASE("nc: complement round-trips through the tool") {
  RunResult r = run_cli("nc " + t3_file());
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"families\""));
  std::string ncf = write_file("nc_t3.json", r.out);

  RunResult rr = run_cli("nc " + ncf);
  CHECK(rr.code == 0);
  std::string back = write_file("ncnc_t3.json", rr.out);

  // nc is an involution here, so the classification must match exactly.
  RunResult a = run_cli("check " + t3_file());
  RunResult b = run_cli("check " + back);
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cotorsion: verdict drives the exit code") {
  RunResult alone = run_cli("cotorsion " + t2_file());
  CHECK(alone.code == 0);
  CHECK(has(alone.out, "partner:"));
  CHECK(has(alone.out, "cotorsion: yes"));

  RunResult pair = run_cli("cotorsion " + t3_file() + " " + t1_file());
  CHECK(pair.code == 1);
  CHECK(has(pair.out, "cotorsion: no"));

  CHECK(run_cli("cotorsion " + t1_file() + " " + tmpdir() + "/missing").code == 2);
}

TEST_CASE("tstructure: parameters and the heart") {
  RunResult r = run_cli("tstructure --p 1 --q 0 --side 1");
  CHECK(r.code == 0);
  CHECK(has(r.out, "part x:"));
  CHECK(has(r.out, "part y:"));
  CHECK(has(r.out, "heart: U(0,2) L(-1,1)"));

  CHECK(run_cli("tstructure --p inf --q 2 --side 1").code == 0);
  CHECK(run_cli("tstructure --p -inf --q 2 --side 1").code == 2);
  CHECK(run_cli("tstructure --p -inf --q 2 --side 2").code == 0);
  CHECK(run_cli("tstructure --p 1 --q 0 --side 3").code == 2);
  CHECK(run_cli("tstructure --p x --q 0 --side 1").code == 2);
  CHECK(run_cli("tstructure --p 1 --side 1").code == 2);
}

TEST_CASE("basis: summand list or a reject") {
  RunResult r = run_cli("basis " + t1_file() + " --arc 'C(0,0)'");
  CHECK(r.code == 0);
  CHECK(r.out == "U(-2,1)\nC(-2,-2)\n");

  RunResult not_compact = run_cli("basis " + t2_file() + " --arc 'C(0,0)'");
  CHECK(not_compact.code == 2);
  CHECK(has(not_compact.out, "not tau-compact"));

  CHECK(run_cli("basis " + t1_file() + " --arc 'U(0,1)'").code == 2);
  CHECK(run_cli("basis " + t1_file() + " --arc nonsense").code == 2);
}

TEST_CASE("oracle sweep: clean cross-check") {
  RunResult r = run_cli("oracle sweep --window -3 3 --seed 5");
  CHECK(r.code == 0);
  CHECK(has(r.out, "seed: 5"));
  CHECK(has(r.out, "mismatches: 0"));

  CHECK(run_cli("oracle sweep --window 0 1").code == 2);
}

TEST_CASE("ng check: sector torsion verdicts") {
  std::string fan_in = write_file("ng_in.json",
      R"json({"families": [{"kind": "ng", "zone": {"x_max": -1, "y_min": 1, "y_max": 1}}]})json");
  std::string fan_out = write_file("ng_out.json",
      R"json({"families": [{"kind": "ng", "zone": {"x_min": 1, "x_max": 1, "y_min": 3}}]})json");

  RunResult yes = run_cli("ng check " + fan_in + " --base 'C(0,0)'");
  CHECK(yes.code == 0);
  CHECK(has(yes.out, "torsion: yes"));

  RunResult no = run_cli("ng check " + fan_out + " --base 'C(0,0)'");
  CHECK(no.code == 1);
  CHECK(has(no.out, "torsion: no"));

  CHECK(run_cli("ng check " + fan_in + " --base 'U(0,2)'").code == 2);
  CHECK(run_cli("ng check " + t1_file() + " --base 'C(0,0)'").code == 2);
}

TEST_CASE("render: deterministic file output") {
  std::string out1 = tmpdir() + "/pic1.svg";
  std::string out2 = tmpdir() + "/pic2.svg";
  RunResult r = run_cli("render " + t1_file() + " --window -4 4 -o " + out1);
  CHECK(r.code == 0);
  CHECK(has(r.out, "wrote "));
  RunResult r2 = run_cli("render " + t1_file() + " --window -4 4 -o " + out2);
  CHECK(r2.code == 0);

  std::string svg = slurp(out1);
  CHECK(has(svg, "<?xml"));
  CHECK(has(svg, "</svg>"));
  CHECK(svg == slurp(out2));

  CHECK(run_cli("render " + t1_file() + " --window 0 1 -o " + out1).code == 2);
  CHECK(run_cli("render " + t1_file() + " --window -4 4 -o /no_dir_zz/x.svg").code == 2);
}

TEST_CASE("bad invocations") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("check").code == 2);
  CHECK(run_cli("--help").code == 0);
}
