#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
  const char* b = std::getenv("CONTACTLIE_BIN");
  REQUIRE(b != nullptr);
  return b;
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = bin() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/contactlie_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kH5File = R"({
  "dim": 5,
  "bracket": [
    {"i": 2, "j": 3, "value": {"1": "1"}},
    {"i": 4, "j": 5, "value": {"1": "1"}}
  ],
  "metadata": {"contact_form_index": 1, "darboux": true}
})";

// mu0(e1,e2) = e1 with the second bracket in the phi2 block: not 2-compatible
const char* kNonCompatibleFile = R"({
  "dim": 3,
  "bracket": [
    {"i": 1, "j": 2, "value": {"1": "1"}}
  ],
  "phi2": [
    {"i": 1, "j": 2, "value": {"3": "1"}},
    {"i": 1, "j": 3, "value": {"1": "-1"}},
    {"i": 2, "j": 3, "value": {"2": "1"}}
  ]
})";

}  // namespace

TEST_CASE("check: Heisenberg file passes everything") {
  std::string path = write_temp("h5.json", kH5File);
  RunResult r = run("check " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("jacobi: ok") != std::string::npos);
  CHECK(r.output.find("contact: ok") != std::string::npos);
  CHECK(r.output.find("darboux: ok") != std::string::npos);
}

TEST_CASE("check: the non-compatible pair exits 1 with the certificate") {
  std::string path = write_temp("noncompat.json", kNonCompatibleFile);
  RunResult r = run("check " + path + " --checks compat");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("no phi1 cocycle exists") != std::string::npos);
}

TEST_CASE("check: format violations exit 2") {
  std::string path = write_temp(
      "badorder.json", R"({"dim": 3, "bracket": [{"i": 2, "j": 1, "value": {"1": "1"}}]})");
  RunResult r = run("check " + path);
  CHECK(r.exit_code == 2);
  std::string missing = "/tmp/contactlie_test_does_not_exist.json";
  CHECK(run("check " + missing).exit_code == 2);
  std::string badexpr = write_temp(
      "badexpr.json", R"({"dim": 3, "bracket": [{"i": 1, "j": 2, "value": {"1": "1 +"}}]})");
  CHECK(run("check " + badexpr).exit_code == 2);
}

TEST_CASE("family list contains the catalog") {
  RunResult r = run("family list");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("maxrank.2p+1") != std::string::npos);
  CHECK(r.output.find("dim5.E") != std::string::npos);
  CHECK(r.output.find("dim3.simple") != std::string::npos);
  CHECK(r.output.find("families") != std::string::npos);
}

TEST_CASE("family verify: single id and unknown id") {
  RunResult ok = run("family verify dim5.A");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("=> PASS") != std::string::npos);
  RunResult bad = run("family verify nonexistent.family");
  CHECK(bad.exit_code == 2);
  CHECK(run("family emit nonexistent.family").exit_code == 2);
}

TEST_CASE("family emit resolves ed + 1 = 0 at d = 1") {
  std::string out = "/tmp/contactlie_test_dim5L.json";
  RunResult r = run("family emit dim5.L --set d=1 --set a=2 --out " + out);
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // e = -1/d = -1 lands in the w3^w4 slot of d w2
  CHECK(text.find("\"2\": \"-1\"") != std::string::npos);
  RunResult check = run("check " + out);
  CHECK(check.exit_code == 0);
}

TEST_CASE("emit then check round trip across a catalog sample") {
  for (const std::string id : {"dim5.E", "example.so3-r2", "dim3.nilpotent-f"}) {
    std::string out = "/tmp/contactlie_test_emit.json";
    CHECK(run("family emit " + id + " --out " + out).exit_code == 0);
    CHECK(run("check " + out + " --checks jacobi,darboux,contact").exit_code == 0);
  }
}

TEST_CASE("rp subcommands") {
  RunResult basis = run("rp basis -p 2");
  CHECK(basis.exit_code == 0);
  CHECK(basis.output.find("dim r_2 = 10") != std::string::npos);
  RunResult grading = run("rp grading -p 3");
  CHECK(grading.exit_code == 0);
  CHECK(grading.output.find("grading ok") != std::string::npos);

  std::string idmat = write_temp("id.json", R"({"entries": [["1","0","0","0"],
    ["0","1","0","0"], ["0","0","1","0"], ["0","0","0","1"]]})");
  RunResult idcheck = run("rp check -p 2 " + idmat);
  CHECK(idcheck.exit_code == 1);
  CHECK(idcheck.output.find("not in r_2") != std::string::npos);

  std::string good = write_temp("diag.json", R"({"entries": [["1","0","0","0"],
    ["0","-1","0","0"], ["0","0","0","0"], ["0","0","0","0"]]})");
  CHECK(run("rp check -p 2 " + good).exit_code == 0);

  std::string malformed = write_temp("badmat.json", R"({"entries": [["1","0"]]})");
  CHECK(run("rp check -p 2 " + malformed).exit_code == 2);
}

TEST_CASE("decompose command") {
  std::string path = write_temp("h5b.json", kH5File);
  RunResult r = run("decompose " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("p = 2") != std::string::npos);
  CHECK(r.output.find("EQ2..EQ5): ok") != std::string::npos);
}

TEST_CASE("family verify --all --mode symbolic exits 0") {
  RunResult r = run("family verify --all --mode symbolic");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("all families pass") != std::string::npos);
}

TEST_CASE("verify reports are byte-stable for a fixed seed") {
  std::string out1 = "/tmp/contactlie_test_rep1.json";
  std::string out2 = "/tmp/contactlie_test_rep2.json";
  CHECK(run("family verify dim5.B --mode sampled --sample-seed 7 --out " + out1).exit_code == 0);
  CHECK(run("family verify dim5.B --mode sampled --sample-seed 7 --out " + out2).exit_code == 0);
  std::ifstream a(out1), b(out2);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("family emit").exit_code == 2);
  CHECK(run("family verify --mode bogus dim5.A").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}
