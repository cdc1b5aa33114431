// Drives the installed binary end to end through popen.  The graph6
// alphabet stays inside 63..126, so single quotes around --g6 arguments are
// always safe.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using ojson = nlohmann::ordered_json;

namespace {

struct CmdResult {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

CmdResult run(const std::string& args) {
  CmdResult result;
  std::string cmd = std::string(NGVERIFY_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, got);
  int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("params subcommand") {
  CmdResult r = run("params --g6 'Dhc'");
  CHECK(r.status == 0);
  ojson o = ojson::parse(r.output);
  CHECK(o["schema"] == "dompack.params.v1");
  CHECK(o["n"] == 5);
  CHECK(o["params"]["gamma"] == 2);
  CHECK(o["params"]["rho_o"] == 2);
  CHECK(o["complement_params"]["gamma"] == 2);

  CHECK(run("params --g6 'D!'").status == 2);
  CHECK(run("params").status == 2);  // missing required option
}

TEST_CASE("verify subcommand writes reports and summaries") {
  const std::string out = "cli_verify_out.jsonl";
  CmdResult r = run("verify --n 4 --out " + out);
  CHECK(r.status == 0);
  CHECK(r.output.find("graphs checked: 11") != std::string::npos);
  CHECK(r.output.find("no counterexamples") != std::string::npos);

  std::istringstream jsonl(slurp(out));
  std::string line;
  int lines = 0;
  while (std::getline(jsonl, line)) {
    ++lines;
    ojson o = ojson::parse(line);
    CHECK(o["schema"] == "dompack.report.v1");
    CHECK(o["n"] == 4);
  }
  CHECK(lines == 11);

  std::string csv = slurp(out + ".summary.csv");
  CHECK(csv.rfind("schema,check,k,j,graphs,", 0) == 0);
  CHECK(csv.find("dompack.summary.v1,_corpus,,,11,") != std::string::npos);
  std::remove(out.c_str());
  std::remove((out + ".summary.csv").c_str());
}

TEST_CASE("verify subcommand on labelled and file corpora") {
  CmdResult labelled = run("verify --n 3 --labeled --jobs 2");
  CHECK(labelled.status == 0);
  CHECK(labelled.output.find("graphs checked: 8") != std::string::npos);

  const std::string path = "cli_corpus.g6";
  {
    std::ofstream f(path);
    f << "Dhc\nbroken\nA_\n";
  }
  CmdResult file = run("verify --file " + path);
  CHECK(file.status == 0);  // malformed lines are reported, not fatal
  CHECK(file.output.find("graphs checked: 2") != std::string::npos);
  CHECK(file.output.find("malformed lines: 1") != std::string::npos);
  CHECK(file.output.find("line 2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("verify subcommand usage errors") {
  CHECK(run("verify").status == 2);                      // no corpus
  CHECK(run("verify --n 4 --file x.g6").status == 2);    // two corpora
  CHECK(run("verify --n 4 --iso --labeled").status == 2);
  CHECK(run("verify --n 99").status == 2);               // enumeration bound
  CHECK(run("").status == 2);                            // subcommand required
  CHECK(run("--help").status == 0);
}

TEST_CASE("witness subcommand") {
  // C5 fails the hypothesis: gamma = 2 on both sides
  CmdResult r = run("witness --g6 'Dhc' --theorem 2.1 --k 1");
  CHECK(r.status == 2);
  CHECK(r.output.find("hypothesis not met") != std::string::npos);

  CHECK(run("witness --g6 'Dhc' --theorem 3.9 --k 1").status == 2);
  CHECK(run("witness --g6 '???bad' --theorem 2.1").status == 2);
}

TEST_CASE("hunt subcommand") {
  CmdResult r = run("hunt --n 4 --trials 50 --seed 3 --target 2.1");
  CHECK(r.status == 0);
  CHECK(r.output.find("\"found\":false") != std::string::npos);
  CHECK(r.output.find("\"result\":\"none\"") != std::string::npos);
  CHECK(r.output.find("region not reached") != std::string::npos);

  CHECK(run("hunt --n 4 --trials 5 --seed 1 --target 9").status == 2);
  CHECK(run("hunt --n 80 --trials 5 --seed 1 --target 2.1").status == 2);
}
