#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "delpezzo/cli.hpp"
#include "delpezzo/errors.hpp"

using namespace delpezzo;

namespace {

const std::string kData = DELPEZZO_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "delpezzo");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

// Writes text to a fresh file under the test temp dir.
std::string temp_input(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

Json verdicts(const Result& r) { return Report::parse(r.out).verdicts; }

}  // namespace

TEST(Cli, Dp4Report) {
  const auto r = run_cli({"dp4", "report", data("reference_pencil.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto v = verdicts(r);
  EXPECT_EQ(v.at("smooth"), true);
  EXPECT_EQ(v.at("lines"), 16);
  EXPECT_EQ(v.at("orbit"), 1);
  EXPECT_EQ(v.at("invariant_rank"), 1);
  EXPECT_EQ(v.at("gram_rank"), 6);
  EXPECT_EQ(v.at("anticanonical"), true);
}

TEST(Cli, Dp4Subgroup) {
  const auto path = temp_input("sub.json",
                               R"({"kind":"dp4-pencil","coefficients":["1","1","1","1","1","2","3","5","7","11"],)"
                               R"("params":{"subgroup":[[5]]}})");
  const auto r = run_cli({"dp4", "picard", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(verdicts(r).at("invariant_rank"), 4);
  const auto g = run_cli({"dp4", "galois", path, "--json"});
  EXPECT_EQ(verdicts(g).at("orbit_sizes"), Json::array({2, 2, 2, 2, 2, 2, 2, 2}));
}

TEST(Cli, CubicExamples) {
  const auto segre = run_cli({"cubic", "segre", data("fermat_cubic.json"), "--json"});
  ASSERT_EQ(segre.code, 0);
  EXPECT_EQ(verdicts(segre).at("segre"), false);

  const auto local = run_cli({"cubic", "local", data("local_7_3.json"), "--json"});
  ASSERT_EQ(local.code, 0) << local.err;
  EXPECT_EQ(verdicts(local).at("criterion"), true);
  EXPECT_EQ(verdicts(local).at("oracle"), true);

  const auto ext = run_cli({"cubic", "extensions", data("local_7_3.json"), "--json"});
  ASSERT_EQ(ext.code, 0);
  EXPECT_EQ(verdicts(ext).at("prime_to_3_insoluble"), true);
  EXPECT_EQ(verdicts(ext).at("degrees").size(), 7U);

  const auto ff = run_cli({"cubic", "ffpoint", data("segre_cubic.json"), "--json"});
  ASSERT_EQ(ff.code, 0);
  EXPECT_EQ(Report::parse(ff.out).witnesses.at("point"), Json::parse("[[4],[2],[1],[0]]"));
}

TEST(Cli, QuadPair) {
  const auto search = run_cli({"quadpair", "search", data("quinary_mod13.json"), "--json"});
  ASSERT_EQ(search.code, 0);
  EXPECT_EQ(verdicts(search).at("common_isotropic"), true);
  const auto descent = run_cli({"quadpair", "descent", data("quad_pair_f3.json"), "--json"});
  ASSERT_EQ(descent.code, 0);
  EXPECT_EQ(verdicts(descent).at("descent_consistent"), true);
  const auto trials = temp_input("trials.json", R"({"kind":"quad-pair","coefficients":[],"params":{"p":3,"trials":20}})");
  const auto t = run_cli({"quadpair", "descent", trials, "--json", "--seed", "5"});
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(verdicts(t).at("trials"), 20);
  EXPECT_EQ(verdicts(t).at("trials_inconsistent"), 0);
}

TEST(Cli, Obstructions) {
  EXPECT_EQ(verdicts(run_cli({"obstruct", "genus", data("dp4_genus.json"), "--json"})).at("arithmetic_genus"), 5);
  EXPECT_EQ(verdicts(run_cli({"obstruct", "parity", data("k3_parity.json"), "--json"})).at("all_residues_zero"),
            true);
  EXPECT_EQ(verdicts(run_cli({"obstruct", "chi", data("conic_chi.json"), "--json"})).at("residue"), 1);
  EXPECT_EQ(verdicts(run_cli({"obstruct", "rost", data("rost_cubic.json"), "--json"})).at("eta_Ypp"), 1);
  EXPECT_EQ(verdicts(run_cli({"obstruct", "index", data("pencil_mod13.json"), "--json"})).at("index"), 1);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli({"dp4", "report", data("does_not_exist.json")}).code, 2);
  EXPECT_EQ(run_cli({"dp4", "explode", data("reference_pencil.json")}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"dp4", "lines", temp_input("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(run_cli({"dp4", "lines", temp_input("short.json", R"({"kind":"dp4-pencil","coefficients":["1"]})")}).code,
            2);
  EXPECT_EQ(run_cli({"dp4", "lines",
                     temp_input("float.json", R"({"kind":"dp4-pencil","coefficients":[1.5,1,1,1,1,2,3,5,7,11]})")})
                .code,
            2);
  EXPECT_EQ(run_cli({"dp4", "lines",
                     temp_input("sing.json", R"({"kind":"dp4-pencil","coefficients":["1","1","1","1","1","2","2","5","7","11"]})")})
                .code,
            2);
  EXPECT_EQ(run_cli({"cubic", "segre", data("reference_pencil.json")}).code, 2);
  EXPECT_EQ(run_cli({"cubic", "local", temp_input("nonunit.json", R"({"kind":"diagonal-cubic","params":{"p":7,"a":14}})")})
                .code,
            2);
  EXPECT_EQ(run_cli({"quadpair", "search",
                     temp_input("char2.json", R"({"kind":"quad-pair","coefficients":["1","1","1","3"],"params":{"p":2}})")})
                .code,
            2);
}

TEST(Cli, RefusalsExitThree) {
  EXPECT_EQ(run_cli({"cubic", "local", data("local_7_3.json"), "--budget", "1000"}).code, 3);
  const auto big = temp_input("big.json", R"({"kind":"diagonal-cubic","coefficients":["1000003","1","1","2"]})");
  EXPECT_EQ(run_cli({"cubic", "segre", big}).code, 0);
  const auto huge =
      temp_input("huge.json", R"({"kind":"diagonal-cubic","coefficients":["1000073001431003663","1","1","2"]})");
  EXPECT_EQ(run_cli({"cubic", "segre", huge}).code, 3);
}

TEST(Cli, NoSpuriousVerificationFailure) {
  // x² + y² over F_3 twice: no point is forced, so index 0 is not a failure.
  const auto ok = temp_input("conic.json", R"({"kind":"quad-pair","coefficients":["1","1","1","1"],"params":{"p":3}})");
  EXPECT_EQ(run_cli({"obstruct", "index", ok}).code, 0);
  EXPECT_EQ(run_cli({"cubic", "ffpoint", data("fermat_cubic.json")}).code, 0);
}

TEST(Cli, EnvironmentBudget) {
  ::setenv("DELPEZZO_BUDGET", "1000", 1);
  const int refused = run_cli({"cubic", "local", data("local_7_3.json")}).code;
  ::setenv("DELPEZZO_BUDGET", "not-a-number", 1);
  const int bad = run_cli({"cubic", "local", data("local_7_3.json")}).code;
  ::unsetenv("DELPEZZO_BUDGET");
  EXPECT_EQ(refused, 3);
  EXPECT_EQ(bad, 2);
}

TEST(Cli, DeterministicMachineOutput) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"dp4", "report", data("reference_pencil.json"), "--json"},
           {"quadpair", "descent", data("quad_pair_f3.json"), "--json"},
           {"cubic", "ffpoint", data("segre_cubic.json"), "--json"},
       }) {
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, ReportRoundTrip) {
  const auto r = run_cli({"dp4", "report", data("reference_pencil.json"), "--json"});
  const auto parsed = Report::parse(r.out);
  EXPECT_EQ(parsed.command, "dp4 report");
  EXPECT_EQ(parsed.machine(), r.out);
  EXPECT_THROW(Report::parse("[]"), InputError);
  EXPECT_THROW(Report::parse("{"), InputError);
}

TEST(Cli, HumanOutput) {
  const auto r = run_cli({"dp4", "report", data("reference_pencil.json")});
  EXPECT_NE(r.out.find("invariant_rank: 1"), std::string::npos);
  EXPECT_NE(r.out.find("time: "), std::string::npos);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = DELPEZZO_CLI_PATH;
  const auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  EXPECT_EQ(status("dp4 report " + data("reference_pencil.json")), 0);
  EXPECT_EQ(status("dp4 report /nonexistent.json"), 2);
  EXPECT_EQ(status("cubic local " + data("local_7_3.json") + " --budget 10"), 3);
}
