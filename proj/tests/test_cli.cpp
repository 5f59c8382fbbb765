#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ionlink/cli.hpp"

namespace {

using namespace ionlink;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Data rows of a CSV document (header and '#' notes dropped), split on commas.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Cli, ExitCodes) {
  const auto bad_na = run({"schemes", "--na", "1.5"});
  EXPECT_EQ(bad_na.code, 1);
  EXPECT_NE(bad_na.err.find("NA out of range"), std::string::npos);
  EXPECT_EQ(run({"schemes", "--no-such-flag"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"trap", "--v0", "300"}).code, 2);  // missing required options
  EXPECT_EQ(run({"schemes", "--na", "abc"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"qfc", "plan", "--input-nm", "1343", "--pump-nm", "650"}).code, 1);
  EXPECT_EQ(run({"fiber", "crossing", "--raw-nm", "1550", "--converted-nm", "780"}).code, 1);
}

TEST(Cli, Version) {
  const auto r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ionlink 0.1.0"), std::string::npos);
  EXPECT_NE(r.out.find(std::string(kDispersionDataVersion)), std::string::npos);
}

TEST(Cli, SchemesTable) {
  const auto r = run({"schemes", "--na", "0.6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "scheme,pe_ps,p_na,f_na");
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  const double published[3][3] = {{0.947, 0.085, 0.87}, {0.146, 0.014, 0.98}, {0.730, 0.068, 0.98}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::stod(rows[i][j + 1]), published[i][j], 0.005) << i << "," << j;
  EXPECT_NE(r.out.find("# published reference P at NA=0.6"), std::string::npos);
}

TEST(Cli, CsvAndJsonCarryIdenticalNumbers) {
  const auto csv = run({"schemes", "--na", "0.45"});
  const auto json = run({"--output-format", "json", "schemes", "--na", "0.45"});
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(json.code, 0);
  const auto doc = nlohmann::json::parse(json.out);
  const auto rows = csv_rows(csv.out);
  ASSERT_EQ(doc["rows"].size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(doc["rows"][i]["scheme"], rows[i][0]);
    EXPECT_EQ(doc["rows"][i]["pe_ps"].get<double>(), std::stod(rows[i][1]));
    EXPECT_EQ(doc["rows"][i]["p_na"].get<double>(), std::stod(rows[i][2]));
    EXPECT_EQ(doc["rows"][i]["f_na"].get<double>(), std::stod(rows[i][3]));
  }
}

TEST(Cli, Table2) {
  const auto r = run({"qfc", "table2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  const double printed[3] = {384, 238, 193};
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(std::stod(rows[i][2]), printed[i], 0.5);
  EXPECT_EQ(rows[0][4], "PPKTP");
}

TEST(Cli, ChainExactAndMonteCarlo) {
  const auto exact = nlohmann::json::parse(run({"chain", "exact"}).out);
  EXPECT_NEAR(exact["p_good"].get<double>(), 0.844198, 1e-6);
  const auto mc = run({"chain", "mc", "--trials", "20000", "--seed", "9", "--threads", "3"});
  ASSERT_EQ(mc.code, 0) << mc.err;
  const auto doc = nlohmann::json::parse(mc.out);
  EXPECT_EQ(doc["n_trials"].get<std::uint64_t>(), 20000u);
  EXPECT_EQ(doc["seed"].get<std::uint64_t>(), 9u);
  EXPECT_NEAR(doc["p_good"].get<double>(), 0.844198, 5 * doc["se_good"].get<double>());
  // byte-identical across runs and thread counts
  EXPECT_EQ(mc.out, run({"chain", "mc", "--trials", "20000", "--seed", "9", "--threads", "1"}).out);
}

TEST(Cli, ConfigFile) {
  const std::string cfg = std::string(IONLINK_DATA_DIR) + "/configs/table1.ini";
  const auto from_file = run({"--config", cfg, "schemes"});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(from_file.out, run({"schemes", "--na", "0.6"}).out);
  // command-line flags override the file
  EXPECT_EQ(run({"--config", cfg, "schemes", "--na", "0.3"}).out, run({"schemes", "--na", "0.3"}).out);

  const auto path = std::filesystem::temp_directory_path() / "ionlink_bad_config.ini";
  std::ofstream(path) << "[schemes]\nnot_an_option = 3\n";
  EXPECT_EQ(run({"--config", path.string(), "schemes"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, FiberCommands) {
  const auto crossing = nlohmann::json::parse(run({"fiber", "crossing"}).out);
  EXPECT_NEAR(crossing["crossing_km"].get<double>(), 0.279791, 1e-6);
  const auto budget = run({"--output-format", "json", "fiber", "budget", "--stage", "493:1343:0.05", "--length-km", "1",
                           "--detector", "0.95"});
  ASSERT_EQ(budget.code, 0) << budget.err;
  EXPECT_NEAR(nlohmann::json::parse(budget.out)["rate_hz"].get<double>(), 1803.49, 0.01);
  const auto curves = run({"fiber", "curves", "--max-km", "1", "--step-km", "0.5"});
  ASSERT_EQ(curves.code, 0) << curves.err;
  EXPECT_EQ(csv_rows(curves.out).size(), 3u);
  EXPECT_EQ(run({"fiber", "curves", "--step-km", "0.3"}).code, 1);
}

TEST(Cli, QfcPlanAndTrap) {
  const auto plan = run({"--output-format", "json", "qfc", "plan", "--input-nm", "649.87", "--pump-nm", "1343"});
  ASSERT_EQ(plan.code, 0) << plan.err;
  const auto doc = nlohmann::json::parse(plan.out);
  EXPECT_NEAR(doc["poling_period_um"].get<double>(), 12.2776, 1e-4);
  EXPECT_EQ(doc["noise_findings"][0], "PASS");
  const auto trap =
      run({"--output-format", "json", "trap", "--v0", "300", "--freq-mhz", "20", "--r-um", "500", "--eta", "0.3"});
  ASSERT_EQ(trap.code, 0) << trap.err;
  EXPECT_GT(nlohmann::json::parse(trap.out)["f_s_mhz"].get<double>(), 0.0);
}

TEST(Cli, CurvesAndEmission) {
  const auto f = run({"fidelity-curve", "--scheme", "weak", "--step", "0.5"});
  ASSERT_EQ(f.code, 0) << f.err;
  const auto rows = csv_rows(f.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(std::stod(rows[2][1]), round_sig6(std::stod(rows[0][1]) - 0.06));
  EXPECT_EQ(run({"prob-curve", "--scheme", "bogus"}).code, 2);  // rejected by the option check
  EXPECT_EQ(run({"emission", "pattern", "--theta-steps", "3"}).code, 0);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "ionlink_cli_out.csv";
  ASSERT_EQ(run({"--output", path.string(), "qfc", "table2"}).code, 0);
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(buffer.str(), run({"qfc", "table2"}).out);
  std::filesystem::remove(path);
}

}  // namespace
