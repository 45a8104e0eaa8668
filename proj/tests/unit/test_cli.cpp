#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "hcross/poly_io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hcross_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliResult run(const std::string& args) const {
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = std::string("'") + HCROSS_CLI_PATH + "' " + args + " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path path(const std::string& name) const { return dir_ / name; }

  fs::path dir_;
};

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_F(Cli, SetsProducesOneRowPerOctave) {
  const auto r = run("sets --d 2 --r 1 --b 0,0 --n-min 64 --n-max 1048576");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 16u) << r.out;  // header + 15 rows
  EXPECT_EQ(lines[0].rfind("N,chi_count,theta_count", 0), 0u) << lines[0];
  double lo = 1e300;
  double hi = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double ratio = std::stod(lines[i].substr(lines[i].rfind(',') + 1));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  EXPECT_LE(hi / lo, 4.0);
}

TEST_F(Cli, SetsJsonParses) {
  const auto r = run("sets --d 2 --r 1.5 --b 0.5,0.25 --n-min 64 --n-max 4096 --out json");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("rows").size(), 7u);
  EXPECT_TRUE(j.contains("meta"));
}

TEST_F(Cli, NormsRejectsZeroCoordinate) {
  std::ofstream(path("bad.txt")) << "d=2\n1 1 1 0\n3 0 0.5 0\n";
  const auto r = run("norms --d 2 --r 1 --b 0 --input '" + path("bad.txt").string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(3,0)"), std::string::npos) << r.err;
}

TEST_F(Cli, NormsReportsBothForms) {
  hcross::write_polynomial_file(path("mono.txt").string(), hcross::TrigPolynomial::monomial({5, -2}));
  const auto r = run("norms --d 2 --r 1 --b 0 --p 2 --theta 2 --input '" + path("mono.txt").string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  // 5 is in rho(3), -2 in rho(2): Omega^{-1} = 2^5.
  EXPECT_NEAR(j.at("blocks_norm").get<double>(), 32.0, 1e-12);
  EXPECT_TRUE(j.contains("vp_norm"));
}

TEST_F(Cli, ConfigFileSuppliesFlags) {
  std::ofstream(path("cfg.json")) << R"({"d": 1, "r": 1, "b": "0", "n_min": 8, "n-max": 64})";
  const auto r = run("sets --config '" + path("cfg.json").string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(data_lines(r.out).size(), 5u) << r.out;
  // Command-line flags win over the file.
  const auto r2 = run("sets --config '" + path("cfg.json").string() + "' --n-max 16");
  ASSERT_EQ(r2.code, 0) << r2.err;
  EXPECT_EQ(data_lines(r2.out).size(), 3u) << r2.out;
}

TEST_F(Cli, UsageErrors) {
  std::ofstream(path("unknown.json")) << R"({"dimension": 2})";
  EXPECT_EQ(run("sets --config '" + path("unknown.json").string() + "'").code, 2);
  EXPECT_EQ(run("sets --bogus 1").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("sets --d 2 --r 3 --b 0").code, 2);
  EXPECT_EQ(run("sets --d 9 --r 1 --b 0").code, 4);
  EXPECT_EQ(run("kernels").code, 2);
  EXPECT_EQ(run("rates --family g7 --q 2").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, KernelSelfcheckPasses) {
  const auto r = run("kernels --selfcheck");
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST_F(Cli, RatesCsvWithFit) {
  const auto r = run("rates --family shell --d 2 --r 1.5 --b 0,0 --p 2 --q 2 --theta 2 --n-min 256 --n-max 8192 --samples 1");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  EXPECT_EQ(lines.size(), 7u) << r.out;
  EXPECT_NE(r.out.find("# fit:"), std::string::npos);
  // Same seed, same bytes.
  EXPECT_EQ(run("rates --family shell --d 2 --r 1.5 --b 0,0 --p 2 --q 2 --theta 2 --n-min 256 --n-max 8192 --samples 1").out, r.out);
}

TEST_F(Cli, WitnessWritesPolynomialAndSidecar) {
  const auto file = path("g7.txt");
  const auto r = run("witness --family g7 --d 2 --r 1.5 --b 0 --p 2 --theta 2 --N 4096 --output '" + file.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto poly = hcross::read_polynomial_file(file.string());
  EXPECT_FALSE(poly.empty());
  const auto side = nlohmann::json::parse(slurp(file.string() + ".json"));
  EXPECT_EQ(side.at("spectrum_size").get<std::size_t>(), poly.size());
  EXPECT_GT(side.at("besov_norm").get<double>(), 0.0);
}
