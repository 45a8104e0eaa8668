// Acceptance run: AC1-AC9 in process, AC10 by running the CLI report three
// times (twice single-threaded, once with four threads) and comparing bytes.
#include <sys/wait.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "hcross_harness/verify.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string report;
};

CliRun run_verify_all(std::uint64_t seed, int threads, const fs::path& report) {
  const std::string cmd = fmt::format("HCROSS_THREADS={} '{}' verify-all --seed {} --output '{}' 2>/dev/null", threads,
                                      HCROSS_CLI_PATH, seed, report.string());
  const int status = std::system(cmd.c_str());
  CliRun out;
  out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(report, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  out.report = buf.str();
  return out;
}

hcross::harness::CriterionResult check_determinism(std::uint64_t seed,
                                                   const std::vector<hcross::harness::CriterionResult>& in_process) {
  hcross::harness::CriterionResult r;
  r.id = "AC10";
  r.title = "determinism";
  const fs::path dir = fs::temp_directory_path() / fmt::format("hcross_acceptance_{}", seed);
  fs::create_directories(dir);
  const CliRun a = run_verify_all(seed, 1, dir / "a.txt");
  const CliRun b = run_verify_all(seed, 1, dir / "b.txt");
  const CliRun c = run_verify_all(seed, 4, dir / "c.txt");
  fs::remove_all(dir);

  std::string expected;
  for (const auto& res : in_process) expected += hcross::harness::format_result(res) + "\n";
  const bool matches_in_process = a.report.find(expected) != std::string::npos;

  const bool same_runs = !a.report.empty() && a.report == b.report && a.code == b.code;
  const bool same_threads = a.report == c.report && a.code == c.code;
  r.pass = same_runs && same_threads && matches_in_process;
  r.detail = fmt::format(
      "verify-all seed {}: repeat run {} ({} bytes), 1 vs 4 threads {}, exit codes {}/{}/{}, report matches in-process "
      "results: {}",
      seed, same_runs ? "identical" : "DIFFERS", a.report.size(), same_threads ? "identical" : "DIFFER", a.code, b.code,
      c.code, matches_in_process ? "yes" : "no");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: hcross_acceptance [--seed S]\n";
      return 2;
    }
  }

  auto results = hcross::harness::run_verification(seed, &std::cerr);
  for (const auto& r : results) std::cout << hcross::harness::format_result(r) << std::endl;
  const auto determinism = check_determinism(seed, results);
  std::cout << hcross::harness::format_result(determinism) << std::endl;
  results.push_back(determinism);

  int passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  std::cout << fmt::format("# {} of {} criteria passed", passed, results.size()) << std::endl;
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
