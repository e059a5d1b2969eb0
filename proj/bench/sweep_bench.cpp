// Timing comparison of the serial and OpenMP trial sweeps. Both paths are
// required to produce bit-identical reports, so alongside the timings the
// serialized provenance of every pair is compared and any divergence is
// reported as a failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "depmeas/oracle.hpp"
#include "depmeas/rng.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Case {
  std::string name;
  depmeas::OracleReport (*run)(std::int64_t trials, depmeas::ExecMode exec);
  std::int64_t trials;
};

depmeas::OracleReport run_prop1(std::int64_t trials, depmeas::ExecMode exec) {
  depmeas::SplitMix64 g(2024);
  const std::vector<double> p = depmeas::sample_simplex(g, 10);
  return depmeas::verify_prop1(p, depmeas::Prop1Mode::kRandomSearch, trials, 2024, exec);
}

depmeas::OracleReport run_bound_3x3(std::int64_t trials, depmeas::ExecMode exec) {
  return depmeas::search_rho_m_bound(3, 3, trials, 7, exec);
}

depmeas::OracleReport run_bound_5x4(std::int64_t trials, depmeas::ExecMode exec) {
  return depmeas::search_rho_m_bound(5, 4, trials, 7, exec);
}

}  // namespace

int main() {
  const Case cases[] = {
      {"prop1-random n=10", run_prop1, 400000},
      {"rho-m-bound 3x3", run_bound_3x3, 60000},
      {"rho-m-bound 5x4", run_bound_5x4, 30000},
  };

  std::printf("%-22s %12s %12s %8s %s\n", "sweep", "serial (s)", "parallel (s)",
              "speedup", "identical");
  bool all_identical = true;
  for (const Case& c : cases) {
    auto start = Clock::now();
    const depmeas::OracleReport serial = c.run(c.trials, depmeas::ExecMode::kSerial);
    const double t_serial = seconds_since(start);

    start = Clock::now();
    const depmeas::OracleReport parallel = c.run(c.trials, depmeas::ExecMode::kParallel);
    const double t_parallel = seconds_since(start);

    const depmeas::OracleReport serial_set[] = {serial};
    const depmeas::OracleReport parallel_set[] = {parallel};
    const bool identical =
        depmeas::provenance_text(serial_set) == depmeas::provenance_text(parallel_set);
    all_identical = all_identical && identical;

    std::printf("%-22s %12.3f %12.3f %7.2fx %s\n", c.name.c_str(), t_serial, t_parallel,
                t_serial / t_parallel, identical ? "yes" : "NO");
  }

  if (!all_identical) {
    std::printf("FAIL: serial and parallel sweeps diverged\n");
    return 1;
  }
  return 0;
}
