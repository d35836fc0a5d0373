// Serial reference vs OpenMP kernels: wall time and output equality.
#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "riley/limit.hpp"
#include "riley/scan.hpp"

using namespace riley;

namespace {

double seconds(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double ts, double tp, bool same) {
  std::printf("%-22s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name, ts, tp, ts / tp,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  int mismatches = 0;

  {
    RegionScan a, b;
    double ts = seconds([&] { a = region_scan(200, default_bounds(), Policy::Serial); });
    double tp = seconds([&] { b = region_scan(200, default_bounds(), Policy::Parallel); });
    bool same = a.cells.size() == b.cells.size();
    for (std::size_t i = 0; same && i < a.cells.size(); ++i)
      same = a.cells[i].tag == b.cells[i].tag && a.cells[i].D == b.cells[i].D && a.cells[i].G == b.cells[i].G;
    row("region_scan 200^2", ts, tp, same);
    mismatches += !same;
  }
  {
    OracleAgreement a, b;
    double ts = seconds([&] { a = oracle_agreement(40, 1e-4, 1e-3, Policy::Serial); });
    double tp = seconds([&] { b = oracle_agreement(40, 1e-4, 1e-3, Policy::Parallel); });
    bool same = a.tested == b.tested && a.agree == b.agree && a.skipped == b.skipped;
    row("oracle 40^2", ts, tp, same);
    mismatches += !same;
  }
  {
    FreenessReport a, b;
    Params p = Params::limit();
    double ts = seconds([&] { a = freeness_probe(p, 8, Policy::Serial); });
    double tp = seconds([&] { b = freeness_probe(p, 8, Policy::Parallel); });
    bool same = a.min_distance == b.min_distance && a.closest_word == b.closest_word;
    row("freeness len 8", ts, tp, same);
    mismatches += !same;
  }
  {
    FanResidualScan a, b;
    double ts = seconds([&] { a = fan_residual_scan(2e-3, Policy::Serial); });
    double tp = seconds([&] { b = fan_residual_scan(2e-3, Policy::Parallel); });
    bool same = a.cluster_centres == b.cluster_centres;
    row("fan residual 2e-3", ts, tp, same);
    mismatches += !same;
  }
  return mismatches == 0 ? 0 : 1;
}
