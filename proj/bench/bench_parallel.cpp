// Serial reference vs OpenMP kernels: wall time and bitwise agreement.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "relaysim/sweep.hpp"
#include "relaysim/verify.hpp"

using namespace relaysim;

namespace {

template <class F>
double seconds(F &&f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const std::vector<SimResult> &a, const std::vector<SimResult> &b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].avg_rate_bpcu != b[i].avg_rate_bpcu || a[i].attempts() != b[i].attempts() ||
        a[i].successes() != b[i].successes())
      return false;
  return true;
}

void report(const char *what, double serial, double parallel, bool agree) {
  std::printf("%-10s serial %8.3f s  parallel %8.3f s  speedup %5.2fx  %s\n", what, serial,
              parallel, serial / parallel, agree ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char **argv) {
  const long draws = argc > 1 ? std::atol(argv[1]) : 2000;
  const long slots = argc > 2 ? std::atol(argv[2]) : 100'000;
  std::printf("threads: %d\n", omp_get_max_threads());

  std::vector<OracleReport> rs, rp;
  const double vs = seconds([&] { rs = verify_all(draws, 7, false); });
  const double vp = seconds([&] { rp = verify_all(draws, 7, true); });
  report("verify", vs, vp, rs == rp);

  SweepSpec spec;
  spec.base.slots = slots;
  spec.base.warmup = slots / 10;
  spec.snr_db = {0, 10, 20, 30};
  spec.policies = {{Policy::BaSprs}, {Policy::UpperBound}, {Policy::SfdMmrsNonIdeal}, {Policy::HdMlrs}};
  std::vector<SimResult> ss, sp;
  const double ts = seconds([&] { ss = sweep_serial(spec); });
  const double tp = seconds([&] { sp = sweep(spec); });
  report("sweep", ts, tp, same(ss, sp));
  return rs == rp && same(ss, sp) ? 0 : 1;
}
