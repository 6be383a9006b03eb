// Times each kernel's serial reference against its OpenMP version and checks
// that both agree.
//
//   pds_bench [repetitions]

#include "pds/kernels/bareiss.hpp"
#include "pds/kernels/domination.hpp"
#include "pds/kernels/exact_cover.hpp"
#include "pds/kernels/fourier.hpp"
#include "pds/linear_codes.hpp"
#include "pds/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double best_seconds(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

template <typename S, typename P>
void compare(const char* name, int reps, S&& serial, P&& parallel) {
  decltype(serial()) a{}, b{};
  const double ts = best_seconds(reps, [&] { a = serial(); });
  const double tp = best_seconds(reps, [&] { b = parallel(); });
  std::printf("%-28s serial %10.4f s   omp %10.4f s   speedup %5.2fx   %s\n", name, ts, tp,
              tp > 0 ? ts / tp : 0.0, a == b ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pds;
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#endif

  const TorusParams p11(11);
  const CodeSet code11 = build_eq1(Eq1Spec{{1, -1, 1, -1}, 3}, p11);
  compare("domination scan p=11", reps,
          [&] { return kernels::serial::first_domination_violation(code11).has_value(); },
          [&] { return kernels::omp::first_domination_violation(code11).has_value(); });
  compare("line scan p=11", reps,
          [&] { return kernels::serial::first_line_violation(code11).has_value(); },
          [&] { return kernels::omp::first_line_violation(code11).has_value(); });

  const TorusParams p7(7);
  const CodeSet code7 = build_eq1(Eq1Spec{{1, -1}, 0}, p7);
  compare("fourier support p=7", reps, [&] { return kernels::serial::fourier_support(code7); },
          [&] { return kernels::omp::fourier_support(code7); });

  compare("bareiss rank A+I p=7", 1,
          [&] { return kernels::serial::bareiss_rank(adjacency_plus_identity(p7)); },
          [&] { return kernels::omp::bareiss_rank(adjacency_plus_identity(p7)); });

  compare("exact cover p=7 (pruned)", reps, [&] { return kernels::serial::ball_partitions(p7, true); },
          [&] { return kernels::omp::ball_partitions(p7, true); });
  compare("exact cover p=7 (unpruned)", 1, [&] { return kernels::serial::ball_partitions(p7, false); },
          [&] { return kernels::omp::ball_partitions(p7, false); });
  return 0;
}
