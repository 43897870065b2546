// Benchmark comparing the OpenMP kernels against the serial reference:
// the CYBE contraction and the Eq-(2) residual sweep over sample points.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmr/rmatrix.hpp"
#include "cmr/sampling.hpp"
#include "cmr/tensor.hpp"

using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; both lanes run serially\n";
#endif

  std::cout << "\ncybe_residual (parallel vs serial reference)\n";
  std::cout << "   n     parallel[s]   serial[s]   speedup   max|diff|\n";
  cmr::Rng rng(42);
  for (int n : {6, 8, 10, 12}) {
    cmr::Two<double> r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) r(i, j, k, l) = rng.uniform(-1.0, 1.0);
    auto t0 = Clock::now();
    auto par = cmr::cybe_residual(r);
    auto t1 = Clock::now();
    auto ser = cmr::ref::cybe_residual(r);
    auto t2 = Clock::now();
    double diff = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m)
              for (int o = 0; o < n; ++o)
                diff = std::max(diff,
                                std::abs(par.first(i, j, k, l, m, o) - ser.first(i, j, k, l, m, o)));
    double tp = seconds(t0, t1), ts = seconds(t1, t2);
    std::printf("  %2d   %10.4f   %9.4f   %6.2fx   %g\n", n, tp, ts, ts / tp, diff);
  }

  std::cout << "\neq2 residual sweep, n=6 rational case I (parallel vs serial)\n";
  {
    const int n = 6, samples = 64;
    auto pot = cmr::Potential::rational();
    auto cmap = cmr::CartanMap::case_I(n);
    std::vector<cmr::PhasePoint> pts;
    cmr::Rng prng(7);
    for (int s = 0; s < samples; ++s) pts.push_back(cmr::random_regular_point(n, pot, prng));

    std::vector<double> res_par(samples), res_ser(samples);
    auto t0 = Clock::now();
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < samples; ++s) {
      auto R = cmr::build_dynamical_R(pts[s].q, pot, cmap, cmr::QMode::Zero);
      res_par[s] = cmr::rmatrix_residual(pts[s], R, pot);
    }
    auto t1 = Clock::now();
    for (int s = 0; s < samples; ++s) {
      auto R = cmr::build_dynamical_R(pts[s].q, pot, cmap, cmr::QMode::Zero);
      res_ser[s] = cmr::rmatrix_residual(pts[s], R, pot);
    }
    auto t2 = Clock::now();
    double diff = 0;
    for (int s = 0; s < samples; ++s) diff = std::max(diff, std::abs(res_par[s] - res_ser[s]));
    double tp = seconds(t0, t1), ts = seconds(t1, t2);
    std::printf("  %d samples   %8.4fs   %8.4fs   %6.2fx   max|diff| %g\n", samples, tp, ts,
                ts / tp, diff);
  }
  return 0;
}
