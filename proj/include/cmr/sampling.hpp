#ifndef CMR_SAMPLING_HPP
#define CMR_SAMPLING_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "cmr/lax.hpp"
#include "cmr/potentials.hpp"
#include "cmr/rmatrix.hpp"

namespace cmr {

// Deterministic uniform doubles straight from the mt19937_64 bit stream, so
// reports are byte-identical for a given seed regardless of the standard
// library's distribution implementation.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
  std::mt19937_64 eng_;
};

inline constexpr double kMinSeparation = 0.1;

// Coordinates in a box of width n with enforced minimal pairwise separation;
// for the trigonometric case a(q_k - q_l) is kept away from the zeros of sin
// by rejection. Momenta uniform in [-1, 1].
inline PhasePoint random_regular_point(int n, const Potential& pot, Rng& rng,
                                       int max_tries = 10000) {
  const double pi = 3.14159265358979323846;
  for (int t = 0; t < max_tries; ++t) {
    std::vector<double> q(n);
    for (int i = 0; i < n; ++i) q[i] = rng.uniform(0.0, static_cast<double>(n));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        double d = std::abs(q[i] - q[j]);
        if (d < kMinSeparation) ok = false;
        if (pot.kind == PotentialKind::Trigonometric) {
          double m = std::fmod(pot.a * d, pi);
          if (m < 0.1 || m > pi - 0.1) ok = false;
        }
      }
    if (!ok) continue;
    std::vector<double> p(n);
    for (int i = 0; i < n; ++i) p[i] = rng.uniform(-1.0, 1.0);
    return PhasePoint(q, p);
  }
  throw std::runtime_error("random_regular_point: rejection sampling exhausted");
}

// Random simple-root values admissible for extend_simple_C: the pairing
// evaluations alpha_i(C_{alpha_j}) form a symmetric matrix, so sample that
// Gram matrix and reconstruct the traceless diagonals from it.
inline std::vector<std::vector<double>> random_simple_cartan_values(int n, Rng& rng) {
  std::vector<std::vector<double>> gram(n - 1, std::vector<double>(n - 1));
  for (int i = 0; i < n - 1; ++i)
    for (int j = i; j < n - 1; ++j) gram[i][j] = gram[j][i] = rng.uniform(-1.0, 1.0);
  std::vector<std::vector<double>> simple(n - 1);
  for (int j = 0; j < n - 1; ++j) {
    std::vector<double> evals(n - 1);
    for (int i = 0; i < n - 1; ++i) evals[i] = gram[i][j];
    simple[j] = detail::diag_from_simple_evals(evals, n);
  }
  return simple;
}

}  // namespace cmr

#endif
