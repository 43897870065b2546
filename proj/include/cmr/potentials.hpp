#ifndef CMR_POTENTIALS_HPP
#define CMR_POTENTIALS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace cmr {

enum class PotentialKind { Rational, Hyperbolic, Trigonometric };

inline const char* kind_name(PotentialKind k) {
  switch (k) {
    case PotentialKind::Rational: return "rational";
    case PotentialKind::Hyperbolic: return "hyperbolic";
    case PotentialKind::Trigonometric: return "trigonometric";
  }
  return "?";
}

// One of the three degenerate potential families; `a` is the real coupling
// of the hyperbolic/trigonometric cases and is ignored for the rational one.
struct Potential {
  PotentialKind kind = PotentialKind::Rational;
  double a = 1.0;

  static Potential rational() { return {PotentialKind::Rational, 1.0}; }
  static Potential hyperbolic(double a) { return make(PotentialKind::Hyperbolic, a); }
  static Potential trigonometric(double a) { return make(PotentialKind::Trigonometric, a); }

private:
  static Potential make(PotentialKind k, double a) {
    if (a <= 0) throw std::invalid_argument("Potential: coupling a must be positive");
    return {k, a};
  }
};

struct PotentialValues {
  double v;       // pair potential v(xi)
  double w;       // pair function w(xi), v = w^2
  double wprime;  // dw/dxi
};

// Thrown when an inter-particle separation hits the singular locus of the
// active potential. Pair indices are 1-based; (0,0) when no pair applies.
struct SingularityError : std::runtime_error {
  int k, l;
  double xi;
  SingularityError(int k_, int l_, double xi_)
      : std::runtime_error("singular separation xi=" + std::to_string(xi_) +
                           (k_ > 0 ? " for pair (" + std::to_string(k_) + "," +
                                         std::to_string(l_) + ")"
                                   : std::string())),
        k(k_), l(l_), xi(xi_) {}
};

inline constexpr double kSingularityGuard = 1e-8;

inline PotentialValues potential_values(const Potential& pot, double xi) {
  switch (pot.kind) {
    case PotentialKind::Rational: {
      if (std::abs(xi) < kSingularityGuard) throw SingularityError(0, 0, xi);
      double w = 1.0 / xi;
      return {w * w, w, -w * w};
    }
    case PotentialKind::Hyperbolic: {
      if (std::abs(xi) < kSingularityGuard) throw SingularityError(0, 0, xi);
      double a = pot.a;
      double sh = std::sinh(a * xi);
      double w = a / sh;
      return {w * w, w, -a * a * std::cosh(a * xi) / (sh * sh)};
    }
    case PotentialKind::Trigonometric: {
      double a = pot.a;
      double sn = std::sin(a * xi);
      if (std::abs(sn) < kSingularityGuard) throw SingularityError(0, 0, xi);
      double w = a / sn;
      return {w * w, w, -a * a * std::cos(a * xi) / (sn * sn)};
    }
  }
  throw std::logic_error("unreachable");
}

// Same, tagging the offending (1-based) particle pair on error.
inline PotentialValues pair_potential_values(const Potential& pot, double xi, int k, int l) {
  try {
    return potential_values(pot, xi);
  } catch (const SingularityError& e) {
    throw SingularityError(k, l, e.xi);
  }
}

}  // namespace cmr

#endif
