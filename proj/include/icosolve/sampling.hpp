#ifndef ICOSOLVE_SAMPLING_HPP
#define ICOSOLVE_SAMPLING_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "numeric.hpp"

namespace icosolve {

/// Seeded generator for the randomized sweeps. Only the raw mt19937_64
/// stream is used (the std distributions are implementation-defined), so a
/// seed reproduces the same points on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform over the closed disk |z| <= radius (area measure).
  Complex in_disk(double radius) { return in_annulus(0.0, radius); }

  /// Uniform (area measure) over rmin <= |z| <= rmax.
  Complex in_annulus(double rmin, double rmax) {
    double u = uniform();
    double r = std::sqrt(rmin * rmin + u * (rmax * rmax - rmin * rmin));
    return std::polar(r, uniform(-pi, pi));
  }

  /// Modulus drawn log-uniformly in [rmin, rmax], argument uniform.
  Complex log_annulus(double rmin, double rmax) {
    double r = std::exp(uniform(std::log(rmin), std::log(rmax)));
    return std::polar(r, uniform(-pi, pi));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace icosolve

#endif  // ICOSOLVE_SAMPLING_HPP
