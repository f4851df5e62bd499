// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted multi-antenna wiretap channels.
//
// Deterministic random numbers. The generator is SplitMix64 (Steele, Lea &
// Flood's 64-bit mixer), chosen because its output sequence is a pure
// function of the 64-bit seed with no platform-dependent state, which makes
// every experiment in this library reproducible from a single integer.
// Independent streams are derived by hashing (seed, index) pairs, never by
// splitting one running sequence, so consumers of one stream cannot perturb
// another.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace irsec {

/// SplitMix64 finalizer: bijective 64-bit mix.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Hash a (seed, index) pair into a new stream seed.
inline constexpr std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + 0x9E3779B97F4A7C15ull * (index + 0x632BE59BD9B4E019ull));
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Standard normal pair via Box-Muller (log of a value in (0, 1]).
  void next_normal_pair(double& n0, double& n1) {
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    n0 = r * std::cos(phi);
    n1 = r * std::sin(phi);
  }

  /// Circularly-symmetric complex Gaussian with unit variance, CN(0, 1).
  std::complex<double> next_cnormal() {
    double n0 = 0.0, n1 = 0.0;
    next_normal_pair(n0, n1);
    return {n0 * std::numbers::sqrt2 / 2.0, n1 * std::numbers::sqrt2 / 2.0};
  }

  /// Uniform phase in [0, 2*pi).
  double next_phase() { return 2.0 * std::numbers::pi * next_unit(); }

 private:
  std::uint64_t state_;
};

}  // namespace irsec
