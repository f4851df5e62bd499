// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted multi-antenna wiretap channels.
//
// Brute-force references for validating the optimizer at small scale:
// exhaustive enumeration of quantized phase combinations and a dense scan of
// the parametric root. These are deliberately independent of the surrogate
// machinery in secrecy.hpp.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "irsec/channel.hpp"
#include "irsec/errors.hpp"
#include "irsec/secrecy.hpp"

namespace irsec {

/// Quantization of the exhaustive phase search: q_levels points per element,
/// uniform on [0, 2*pi). The search is refused when the surface has more than
/// l_max_guard elements or more than kMaxGridEvaluations combinations.
struct GridSpec {
  int q_levels = 16;
  int l_max_guard = 8;
};

inline constexpr double kMaxGridEvaluations = 1e8;

struct GridSearchResult {
  PhaseShifts theta = PhaseShifts::uniform(1);
  double rate_bits = 0.0;
  std::uint64_t evaluations = 0;
};

namespace detail {

inline void check_grid_guard(const GridSpec& grid, std::size_t n_elements) {
  if (grid.q_levels < 2)
    throw InvalidInputError("GridSpec: q_levels must be >= 2");
  if (n_elements > static_cast<std::size_t>(grid.l_max_guard))
    throw RefusedSearchError("grid search refused: too many reflecting elements");
  const double combos =
      std::pow(static_cast<double>(grid.q_levels), static_cast<double>(n_elements));
  if (combos > kMaxGridEvaluations)
    throw RefusedSearchError("grid search refused: evaluation guard exceeded");
}

}  // namespace detail

/// Exhaustive maximization of the Bob/Eve ratio over all q^L quantized phase
/// combinations for a fixed beamformer. Combinations are enumerated in
/// lexicographic digit order with the last element varying fastest, and only
/// a strictly better ratio replaces the incumbent, so ties resolve to the
/// lowest lexicographic index. Returns the maximizer and its secrecy rate.
inline GridSearchResult grid_search_theta(const SystemChannels& ch, const BeamVector& w,
                                          const GridSpec& grid) {
  const std::size_t l = ch.n_irs();
  detail::check_grid_guard(grid, l);
  const detail::CascadeTerms terms = detail::cascade_terms(ch, w);

  const std::size_t q = static_cast<std::size_t>(grid.q_levels);
  CVec points(q);
  for (std::size_t k = 0; k < q; ++k)
    points[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                    static_cast<double>(q));

  std::vector<std::size_t> digit(l, 0);
  CVec theta(l, points[0]);
  double best_ratio = -1.0;
  std::vector<std::size_t> best_digit = digit;
  std::uint64_t evals = 0;

  for (;;) {
    ++evals;
    const double ratio = terms.f_bob(theta) / terms.f_eve(theta);
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_digit = digit;
    }
    // Odometer step, last digit fastest.
    std::size_t pos = l;
    while (pos-- > 0) {
      if (++digit[pos] < q) {
        theta[pos] = points[digit[pos]];
        break;
      }
      digit[pos] = 0;
      theta[pos] = points[0];
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }

  CVec best_theta(l);
  for (std::size_t i = 0; i < l; ++i) best_theta[i] = points[best_digit[i]];
  GridSearchResult out;
  out.theta = PhaseShifts::from_entries(std::move(best_theta));
  const FractionalTerms ft{terms.f_bob(out.theta.entries()),
                           terms.f_eve(out.theta.entries())};
  out.rate_bits = std::log2(ft.bob / ch.noise_bob) - std::log2(ft.eve / ch.noise_eve);
  out.evaluations = evals;
  return out;
}

struct JointGridResult {
  BeamVector beam;
  PhaseShifts theta = PhaseShifts::uniform(1);
  double rate_bits = 0.0;
};

/// Couples the closed-form beamformer step with the exhaustive phase search.
/// Starts from neutral phases (a grid point), so the rate is non-decreasing
/// across rounds.
inline JointGridResult joint_grid_alternate(const SystemChannels& ch, double power_w,
                                            const GridSpec& grid, int rounds) {
  if (rounds < 1) throw InvalidInputError("joint_grid_alternate: rounds must be >= 1");
  detail::check_grid_guard(grid, ch.n_irs());

  JointGridResult out;
  out.theta = PhaseShifts::uniform(ch.n_irs());
  for (int r = 0; r < rounds; ++r) {
    out.beam = optimize_w(ch, out.theta, power_w);
    GridSearchResult g = grid_search_theta(ch, out.beam, grid);
    out.theta = g.theta;
    out.rate_bits = g.rate_bits;
  }
  return out;
}

/// Dense-scan root of the parametric phase-step value: evaluates psi on
/// {0} followed by `points` log-spaced values from mu_max*1e-6 to mu_max and
/// linearly interpolates inside the first sign-change cell. Throws NoRootError
/// when psi stays positive up to mu_max.
inline double mu_scan_root(const SystemChannels& ch, const BeamVector& w,
                           const PhaseShifts& theta_prev, double mu_max, int points) {
  if (points < 1000) throw InvalidInputError("mu_scan_root: need at least 1000 points");
  if (!(mu_max > 0.0)) throw InvalidInputError("mu_scan_root: mu_max must be positive");
  const detail::PhaseStep step(ch, w, theta_prev);

  const double mu_min = mu_max * 1e-6;
  const double growth = std::pow(mu_max / mu_min, 1.0 / static_cast<double>(points - 1));

  double prev_mu = 0.0;
  double prev_psi = step.probe(0.0).psi;
  for (int k = 0; k < points; ++k) {
    const double mu = mu_min * std::pow(growth, static_cast<double>(k));
    const double psi = step.probe(mu).psi;
    if (psi < 0.0) {
      const double t = prev_psi / (prev_psi - psi);
      return prev_mu + t * (mu - prev_mu);
    }
    prev_mu = mu;
    prev_psi = psi;
  }
  throw NoRootError("mu_scan_root: no sign change up to mu_max");
}

}  // namespace irsec
