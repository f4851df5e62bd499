// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted multi-antenna wiretap channels.
//
// Alternating maximization of the secrecy rate over the transmit beamformer
// and the surface phase shifts:
//
//   * beamformer step: with phases fixed, the optimal rank-one transmit
//     covariance is P * v v^H where v is the dominant generalized eigenvector
//     of the pencil (P h_b h_b^H + nB I, P He^H He + nE I) built from the
//     effective Bob/Eve channels;
//   * phase step: with the beamformer fixed, the Bob/Eve power ratio is
//     maximized by root-finding on the parametric difference
//     f_eve(theta) - mu * f_bob(theta). For each mu the nonconvex
//     unit-modulus subproblem is replaced by a majorizing quadratic surrogate
//     (tight at the previous phases) whose minimizer aligns each phase with
//     one linear coefficient; the resulting value psi(mu) is strictly
//     decreasing and crosses zero at the optimal ratio, so a bisection over
//     mu closes the step.
//
// Each outer iteration can only increase the rate, which gives the monotone,
// convergent trace that the tests assert.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "irsec/channel.hpp"
#include "irsec/eig.hpp"
#include "irsec/errors.hpp"
#include "irsec/linalg.hpp"
#include "irsec/rng.hpp"

namespace irsec {

/// Unit-modulus phase-shift vector of the reflecting surface.
///
/// Storage convention: entry i holds the *conjugate* of the physical
/// reflection coefficient of element i (the i-th diagonal of the reflection
/// matrix). All phase-subproblem formulas in this header act on the stored
/// vector directly; callers that need the physical coefficient of element i
/// must conjugate the stored entry.
class PhaseShifts {
 public:
  /// All elements neutral (stored entry 1); the deterministic default start.
  static PhaseShifts uniform(std::size_t n_elements) {
    return PhaseShifts(CVec(n_elements, cxd(1.0, 0.0)));
  }

  /// Independent uniform phases from a SplitMix64 stream.
  static PhaseShifts random_phases(std::size_t n_elements, std::uint64_t seed) {
    SplitMix64 gen(seed);
    CVec v(n_elements);
    for (cxd& x : v) x = std::polar(1.0, gen.next_phase());
    return PhaseShifts(std::move(v));
  }

  /// Validates | |v_i| - 1 | <= 1e-12 for every entry.
  static PhaseShifts from_entries(CVec v) {
    if (v.empty()) throw InvalidInputError("PhaseShifts: need at least one element");
    for (const cxd& x : v) {
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) ||
          std::abs(std::abs(x) - 1.0) > 1e-12)
        throw InvalidInputError("PhaseShifts: entries must have unit modulus");
    }
    return PhaseShifts(std::move(v));
  }

  /// Stored vector; element i of the physical reflection matrix is the
  /// conjugate of entries()[i].
  const CVec& entries() const { return theta_; }
  std::size_t size() const { return theta_.size(); }

 private:
  explicit PhaseShifts(CVec v) : theta_(std::move(v)) {}
  CVec theta_;
};

/// Transmit beamforming weights; the optimizer always returns full power,
/// norm_sq(weights) == power budget.
struct BeamVector {
  CVec weights;
  double power() const { return norm_sq(weights); }
};

/// Composite Alice->receiver channels for fixed phases: `bob` is the length-N
/// column channel; `eve` row i is the receive-side channel of Eve antenna i,
/// so eve_row * weights is the signal component at that antenna.
struct EffectiveChannels {
  CVec bob;
  CMat eve;
};

inline EffectiveChannels effective_channels(const SystemChannels& ch,
                                            const PhaseShifts& theta) {
  const std::size_t l = ch.n_irs();
  const std::size_t n = ch.n_tx();
  const std::size_t m = ch.n_eve();
  if (theta.size() != l)
    throw InvalidInputError("effective_channels: phase vector length mismatch");
  if (ch.irs_bob.size() != l || ch.alice_bob.size() != n ||
      ch.irs_eve.cols() != l || ch.alice_eve.cols() != n ||
      ch.alice_eve.rows() != m)
    throw InvalidInputError("effective_channels: inconsistent channel dimensions");

  const CVec& th = theta.entries();
  EffectiveChannels eff;

  CVec reflected(l);
  for (std::size_t i = 0; i < l; ++i) reflected[i] = th[i] * ch.irs_bob[i];
  eff.bob = adjoint_mat_vec(ch.alice_irs, reflected);
  for (std::size_t i = 0; i < n; ++i) eff.bob[i] += ch.alice_bob[i];

  eff.eve = CMat(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      cxd s = ch.alice_eve(i, k);
      for (std::size_t j = 0; j < l; ++j)
        s += ch.irs_eve(i, j) * std::conj(th[j]) * ch.alice_irs(j, k);
      eff.eve(i, k) = s;
    }
  }
  return eff;
}

namespace detail {

/// Per-element responses of the phase subproblem for a fixed beamformer:
/// the signal at each receiver splits into a reflected part, linear in the
/// stored phase vector, plus a direct part independent of the phases.
struct CascadeTerms {
  CVec bob_cascade;            // length L
  cxd bob_direct = 0.0;
  std::vector<CVec> eve_cascade;  // M vectors of length L
  CVec eve_direct;             // length M
  double noise_bob = 0.0;
  double noise_eve = 0.0;

  std::size_t n_irs() const { return bob_cascade.size(); }
  std::size_t n_eve() const { return eve_cascade.size(); }

  double f_bob(const CVec& theta) const {
    return std::norm(dot(theta, bob_cascade) + bob_direct) + noise_bob;
  }
  double f_eve(const CVec& theta) const {
    double s = noise_eve;
    for (std::size_t i = 0; i < eve_cascade.size(); ++i)
      s += std::norm(dot(theta, eve_cascade[i]) + eve_direct[i]);
    return s;
  }
};

inline CascadeTerms cascade_terms(const SystemChannels& ch, const BeamVector& w) {
  if (w.weights.size() != ch.n_tx())
    throw InvalidInputError("cascade_terms: beam vector length mismatch");
  const std::size_t l = ch.n_irs();
  const std::size_t m = ch.n_eve();
  const CVec through = mat_vec(ch.alice_irs, w.weights);

  CascadeTerms t;
  t.bob_cascade.resize(l);
  for (std::size_t i = 0; i < l; ++i)
    t.bob_cascade[i] = std::conj(ch.irs_bob[i]) * through[i];
  t.bob_direct = dot(ch.alice_bob, w.weights);

  t.eve_cascade.resize(m);
  t.eve_direct.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    t.eve_cascade[i].resize(l);
    for (std::size_t j = 0; j < l; ++j)
      t.eve_cascade[i][j] = ch.irs_eve(i, j) * through[j];
    cxd s = 0.0;
    for (std::size_t k = 0; k < ch.n_tx(); ++k)
      s += ch.alice_eve(i, k) * w.weights[k];
    t.eve_direct[i] = s;
  }
  t.noise_bob = ch.noise_bob;
  t.noise_eve = ch.noise_eve;
  return t;
}

}  // namespace detail

/// Numerator / denominator of the phase-subproblem ratio at (weights, theta):
/// bob = |reflected+direct Bob signal|^2 + Bob noise, eve likewise summed over
/// Eve antennas. The secrecy rate equals
/// log2(bob / noise_bob) - log2(eve / noise_eve).
struct FractionalTerms {
  double bob = 0.0;
  double eve = 0.0;
  double ratio() const { return bob / eve; }
};

inline FractionalTerms fractional_terms(const SystemChannels& ch, const BeamVector& w,
                                        const PhaseShifts& theta) {
  const detail::CascadeTerms t = detail::cascade_terms(ch, w);
  if (theta.size() != t.n_irs())
    throw InvalidInputError("fractional_terms: phase vector length mismatch");
  return {t.f_bob(theta.entries()), t.f_eve(theta.entries())};
}

/// Achievable secrecy rate in bits/s/Hz for a rank-one transmit covariance
/// w w^H. May be negative for arbitrary inputs.
inline double secrecy_rate(const SystemChannels& ch, const BeamVector& w,
                           const PhaseShifts& theta) {
  if (!(ch.noise_bob > 0.0) || !(ch.noise_eve > 0.0))
    throw InvalidInputError("secrecy_rate: noise powers must be positive");
  const EffectiveChannels eff = effective_channels(ch, theta);
  const double sig_bob = std::norm(dot(eff.bob, w.weights));
  double sig_eve = 0.0;
  for (std::size_t i = 0; i < eff.eve.rows(); ++i) {
    cxd s = 0.0;
    for (std::size_t k = 0; k < eff.eve.cols(); ++k)
      s += eff.eve(i, k) * w.weights[k];
    sig_eve += std::norm(s);
  }
  return std::log2(1.0 + sig_bob / ch.noise_bob) -
         std::log2(1.0 + sig_eve / ch.noise_eve);
}

/// Optimal full-power beamformer for fixed phases: sqrt(P) times the
/// unit-norm dominant generalized eigenvector of the pencil
/// (P h_b h_b^H + noise_bob I, P He^H He + noise_eve I).
inline BeamVector optimize_w(const SystemChannels& ch, const PhaseShifts& theta,
                             double power_w) {
  if (!(power_w > 0.0)) throw InvalidInputError("optimize_w: power must be positive");
  if (!(ch.noise_bob > 0.0) || !(ch.noise_eve > 0.0))
    throw InvalidInputError("optimize_w: noise powers must be positive");
  const EffectiveChannels eff = effective_channels(ch, theta);
  const std::size_t n = eff.bob.size();

  CMat num(n, n);
  add_scaled_outer(num, eff.bob, power_w);
  for (std::size_t i = 0; i < n; ++i) num(i, i) += ch.noise_bob;

  CMat den = adjoint_gram(eff.eve);
  for (cxd& x : den.data()) x *= power_w;
  for (std::size_t i = 0; i < n; ++i) den(i, i) += ch.noise_eve;

  const EigPair top = dominant_generalized_eigvec(num, den);
  BeamVector w;
  w.weights.resize(n);
  const double amp = std::sqrt(power_w);
  for (std::size_t i = 0; i < n; ++i) w.weights[i] = amp * top.vector[i];
  return w;
}

/// Parameters of the quadratic upper bound used by the phase step at a given
/// ratio parameter mu: for every unit-modulus theta,
///   f_eve(theta) - mu*f_bob(theta) <= lambda_max*|theta|^2 - 2 Re(theta^H beta) + c,
/// with equality at the expansion point theta_ref.
struct SurrogateParams {
  CMat phi;           ///< L x L Hermitian quadratic form of the exact objective
  double lambda_max = 0.0;  ///< largest eigenvalue of phi
  CVec beta;          ///< linear coefficient of the bound
  double c = 0.0;     ///< constant term of the bound
  double mu = 0.0;    ///< ratio parameter
  CVec theta_ref;     ///< expansion point (previous phases)
};

namespace detail {

/// Phase-step engine for one (channels, beamformer, expansion point) triple.
///
/// The quadratic form phi(mu) has rank at most n_eve + 1, so its largest
/// eigenvalue is computed from an (n_eve+1)-sized congruence of the cascade
/// Gram matrix whenever L exceeds that rank; the bisection then costs O(L)
/// per probe instead of an L x L eigensolve. The dense route is kept for
/// small L and for cross-checking.
class PhaseStep {
 public:
  PhaseStep(const SystemChannels& ch, const BeamVector& w, const PhaseShifts& prev)
      : terms_(cascade_terms(ch, w)), theta_ref_(prev.entries()) {
    const std::size_t l = terms_.n_irs();
    if (theta_ref_.size() != l)
      throw InvalidInputError("PhaseStep: phase vector length mismatch");
    const std::size_t m = terms_.n_eve();
    rank_ = m + 1;

    bob_ref_ = dot(terms_.bob_cascade, theta_ref_);
    eve_ref_.resize(m);
    for (std::size_t i = 0; i < m; ++i)
      eve_ref_[i] = dot(terms_.eve_cascade[i], theta_ref_);

    use_lowrank_ = l > rank_;
    if (use_lowrank_) {
      // Gram matrix of the cascade columns [eve_1 .. eve_M, bob].
      CMat gram(rank_, rank_);
      auto column = [&](std::size_t j) -> const CVec& {
        return j < m ? terms_.eve_cascade[j] : terms_.bob_cascade;
      };
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) gram(i, j) = dot(column(i), column(j));

      // Square root via the spectral decomposition (Gram is PSD).
      HermitianEigen ge = jacobi_hermitian(hermitian_part(gram));
      CMat root(rank_, rank_);
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) {
          cxd s = 0.0;
          for (std::size_t k = 0; k < rank_; ++k) {
            const double ev = std::max(ge.values[k], 0.0);
            s += ge.vectors(i, k) * std::sqrt(ev) * std::conj(ge.vectors(j, k));
          }
          root(i, j) = s;
        }
      // K(mu) = k_eve - mu * k_bob shares its nonzero spectrum with phi(mu).
      k_eve_ = CMat(rank_, rank_);
      k_bob_ = CMat(rank_, rank_);
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) {
          cxd s = 0.0;
          for (std::size_t k = 0; k + 1 < rank_; ++k) s += root(i, k) * root(k, j);
          k_eve_(i, j) = s;
          k_bob_(i, j) = root(i, rank_ - 1) * root(rank_ - 1, j);
        }
    }
  }

  const CascadeTerms& terms() const { return terms_; }
  const CVec& theta_ref() const { return theta_ref_; }

  CMat dense_phi(double mu) const {
    const std::size_t l = terms_.n_irs();
    CMat phi(l, l);
    for (const CVec& col : terms_.eve_cascade) add_scaled_outer(phi, col, 1.0);
    add_scaled_outer(phi, terms_.bob_cascade, -mu);
    return phi;
  }

  double lambda_max(double mu) const {
    if (use_lowrank_) {
      CMat k = k_eve_;
      for (std::size_t i = 0; i < k.data().size(); ++i)
        k.data()[i] -= mu * k_bob_.data()[i];
      HermitianEigen ke = jacobi_hermitian(hermitian_part(k));
      // L > rank means phi always has a zero eigenvalue from its nullspace.
      return std::max(ke.values[rank_ - 1], 0.0);
    }
    HermitianEigen pe = jacobi_hermitian(hermitian_part(dense_phi(mu)));
    return pe.values[terms_.n_irs() - 1];
  }

  /// Linear coefficient of the surrogate at the expansion point.
  CVec beta(double mu, double lam) const {
    const std::size_t l = terms_.n_irs();
    const std::size_t m = terms_.n_eve();
    CVec b(l);
    for (std::size_t i = 0; i < l; ++i) b[i] = lam * theta_ref_[i];
    const cxd bob_coef = mu * (bob_ref_ + std::conj(terms_.bob_direct));
    for (std::size_t i = 0; i < l; ++i) b[i] += bob_coef * terms_.bob_cascade[i];
    for (std::size_t k = 0; k < m; ++k) {
      const cxd eve_coef = -(eve_ref_[k] + std::conj(terms_.eve_direct[k]));
      for (std::size_t i = 0; i < l; ++i) b[i] += eve_coef * terms_.eve_cascade[k][i];
    }
    return b;
  }

  /// Surrogate minimizer: phases aligned with beta, previous value kept where
  /// beta vanishes (any unit value is then optimal).
  CVec minimizer(const CVec& b) const {
    CVec th(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      const double mag = std::abs(b[i]);
      th[i] = mag > 0.0 ? b[i] / mag : theta_ref_[i];
    }
    return th;
  }

  struct Probe {
    double psi = 0.0;
    double f_bob = 0.0;
    double f_eve = 0.0;
    CVec theta;
  };

  Probe probe(double mu) const {
    Probe p;
    p.theta = minimizer(beta(mu, lambda_max(mu)));
    p.f_bob = terms_.f_bob(p.theta);
    p.f_eve = terms_.f_eve(p.theta);
    p.psi = p.f_eve - mu * p.f_bob;
    return p;
  }

  double constant_term(double mu, double lam) const {
    const std::size_t m = terms_.n_eve();
    double quad = 0.0;  // theta_ref^H phi theta_ref
    for (std::size_t i = 0; i < m; ++i) quad += std::norm(eve_ref_[i]);
    quad -= mu * std::norm(bob_ref_);
    double c = lam * norm_sq(theta_ref_) - quad;
    for (std::size_t i = 0; i < m; ++i) c += std::norm(terms_.eve_direct[i]);
    c += terms_.noise_eve;
    c -= mu * std::norm(terms_.bob_direct);
    c -= mu * terms_.noise_bob;
    return c;
  }

  SurrogateParams materialize(double mu) const {
    SurrogateParams p;
    p.mu = mu;
    p.phi = dense_phi(mu);
    p.lambda_max = lambda_max(mu);
    p.beta = beta(mu, p.lambda_max);
    p.c = constant_term(mu, p.lambda_max);
    p.theta_ref = theta_ref_;
    return p;
  }

 private:
  CascadeTerms terms_;
  CVec theta_ref_;
  std::size_t rank_ = 0;
  bool use_lowrank_ = false;
  cxd bob_ref_ = 0.0;   // bob_cascade^H theta_ref
  CVec eve_ref_;        // eve_cascade_i^H theta_ref
  CMat k_eve_, k_bob_;  // congruence pieces, K(mu) = k_eve - mu * k_bob
};

}  // namespace detail

/// Surrogate of the phase subproblem at ratio parameter mu, expanded at
/// theta_prev.
inline SurrogateParams surrogate_params(const SystemChannels& ch, const BeamVector& w,
                                        const PhaseShifts& theta_prev, double mu) {
  if (!(mu >= 0.0)) throw InvalidInputError("surrogate_params: mu must be >= 0");
  return detail::PhaseStep(ch, w, theta_prev).materialize(mu);
}

/// Exact phase-subproblem objective f_eve(theta) - mu * f_bob(theta).
inline double objective_f(const SystemChannels& ch, const BeamVector& w,
                          const PhaseShifts& theta, double mu) {
  if (!(mu >= 0.0)) throw InvalidInputError("objective_f: mu must be >= 0");
  const FractionalTerms t = fractional_terms(ch, w, theta);
  return t.eve - mu * t.bob;
}

/// Quadratic upper bound lambda_max*|theta|^2 - 2 Re(theta^H beta) + c.
inline double surrogate_g(const SurrogateParams& params, const PhaseShifts& theta) {
  if (theta.size() != params.beta.size())
    throw InvalidInputError("surrogate_g: phase vector length mismatch");
  const CVec& th = theta.entries();
  return params.lambda_max * norm_sq(th) - 2.0 * std::real(dot(th, params.beta)) +
         params.c;
}

/// Minimizer of the surrogate over unit-modulus vectors: each stored phase
/// aligns with the matching entry of beta; where beta vanishes the expansion
/// point's entry is kept (any unit value is optimal there).
inline PhaseShifts theta_star(const SurrogateParams& params) {
  CVec th(params.beta.size());
  for (std::size_t i = 0; i < th.size(); ++i) {
    const double mag = std::abs(params.beta[i]);
    if (mag > 0.0)
      th[i] = params.beta[i] / mag;
    else
      th[i] = params.theta_ref.empty() ? cxd(1.0, 0.0) : params.theta_ref[i];
  }
  return PhaseShifts::from_entries(std::move(th));
}

/// Surrogate-optimal parametric value psi(mu) = f_eve - mu*f_bob at the
/// aligned phases for this mu. Strictly decreasing in mu, positive at 0.
inline double psi_tilde(const SystemChannels& ch, const BeamVector& w,
                        const PhaseShifts& theta_prev, double mu) {
  if (!(mu >= 0.0)) throw InvalidInputError("psi_tilde: mu must be >= 0");
  return detail::PhaseStep(ch, w, theta_prev).probe(mu).psi;
}

struct MuRoot {
  double mu = 0.0;
  PhaseShifts theta = PhaseShifts::uniform(1);
  double f_bob = 0.0;
  double f_eve = 0.0;
};

/// Bisection root of psi(mu) = 0. The returned mu satisfies
/// |psi(mu)| <= tol * f_bob(theta) and the bracket has been narrowed to a
/// 1e-12 relative width, which pins the ratio f_eve/f_bob to mu at machine
/// level regardless of the scale of mu.
inline MuRoot find_mu_root(const SystemChannels& ch, const BeamVector& w,
                           const PhaseShifts& theta_prev, double tol) {
  if (!(tol > 0.0)) throw InvalidInputError("find_mu_root: tol must be positive");
  const detail::PhaseStep step(ch, w, theta_prev);

  double hi = 1.0;
  int doublings = 0;
  while (step.probe(hi).psi >= 0.0) {
    hi *= 2.0;
    if (++doublings > 200)
      throw NumericalFailureError("find_mu_root: bracket expansion failed");
  }

  double lo = 0.0;  // psi(0) = f_eve >= noise_eve > 0
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const detail::PhaseStep::Probe p = step.probe(mid);
    if (p.psi >= 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-12 * hi && std::abs(p.psi) <= tol * p.f_bob) {
      MuRoot out{mid, PhaseShifts::from_entries(p.theta), p.f_bob, p.f_eve};
      return out;
    }
  }
  throw NumericalFailureError("find_mu_root: bisection did not meet tolerance");
}

/// Converged operating point of the alternating optimization.
struct OptimizationResult {
  BeamVector beam;
  PhaseShifts theta = PhaseShifts::uniform(1);
  double secrecy_rate_bits = 0.0;
  std::vector<double> rate_trace;  ///< rate after each outer iteration
  std::vector<double> mu_trace;    ///< phase-step root after each outer iteration
  int iterations = 0;
  bool converged = false;
};

inline constexpr double kMuRootTol = 1e-9;

/// Alternate beamformer and phase steps until the rate gain drops below eps
/// or max_iter is reached (the latter is reported, not an error).
inline OptimizationResult alternating_optimize(const SystemChannels& ch, double power_w,
                                               const PhaseShifts& theta_init,
                                               double eps = 1e-4, int max_iter = 200) {
  if (!(eps > 0.0)) throw InvalidInputError("alternating_optimize: eps must be positive");
  if (max_iter < 1)
    throw InvalidInputError("alternating_optimize: max_iter must be >= 1");

  OptimizationResult res;
  res.theta = theta_init;
  double prev_rate = -std::numeric_limits<double>::infinity();

  for (int it = 0; it < max_iter; ++it) {
    res.beam = optimize_w(ch, res.theta, power_w);
    const MuRoot root = find_mu_root(ch, res.beam, res.theta, kMuRootTol);
    res.theta = root.theta;

    const double rate = secrecy_rate(ch, res.beam, res.theta);
    res.rate_trace.push_back(rate);
    res.mu_trace.push_back(root.mu);
    res.iterations = it + 1;

    if (it > 0 && rate - prev_rate < eps) {
      res.converged = true;
      break;
    }
    prev_rate = rate;
  }
  res.secrecy_rate_bits = res.rate_trace.back();
  return res;
}

/// Deterministic uniform start plus `extra_restarts` seeded random-phase
/// starts; returns the run with the best final rate.
inline OptimizationResult optimize_with_restarts(const SystemChannels& ch,
                                                 double power_w, int extra_restarts,
                                                 std::uint64_t restart_seed,
                                                 double eps = 1e-4, int max_iter = 200) {
  OptimizationResult best =
      alternating_optimize(ch, power_w, PhaseShifts::uniform(ch.n_irs()), eps, max_iter);
  for (int k = 0; k < extra_restarts; ++k) {
    OptimizationResult cand = alternating_optimize(
        ch, power_w,
        PhaseShifts::random_phases(ch.n_irs(), combine_seed(restart_seed, k)), eps,
        max_iter);
    if (cand.secrecy_rate_bits > best.secrecy_rate_bits) best = std::move(cand);
  }
  return best;
}

/// Benchmark without the reflecting surface: the same pencil beamformer step
/// applied to the direct channels only. Single step, no iteration.
inline double baseline_no_irs(const SystemChannels& ch, double power_w) {
  if (!(power_w > 0.0)) throw InvalidInputError("baseline_no_irs: power must be positive");
  if (!(ch.noise_bob > 0.0) || !(ch.noise_eve > 0.0))
    throw InvalidInputError("baseline_no_irs: noise powers must be positive");
  const std::size_t n = ch.n_tx();

  CMat num(n, n);
  add_scaled_outer(num, ch.alice_bob, power_w);
  for (std::size_t i = 0; i < n; ++i) num(i, i) += ch.noise_bob;

  CMat den = adjoint_gram(ch.alice_eve);
  for (cxd& x : den.data()) x *= power_w;
  for (std::size_t i = 0; i < n; ++i) den(i, i) += ch.noise_eve;

  const EigPair top = dominant_generalized_eigvec(num, den);
  CVec w(n);
  const double amp = std::sqrt(power_w);
  for (std::size_t i = 0; i < n; ++i) w[i] = amp * top.vector[i];

  const double sig_bob = std::norm(dot(ch.alice_bob, w));
  double sig_eve = 0.0;
  for (std::size_t i = 0; i < ch.n_eve(); ++i) {
    cxd s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += ch.alice_eve(i, k) * w[k];
    sig_eve += std::norm(s);
  }
  return std::log2(1.0 + sig_bob / ch.noise_bob) -
         std::log2(1.0 + sig_eve / ch.noise_eve);
}

}  // namespace irsec
