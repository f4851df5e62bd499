// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted multi-antenna wiretap channels.
//
// Scenario geometry and channel generation. One transmitter (Alice, n_tx
// antennas), one reflecting surface (n_irs passive elements), one legitimate
// receiver (Bob) and one eavesdropper (Eve, n_eve antennas). Large-scale
// attenuation follows a log-distance path loss model; small-scale fading is
// Rayleigh, i.e. each channel entry is an independent circularly-symmetric
// complex Gaussian whose variance equals the linear path loss of its link.
//
// Coordinate frame: Alice at the origin, the surface at (d_ai_m, 0), and both
// receivers on a parallel line at vertical offset d_v_m, Bob at horizontal
// distance d_ab_h_m and Eve at d_ae_h_m. This is the minimal embedding
// consistent with the five link distances the model needs.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "irsec/errors.hpp"
#include "irsec/linalg.hpp"
#include "irsec/rng.hpp"

namespace irsec {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbw_to_watt(double dbw) { return db_to_linear(dbw); }

/// Experiment geometry and radio parameters. Defaults are a 4-antenna
/// transmitter with a 32-element surface, 15 dBW budget, -75 dBW noise floors
/// and the link exponents / distances of the reference urban scenario.
struct ScenarioConfig {
  int n_tx = 4;    ///< Alice antennas (N)
  int n_irs = 32;  ///< reflecting elements (L)
  int n_eve = 1;   ///< Eve antennas (M)

  double power_dbw = 15.0;      ///< transmit power budget, dBW
  double noise_bob_dbw = -75.0; ///< Bob noise power, dBW
  double noise_eve_dbw = -75.0; ///< Eve noise power, dBW

  double pl0_db = -30.0;  ///< path loss at the reference distance, dB
  double d0_m = 1.0;      ///< reference distance, m

  // Path loss exponents for the five links.
  double exp_ai = 2.2;  ///< Alice -> surface
  double exp_ib = 2.5;  ///< surface -> Bob
  double exp_ie = 2.5;  ///< surface -> Eve
  double exp_ab = 3.5;  ///< Alice -> Bob
  double exp_ae = 3.5;  ///< Alice -> Eve

  double d_ai_m = 50.0;    ///< Alice-surface distance
  double d_v_m = 2.0;      ///< vertical offset of the receiver line
  double d_ae_h_m = 44.0;  ///< Alice-Eve horizontal distance
  double d_ab_h_m = 48.0;  ///< Alice-Bob horizontal distance

  std::uint64_t seed = 1;

  void validate() const {
    if (n_tx < 1 || n_irs < 1 || n_eve < 1)
      throw InvalidInputError("ScenarioConfig: antenna/element counts must be >= 1");
    if (!(d_ai_m > 0.0) || !(d_v_m > 0.0) || !(d_ae_h_m > 0.0) || !(d_ab_h_m > 0.0) ||
        !(d0_m > 0.0))
      throw InvalidInputError("ScenarioConfig: distances must be positive");
    for (double v : {power_dbw, noise_bob_dbw, noise_eve_dbw, pl0_db, exp_ai, exp_ib,
                     exp_ie, exp_ab, exp_ae})
      if (!std::isfinite(v))
        throw InvalidInputError("ScenarioConfig: non-finite parameter");
  }
};

/// One fading realization of all five links plus linear noise powers.
/// Row conventions: alice_irs is (L x N); irs_eve row i and alice_eve row i
/// hold the adjoint (receive-side) channel of Eve antenna i, so that
/// `row * w` is directly the signal component at that antenna.
struct SystemChannels {
  CMat alice_irs;  ///< L x N
  CVec irs_bob;    ///< length L (column convention)
  CVec alice_bob;  ///< length N (column convention)
  CMat irs_eve;    ///< M x L, adjoint rows
  CMat alice_eve;  ///< M x N, adjoint rows
  double noise_bob = 0.0;  ///< W
  double noise_eve = 0.0;  ///< W

  std::size_t n_tx() const { return alice_irs.cols(); }
  std::size_t n_irs() const { return alice_irs.rows(); }
  std::size_t n_eve() const { return irs_eve.rows(); }
};

/// Log-distance path loss: pl0 - 10 * zeta * log10(d / d0), in dB.
inline double path_loss_db(double d_m, double zeta, double pl0_db, double d0_m) {
  if (!(d_m > 0.0) || !(d0_m > 0.0))
    throw InvalidInputError("path_loss_db: distances must be positive");
  return pl0_db - 10.0 * zeta * std::log10(d_m / d0_m);
}

struct NodeDistances {
  double d_ab = 0.0;
  double d_ae = 0.0;
  double d_ib = 0.0;
  double d_ie = 0.0;
};

inline NodeDistances node_distances(const ScenarioConfig& cfg) {
  cfg.validate();
  NodeDistances d;
  d.d_ab = std::hypot(cfg.d_ab_h_m, cfg.d_v_m);
  d.d_ae = std::hypot(cfg.d_ae_h_m, cfg.d_v_m);
  d.d_ib = std::hypot(cfg.d_ai_m - cfg.d_ab_h_m, cfg.d_v_m);
  d.d_ie = std::hypot(cfg.d_ai_m - cfg.d_ae_h_m, cfg.d_v_m);
  return d;
}

namespace detail {

// Stream indices for per-link generators. Each link draws from its own
// SplitMix64 stream so that growing one dimension (say n_eve) never shifts
// the samples of any other link.
enum : std::uint64_t {
  kStreamAliceIrs = 0,
  kStreamIrsBob = 1,
  kStreamAliceBob = 2,
  kStreamIrsEve = 3,
  kStreamAliceEve = 4,
};

inline void fill_rayleigh(SplitMix64& gen, double pl_linear, CVec& out) {
  const double amp = std::sqrt(pl_linear);
  for (cxd& x : out) x = amp * gen.next_cnormal();
}

inline void fill_rayleigh(SplitMix64& gen, double pl_linear, CMat& out) {
  const double amp = std::sqrt(pl_linear);
  for (cxd& x : out.data()) x = amp * gen.next_cnormal();  // row-major order
}

}  // namespace detail

/// Draw one channel realization. The same (cfg, seed) pair always produces
/// bit-identical output.
inline SystemChannels draw_channels(const ScenarioConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const NodeDistances d = node_distances(cfg);

  const double pl_ai = db_to_linear(path_loss_db(cfg.d_ai_m, cfg.exp_ai, cfg.pl0_db, cfg.d0_m));
  const double pl_ib = db_to_linear(path_loss_db(d.d_ib, cfg.exp_ib, cfg.pl0_db, cfg.d0_m));
  const double pl_ab = db_to_linear(path_loss_db(d.d_ab, cfg.exp_ab, cfg.pl0_db, cfg.d0_m));
  const double pl_ie = db_to_linear(path_loss_db(d.d_ie, cfg.exp_ie, cfg.pl0_db, cfg.d0_m));
  const double pl_ae = db_to_linear(path_loss_db(d.d_ae, cfg.exp_ae, cfg.pl0_db, cfg.d0_m));

  const std::size_t n = static_cast<std::size_t>(cfg.n_tx);
  const std::size_t l = static_cast<std::size_t>(cfg.n_irs);
  const std::size_t m = static_cast<std::size_t>(cfg.n_eve);

  SystemChannels ch;
  ch.alice_irs = CMat(l, n);
  ch.irs_bob = CVec(l);
  ch.alice_bob = CVec(n);
  ch.irs_eve = CMat(m, l);
  ch.alice_eve = CMat(m, n);

  SplitMix64 g_ai(combine_seed(seed, detail::kStreamAliceIrs));
  SplitMix64 g_ib(combine_seed(seed, detail::kStreamIrsBob));
  SplitMix64 g_ab(combine_seed(seed, detail::kStreamAliceBob));
  SplitMix64 g_ie(combine_seed(seed, detail::kStreamIrsEve));
  SplitMix64 g_ae(combine_seed(seed, detail::kStreamAliceEve));

  detail::fill_rayleigh(g_ai, pl_ai, ch.alice_irs);
  detail::fill_rayleigh(g_ib, pl_ib, ch.irs_bob);
  detail::fill_rayleigh(g_ab, pl_ab, ch.alice_bob);
  detail::fill_rayleigh(g_ie, pl_ie, ch.irs_eve);
  detail::fill_rayleigh(g_ae, pl_ae, ch.alice_eve);

  ch.noise_bob = dbw_to_watt(cfg.noise_bob_dbw);
  ch.noise_eve = dbw_to_watt(cfg.noise_eve_dbw);
  return ch;
}

inline SystemChannels draw_channels(const ScenarioConfig& cfg) {
  return draw_channels(cfg, cfg.seed);
}

}  // namespace irsec
