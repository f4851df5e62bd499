// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted multi-antenna wiretap channels.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "irsec/channel.hpp"

using namespace irsec;

TEST_CASE("path loss at the reference distance") {
  REQUIRE_THAT(path_loss_db(1.0, 2.7, -30.0, 1.0), Catch::Matchers::WithinAbs(-30.0, 1e-12));
}

TEST_CASE("path loss over one decade at exponent 2") {
  REQUIRE_THAT(path_loss_db(10.0, 2.0, -30.0, 1.0), Catch::Matchers::WithinAbs(-50.0, 1e-12));
}

TEST_CASE("path loss of the 50 m link at exponent 2.2") {
  // -30 - 22*log10(50) by hand.
  const double expected = -30.0 - 22.0 * std::log10(50.0);
  REQUIRE_THAT(expected, Catch::Matchers::WithinAbs(-67.37734, 1e-4));
  REQUIRE_THAT(path_loss_db(50.0, 2.2, -30.0, 1.0),
               Catch::Matchers::WithinAbs(expected, 1e-12));
}

TEST_CASE("path loss rejects nonpositive distances") {
  REQUIRE_THROWS_AS(path_loss_db(0.0, 2.0, -30.0, 1.0), InvalidInputError);
  REQUIRE_THROWS_AS(path_loss_db(-1.0, 2.0, -30.0, 1.0), InvalidInputError);
  REQUIRE_THROWS_AS(path_loss_db(1.0, 2.0, -30.0, 0.0), InvalidInputError);
}

TEST_CASE("receiver distances follow the line geometry") {
  ScenarioConfig cfg;
  cfg.d_ai_m = 50.0;
  cfg.d_v_m = 2.0;

  SECTION("Bob directly below Alice") {
    cfg.d_ab_h_m = 1e-9;  // horizontal offset ~ 0
    cfg.d_ab_h_m = 0.001;
    const NodeDistances d = node_distances(cfg);
    REQUIRE_THAT(d.d_ab, Catch::Matchers::WithinAbs(2.0, 1e-5));
  }
  SECTION("Eve 44 m out: surface-Eve distance is sqrt(40)") {
    cfg.d_ae_h_m = 44.0;
    const NodeDistances d = node_distances(cfg);
    REQUIRE_THAT(d.d_ie, Catch::Matchers::WithinAbs(std::sqrt(40.0), 1e-12));
  }
  SECTION("Bob directly below the surface") {
    cfg.d_ab_h_m = 50.0;
    const NodeDistances d = node_distances(cfg);
    REQUIRE_THAT(d.d_ib, Catch::Matchers::WithinAbs(2.0, 1e-12));
  }
}

TEST_CASE("swapping Bob and Eve horizontal positions swaps the distances") {
  ScenarioConfig cfg;
  cfg.d_ab_h_m = 31.0;
  cfg.d_ae_h_m = 57.0;
  const NodeDistances d1 = node_distances(cfg);
  std::swap(cfg.d_ab_h_m, cfg.d_ae_h_m);
  const NodeDistances d2 = node_distances(cfg);
  REQUIRE(d1.d_ab == d2.d_ae);
  REQUIRE(d1.d_ib == d2.d_ie);
  REQUIRE(d1.d_ae == d2.d_ab);
  REQUIRE(d1.d_ie == d2.d_ib);
}

TEST_CASE("same seed reproduces bit-identical channels") {
  ScenarioConfig cfg;
  cfg.n_tx = 3;
  cfg.n_irs = 7;
  cfg.n_eve = 2;
  cfg.seed = 99;
  const SystemChannels a = draw_channels(cfg);
  const SystemChannels b = draw_channels(cfg);
  REQUIRE(a.alice_irs == b.alice_irs);
  REQUIRE(a.irs_bob == b.irs_bob);
  REQUIRE(a.alice_bob == b.alice_bob);
  REQUIRE(a.irs_eve == b.irs_eve);
  REQUIRE(a.alice_eve == b.alice_eve);
  REQUIRE(a.noise_bob == b.noise_bob);

  const SystemChannels c = draw_channels(cfg, 100);
  REQUIRE(a.alice_irs(0, 0) != c.alice_irs(0, 0));
}

TEST_CASE("adding Eve antennas leaves all other links untouched") {
  ScenarioConfig cfg;
  cfg.n_tx = 2;
  cfg.n_irs = 5;
  cfg.n_eve = 1;
  cfg.seed = 4242;
  const SystemChannels one = draw_channels(cfg);
  cfg.n_eve = 3;
  const SystemChannels three = draw_channels(cfg);

  REQUIRE(one.alice_irs == three.alice_irs);
  REQUIRE(one.irs_bob == three.irs_bob);
  REQUIRE(one.alice_bob == three.alice_bob);
  // Existing Eve rows are extended, not reshuffled.
  for (std::size_t j = 0; j < one.irs_eve.cols(); ++j)
    REQUIRE(one.irs_eve(0, j) == three.irs_eve(0, j));
  for (std::size_t j = 0; j < one.alice_eve.cols(); ++j)
    REQUIRE(one.alice_eve(0, j) == three.alice_eve(0, j));
}

TEST_CASE("channel shapes follow the config") {
  ScenarioConfig cfg;
  cfg.n_tx = 4;
  cfg.n_irs = 6;
  cfg.n_eve = 2;
  const SystemChannels ch = draw_channels(cfg);
  REQUIRE(ch.alice_irs.rows() == 6);
  REQUIRE(ch.alice_irs.cols() == 4);
  REQUIRE(ch.irs_bob.size() == 6);
  REQUIRE(ch.alice_bob.size() == 4);
  REQUIRE(ch.irs_eve.rows() == 2);
  REQUIRE(ch.irs_eve.cols() == 6);
  REQUIRE(ch.alice_eve.rows() == 2);
  REQUIRE(ch.alice_eve.cols() == 4);
  REQUIRE_THAT(ch.noise_bob, Catch::Matchers::WithinRel(dbw_to_watt(-75.0), 1e-12));
}

TEST_CASE("config validation") {
  ScenarioConfig cfg;
  cfg.n_tx = 0;
  REQUIRE_THROWS_AS(cfg.validate(), InvalidInputError);
  cfg = ScenarioConfig{};
  cfg.d_v_m = -1.0;
  REQUIRE_THROWS_AS(draw_channels(cfg), InvalidInputError);
  cfg = ScenarioConfig{};
  cfg.power_dbw = std::numeric_limits<double>::infinity();
  REQUIRE_THROWS_AS(cfg.validate(), InvalidInputError);
}

namespace {

double mean_sq(const CVec& v) {
  double s = 0.0;
  for (const cxd& x : v) s += std::norm(x);
  return s / static_cast<double>(v.size());
}

double mean_sq(const CMat& m) {
  double s = 0.0;
  for (const cxd& x : m.data()) s += std::norm(x);
  return s / static_cast<double>(m.data().size());
}

// |h|^2 of a Rayleigh entry with variance v has mean v and stddev v, so the
// Monte Carlo standard error of the mean over n samples is v / sqrt(n).
void require_calibrated(double sample_mean, double pl_linear, std::size_t n) {
  const double three_sigma = 3.0 * pl_linear / std::sqrt(static_cast<double>(n));
  REQUIRE(std::abs(sample_mean - pl_linear) <= three_sigma);
}

}  // namespace

TEST_CASE("per-entry power matches the linear path loss of every link") {
  constexpr std::size_t kSamples = 100000;

  // Wide surface: 1e5 samples for the Alice-surface, surface-Bob and
  // surface-Eve links in one draw.
  ScenarioConfig big_l;
  big_l.n_tx = 1;
  big_l.n_irs = kSamples;
  big_l.n_eve = 1;
  big_l.seed = 7;
  const NodeDistances dl = node_distances(big_l);
  const SystemChannels ch_l = draw_channels(big_l);
  require_calibrated(mean_sq(ch_l.alice_irs),
                     db_to_linear(path_loss_db(big_l.d_ai_m, big_l.exp_ai, big_l.pl0_db, 1.0)),
                     kSamples);
  require_calibrated(mean_sq(ch_l.irs_bob),
                     db_to_linear(path_loss_db(dl.d_ib, big_l.exp_ib, big_l.pl0_db, 1.0)),
                     kSamples);
  require_calibrated(mean_sq(ch_l.irs_eve),
                     db_to_linear(path_loss_db(dl.d_ie, big_l.exp_ie, big_l.pl0_db, 1.0)),
                     kSamples);

  // Wide transmit array: 1e5 samples for the two direct links. Geometry puts
  // Bob at exactly 10 m for the worked example below.
  ScenarioConfig big_n;
  big_n.n_tx = kSamples;
  big_n.n_irs = 1;
  big_n.n_eve = 1;
  big_n.d_ab_h_m = 8.0;
  big_n.d_v_m = 6.0;  // d_ab = 10 m
  big_n.seed = 11;
  const NodeDistances dn = node_distances(big_n);
  REQUIRE_THAT(dn.d_ab, Catch::Matchers::WithinAbs(10.0, 1e-12));
  const SystemChannels ch_n = draw_channels(big_n);
  require_calibrated(mean_sq(ch_n.alice_bob),
                     db_to_linear(path_loss_db(dn.d_ab, big_n.exp_ab, big_n.pl0_db, 1.0)),
                     kSamples);
  require_calibrated(mean_sq(ch_n.alice_eve),
                     db_to_linear(path_loss_db(dn.d_ae, big_n.exp_ae, big_n.pl0_db, 1.0)),
                     kSamples);

  // Worked example: 10 m at exponent 3.5 gives -65 dB mean power, sampled
  // within 2 percent.
  const double pl = db_to_linear(-65.0);
  REQUIRE(std::abs(mean_sq(ch_n.alice_bob) - pl) <= 0.02 * pl);
}
