#include <doctest.h>

#include <numbers>
#include <random>

#include "slink/operators.hpp"
#include "slink/superbraid.hpp"
#include "test_util.hpp"

using namespace slink;

namespace {

constexpr double kPi = std::numbers::pi;

SuperbraidWord make_word(int qubits, double mu,
                         std::vector<SuperCrossing> crossings, int branch = +1) {
  SuperbraidWord w;
  w.qubits = qubits;
  w.crossings = std::move(crossings);
  w.kauffman = KauffmanParams::from_mu(mu, branch);
  return w;
}

double random_mu(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double mu = u(rng) * 2.0 * kPi;
    if (std::min({std::abs(mu), std::abs(mu - kPi), std::abs(mu - 2.0 * kPi)}) > 0.05) {
      return mu;
    }
  }
}

SuperbraidWord random_superbraid(std::mt19937_64& rng, int max_qubits = 6,
                                 int max_crossings = 10) {
  std::uniform_int_distribution<int> q_dist(2, max_qubits);
  const int q = q_dist(rng);
  std::uniform_int_distribution<int> c_dist(1, max_crossings);
  std::uniform_int_distribution<int> pos(1, q - 1);
  std::uniform_int_distribution<int> flag(0, 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::vector<SuperCrossing> crossings;
  const int c = c_dist(rng);
  for (int k = 0; k < c; ++k) {
    crossings.push_back({pos(rng), flag(rng) ? 1 : -1, angle(rng), angle(rng),
                         flag(rng)});
  }
  return make_word(q, random_mu(rng), std::move(crossings));
}

}  // namespace

TEST_CASE("reduce_crossing matches the four quantum skein relations") {
  const double mu = 0.9, zeta = 1.3, xi = 0.7;
  const KauffmanParams kp = KauffmanParams::from_mu(mu);
  const Cx A2 = kp.A2;
  const Cx d = kp.d;
  const Cx z = std::exp(Cx(0.0, zeta));
  const Cx i(0.0, 1.0);
  const SuperCrossing over{1, +1, zeta, xi, 1};

  SUBCASE("up-up: single unit branch") {
    const auto branches = reduce_crossing(0, 0, over);
    REQUIRE(branches.size() == 1);
    CHECK_FALSE(branches[0].swapped);
    CHECK(std::abs(branches[0].amplitude.eval(kp.A) - Cx(1.0)) < 1e-14);
    CHECK(branches[0].amplitude.dpow() == 0);
  }
  SUBCASE("down-down: phase branch") {
    const auto b1 = reduce_crossing(1, 1, over);
    REQUIRE(b1.size() == 1);
    CHECK(std::abs(b1[0].amplitude.eval(kp.A) - z) < 1e-14);  // delta = 1
    SuperCrossing bose = over;
    bose.delta = 0;
    const auto b0 = reduce_crossing(1, 1, bose);
    REQUIRE(b0.size() == 1);
    CHECK(std::abs(b0[0].amplitude.eval(kp.A) - Cx(1.0)) < 1e-14);
  }
  SUBCASE("up-down: no-swap plus negative-crossing swap") {
    const auto branches = reduce_crossing(0, 1, over);
    REQUIRE(branches.size() == 2);
    CHECK_FALSE(branches[0].swapped);
    CHECK(std::abs(branches[0].amplitude.eval(kp.A) - (-A2 - z / A2) / d) < 1e-14);
    CHECK(branches[1].swapped);
    CHECK(branches[1].letter_sign == -1);
    CHECK(std::abs(branches[1].amplitude.eval(kp.A) -
                   i * std::exp(Cx(0.0, -xi)) * (z - Cx(1.0)) / d) < 1e-14);
    CHECK(branches[1].amplitude.dpow() == 1);
  }
  SUBCASE("down-up: no-swap plus positive-crossing swap") {
    const auto branches = reduce_crossing(1, 0, over);
    REQUIRE(branches.size() == 2);
    CHECK(std::abs(branches[0].amplitude.eval(kp.A) - (-A2 * z - Cx(1.0) / A2) / d) <
          1e-14);
    CHECK(branches[1].letter_sign == +1);
    CHECK(std::abs(branches[1].amplitude.eval(kp.A) +
                   i * std::exp(Cx(0.0, xi)) * (z - Cx(1.0)) / d) < 1e-14);
  }
  SUBCASE("under-crossing flips zeta") {
    SuperCrossing under = over;
    under.sign = -1;
    const auto branches = reduce_crossing(0, 1, under);
    REQUIRE(branches.size() == 2);
    const Cx zm = std::exp(Cx(0.0, -zeta));
    CHECK(std::abs(branches[0].amplitude.eval(kp.A) - (-A2 - zm / A2) / d) < 1e-14);
    CHECK(branches[1].letter_sign == -1);  // swap sign depends on the pair, not the crossing sign
  }
  SUBCASE("zeta = 0 reduces trivially") {
    SuperCrossing idle = over;
    idle.zeta = 0.0;
    const auto branches = reduce_crossing(0, 1, idle);
    REQUIRE(branches.size() == 1);
    CHECK_FALSE(branches[0].swapped);
    CHECK(std::abs(branches[0].amplitude.eval(kp.A) - Cx(1.0)) < 1e-14);
  }
}

TEST_CASE("reduce_word on an empty word is the identity trajectory") {
  const SuperbraidWord w = make_word(3, 1.1, {});
  const BraidSuperposition red = reduce_word(w, "010");
  REQUIRE(red.terms.size() == 1);
  CHECK(red.terms[0].out_state == "010");
  CHECK(red.terms[0].braid.letters().empty());
  CHECK(std::abs(red.terms[0].amplitude.eval(w.kauffman.A) - Cx(1.0)) < 1e-14);
}

TEST_CASE("gate followed by its adjoint reduces to the identity superposition") {
  const double mu = 1.234, zeta = 2.01, xi = 0.77;
  for (int delta : {0, 1}) {
    const SuperbraidWord w = make_word(
        2, mu, {{1, +1, zeta, xi, delta}, {1, -1, zeta, xi, delta}});
    for (const char* in : {"00", "01", "10", "11"}) {
      const BraidSuperposition red = reduce_word(w, in);
      const auto grouped = grouped_amplitudes(red, w.kauffman.A);
      for (const auto& [out, amp] : grouped) {
        const Cx expect = (out == in) ? Cx(1.0) : Cx(0.0);
        CHECK(std::abs(amp - expect) < 1e-12);
      }
      CHECK(std::abs(grouped.at(in) - Cx(1.0)) < 1e-12);
    }
  }
}

TEST_CASE("swap letters carry the skein-assigned signs") {
  // A swap out of 01 is a negative crossing, a swap out of 10 a positive one,
  // independent of the over/under sign of the quantum crossing.
  for (int crossing_sign : {+1, -1}) {
    const SuperbraidWord w = make_word(
        2, kPi / 2,
        {{1, crossing_sign, kPi, 0.4, 1}, {1, crossing_sign, kPi, 0.4, 1}});
    const BraidSuperposition red = reduce_word(w, "01");
    bool found_double_swap = false;
    for (const Trajectory& t : red.terms) {
      if (t.braid.letters().size() != 2) continue;
      found_double_swap = true;
      CHECK(t.braid.letters()[0] == BraidLetter{1, -1});  // swap out of 01
      CHECK(t.braid.letters()[1] == BraidLetter{1, +1});  // swap back out of 10
      CHECK(t.out_state == "01");
    }
    CHECK(found_double_swap);
  }
  // Trajectory invariants on random words.
  std::mt19937_64 rng(0x5b001);
  for (int trial = 0; trial < 30; ++trial) {
    const SuperbraidWord w = random_superbraid(rng, 4, 6);
    std::uniform_int_distribution<int> st(0, (1 << w.qubits) - 1);
    const std::string in = index_to_bits(st(rng), w.qubits);
    for (const Trajectory& t : reduce_word(w, in).terms) {
      CHECK(t.braid.letters().size() <= w.crossings.size());
      CHECK(t.amplitude.dpow() <= static_cast<int>(w.crossings.size()));
    }
  }
}

TEST_CASE("grouped reduction reproduces the gate-matrix columns") {
  std::mt19937_64 rng(0x5b002);
  double worst = 0.0, worst_prob = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const SuperbraidWord w = random_superbraid(rng, 5, 8);
    const SparseOperator u = word_matrix(w);
    std::uniform_int_distribution<int> st(0, (1 << w.qubits) - 1);
    for (int rep = 0; rep < 2; ++rep) {
      const std::uint64_t col = st(rng);
      const std::string in = index_to_bits(col, w.qubits);
      const auto grouped = grouped_amplitudes(reduce_word(w, in), w.kauffman.A);
      double prob = 0.0;
      for (std::uint64_t row = 0; row < u.dim(); ++row) {
        const std::string out = index_to_bits(row, w.qubits);
        const Cx amp = grouped.count(out) ? grouped.at(out) : Cx(0.0);
        worst = std::max(worst, std::abs(amp - u.at(row, col)));
        prob += std::norm(amp);
      }
      worst_prob = std::max(worst_prob, std::abs(prob - 1.0));
    }
  }
  CHECK(worst < 1e-10);
  CHECK(worst_prob < 1e-10);
}

TEST_CASE("a word followed by its reverse adjoint reduces to the identity") {
  std::mt19937_64 rng(0x5b003);
  for (int trial = 0; trial < 10; ++trial) {
    SuperbraidWord w = random_superbraid(rng, 4, 5);
    SuperbraidWord round_trip = w;
    for (auto it = w.crossings.rbegin(); it != w.crossings.rend(); ++it) {
      SuperCrossing inv = *it;
      inv.sign = -inv.sign;
      round_trip.crossings.push_back(inv);
    }
    std::uniform_int_distribution<int> st(0, (1 << w.qubits) - 1);
    const std::string in = index_to_bits(st(rng), w.qubits);
    const auto grouped = grouped_amplitudes(reduce_word(round_trip, in), w.kauffman.A);
    for (const auto& [out, amp] : grouped) {
      const Cx expect = (out == in) ? Cx(1.0) : Cx(0.0);
      CHECK(std::abs(amp - expect) < 1e-10);
    }
  }
}

TEST_CASE("trajectory cap") {
  // 12 crossings on an alternating pair pattern blow up exponentially.
  std::vector<SuperCrossing> crossings;
  for (int k = 0; k < 12; ++k) crossings.push_back({1, +1, 1.0, 0.0, 1});
  const SuperbraidWord w = make_word(2, 0.9, std::move(crossings));
  ReduceOptions opts;
  opts.trajectory_cap = 16;
  CHECK(count_trajectories(w, "01") > 16);
  CHECK_THROWS_AS(reduce_word(w, "01", opts), CapExceeded);
  try {
    reduce_word(w, "01", opts);
  } catch (const CapExceeded& e) {
    CHECK(e.count == count_trajectories(w, "01"));
  }
}

TEST_CASE("input validation") {
  const SuperbraidWord w = make_word(2, 0.9, {{1, 1, 1.0, 0.0, 1}});
  CHECK_THROWS_AS(reduce_word(w, "0"), std::invalid_argument);
  CHECK_THROWS_AS(reduce_word(w, "0x"), std::invalid_argument);
  SuperbraidWord bad = w;
  bad.crossings[0].pos = 2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = w;
  bad.crossings[0].delta = 2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("all-zeta-zero superlink has only unit identity trajectories") {
  const SuperbraidWord w = make_word(
      3, 1.3, {{1, +1, 0.0, 0.4, 1}, {2, -1, 0.0, 1.0, 0}, {1, +1, 0.0, 0.0, 1}});
  const SuperlinkInvariant inv = superlink_invariant(w);
  CHECK(inv.terms.size() == 8);  // one surviving identity trajectory per basis state
  for (const SuperlinkTerm& t : inv.terms) {
    CHECK(std::abs(t.amplitude.eval(w.kauffman.A) - Cx(1.0)) < 1e-12);
    CHECK(t.components == 3);
  }
  // combined = 2^Q * V(identity closure); the 3-strand identity closes to the
  // 3-component unlink with V = d^2 (one 1/d against the bracket d^3)
  const Cx d = w.kauffman.d;
  const Cx expect = Cx(8.0) * d * d;
  CHECK(std::abs(inv.combined.eval(w.kauffman.A) - expect) < 1e-10);

  SuperlinkOptions norm;
  norm.normalize = true;
  const SuperlinkInvariant normalized = superlink_invariant(w, norm);
  CHECK(std::abs(normalized.combined.eval(w.kauffman.A) - d * d) < 1e-10);
}

TEST_CASE("single-crossing superlink matches the hand enumeration") {
  // Survivors: 00 with amplitude 1; 01 and 10 with their no-swap amplitudes
  // ((-A^2 - A^-2 e^{iz})/d and (-A^2 e^{iz} - A^-2)/d, summing to 1+e^{iz});
  // 11 with 1 + (e^{iz}-1) delta. Each member braid is the identity 2-braid,
  // whose closure is the 2-component unlink with V = d. So
  //   combined = (3 + e^{iz} + (e^{iz}-1) delta) * d.
  std::mt19937_64 rng(0x5b004);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int delta : {0, 1}) {
    const double mu = random_mu(rng);
    const double zeta = angle(rng);
    const SuperbraidWord w = make_word(2, mu, {{1, +1, zeta, angle(rng), delta}});
    const SuperlinkInvariant inv = superlink_invariant(w);
    REQUIRE(inv.terms.size() == 4);
    for (const SuperlinkTerm& t : inv.terms) {
      CHECK(t.jones == LaurentPoly::d_poly());
      CHECK(t.components == 2);
    }
    const Cx z = std::exp(Cx(0.0, zeta));
    const Cx weight = Cx(3.0) + z + (z - Cx(1.0)) * Cx(double(delta));
    const Cx expect = weight * w.kauffman.d;
    CHECK(std::abs(inv.combined.eval(w.kauffman.A) - expect) < 1e-10);
  }
}

TEST_CASE("zeta = pi at mu = pi/2 collapses to phased classical swaps") {
  // At mu = pi/2 and delta = 1 the gate is an exact phased swap. The no-swap
  // skein amplitudes are nonzero polynomials that vanish at A = i, so after
  // evaluation the superposition concentrates on the single classical braid
  // obtained by replacing each gate with its swap permutation, with a pure
  // phase amplitude.
  const SuperbraidWord w = make_word(
      3, kPi / 2, {{1, +1, kPi, 0.3, 1}, {2, +1, kPi, 0.9, 1}});
  const SparseOperator u = word_matrix(w);
  for (std::uint64_t col = 0; col < 8; ++col) {
    const std::string in = index_to_bits(col, 3);
    // the permutation image: swap (1,2) then (2,3)
    std::string swapped = in;
    std::swap(swapped[0], swapped[1]);
    std::swap(swapped[1], swapped[2]);

    const auto grouped = grouped_amplitudes(reduce_word(w, in), w.kauffman.A);
    for (const auto& [out, amp] : grouped) {
      if (out == swapped) {
        CHECK(std::abs(std::abs(amp) - 1.0) < 1e-12);  // pure phase
      } else {
        CHECK(std::abs(amp) < 1e-12);
      }
      CHECK(std::abs(amp - u.at(bits_to_index(out), col)) < 1e-12);
    }
    REQUIRE(grouped.count(swapped) == 1);
  }
}

TEST_CASE("superlink invariant is deterministic across thread counts") {
  std::mt19937_64 rng(0x5b005);
  const SuperbraidWord w = random_superbraid(rng, 4, 6);
  SuperlinkOptions seq;
  seq.threads = 1;
  SuperlinkOptions par;
  par.threads = 4;
  const SuperlinkInvariant a = superlink_invariant(w, seq);
  const SuperlinkInvariant b = superlink_invariant(w, par);
  REQUIRE(a.terms.size() == b.terms.size());
  CHECK(approx_equal(a.combined, b.combined, 1e-12));
  for (std::size_t k = 0; k < a.terms.size(); ++k) {
    CHECK(a.terms[k].in_state == b.terms[k].in_state);
    CHECK(a.terms[k].jones == b.terms[k].jones);
  }
}
