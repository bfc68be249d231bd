#include "slink/algebra.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <thread>

namespace slink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPoleMargin = 1e-3;

// Deterministic parameter stream: a golden-ratio low-discrepancy walk over
// (0, 2pi) interleaved with seeded random points; csc-mu poles excluded by a
// fixed margin.
class ParamStream {
 public:
  explicit ParamStream(std::uint64_t seed) : rng_(seed) {}

  double next_mu() {
    for (;;) {
      double mu;
      if (tick_++ % 2 == 0) {
        grid_ = std::fmod(grid_ + std::numbers::phi - 1.0, 1.0);
        mu = grid_ * kTwoPi;
      } else {
        mu = uniform_(rng_) * kTwoPi;
      }
      const double dp = std::min({std::abs(mu), std::abs(mu - std::numbers::pi),
                                  std::abs(mu - kTwoPi)});
      if (dp > kPoleMargin) return mu;
    }
  }

  double next_angle() { return uniform_(rng_) * kTwoPi; }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  double grid_ = 0.137;
  std::uint64_t tick_ = 0;
};

GateParams make_params(double mu, double zeta, double xi, double delta, int branch) {
  GateParams p;
  p.zeta = zeta;
  p.xi = xi;
  p.delta = delta;
  p.kauffman = KauffmanParams::from_mu(mu, branch);
  return p;
}

RelationReport report(std::string relation, const ParamSample& s, double residual,
                      double tol) {
  return {std::move(relation), s, residual, tol, residual < tol};
}

// delta(delta-1) [ c3 n1 n2 n3 + c12 n1 n2 + c23 n2 n3 ] over three adjacent sites.
SparseOperator number_combination(int qubits, int base, Cx c3, Cx c12, Cx c23,
                                  double delta) {
  SparseOperator n1 = number_op(base, qubits);
  SparseOperator n2 = number_op(base + 1, qubits);
  SparseOperator n3 = number_op(base + 2, qubits);
  const Cx dd(delta * (delta - 1.0));
  return ((n1 * n2 * n3).scaled(c3) + (n1 * n2).scaled(c12) + (n2 * n3).scaled(c23))
      .scaled(dd);
}

}  // namespace

std::vector<RelationReport> check_qtl(int qubits, const CheckOptions& opts) {
  std::vector<RelationReport> out;
  ParamStream stream(opts.seed);
  for (int k = 0; k < opts.samples; ++k) {
    const double mu = stream.next_mu();
    const double xi = stream.next_angle();
    for (double delta : {0.0, 1.0}) {
      ParamSample sample{qubits, mu, 0.0, xi, delta};
      GateParams params = make_params(mu, 0.0, xi, delta, opts.a_branch);
      const Cx d = params.kauffman.d;

      std::vector<SparseOperator> e;
      for (int a = 1; a < qubits; ++a) e.push_back(generator(a, a + 1, params, qubits));

      double idem = 0.0, herm = 0.0;
      for (const auto& g : e) {
        idem = std::max(idem, max_abs_diff(g * g, g));
        herm = std::max(herm, max_abs_diff(g, g.adjoint()));
      }
      out.push_back(report("qtl_idempotent", sample, idem, 1e-10));
      out.push_back(report("qtl_hermitian", sample, herm, 1e-12));

      if (qubits >= 3) {
        const Cx dm2 = Cx(1.0) / (d * d);
        double triple = 0.0, tl0 = 0.0;
        for (int a = 0; a + 1 < static_cast<int>(e.size()); ++a) {
          SparseOperator lhs = e[a] * e[a + 1] * e[a] - e[a + 1] * e[a] * e[a + 1];
          SparseOperator rhs = e[a].scaled(dm2) - e[a + 1].scaled(dm2);
          triple = std::max(triple, max_abs_diff(lhs, rhs));
          if (delta == 0.0) {
            tl0 = std::max(tl0, max_abs_diff(e[a] * e[a + 1] * e[a], e[a].scaled(dm2)));
            tl0 = std::max(tl0, max_abs_diff(e[a + 1] * e[a] * e[a + 1],
                                             e[a + 1].scaled(dm2)));
          }
        }
        out.push_back(report("qtl_triple", sample, triple, 1e-10));
        if (delta == 0.0) out.push_back(report("qtl_tl_reduction", sample, tl0, 1e-10));
      }
      if (qubits >= 4) {
        double distant = 0.0;
        for (std::size_t a = 0; a < e.size(); ++a) {
          for (std::size_t b = a + 2; b < e.size(); ++b) {
            distant = std::max(distant, max_abs_diff(e[a] * e[b], e[b] * e[a]));
          }
        }
        out.push_back(report("qtl_distant", sample, distant, 1e-12));
      }
    }
  }
  return out;
}

std::vector<RelationReport> check_xy(const CheckOptions& opts, double delta_probe) {
  const int qubits = 3;
  std::vector<RelationReport> out;
  ParamStream stream(opts.seed);
  for (int k = 0; k < opts.samples; ++k) {
    const double mu = stream.next_mu();
    const double xi = stream.next_angle();
    for (double delta : {0.0, delta_probe, 1.0}) {
      ParamSample sample{qubits, mu, 0.0, xi, delta};
      GateParams params = make_params(mu, 0.0, xi, delta, opts.a_branch);
      const Cx d = params.kauffman.d;
      const Cx A4 = params.kauffman.A2 * params.kauffman.A2;
      const Cx d2 = d * d;

      SparseOperator e1 = generator(1, 2, params, qubits);
      SparseOperator e2 = generator(2, 3, params, qubits);
      SparseOperator x = (e1 * e2 * e1).scaled(d2) - e1;
      SparseOperator y = (e2 * e1 * e2).scaled(d2) - e2;
      SparseOperator diff = x - y;

      if (delta == 0.0 || delta == 1.0) {
        out.push_back(report("xy_boolean_vanishes", sample, max_abs_diff(x, y), 1e-12));
      }
      SparseOperator calibrated = number_combination(
          qubits, 1, -(A4 - Cx(1.0) / A4), A4 + Cx(1.0), -(Cx(1.0) / A4 + Cx(1.0)),
          delta);
      out.push_back(
          report("xy_closed_form", sample, max_abs_diff(diff, calibrated), 1e-10));
      if (opts.reference_forms) {
        SparseOperator reference = number_combination(
            qubits, 1, A4 - Cx(1.0) / A4, -A4, Cx(1.0) / A4, delta);
        out.push_back(report("xy_closed_form_reference", sample,
                             max_abs_diff(diff, reference), 1e-10));
      }
    }
  }
  return out;
}

std::vector<RelationReport> check_superbraid_group(int qubits, const CheckOptions& opts) {
  if (qubits < 3) throw std::invalid_argument("check_superbraid_group: needs qubits >= 3");
  std::vector<RelationReport> out;
  ParamStream stream(opts.seed);
  for (int k = 0; k < opts.samples; ++k) {
    const double mu = stream.next_mu();
    const double xi = stream.next_angle();
    const double zeta = stream.next_angle();
    for (double delta : {0.0, 1.0}) {
      ParamSample sample{qubits, mu, zeta, xi, delta};
      GateParams params = make_params(mu, zeta, xi, delta, opts.a_branch);
      const Cx A2 = params.kauffman.A2;
      const Cx A4 = A2 * A2;
      const Cx d = params.kauffman.d;
      const Cx z = std::exp(Cx(0.0, zeta));
      const Cx gamma = -(A4 + z / A4) * (Cx(1.0) + z) / (A2 * d * d);

      SparseOperator b1 = superbraid_op(1, params, qubits);
      SparseOperator b2 = superbraid_op(2, params, qubits);
      SparseOperator lhs = b1 * b2 * b1 + b1.scaled(gamma);
      SparseOperator rhs = b2 * b1 * b2 + b2.scaled(gamma);
      out.push_back(report("superbraid_relation", sample, max_abs_diff(lhs, rhs), 1e-9));
      if (opts.reference_forms) {
        SparseOperator lhs_ref = b1 * b2 * b1 + b1.scaled(-gamma);
        SparseOperator rhs_ref = b2 * b1 * b2 + b2.scaled(-gamma);
        out.push_back(report("superbraid_relation_reference", sample,
                             max_abs_diff(lhs_ref, rhs_ref), 1e-9));
      }

      // Classical limit: gamma vanishes at zeta = pi and the plain Artin
      // relation holds for the superbraid operators there.
      GateParams cl = params;
      cl.zeta = std::numbers::pi;
      const Cx zpi = std::exp(Cx(0.0, cl.zeta));
      const Cx gamma_pi = -(A4 + zpi / A4) * (Cx(1.0) + zpi) / (A2 * d * d);
      SparseOperator s1 = superbraid_op(1, cl, qubits);
      SparseOperator s2 = superbraid_op(2, cl, qubits);
      double resid = std::max(std::abs(gamma_pi),
                              max_abs_diff(s1 * s2 * s1, s2 * s1 * s2));
      ParamSample cl_sample{qubits, mu, cl.zeta, xi, delta};
      out.push_back(report("superbraid_classical_limit", cl_sample, resid, 1e-10));

      if (qubits >= 4) {
        SparseOperator b3 = superbraid_op(3, params, qubits);
        out.push_back(report("superbraid_distant", sample,
                             max_abs_diff(b1 * b3, b3 * b1), 1e-12));
      }
    }
  }
  return out;
}

std::vector<RelationReport> check_artin_limit(int qubits, const CheckOptions& opts) {
  if (qubits < 3) throw std::invalid_argument("check_artin_limit: needs qubits >= 3");
  std::vector<RelationReport> out;
  ParamStream stream(opts.seed);
  for (int k = 0; k < opts.samples; ++k) {
    const double mu = stream.next_mu();
    const double xi = stream.next_angle();
    for (double delta : {0.0, 1.0}) {
      ParamSample sample{qubits, mu, std::numbers::pi, xi, delta};
      GateParams params = make_params(mu, std::numbers::pi, xi, delta, opts.a_branch);
      SparseOperator b1 = braid_op(1, params, qubits);
      SparseOperator b2 = braid_op(2, params, qubits);
      out.push_back(report("artin_adjacent", sample,
                           max_abs_diff(b1 * b2 * b1, b2 * b1 * b2), 1e-10));
      if (qubits >= 4) {
        SparseOperator b3 = braid_op(3, params, qubits);
        out.push_back(
            report("artin_distant", sample, max_abs_diff(b1 * b3, b3 * b1), 1e-12));
      }
    }

    // Non-boolean probe: the commutator equals the calibrated closed form
    // A^-1 (A^4 - A^-4) (A^-2 d) delta(delta-1) (1 - n1) n2 n3.
    const double delta = 0.5;
    ParamSample sample{qubits, mu, std::numbers::pi, xi, delta};
    GateParams params = make_params(mu, std::numbers::pi, xi, delta, opts.a_branch);
    const Cx A = params.kauffman.A;
    const Cx A4 = params.kauffman.A2 * params.kauffman.A2;
    const Cx d = params.kauffman.d;
    SparseOperator b1 = braid_op(1, params, qubits);
    SparseOperator b2 = braid_op(2, params, qubits);
    SparseOperator comm = b1 * b2 * b1 - b2 * b1 * b2;

    SparseOperator proj =
        (SparseOperator::identity(qubits) - number_op(1, qubits)) *
        number_op(2, qubits) * number_op(3, qubits);
    const Cx base = (A4 - Cx(1.0) / A4) / A * Cx(delta * (delta - 1.0));
    SparseOperator calibrated = proj.scaled(base * d / params.kauffman.A2);
    out.push_back(report("artin_probe_commutator", sample,
                         max_abs_diff(comm, calibrated), 1e-10));
    if (opts.reference_forms) {
      SparseOperator reference = proj.scaled(base / (d * d));
      out.push_back(report("artin_probe_commutator_reference", sample,
                           max_abs_diff(comm, reference), 1e-10));
    }
  }
  return out;
}

std::vector<RelationReport> check_all(int qubits, const CheckOptions& opts) {
  std::vector<std::vector<RelationReport>> family(4);
  std::vector<std::function<void()>> jobs = {
      [&] { family[0] = check_qtl(qubits, opts); },
      [&] { family[1] = check_xy(opts); },
      [&] { family[2] = check_superbraid_group(qubits, opts); },
      [&] { family[3] = check_artin_limit(qubits, opts); },
  };
  if (opts.threads > 1) {
    std::vector<std::thread> pool;
    pool.reserve(jobs.size());
    for (auto& job : jobs) pool.emplace_back(job);
    for (auto& th : pool) th.join();
  } else {
    for (auto& job : jobs) job();
  }
  std::vector<RelationReport> out;
  for (auto& reports : family) {
    out.insert(out.end(), std::make_move_iterator(reports.begin()),
               std::make_move_iterator(reports.end()));
  }
  return out;
}

bool all_pass(const std::vector<RelationReport>& reports) {
  for (const RelationReport& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace slink
