#include "slink/superbraid.hpp"

#include <cmath>
#include <thread>

#include "slink/operators.hpp"

namespace slink {

namespace {

void validate_crossing(const SuperCrossing& c, int qubits) {
  if (c.pos < 1 || c.pos >= qubits) {
    throw std::invalid_argument("superbraid: crossing position out of range");
  }
  if (c.sign != 1 && c.sign != -1) {
    throw std::invalid_argument("superbraid: crossing sign must be +-1");
  }
  if (c.delta != 0 && c.delta != 1) {
    throw std::invalid_argument("superbraid: delta must be boolean");
  }
}

}  // namespace

void SuperbraidWord::validate() const {
  if (qubits < 2) throw std::invalid_argument("superbraid: needs at least 2 qubits");
  for (const SuperCrossing& c : crossings) validate_crossing(c, qubits);
}

namespace {

std::vector<SkeinBranch> skein_branches(int bit_a, int bit_b, const SuperCrossing& c) {
  const double z_angle = c.sign * c.zeta;
  const Cx z = std::exp(Cx(0.0, z_angle));
  const Cx i(0.0, 1.0);
  std::vector<SkeinBranch> out;

  auto push = [&out](DScaledPoly amp, bool swapped, int letter) {
    if (!amp.is_zero()) out.push_back({std::move(amp), swapped, letter});
  };

  if (bit_a == 0 && bit_b == 0) {
    push(DScaledPoly::one(), false, 0);
  } else if (bit_a == 1 && bit_b == 1) {
    const Cx amp = Cx(1.0) + (z - Cx(1.0)) * Cx(double(c.delta));
    push(DScaledPoly(LaurentPoly::cx_monomial(0, amp), 0), false, 0);
  } else if (bit_a == 0 && bit_b == 1) {
    LaurentPoly ns = LaurentPoly::cx_monomial(2, Cx(-1.0)) +
                     LaurentPoly::cx_monomial(-2, -z);
    push(DScaledPoly(ns, 1), false, 0);
    const Cx swap = i * std::exp(Cx(0.0, -c.xi)) * (z - Cx(1.0));
    push(DScaledPoly(LaurentPoly::cx_monomial(0, swap), 1), true, -1);
  } else {
    LaurentPoly ns = LaurentPoly::cx_monomial(2, -z) +
                     LaurentPoly::cx_monomial(-2, Cx(-1.0));
    push(DScaledPoly(ns, 1), false, 0);
    const Cx swap = -i * std::exp(Cx(0.0, c.xi)) * (z - Cx(1.0));
    push(DScaledPoly(LaurentPoly::cx_monomial(0, swap), 1), true, +1);
  }
  return out;
}

void check_in_state(const SuperbraidWord& word, const std::string& in_state) {
  if (static_cast<int>(in_state.size()) != word.qubits) {
    throw std::invalid_argument("in-state length must equal the qubit count");
  }
  for (char b : in_state) {
    if (b != '0' && b != '1') throw std::invalid_argument("in-state must be a 0/1 string");
  }
}

}  // namespace

std::vector<SkeinBranch> reduce_crossing(int bit_a, int bit_b, const SuperCrossing& c) {
  if ((bit_a != 0 && bit_a != 1) || (bit_b != 0 && bit_b != 1)) {
    throw std::invalid_argument("reduce_crossing: basis values must be 0/1");
  }
  validate_crossing(c, std::max(c.pos + 1, 2));
  return skein_branches(bit_a, bit_b, c);
}

std::uint64_t count_trajectories(const SuperbraidWord& word, const std::string& in_state) {
  word.validate();
  check_in_state(word, in_state);
  // Paths per state; branch factors are per-(state, crossing) and exact.
  std::map<std::string, std::uint64_t> counts{{in_state, 1}};
  for (const SuperCrossing& c : word.crossings) {
    std::map<std::string, std::uint64_t> next;
    for (const auto& [state, count] : counts) {
      const int a = state[c.pos - 1] - '0';
      const int b = state[c.pos] - '0';
      for (const SkeinBranch& br : skein_branches(a, b, c)) {
        std::string out = state;
        if (br.swapped) {
          out[c.pos - 1] = char('0' + b);
          out[c.pos] = char('0' + a);
        }
        next[out] += count;
      }
    }
    counts = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [state, count] : counts) total += count;
  return total;
}

BraidSuperposition reduce_word(const SuperbraidWord& word, const std::string& in_state,
                               const ReduceOptions& opts) {
  word.validate();
  check_in_state(word, in_state);

  const std::uint64_t count = count_trajectories(word, in_state);
  if (count > opts.trajectory_cap) {
    throw CapExceeded("trajectory cap exceeded: word expands to " +
                          std::to_string(count) + " trajectories (cap " +
                          std::to_string(opts.trajectory_cap) + ")",
                      count);
  }

  BraidSuperposition red;
  red.in_state = in_state;

  struct StackFrame {
    std::size_t idx;
    std::string state;
    DScaledPoly amp;
    std::vector<BraidLetter> letters;
  };

  // Depth-first expansion; recursion depth equals the crossing count.
  std::vector<StackFrame> stack;
  stack.push_back({0, in_state, DScaledPoly::one(), {}});
  while (!stack.empty()) {
    StackFrame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.idx == word.crossings.size()) {
      red.terms.push_back(
          {fr.amp.reduced(), BraidWord(word.qubits, std::move(fr.letters)),
           std::move(fr.state)});
      continue;
    }
    const SuperCrossing& c = word.crossings[fr.idx];
    const int a = fr.state[c.pos - 1] - '0';
    const int b = fr.state[c.pos] - '0';
    auto branches = skein_branches(a, b, c);
    // Push in reverse so branches emerge in skein-relation order.
    for (auto it = branches.rbegin(); it != branches.rend(); ++it) {
      StackFrame next;
      next.idx = fr.idx + 1;
      next.state = fr.state;
      next.amp = fr.amp * it->amplitude;
      next.letters = fr.letters;
      if (it->swapped) {
        next.state[c.pos - 1] = char('0' + b);
        next.state[c.pos] = char('0' + a);
        next.letters.push_back({c.pos, it->letter_sign});
      }
      if (!next.amp.is_zero()) stack.push_back(std::move(next));
    }
  }
  return red;
}

std::map<std::string, Cx> grouped_amplitudes(const BraidSuperposition& red, Cx A) {
  std::map<std::string, Cx> grouped;
  for (const Trajectory& t : red.terms) grouped[t.out_state] += t.amplitude.eval(A);
  return grouped;
}

SparseOperator crossing_matrix(const SuperCrossing& c, const KauffmanParams& kauffman,
                               int qubits) {
  GateParams params;
  params.zeta = c.zeta;
  params.xi = c.xi;
  params.delta = double(c.delta);
  params.kauffman = kauffman;
  return gate(generator(c.pos, c.pos + 1, params, qubits), c.sign * c.zeta);
}

SparseOperator word_matrix(const SuperbraidWord& word) {
  word.validate();
  SparseOperator u = SparseOperator::identity(word.qubits);
  for (const SuperCrossing& c : word.crossings) {
    u = crossing_matrix(c, word.kauffman, word.qubits) * u;
  }
  return u;
}

SuperlinkInvariant superlink_invariant(const SuperbraidWord& word,
                                       const SuperlinkOptions& opts) {
  word.validate();
  const std::uint64_t dim = std::uint64_t(1) << word.qubits;
  const int threads = std::max(1, opts.threads);

  // Trajectories that return to their in-state survive the trace closure.
  std::vector<std::vector<SuperlinkTerm>> per_state(dim);
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = begin; s < end; ++s) {
      std::string in;
      for (int q = word.qubits - 1; q >= 0; --q) {
        in.push_back((s >> q) & 1 ? '1' : '0');
      }
      BraidSuperposition red = reduce_word(word, in, opts.reduce);
      for (Trajectory& t : red.terms) {
        if (t.out_state != in) continue;
        LinkInvariantResult inv = jones(t.braid, opts.writhe_sign);
        per_state[s].push_back(
            {in, std::move(t.amplitude), inv.jones, inv.components});
      }
    }
  };

  if (threads == 1 || dim < 4) {
    run_range(0, dim);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (dim + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(dim, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  SuperlinkInvariant inv;
  inv.normalized = opts.normalize;
  LaurentPoly combined(LaurentPoly::Mode::Complex);
  const Cx A = word.kauffman.A;
  for (auto& bucket : per_state) {
    for (SuperlinkTerm& term : bucket) {
      combined = combined + term.jones.to_complex().scaled(term.amplitude.eval(A));
      inv.terms.push_back(std::move(term));
    }
  }
  if (opts.normalize) combined = combined.scaled(Cx(1.0 / double(dim)));
  inv.combined = combined;
  return inv;
}

}  // namespace slink
