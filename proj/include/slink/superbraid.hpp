#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "slink/braid.hpp"
#include "slink/laurent.hpp"
#include "slink/operators.hpp"

namespace slink {

// Raised when a reduction would enumerate more trajectories than allowed.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& msg, std::uint64_t count)
      : std::runtime_error(msg), count(count) {}
  std::uint64_t count;
};

// One quantum crossing of adjacent world lines. sign +1 is the gate (+zeta),
// sign -1 its adjoint (the same skein relations with zeta -> -zeta).
struct SuperCrossing {
  int pos = 1;        // adjacent pair (pos, pos+1), 1 <= pos <= Q-1
  int sign = 1;       // +1 over-crossing / gate, -1 under-crossing / adjoint
  double zeta = 0.0;
  double xi = 0.0;
  int delta = 1;      // boolean statistics selector
};

struct SuperbraidWord {
  int qubits = 2;
  std::vector<SuperCrossing> crossings;
  KauffmanParams kauffman;

  void validate() const;
};

// One branch of a quantum skein relation: an amplitude, whether the qubit
// states swap, and the classical crossing sign assigned to the swap (the
// up-down pair always swaps through a negative crossing, down-up through a
// positive one).
struct SkeinBranch {
  DScaledPoly amplitude;
  bool swapped = false;
  int letter_sign = 0;  // +-1 when swapped, 0 otherwise
};

// The four quantum skein relations on a local pair of basis values, with
// up = 0 (unoccupied) and down = 1 (occupied):
//   00: amplitude 1, no swap
//   01: (-A^2 - A^-2 e^{iz})/d no-swap  +  i e^{-i xi}(e^{iz}-1)/d swap (neg)
//   10: (-A^2 e^{iz} - A^-2)/d no-swap  -  i e^{+i xi}(e^{iz}-1)/d swap (pos)
//   11: 1 + (e^{iz}-1) delta, no swap
// where z = sign * zeta. Zero-amplitude branches are dropped.
std::vector<SkeinBranch> reduce_crossing(int bit_a, int bit_b, const SuperCrossing& c);

// A classical alternative produced by the reduction: a scalar amplitude
// (still symbolic in A), the classical braid accumulated from the swap
// crossings, and the basis state the trajectory ends in.
struct Trajectory {
  DScaledPoly amplitude;
  BraidWord braid;
  std::string out_state;
};

struct BraidSuperposition {
  std::string in_state;
  std::vector<Trajectory> terms;
};

struct ReduceOptions {
  std::uint64_t trajectory_cap = std::uint64_t(1) << 20;
};

// Exact trajectory count of the depth-first expansion (zero-amplitude
// branches excluded), computed by dynamic programming over basis states.
std::uint64_t count_trajectories(const SuperbraidWord& word, const std::string& in_state);

// Depth-first quantum skein expansion over the crossings, threading basis
// values along the strands. Amplitudes multiply as d-scaled polynomials (and
// are d-reduced on output); each swap appends its signed letter to the
// trajectory's braid word.
BraidSuperposition reduce_word(const SuperbraidWord& word, const std::string& in_state,
                               const ReduceOptions& opts = {});

// Amplitudes per out_state, evaluated at the configured A and summed.
std::map<std::string, Cx> grouped_amplitudes(const BraidSuperposition& red, Cx A);

// Matrix oracle: the quantum gate of one crossing, and the ordered product of
// a whole word (first crossing acts first). Grouped reduction amplitudes must
// reproduce the word matrix columns.
SparseOperator crossing_matrix(const SuperCrossing& c, const KauffmanParams& kauffman,
                               int qubits);
SparseOperator word_matrix(const SuperbraidWord& word);

struct SuperlinkTerm {
  std::string in_state;
  DScaledPoly amplitude;
  LaurentPoly jones;  // of the member link (integer mode)
  int components = 0;
};

// Superlink invariant of the closed superbraid: for every basis in-state the
// reduction is run, trajectories that return to their in-state survive the
// trace closure, each survivor's braid closure gets its Jones polynomial, and
// the combined invariant is sum(amplitude(A) * jones) over all survivors.
// The basis-state sum is an unnormalized trace unless normalize is set.
struct SuperlinkInvariant {
  std::vector<SuperlinkTerm> terms;
  LaurentPoly combined;  // complex mode
  bool normalized = false;
};

struct SuperlinkOptions {
  ReduceOptions reduce;
  bool normalize = false;  // divide the basis-state sum by 2^Q
  int writhe_sign = -1;
  int threads = 1;
};

SuperlinkInvariant superlink_invariant(const SuperbraidWord& word,
                                       const SuperlinkOptions& opts = {});

}  // namespace slink
