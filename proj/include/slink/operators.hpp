#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slink/laurent.hpp"

namespace slink {

inline constexpr double kEntryPruneEps = 1e-14;      // sparse entries below this are dropped
inline constexpr double kIdempotenceTol = 1e-10;     // gate() precondition on its generator

// Dense state over Q qubits. Qubit 1 is the most significant bit of the basis
// index; bit value 1 means the occupied (logical one, spin-down) state.
class StateVector {
 public:
  explicit StateVector(int qubits);
  static StateVector basis(int qubits, std::uint64_t index);
  static StateVector basis(int qubits, const std::string& bits);  // e.g. "01"

  int qubits() const { return qubits_; }
  std::uint64_t dim() const { return std::uint64_t(1) << qubits_; }
  Cx amp(std::uint64_t index) const { return amps_[index]; }
  Cx& amp(std::uint64_t index) { return amps_[index]; }
  const std::vector<Cx>& amps() const { return amps_; }
  double norm() const;

 private:
  int qubits_;
  std::vector<Cx> amps_;
};

std::uint64_t bits_to_index(const std::string& bits);
std::string index_to_bits(std::uint64_t index, int qubits);

// 2^Q x 2^Q complex matrix stored as row -> (col -> value), entries below
// kEntryPruneEps dropped. Immutable value semantics; all products are exact
// sparse-sparse convolutions.
class SparseOperator {
 public:
  using Index = std::uint64_t;
  using Row = std::map<Index, Cx>;

  explicit SparseOperator(int qubits);
  static SparseOperator identity(int qubits);

  int qubits() const { return qubits_; }
  Index dim() const { return Index(1) << qubits_; }
  std::size_t entry_count() const;

  Cx at(Index row, Index col) const;
  void set(Index row, Index col, Cx value);
  const std::map<Index, Row>& rows() const { return rows_; }

  SparseOperator operator+(const SparseOperator& rhs) const;
  SparseOperator operator-(const SparseOperator& rhs) const;
  SparseOperator operator*(const SparseOperator& rhs) const;
  SparseOperator scaled(Cx factor) const;
  SparseOperator adjoint() const;

  double max_abs() const;
  std::vector<Cx> to_dense() const;  // row-major, for small-Q oracles

 private:
  void require_same_dim(const SparseOperator& rhs) const;

  int qubits_;
  std::map<Index, Row> rows_;
};

double max_abs_diff(const SparseOperator& a, const SparseOperator& b);

StateVector apply(const SparseOperator& op, const StateVector& psi);

struct GateParams {
  double zeta = 0.0;    // gate angle
  double xi = 0.0;      // internal e-bit phase
  double delta = 1.0;   // statistics selector: 1 fermionic, 0 bosonic
  KauffmanParams kauffman;

  bool delta_boolean() const { return delta == 0.0 || delta == 1.0; }
};

// Jordan-Wigner ladder operators: sigma_z^(gamma-1) (x) a (x) 1^(Q-gamma),
// with the singleton a = (sigma_x + i sigma_y)/2. Creation is the transpose.
SparseOperator annihilation(int gamma, int qubits);
SparseOperator creation(int gamma, int qubits);
SparseOperator number_op(int alpha, int qubits);

// Hermitian idempotent gate generator on the (alpha, gamma) pair:
//   E = d^-1 [ -A^2 n_a - A^-2 n_g + i(e^{-i xi} a+_a a_g - e^{i xi} a+_g a_a)
//              + d (delta - 1) n_a n_g ].
// The entangling phases are the ones consistent with the quantum skein
// relations (the swap amplitude out of the up-down pair carries e^{-i xi}).
// Non-adjacent pairs are accepted; delta may be a non-boolean probe value
// (then E is not idempotent and gate() will reject it).
SparseOperator generator(int alpha, int gamma, const GateParams& params, int qubits);

// 1 + (e^{i zeta} - 1) gen. Exact for idempotent generators, which is checked
// (to kIdempotenceTol) because the closed form relies on gen^2 = gen.
SparseOperator gate(const SparseOperator& gen, double zeta);

// Classical braid operator on the adjacent pair (alpha, alpha+1):
//   b = A 1 + A^-1 d E.
SparseOperator braid_op(int alpha, const GateParams& params, int qubits);

// Superbraid operator, linear in its generator:
//   b_s = A [ 1 + (A^-4 e^{i zeta} - 1) E ].
// Reduces to braid_op at zeta = pi and factors as braid_op * gate(E, zeta-pi).
SparseOperator superbraid_op(int alpha, const GateParams& params, int qubits);

// Total number operator sum_a n_a (gates commute with it).
SparseOperator total_number(int qubits);

}  // namespace slink
