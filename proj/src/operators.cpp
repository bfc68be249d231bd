#include "slink/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace slink {

namespace {

void check_qubits(int qubits) {
  if (qubits < 1 || qubits > 28) {
    throw std::invalid_argument("qubit count out of range");
  }
}

}  // namespace

StateVector::StateVector(int qubits) : qubits_(qubits) {
  check_qubits(qubits);
  amps_.assign(std::size_t(1) << qubits_, Cx(0.0));
}

StateVector StateVector::basis(int qubits, std::uint64_t index) {
  StateVector psi(qubits);
  if (index >= psi.dim()) throw std::invalid_argument("basis index out of range");
  psi.amps_[index] = Cx(1.0);
  return psi;
}

StateVector StateVector::basis(int qubits, const std::string& bits) {
  if (static_cast<int>(bits.size()) != qubits) {
    throw std::invalid_argument("bit string length != qubit count");
  }
  return basis(qubits, bits_to_index(bits));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Cx& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::uint64_t bits_to_index(const std::string& bits) {
  std::uint64_t idx = 0;
  for (char b : bits) {
    if (b != '0' && b != '1') throw std::invalid_argument("bit string must be 0/1");
    idx = (idx << 1) | std::uint64_t(b - '0');
  }
  return idx;
}

std::string index_to_bits(std::uint64_t index, int qubits) {
  std::string out(qubits, '0');
  for (int q = 0; q < qubits; ++q) {
    if (index & (std::uint64_t(1) << (qubits - 1 - q))) out[q] = '1';
  }
  return out;
}

SparseOperator::SparseOperator(int qubits) : qubits_(qubits) { check_qubits(qubits); }

SparseOperator SparseOperator::identity(int qubits) {
  SparseOperator op(qubits);
  for (Index k = 0; k < op.dim(); ++k) op.rows_[k][k] = Cx(1.0);
  return op;
}

std::size_t SparseOperator::entry_count() const {
  std::size_t n = 0;
  for (const auto& [r, row] : rows_) n += row.size();
  return n;
}

Cx SparseOperator::at(Index row, Index col) const {
  auto rit = rows_.find(row);
  if (rit == rows_.end()) return Cx(0.0);
  auto cit = rit->second.find(col);
  return cit == rit->second.end() ? Cx(0.0) : cit->second;
}

void SparseOperator::set(Index row, Index col, Cx value) {
  if (row >= dim() || col >= dim()) throw std::invalid_argument("entry out of range");
  if (std::abs(value) <= kEntryPruneEps) {
    auto rit = rows_.find(row);
    if (rit != rows_.end()) {
      rit->second.erase(col);
      if (rit->second.empty()) rows_.erase(rit);
    }
    return;
  }
  rows_[row][col] = value;
}

void SparseOperator::require_same_dim(const SparseOperator& rhs) const {
  if (qubits_ != rhs.qubits_) throw std::invalid_argument("operator dimension mismatch");
}

SparseOperator SparseOperator::operator+(const SparseOperator& rhs) const {
  require_same_dim(rhs);
  SparseOperator out(*this);
  for (const auto& [r, row] : rhs.rows_) {
    for (const auto& [c, v] : row) {
      out.set(r, c, out.at(r, c) + v);
    }
  }
  return out;
}

SparseOperator SparseOperator::operator-(const SparseOperator& rhs) const {
  return *this + rhs.scaled(Cx(-1.0));
}

SparseOperator SparseOperator::operator*(const SparseOperator& rhs) const {
  require_same_dim(rhs);
  SparseOperator out(qubits_);
  for (const auto& [r, row] : rows_) {
    std::map<Index, Cx> acc;
    for (const auto& [k, v] : row) {
      auto rit = rhs.rows_.find(k);
      if (rit == rhs.rows_.end()) continue;
      for (const auto& [c, w] : rit->second) acc[c] += v * w;
    }
    for (const auto& [c, v] : acc) {
      if (std::abs(v) > kEntryPruneEps) out.rows_[r][c] = v;
    }
  }
  return out;
}

SparseOperator SparseOperator::scaled(Cx factor) const {
  SparseOperator out(qubits_);
  if (std::abs(factor) == 0.0) return out;
  for (const auto& [r, row] : rows_) {
    for (const auto& [c, v] : row) {
      Cx w = v * factor;
      if (std::abs(w) > kEntryPruneEps) out.rows_[r][c] = w;
    }
  }
  return out;
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator out(qubits_);
  for (const auto& [r, row] : rows_) {
    for (const auto& [c, v] : row) out.rows_[c][r] = std::conj(v);
  }
  return out;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& [r, row] : rows_) {
    for (const auto& [c, v] : row) m = std::max(m, std::abs(v));
  }
  return m;
}

std::vector<Cx> SparseOperator::to_dense() const {
  if (qubits_ > 12) throw std::invalid_argument("to_dense limited to 12 qubits");
  std::vector<Cx> dense(dim() * dim(), Cx(0.0));
  for (const auto& [r, row] : rows_) {
    for (const auto& [c, v] : row) dense[r * dim() + c] = v;
  }
  return dense;
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
  // Computed entrywise rather than through operator- so that differences
  // below the entry pruning threshold still register.
  if (a.qubits() != b.qubits()) {
    throw std::invalid_argument("operator dimension mismatch");
  }
  double m = 0.0;
  for (const auto& [r, row] : a.rows()) {
    for (const auto& [c, v] : row) m = std::max(m, std::abs(v - b.at(r, c)));
  }
  for (const auto& [r, row] : b.rows()) {
    for (const auto& [c, v] : row) {
      if (a.at(r, c) == Cx(0.0)) m = std::max(m, std::abs(v));
    }
  }
  return m;
}

StateVector apply(const SparseOperator& op, const StateVector& psi) {
  if (op.qubits() != psi.qubits()) throw std::invalid_argument("apply: dimension mismatch");
  StateVector out(psi.qubits());
  for (const auto& [r, row] : op.rows()) {
    Cx s(0.0);
    for (const auto& [c, v] : row) s += v * psi.amp(c);
    out.amp(r) = s;
  }
  return out;
}

namespace {

void check_site(int site, int qubits, const char* what) {
  if (site < 1 || site > qubits) {
    throw std::invalid_argument(std::string(what) + ": qubit index out of range");
  }
}

}  // namespace

SparseOperator annihilation(int gamma, int qubits) {
  check_qubits(qubits);
  check_site(gamma, qubits, "annihilation");
  SparseOperator op(qubits);
  const std::uint64_t bit = std::uint64_t(1) << (qubits - gamma);
  const std::uint64_t dim = std::uint64_t(1) << qubits;
  for (std::uint64_t col = 0; col < dim; ++col) {
    if (!(col & bit)) continue;  // needs an occupied mode to annihilate
    // sigma_z string over qubits 1..gamma-1: phase (-1)^(occupied to the left)
    int parity = 0;
    for (int q = 1; q < gamma; ++q) {
      if (col & (std::uint64_t(1) << (qubits - q))) parity ^= 1;
    }
    op.set(col & ~bit, col, parity ? Cx(-1.0) : Cx(1.0));
  }
  return op;
}

SparseOperator creation(int gamma, int qubits) {
  // a+ = a^T; entries are real so transpose equals adjoint.
  return annihilation(gamma, qubits).adjoint();
}

SparseOperator number_op(int alpha, int qubits) {
  check_qubits(qubits);
  check_site(alpha, qubits, "number_op");
  SparseOperator op(qubits);
  const std::uint64_t bit = std::uint64_t(1) << (qubits - alpha);
  const std::uint64_t dim = std::uint64_t(1) << qubits;
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (k & bit) op.set(k, k, Cx(1.0));
  }
  return op;
}

SparseOperator total_number(int qubits) {
  SparseOperator op(qubits);
  const std::uint64_t dim = std::uint64_t(1) << qubits;
  for (std::uint64_t k = 0; k < dim; ++k) {
    int n = 0;
    for (int q = 0; q < qubits; ++q) {
      if (k & (std::uint64_t(1) << q)) ++n;
    }
    if (n) op.set(k, k, Cx(double(n)));
  }
  return op;
}

SparseOperator generator(int alpha, int gamma, const GateParams& params, int qubits) {
  check_qubits(qubits);
  check_site(alpha, qubits, "generator");
  check_site(gamma, qubits, "generator");
  if (alpha == gamma) throw std::invalid_argument("generator: alpha must differ from gamma");

  const Cx A2 = params.kauffman.A2;
  const Cx d = params.kauffman.d;
  const Cx i(0.0, 1.0);
  const Cx phase = std::exp(Cx(0.0, params.xi));

  SparseOperator na = number_op(alpha, qubits);
  SparseOperator ng = number_op(gamma, qubits);
  SparseOperator hop_up = creation(alpha, qubits) * annihilation(gamma, qubits);
  SparseOperator hop_dn = creation(gamma, qubits) * annihilation(alpha, qubits);

  SparseOperator e = na.scaled(-A2) + ng.scaled(-Cx(1.0) / A2) +
                     hop_up.scaled(i / phase) - hop_dn.scaled(i * phase) +
                     (na * ng).scaled(d * Cx(params.delta - 1.0));
  return e.scaled(Cx(1.0) / d);
}

SparseOperator gate(const SparseOperator& gen, double zeta) {
  if (max_abs_diff(gen * gen, gen) > kIdempotenceTol) {
    throw std::invalid_argument("gate: generator is not idempotent (E^2 != E)");
  }
  const Cx w = std::exp(Cx(0.0, zeta)) - Cx(1.0);
  return SparseOperator::identity(gen.qubits()) + gen.scaled(w);
}

SparseOperator braid_op(int alpha, const GateParams& params, int qubits) {
  if (alpha < 1 || alpha >= qubits) {
    throw std::invalid_argument("braid_op: needs adjacent pair (alpha, alpha+1)");
  }
  const Cx A = params.kauffman.A;
  const Cx d = params.kauffman.d;
  SparseOperator e = generator(alpha, alpha + 1, params, qubits);
  return SparseOperator::identity(qubits).scaled(A) + e.scaled(d / A);
}

SparseOperator superbraid_op(int alpha, const GateParams& params, int qubits) {
  if (alpha < 1 || alpha >= qubits) {
    throw std::invalid_argument("superbraid_op: needs adjacent pair (alpha, alpha+1)");
  }
  const Cx A = params.kauffman.A;
  const Cx A4 = params.kauffman.A2 * params.kauffman.A2;
  const Cx w = std::exp(Cx(0.0, params.zeta)) / A4 - Cx(1.0);
  SparseOperator e = generator(alpha, alpha + 1, params, qubits);
  return (SparseOperator::identity(qubits) + e.scaled(w)).scaled(A);
}

}  // namespace slink
