#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace slink {

using Cx = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;

// Documented numeric constants. Comparison tolerances can be overridden per
// call; the pruning threshold is fixed at construction time of every value.
inline constexpr double kCoeffPruneEps = 1e-14;   // complex coefficients below this are dropped
inline constexpr double kCompareRelTol = 1e-10;   // default relative comparison tolerance
inline constexpr double kDivisionEps = 1e-12;     // remainder threshold for division by d
inline constexpr double kSingularMuEps = 1e-9;    // |sin mu| below this rejects mu

// Raised when mu sits on a pole of csc(mu) (or a direct A override degenerates).
class SingularParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Laurent polynomial in the Kauffman variable A.
//
// Coefficients live in one of two domains, fixed per value: exact arbitrary
// precision integers (classical brackets) or complex doubles (quantum
// amplitudes, where e^{i zeta} factors are irrational). Arithmetic between
// different modes is rejected rather than silently promoted.
class LaurentPoly {
 public:
  enum class Mode { Integer, Complex };

  LaurentPoly() : mode_(Mode::Integer) {}
  explicit LaurentPoly(Mode mode) : mode_(mode) {}

  static LaurentPoly zero(Mode mode) { return LaurentPoly(mode); }
  static LaurentPoly monomial(int exp, BigInt coeff);
  static LaurentPoly cx_monomial(int exp, Cx coeff);
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly cx_one() { return cx_monomial(0, Cx(1.0, 0.0)); }
  // d = -A^2 - A^-2, the closed-loop weight.
  static LaurentPoly d_poly();
  static LaurentPoly cx_d_poly() { return d_poly().to_complex(); }

  Mode mode() const { return mode_; }
  bool integer_mode() const { return mode_ == Mode::Integer; }
  bool is_zero() const;
  std::size_t term_count() const;
  std::optional<int> min_exp() const;
  std::optional<int> max_exp() const;

  // Coefficient of A^exp; zero when absent. int_coeff requires integer mode,
  // cx_coeff works in either mode.
  BigInt int_coeff(int exp) const;
  Cx cx_coeff(int exp) const;
  const std::map<int, BigInt>& int_terms() const { return icoeffs_; }
  const std::map<int, Cx>& cx_terms() const { return ccoeffs_; }

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly scaled(const Cx& factor) const;           // complex mode only
  LaurentPoly shifted(int exp_offset) const;            // multiply by A^offset
  LaurentPoly pow(unsigned n) const;

  // Structural equality (exact in both modes).
  bool operator==(const LaurentPoly& rhs) const;
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  LaurentPoly to_complex() const;

  // Sum of coeff * a^exp. Rejects a = 0 (negative exponents).
  Cx eval(Cx a) const;

  double max_coeff_abs() const;

  // Canonical form: ascending exponents, integers exact, complex printed with
  // 12 significant digits. "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void prune();
  void require_mode(Mode m, const char* what) const;

  Mode mode_;
  std::map<int, BigInt> icoeffs_;   // active in integer mode
  std::map<int, Cx> ccoeffs_;       // active in complex mode
};

// |p - q| <= rel * max(1, |p|, |q|) entrywise, where |.| is the largest
// coefficient magnitude. Works for either mode (integer compares exactly).
bool approx_equal(const LaurentPoly& p, const LaurentPoly& q,
                  double rel = kCompareRelTol);

// Exact quotient p / d when it exists (remainder below eps in complex mode,
// identically zero in integer mode); nullopt otherwise.
std::optional<LaurentPoly> divide_by_d(const LaurentPoly& p,
                                       double eps = kDivisionEps);

// A complex-mode Laurent polynomial divided by an explicit power of
// d = -A^2 - A^-2. Every quantum skein application contributes exactly one
// 1/d factor, so pure d-powers are the only denominators that ever appear.
class DScaledPoly {
 public:
  DScaledPoly() : num_(LaurentPoly::Mode::Complex), dpow_(0) {}
  DScaledPoly(LaurentPoly num, int dpow);

  static DScaledPoly one() { return DScaledPoly(LaurentPoly::cx_one(), 0); }

  const LaurentPoly& num() const { return num_; }
  int dpow() const { return dpow_; }
  bool is_zero() const { return num_.is_zero(); }

  DScaledPoly operator*(const DScaledPoly& rhs) const;
  DScaledPoly operator+(const DScaledPoly& rhs) const;
  DScaledPoly scaled(const Cx& factor) const;

  // Minimal dpow such that num stays a polynomial (d_reduce).
  DScaledPoly reduced() const;

  Cx eval(Cx a) const;

  std::string to_string() const;

 private:
  LaurentPoly num_;
  int dpow_;
};

// Equality invariant under simultaneous (num*d, dpow+1) rescaling: the two
// numerators are cross-scaled to a common dpow before comparison.
bool approx_equal(const DScaledPoly& p, const DScaledPoly& q,
                  double rel = kCompareRelTol);

// The Kauffman weight A and loop value d, parameterized by a real angle mu:
//   A^2 = -(cos mu + 1)/sin mu,   d = -A^2 - A^-2 = 2 csc mu.
// The parameterization determines A^2 only, so A is a chosen square root
// with an explicit branch. A direct complex A override is also supported.
struct KauffmanParams {
  Cx A{};
  Cx A2{};
  Cx d{};
  double mu = std::numeric_limits<double>::quiet_NaN();
  int branch = +1;

  static KauffmanParams from_mu(double mu, int branch = +1);
  static KauffmanParams from_A(Cx A);

  bool mu_parameterized() const { return !std::isnan(mu); }
};

}  // namespace slink
