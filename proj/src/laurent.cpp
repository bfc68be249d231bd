#include "slink/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace slink {

namespace {

double cx_abs(const Cx& c) { return std::abs(c); }

}  // namespace

LaurentPoly LaurentPoly::monomial(int exp, BigInt coeff) {
  LaurentPoly p(Mode::Integer);
  if (coeff != 0) p.icoeffs_[exp] = std::move(coeff);
  return p;
}

LaurentPoly LaurentPoly::cx_monomial(int exp, Cx coeff) {
  LaurentPoly p(Mode::Complex);
  if (cx_abs(coeff) > kCoeffPruneEps) p.ccoeffs_[exp] = coeff;
  return p;
}

LaurentPoly LaurentPoly::d_poly() {
  LaurentPoly p(Mode::Integer);
  p.icoeffs_[2] = -1;
  p.icoeffs_[-2] = -1;
  return p;
}

bool LaurentPoly::is_zero() const {
  return integer_mode() ? icoeffs_.empty() : ccoeffs_.empty();
}

std::size_t LaurentPoly::term_count() const {
  return integer_mode() ? icoeffs_.size() : ccoeffs_.size();
}

std::optional<int> LaurentPoly::min_exp() const {
  if (is_zero()) return std::nullopt;
  return integer_mode() ? icoeffs_.begin()->first : ccoeffs_.begin()->first;
}

std::optional<int> LaurentPoly::max_exp() const {
  if (is_zero()) return std::nullopt;
  return integer_mode() ? icoeffs_.rbegin()->first : ccoeffs_.rbegin()->first;
}

BigInt LaurentPoly::int_coeff(int exp) const {
  require_mode(Mode::Integer, "int_coeff");
  auto it = icoeffs_.find(exp);
  return it == icoeffs_.end() ? BigInt(0) : it->second;
}

Cx LaurentPoly::cx_coeff(int exp) const {
  if (integer_mode()) {
    auto it = icoeffs_.find(exp);
    return it == icoeffs_.end() ? Cx(0.0) : Cx(it->second.convert_to<double>(), 0.0);
  }
  auto it = ccoeffs_.find(exp);
  return it == ccoeffs_.end() ? Cx(0.0) : it->second;
}

void LaurentPoly::require_mode(Mode m, const char* what) const {
  if (mode_ != m) {
    throw std::invalid_argument(std::string(what) + ": coefficient mode mismatch");
  }
}

void LaurentPoly::prune() {
  if (integer_mode()) {
    for (auto it = icoeffs_.begin(); it != icoeffs_.end();) {
      it = (it->second == 0) ? icoeffs_.erase(it) : std::next(it);
    }
  } else {
    for (auto it = ccoeffs_.begin(); it != ccoeffs_.end();) {
      it = (cx_abs(it->second) <= kCoeffPruneEps) ? ccoeffs_.erase(it) : std::next(it);
    }
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  require_mode(rhs.mode_, "poly add");
  LaurentPoly out(*this);
  if (integer_mode()) {
    for (const auto& [e, c] : rhs.icoeffs_) out.icoeffs_[e] += c;
  } else {
    for (const auto& [e, c] : rhs.ccoeffs_) out.ccoeffs_[e] += c;
  }
  out.prune();
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  if (integer_mode()) {
    for (auto& [e, c] : out.icoeffs_) c = -c;
  } else {
    for (auto& [e, c] : out.ccoeffs_) c = -c;
  }
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  return *this + (-rhs);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  require_mode(rhs.mode_, "poly mul");
  LaurentPoly out(mode_);
  if (integer_mode()) {
    for (const auto& [e1, c1] : icoeffs_)
      for (const auto& [e2, c2] : rhs.icoeffs_) out.icoeffs_[e1 + e2] += c1 * c2;
  } else {
    for (const auto& [e1, c1] : ccoeffs_)
      for (const auto& [e2, c2] : rhs.ccoeffs_) out.ccoeffs_[e1 + e2] += c1 * c2;
  }
  out.prune();
  return out;
}

LaurentPoly LaurentPoly::scaled(const Cx& factor) const {
  require_mode(Mode::Complex, "scaled");
  LaurentPoly out(*this);
  for (auto& [e, c] : out.ccoeffs_) c *= factor;
  out.prune();
  return out;
}

LaurentPoly LaurentPoly::shifted(int exp_offset) const {
  LaurentPoly out(mode_);
  if (integer_mode()) {
    for (const auto& [e, c] : icoeffs_) out.icoeffs_[e + exp_offset] = c;
  } else {
    for (const auto& [e, c] : ccoeffs_) out.ccoeffs_[e + exp_offset] = c;
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly out = integer_mode() ? one() : cx_one();
  LaurentPoly base(*this);
  while (n > 0) {
    if (n & 1u) out = out * base;
    base = base * base;
    n >>= 1u;
  }
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
  return mode_ == rhs.mode_ && icoeffs_ == rhs.icoeffs_ && ccoeffs_ == rhs.ccoeffs_;
}

LaurentPoly LaurentPoly::to_complex() const {
  if (!integer_mode()) return *this;
  LaurentPoly out(Mode::Complex);
  for (const auto& [e, c] : icoeffs_) {
    out.ccoeffs_[e] = Cx(c.convert_to<double>(), 0.0);
  }
  out.prune();
  return out;
}

Cx LaurentPoly::eval(Cx a) const {
  if (cx_abs(a) == 0.0) {
    throw std::invalid_argument("poly eval at A = 0 (negative exponents)");
  }
  Cx total(0.0);
  auto term = [&](int e, Cx c) {
    total += c * std::pow(a, static_cast<double>(e));
  };
  if (integer_mode()) {
    for (const auto& [e, c] : icoeffs_) term(e, Cx(c.convert_to<double>(), 0.0));
  } else {
    for (const auto& [e, c] : ccoeffs_) term(e, c);
  }
  return total;
}

double LaurentPoly::max_coeff_abs() const {
  double m = 0.0;
  if (integer_mode()) {
    for (const auto& [e, c] : icoeffs_) {
      m = std::max(m, std::abs(c.convert_to<double>()));
    }
  } else {
    for (const auto& [e, c] : ccoeffs_) m = std::max(m, cx_abs(c));
  }
  return m;
}

namespace {

std::string format_significant(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto power = [](int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return "A";
    return "A^" + std::to_string(e);
  };
  if (integer_mode()) {
    for (const auto& [e, c] : icoeffs_) {
      std::string p = power(e);
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (mag != 1 || p.empty()) os << mag.str();
      if (mag != 1 && !p.empty()) os << "*";
      os << p;
      first = false;
    }
  } else {
    for (const auto& [e, c] : ccoeffs_) {
      if (!first) os << " + ";
      os << "(" << format_significant(c.real()) << (c.imag() < 0 ? "-" : "+")
         << format_significant(std::abs(c.imag())) << "i)";
      std::string p = power(e);
      if (!p.empty()) os << "*" << p;
      first = false;
    }
  }
  return os.str();
}

bool approx_equal(const LaurentPoly& p, const LaurentPoly& q, double rel) {
  if (p.mode() != q.mode()) return false;
  if (p.integer_mode()) return p == q;
  double scale = std::max({1.0, p.max_coeff_abs(), q.max_coeff_abs()});
  LaurentPoly diff = p - q;
  return diff.max_coeff_abs() <= rel * scale;
}

std::optional<LaurentPoly> divide_by_d(const LaurentPoly& p, double eps) {
  // p / d with d = -A^2 - A^-2 = -A^-2 (A^4 + 1): strip the monomial shift,
  // long-divide the ordinary polynomial by x^4 + 1, negate, shift back by +2.
  if (p.is_zero()) return p;
  const bool integer = p.integer_mode();
  const int lo = *p.min_exp();
  const int hi = *p.max_exp();
  const int deg = hi - lo;
  if (deg < 4) return std::nullopt;

  if (integer) {
    std::vector<BigInt> c(deg + 1, BigInt(0));
    for (const auto& [e, v] : p.int_terms()) c[e - lo] = v;
    std::vector<BigInt> q(deg - 4 + 1, BigInt(0));
    for (int k = deg; k >= 4; --k) {
      BigInt f = c[k];
      if (f == 0) continue;
      q[k - 4] = f;
      c[k] = 0;
      c[k - 4] -= f;
    }
    for (const auto& r : c) {
      if (r != 0) return std::nullopt;
    }
    LaurentPoly out(LaurentPoly::Mode::Integer);
    for (int k = 0; k <= deg - 4; ++k) {
      if (q[k] != 0) out = out + LaurentPoly::monomial(k + lo + 2, -q[k]);
    }
    return out;
  }

  std::vector<Cx> c(deg + 1, Cx(0.0));
  for (const auto& [e, v] : p.cx_terms()) c[e - lo] = v;
  std::vector<Cx> q(deg - 4 + 1, Cx(0.0));
  for (int k = deg; k >= 4; --k) {
    Cx f = c[k];
    q[k - 4] = f;
    c[k] = Cx(0.0);
    c[k - 4] -= f;
  }
  double scale = std::max(1.0, p.max_coeff_abs());
  for (const auto& r : c) {
    if (std::abs(r) > eps * scale) return std::nullopt;
  }
  LaurentPoly out(LaurentPoly::Mode::Complex);
  for (int k = 0; k <= deg - 4; ++k) {
    out = out + LaurentPoly::cx_monomial(k + lo + 2, -q[k]);
  }
  return out;
}

DScaledPoly::DScaledPoly(LaurentPoly num, int dpow)
    : num_(num.integer_mode() ? num.to_complex() : std::move(num)), dpow_(dpow) {
  if (dpow_ < 0) throw std::invalid_argument("DScaledPoly: negative dpow");
}

DScaledPoly DScaledPoly::operator*(const DScaledPoly& rhs) const {
  return DScaledPoly(num_ * rhs.num_, dpow_ + rhs.dpow_);
}

DScaledPoly DScaledPoly::operator+(const DScaledPoly& rhs) const {
  // Align denominators by up-scaling the smaller dpow side.
  const LaurentPoly d = LaurentPoly::cx_d_poly();
  if (dpow_ == rhs.dpow_) return DScaledPoly(num_ + rhs.num_, dpow_);
  if (dpow_ < rhs.dpow_) {
    return DScaledPoly(num_ * d.pow(static_cast<unsigned>(rhs.dpow_ - dpow_)) + rhs.num_,
                       rhs.dpow_);
  }
  return DScaledPoly(num_ + rhs.num_ * d.pow(static_cast<unsigned>(dpow_ - rhs.dpow_)),
                     dpow_);
}

DScaledPoly DScaledPoly::scaled(const Cx& factor) const {
  return DScaledPoly(num_.scaled(factor), dpow_);
}

DScaledPoly DScaledPoly::reduced() const {
  if (num_.is_zero()) return DScaledPoly(num_, 0);
  LaurentPoly n = num_;
  int k = dpow_;
  while (k > 0) {
    auto q = divide_by_d(n);
    if (!q) break;
    n = *q;
    --k;
  }
  return DScaledPoly(n, k);
}

Cx DScaledPoly::eval(Cx a) const {
  Cx d = -a * a - Cx(1.0) / (a * a);
  return num_.eval(a) / std::pow(d, static_cast<double>(dpow_));
}

std::string DScaledPoly::to_string() const {
  if (dpow_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ") / d^" + std::to_string(dpow_);
}

bool approx_equal(const DScaledPoly& p, const DScaledPoly& q, double rel) {
  const LaurentPoly d = LaurentPoly::cx_d_poly();
  int common = std::max(p.dpow(), q.dpow());
  LaurentPoly pn = p.num() * d.pow(static_cast<unsigned>(common - p.dpow()));
  LaurentPoly qn = q.num() * d.pow(static_cast<unsigned>(common - q.dpow()));
  return approx_equal(pn, qn, rel);
}

KauffmanParams KauffmanParams::from_mu(double mu, int branch) {
  if (branch != 1 && branch != -1) {
    throw std::invalid_argument("A-branch must be +1 or -1");
  }
  const double s = std::sin(mu);
  if (std::abs(s) < kSingularMuEps) {
    throw SingularParameter("mu within 1e-9 of a csc pole (sin mu = 0)");
  }
  KauffmanParams kp;
  kp.mu = mu;
  kp.branch = branch;
  kp.A2 = Cx(-(std::cos(mu) + 1.0) / s, 0.0);
  kp.A = static_cast<double>(branch) * std::sqrt(kp.A2);
  kp.d = -kp.A2 - Cx(1.0) / kp.A2;   // equals 2 csc mu
  return kp;
}

KauffmanParams KauffmanParams::from_A(Cx A) {
  if (std::abs(A) == 0.0) throw std::invalid_argument("A must be nonzero");
  KauffmanParams kp;
  kp.A = A;
  kp.A2 = A * A;
  kp.d = -kp.A2 - Cx(1.0) / kp.A2;
  if (std::abs(kp.d) < kSingularMuEps) {
    throw SingularParameter("direct A override gives d = -A^2 - A^-2 ~ 0");
  }
  return kp;
}

}  // namespace slink
