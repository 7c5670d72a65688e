#pragma once

/**
 * @file scalar.hpp
 * @brief Exact arithmetic in a real quadratic field Q(sqrt d).
 *
 * A Scalar is a + b*sqrt(d) with arbitrary-precision rational a, b and a
 * square-free d >= 1. Every bilinear-form value and root coordinate of a
 * Coxeter system lives in one such field.
 *
 * Canonical form:
 * - rationals are kept in lowest terms by GMP,
 * - b == 0 forces d == 1, so a rational value has exactly one encoding and
 *   mixes freely with values of any field,
 * - two irrational operands must agree on d.
 */

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coxwo {

/// Raised for malformed literals, mismatched fields and division by zero.
class ScalarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_square_free(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(int n) : a_(n) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }
  Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (!is_square_free(d_)) throw ScalarError("field parameter must be a positive square-free integer");
    a_.canonicalize();
    b_.canonicalize();
    normalize();
  }

  static Scalar rational(long num, long den = 1) { return Scalar(mpq_class(num, den)); }
  /// sqrt(d) itself; sqrt(1) is 1.
  static Scalar root_of(long d) { return Scalar(mpq_class(0), mpq_class(1), d); }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  long field() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Exact sign of a + b*sqrt(d).
  int sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with d*b^2 (never equal for square-free d > 1)
    const mpq_class lhs = a_ * a_;
    const mpq_class rhs = b_ * b_ * d_;
    return lhs > rhs ? sa : sb;
  }

  /// Double shadow for rendering and limit estimation; never used in decisions.
  double to_double() const {
    if (b_ == 0) return a_.get_d();
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
  }

  Scalar conjugate() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
  }
  /// a^2 - d b^2, always rational.
  mpq_class norm() const { return a_ * a_ - b_ * b_ * d_; }

  Scalar operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  Scalar& operator+=(const Scalar& y) {
    const long d = common_field(y);
    a_ += y.a_;
    b_ += y.b_;
    d_ = d;
    normalize();
    return *this;
  }
  Scalar& operator-=(const Scalar& y) {
    const long d = common_field(y);
    a_ -= y.a_;
    b_ -= y.b_;
    d_ = d;
    normalize();
    return *this;
  }
  Scalar& operator*=(const Scalar& y) {
    const long d = common_field(y);
    if (b_ == 0 && y.b_ == 0) {
      a_ *= y.a_;
    } else {
      mpq_class na = a_ * y.a_ + b_ * y.b_ * d;
      mpq_class nb = a_ * y.b_ + b_ * y.a_;
      a_ = std::move(na);
      b_ = std::move(nb);
      d_ = d;
    }
    normalize();
    return *this;
  }
  Scalar& operator/=(const Scalar& y) {
    if (y.is_zero()) throw ScalarError("division by zero");
    const long d = common_field(y);
    if (y.b_ == 0) {
      a_ /= y.a_;
      b_ /= y.a_;
    } else {
      const mpq_class n = y.norm();
      mpq_class na = (a_ * y.a_ - b_ * y.b_ * d) / n;
      mpq_class nb = (b_ * y.a_ - a_ * y.b_) / n;
      a_ = std::move(na);
      b_ = std::move(nb);
      d_ = d;
    }
    normalize();
    return *this;
  }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  // value order
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

  /// Total order on canonical triples; cheap, for container keys only.
  static int canonical_cmp(const Scalar& x, const Scalar& y) {
    if (x.d_ != y.d_) return x.d_ < y.d_ ? -1 : 1;
    if (int c = cmp(x.a_, y.a_)) return c;
    return cmp(x.b_, y.b_);
  }

  /// Canonical literal: "p/q", "p/q+r/s*rt" or "p/q-r/s*rt" (integers drop "/1").
  std::string str() const {
    if (b_ == 0) return a_.get_str();
    mpq_class mag = abs(b_);
    return a_.get_str() + (sgn(b_) > 0 ? "+" : "-") + mag.get_str() + "*rt";
  }

  /// Parses the textual grammar; "rt" stands for sqrt(d) of the enclosing system.
  static Scalar parse(std::string_view text, long d = 1);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

 private:
  long common_field(const Scalar& y) const {
    if (d_ == y.d_ || y.d_ == 1) return d_;
    if (d_ == 1) return y.d_;
    throw ScalarError("mismatched quadratic fields: sqrt(" + std::to_string(d_) + ") vs sqrt(" +
                      std::to_string(y.d_) + ")");
  }
  void normalize() {
    if (d_ == 1 && b_ != 0) {
      a_ += b_;
      b_ = 0;
    }
    if (b_ == 0) d_ = 1;
  }

  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 1;
};

inline int sign(const Scalar& x) { return x.sign(); }
inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// "p", "p/q" or a decimal "p.q" with an optional leading sign.
inline mpq_class parse_rational(std::string_view s, std::string_view whole) {
  auto fail = [&] { throw ScalarError("malformed scalar literal: '" + std::string(whole) + "'"); };
  if (s.empty()) fail();
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    mpz_class q{std::string(den)};
    if (q == 0) throw ScalarError("zero denominator in literal: '" + std::string(whole) + "'");
    value = mpq_class(mpz_class(std::string(num)), q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot);
    auto fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp)) fail();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class digits{std::string(ip.empty() ? "0" : ip) + std::string(fp)};
    value = mpq_class(digits, scale);
  } else {
    if (!all_digits(s)) fail();
    value = mpq_class(mpz_class(std::string(s)));
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text, long d) {
  if (text.empty()) throw ScalarError("empty scalar literal");
  constexpr std::string_view kRoot = "*rt";
  if (text.size() > kRoot.size() && text.substr(text.size() - kRoot.size()) == kRoot) {
    auto body = text.substr(0, text.size() - kRoot.size());
    // split at the last sign that is not the leading one
    std::size_t cut = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if (body[i] == '+' || body[i] == '-') {
        cut = i;
        break;
      }
    }
    if (cut == std::string_view::npos) throw ScalarError("malformed scalar literal: '" + std::string(text) + "'");
    if (d == 1) throw ScalarError("literal uses rt but the system field is Q: '" + std::string(text) + "'");
    mpq_class a = detail::parse_rational(body.substr(0, cut), text);
    mpq_class b = detail::parse_rational(body.substr(cut), text);
    return Scalar(std::move(a), std::move(b), d);
  }
  if (text.find("rt") != std::string_view::npos)
    throw ScalarError("malformed scalar literal: '" + std::string(text) + "'");
  return Scalar(detail::parse_rational(text, text));
}

}  // namespace coxwo
