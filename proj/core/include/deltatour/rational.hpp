#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace deltatour {

// Exact fraction. Every position, distance, and covering range in the solver
// is one of these; there is no floating point anywhere in the core.
//
// Backed by GMP's mpq, kept canonical (gcd 1, positive denominator) after
// every operation.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit on purpose
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p/q", "p", and terminating decimals like "0.825".
  static std::optional<Rational> parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  // Truncates toward negative infinity.
  Rational floor() const;
  Rational ceil() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // String form "p/q", or "p" when the denominator is 1.
  std::string str() const;
  // Decimal rendering rounded to `digits` places, for report convenience
  // columns only.
  std::string approx_str(int digits = 6) const;
  double to_double() const { return v_.get_d(); }

  // Fits in long? (used by small DP backends)
  std::optional<long> as_long() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  std::size_t hash() const;

 private:
  mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace deltatour

template <>
struct std::hash<deltatour::Rational> {
  std::size_t operator()(const deltatour::Rational& r) const { return r.hash(); }
};
