#include "deltatour/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace deltatour {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rational> Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;

  auto all_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(0, 1);
  }

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    value = mpq_class(mpz_class(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = mpq_class(mpz_class(whole) * scale + mpz_class(frac), scale);
  } else {
    if (!all_digits(s)) return std::nullopt;
    value = mpq_class(mpz_class(s));
  }
  value.canonicalize();
  if (neg) value = -value;
  return Rational(value);
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::approx_str(int digits) const {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpq_class scaled = v_ * scale;
  mpz_class rounded;
  // round half away from zero
  mpz_class num = scaled.get_num(), den = scaled.get_den();
  mpz_class twice = 2 * num + (sgn(num) >= 0 ? den : -den);
  mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  bool neg = rounded < 0;
  mpz_class mag = ::abs(rounded);
  std::string s = mag.get_str();
  while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
  s.insert(s.size() - digits, ".");
  if (neg) s.insert(s.begin(), '-');
  return s;
}

std::optional<long> Rational::as_long() const {
  if (!is_integer()) return std::nullopt;
  if (!v_.get_num().fits_slong_p()) return std::nullopt;
  return v_.get_num().get_si();
}

std::size_t Rational::hash() const {
  std::size_t h1 = mpz_fdiv_ui(v_.get_num_mpz_t(), 0x7fffffffULL);
  std::size_t h2 = mpz_fdiv_ui(v_.get_den_mpz_t(), 0x7fffffffULL);
  std::size_t h = h1 * 1000003u + h2;
  if (sgn(v_) < 0) h = ~h;
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace deltatour
