#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mtn {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial in t with big-integer coefficients.
/// Exponents are nonnegative; the coefficient vector carries no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(long c) {
    if (c != 0) coeffs_.push_back(BigInt(c));
  }
  Poly(const BigInt& c) {
    if (c != 0) coeffs_.push_back(c);
  }

  static Poly t_power(std::size_t e, BigInt coeff = 1) {
    Poly p;
    if (coeff == 0) return p;
    p.coeffs_.assign(e + 1, BigInt(0));
    p.coeffs_[e] = coeff;
    return p;
  }
  static Poly variable() { return t_power(1); }

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  BigInt coeff(std::size_t e) const {
    return e < coeffs_.size() ? coeffs_[e] : BigInt(0);
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    Poly r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational eval(const Rational& t) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + Rational(coeffs_[i]);
    return acc;
  }
  double eval(double t) const {
    double acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i].get_d();
    return acc;
  }

  /// Canonical form: terms in descending exponent, e.g. "3*t^4 + t^2 - 2".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt a = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += (c < 0) ? " - " : " + ";
      }
      if (i == 0) {
        out += a.get_str();
      } else {
        if (a != 1) out += a.get_str() + "*";
        out += (i == 1) ? "t" : "t^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

inline Poly pow(const Poly& b, unsigned long e) {
  Poly r(1);
  Poly base = b;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// Uniform scalar interface for the exact semirings and the float mode.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<BigInt> {
  static BigInt zero() { return BigInt(0); }
  static BigInt one() { return BigInt(1); }
  static bool is_zero(const BigInt& x) { return x == 0; }
  static std::string str(const BigInt& x) { return x.get_str(); }
  static BigInt pow(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
  }
  static double to_double(const BigInt& x) { return x.get_d(); }
  static constexpr const char* name() { return "int"; }
};

template <>
struct scalar_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::string str(const Rational& x) { return x.get_str(); }
  static Rational pow(const Rational& b, unsigned long e) {
    Rational r(1);
    Rational base = b;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }
  static double to_double(const Rational& x) { return x.get_d(); }
  static constexpr const char* name() { return "rational"; }
};

template <>
struct scalar_traits<Poly> {
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(1); }
  static bool is_zero(const Poly& x) { return x.is_zero(); }
  static std::string str(const Poly& x) { return x.str(); }
  static Poly pow(const Poly& b, unsigned long e) { return mtn::pow(b, e); }
  static double to_double(const Poly& x) {
    if (x.degree() > 0) throw std::domain_error("non-constant polynomial");
    return x.coeff(0).get_d();
  }
  static constexpr const char* name() { return "poly_t"; }
};

template <>
struct scalar_traits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x) { return x == 0.0; }
  static std::string str(double x) { return std::to_string(x); }
  static double pow(double b, unsigned long e) {
    double r = 1;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  static double to_double(double x) { return x; }
  static constexpr const char* name() { return "float"; }
};

}  // namespace mtn
