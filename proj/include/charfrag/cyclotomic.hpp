#ifndef CHARFRAG_CYCLOTOMIC_HPP
#define CHARFRAG_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "charfrag/rational.hpp"

namespace charfrag {

// Element of a cyclotomic field in canonical reduced form.
//
// A value is stored as a conductor n together with rational coefficients
// c[0..phi(n)) over the power basis E(n)^k, where E(n) = exp(2*pi*i/n);
// the coefficient vector is reduced modulo the n-th cyclotomic polynomial
// and the conductor is minimal.  Two values are equal iff their stored
// forms are identical, and a value is rational iff its conductor is 1.
class Cyclotomic {
public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& r) : n_(1), c_{r} {}
  Cyclotomic(std::int64_t v) : n_(1), c_{Rational(v)} {}

  // E(n)^k
  static Cyclotomic root_of_unity(int n, std::int64_t k = 1);

  // Raw coefficients over exponents 0..n-1 of E(n); reduces and minimizes.
  static Cyclotomic from_exponent_coeffs(int n, const std::vector<Rational>& raw);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const { return n_ == 1 && c_[0].is_zero(); }
  bool is_rational() const { return n_ == 1; }
  bool is_rational_integer() const { return n_ == 1 && c_[0].is_integer(); }

  // Rational value; requires is_rational().
  Rational rational_value() const;

  Cyclotomic conj() const;            // complex conjugation, E^k -> E^{n-k}
  Cyclotomic galois(std::int64_t j) const;  // E^k -> E^{jk}, gcd(j, n) = 1

  // Coefficients over the power basis of E(m); requires conductor() | m.
  std::vector<Rational> coords_in(int m) const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Deterministic total order used for canonical sorting of value tuples.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  // "c0 + c1*E(n)^1 + ..." with zero terms omitted; parses back to the
  // same value via parse().
  std::string str() const;

  static Cyclotomic parse(const std::string& text);

private:
  int n_;
  std::vector<Rational> c_;
};

// Accumulator over a fixed conductor for inner loops; avoids re-minimizing
// the conductor on every partial sum.
class CycloSum {
public:
  explicit CycloSum(int conductor);
  void add(const Cyclotomic& v);
  void add_product(const Cyclotomic& a, const Cyclotomic& b);  // += a*b
  Cyclotomic value() const;

private:
  int n_;
  std::vector<Rational> raw_;  // exponent coefficients 0..n-1, unreduced
};

// Euler phi and the integer coefficients of the n-th cyclotomic polynomial
// (exposed mainly for tests).
int euler_phi(int n);
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

} // namespace charfrag

#endif
