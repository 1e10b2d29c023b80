#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "treecalc/grid.hpp"

namespace treecalc::series {

/// An element a + b*sqrt(2) of Q(sqrt 2), with exact rational parts.
class RootTwoScalar {
 public:
  RootTwoScalar() = default;
  RootTwoScalar(Rational a, Rational b = 0);
  RootTwoScalar(long a) : a_(a), b_(0) {}

  static RootTwoScalar sqrt2() { return {0, 1}; }

  const Rational& rational_part() const { return a_; }
  const Rational& root_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  // Throws std::domain_error on zero.
  RootTwoScalar inverse() const;

  RootTwoScalar& operator+=(const RootTwoScalar& o);
  RootTwoScalar& operator-=(const RootTwoScalar& o);
  RootTwoScalar& operator*=(const RootTwoScalar& o);

  friend RootTwoScalar operator+(RootTwoScalar x, const RootTwoScalar& y) { return x += y; }
  friend RootTwoScalar operator-(RootTwoScalar x, const RootTwoScalar& y) { return x -= y; }
  friend RootTwoScalar operator*(RootTwoScalar x, const RootTwoScalar& y) { return x *= y; }
  friend RootTwoScalar operator/(const RootTwoScalar& x, const RootTwoScalar& y) {
    return x * y.inverse();
  }
  RootTwoScalar operator-() const { return {-a_, -b_}; }

  friend bool operator==(const RootTwoScalar& x, const RootTwoScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  // "a_num/a_den b_num/b_den"
  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

/// alpha*x + beta*y + gamma*z.
struct LinearForm {
  RootTwoScalar x;
  RootTwoScalar y;
  RootTwoScalar z;
};

struct Exponent {
  int i = 0;
  int j = 0;
  int k = 0;
  int degree() const { return i + j + k; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

class CapMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Variable { x, y, z };

/// Power series in x, y, z truncated at total degree `cap`.
///
/// Coefficients are raw: coeff(i, j, k) multiplies x^i y^j z^k. Storage is
/// dense, ordered by (i+j+k, i, j), which is also the dump order.
class TriSeries {
 public:
  explicit TriSeries(int cap = 0);

  static TriSeries constant(int cap, const RootTwoScalar& c);
  static TriSeries one(int cap) { return constant(cap, RootTwoScalar{1}); }
  static TriSeries variable(int cap, Variable v);

  int cap() const { return cap_; }

  // Zero for exponents beyond the cap.
  const RootTwoScalar& coeff(int i, int j, int k) const;
  const RootTwoScalar& coeff(const Exponent& e) const { return coeff(e.i, e.j, e.k); }
  // Ignored when beyond the cap.
  void set(int i, int j, int k, RootTwoScalar v);
  void add_to(int i, int j, int k, const RootTwoScalar& v);

  TriSeries& operator+=(const TriSeries& o);
  TriSeries& operator-=(const TriSeries& o);
  TriSeries& operator*=(const RootTwoScalar& c);

  friend TriSeries operator+(TriSeries a, const TriSeries& b) { return a += b; }
  friend TriSeries operator-(TriSeries a, const TriSeries& b) { return a -= b; }
  friend TriSeries operator*(TriSeries a, const RootTwoScalar& c) { return a *= c; }
  friend TriSeries operator*(const RootTwoScalar& c, TriSeries a) { return a *= c; }
  friend TriSeries operator*(const TriSeries& a, const TriSeries& b);
  TriSeries operator-() const;

  friend bool operator==(const TriSeries& a, const TriSeries& b);

  bool is_zero() const;
  // True when every coefficient has zero sqrt(2) part.
  bool is_rational() const;

  // Exchange the roles of two variables.
  TriSeries swapped(Variable a, Variable b) const;

  // Visits nonzero coefficients in storage order.
  void for_each_nonzero(const std::function<void(const Exponent&, const RootTwoScalar&)>& f) const;

  // Exponent at a storage position; positions run over [0, size()).
  Exponent exponent_at(std::size_t pos) const;
  std::size_t size() const { return coeffs_.size(); }

  // One line per nonzero monomial: "i j k a_num/a_den b_num/b_den".
  std::string dump() const;

 private:
  static std::size_t position(int i, int j, int k);

  int cap_;
  std::vector<RootTwoScalar> coeffs_;
};

TriSeries mul(const TriSeries& a, const TriSeries& b);

/// Throws ZeroConstantTerm when the constant term is zero.
TriSeries reciprocal(const TriSeries& a);

/// Sum over d <= cap of coefficients[d] * form^d.
TriSeries compose_linear(std::span<const RootTwoScalar> coefficients, const LinearForm& form,
                         int cap);

enum class Trig { cos, sin };

TriSeries trig_series(Trig kind, const LinearForm& form, int cap);

inline TriSeries cos_series(const LinearForm& form, int cap) {
  return trig_series(Trig::cos, form, cap);
}
inline TriSeries sin_series(const LinearForm& form, int cap) {
  return trig_series(Trig::sin, form, cap);
}

BigInt factorial(int n);

}  // namespace treecalc::series
