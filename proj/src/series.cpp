#include "treecalc/series.hpp"

#include <sstream>
#include <utility>

namespace treecalc::series {

namespace {

const RootTwoScalar kZeroScalar{};

std::string rational_text(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

RootTwoScalar::RootTwoScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

RootTwoScalar RootTwoScalar::inverse() const {
  // (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2); the norm vanishes only at zero.
  Rational norm = a_ * a_ - 2 * b_ * b_;
  if (sgn(norm) == 0) throw std::domain_error("inverse of zero in Q(sqrt 2)");
  return {Rational(a_ / norm), Rational(-b_ / norm)};
}

RootTwoScalar& RootTwoScalar::operator+=(const RootTwoScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

RootTwoScalar& RootTwoScalar::operator-=(const RootTwoScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

RootTwoScalar& RootTwoScalar::operator*=(const RootTwoScalar& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string RootTwoScalar::to_string() const {
  return rational_text(a_) + " " + rational_text(b_);
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// ---------------------------------------------------------------------------

std::size_t TriSeries::position(int i, int j, int k) {
  const std::size_t d = static_cast<std::size_t>(i + j + k);
  const std::size_t before = d * (d + 1) * (d + 2) / 6;
  const std::size_t ui = static_cast<std::size_t>(i);
  return before + ui * (d + 1) - ui * (ui - (ui > 0 ? 1 : 0)) / 2 + static_cast<std::size_t>(j);
}

TriSeries::TriSeries(int cap) : cap_(cap) {
  if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
  const std::size_t c = static_cast<std::size_t>(cap);
  coeffs_.resize((c + 1) * (c + 2) * (c + 3) / 6);
}

TriSeries TriSeries::constant(int cap, const RootTwoScalar& c) {
  TriSeries s(cap);
  s.coeffs_[0] = c;
  return s;
}

TriSeries TriSeries::variable(int cap, Variable v) {
  TriSeries s(cap);
  switch (v) {
    case Variable::x: s.set(1, 0, 0, 1); break;
    case Variable::y: s.set(0, 1, 0, 1); break;
    case Variable::z: s.set(0, 0, 1, 1); break;
  }
  return s;
}

const RootTwoScalar& TriSeries::coeff(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i + j + k > cap_) return kZeroScalar;
  return coeffs_[position(i, j, k)];
}

void TriSeries::set(int i, int j, int k, RootTwoScalar v) {
  if (i < 0 || j < 0 || k < 0 || i + j + k > cap_) return;
  coeffs_[position(i, j, k)] = std::move(v);
}

void TriSeries::add_to(int i, int j, int k, const RootTwoScalar& v) {
  if (i < 0 || j < 0 || k < 0 || i + j + k > cap_) return;
  coeffs_[position(i, j, k)] += v;
}

Exponent TriSeries::exponent_at(std::size_t pos) const {
  int d = 0;
  while (static_cast<std::size_t>(d + 1) * (d + 2) * (d + 3) / 6 <= pos) ++d;
  std::size_t rest = pos - static_cast<std::size_t>(d) * (d + 1) * (d + 2) / 6;
  int i = 0;
  while (rest > static_cast<std::size_t>(d - i)) {
    rest -= static_cast<std::size_t>(d - i + 1);
    ++i;
  }
  const int j = static_cast<int>(rest);
  return {i, j, d - i - j};
}

TriSeries& TriSeries::operator+=(const TriSeries& o) {
  if (o.cap_ != cap_) throw CapMismatch("series caps differ");
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] += o.coeffs_[p];
  return *this;
}

TriSeries& TriSeries::operator-=(const TriSeries& o) {
  if (o.cap_ != cap_) throw CapMismatch("series caps differ");
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] -= o.coeffs_[p];
  return *this;
}

TriSeries& TriSeries::operator*=(const RootTwoScalar& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

TriSeries TriSeries::operator-() const {
  TriSeries r(*this);
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

bool operator==(const TriSeries& a, const TriSeries& b) {
  if (a.cap_ != b.cap_) throw CapMismatch("series caps differ");
  return a.coeffs_ == b.coeffs_;
}

bool TriSeries::is_zero() const {
  for (const auto& v : coeffs_)
    if (!v.is_zero()) return false;
  return true;
}

bool TriSeries::is_rational() const {
  for (const auto& v : coeffs_)
    if (!v.is_rational()) return false;
  return true;
}

TriSeries TriSeries::swapped(Variable a, Variable b) const {
  TriSeries r(cap_);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    if (coeffs_[p].is_zero()) continue;
    Exponent e = exponent_at(p);
    int idx[3] = {e.i, e.j, e.k};
    std::swap(idx[static_cast<int>(a)], idx[static_cast<int>(b)]);
    r.set(idx[0], idx[1], idx[2], coeffs_[p]);
  }
  return r;
}

void TriSeries::for_each_nonzero(
    const std::function<void(const Exponent&, const RootTwoScalar&)>& f) const {
  for (std::size_t p = 0; p < coeffs_.size(); ++p)
    if (!coeffs_[p].is_zero()) f(exponent_at(p), coeffs_[p]);
}

std::string TriSeries::dump() const {
  std::ostringstream os;
  for_each_nonzero([&](const Exponent& e, const RootTwoScalar& c) {
    os << e.i << ' ' << e.j << ' ' << e.k << ' ' << c.to_string() << '\n';
  });
  return os.str();
}

TriSeries operator*(const TriSeries& a, const TriSeries& b) {
  if (a.cap_ != b.cap_) throw CapMismatch("series caps differ");
  struct Term {
    Exponent e;
    const RootTwoScalar* c;
  };
  auto terms = [](const TriSeries& s) {
    std::vector<Term> out;
    for (std::size_t p = 0; p < s.coeffs_.size(); ++p)
      if (!s.coeffs_[p].is_zero()) out.push_back({s.exponent_at(p), &s.coeffs_[p]});
    return out;
  };
  const auto ta = terms(a);
  const auto tb = terms(b);
  TriSeries r(a.cap_);
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      // terms are in degree order, so the rest of tb is beyond the cap too
      if (x.e.degree() + y.e.degree() > a.cap_) break;
      r.coeffs_[TriSeries::position(x.e.i + y.e.i, x.e.j + y.e.j, x.e.k + y.e.k)] += *x.c * *y.c;
    }
  }
  return r;
}

TriSeries mul(const TriSeries& a, const TriSeries& b) { return a * b; }

TriSeries reciprocal(const TriSeries& a) {
  const RootTwoScalar& c0 = a.coeff(0, 0, 0);
  if (c0.is_zero()) throw ZeroConstantTerm("reciprocal of a series with zero constant term");
  const RootTwoScalar inv0 = c0.inverse();
  const int cap = a.cap();

  std::vector<std::pair<Exponent, RootTwoScalar>> a_terms;
  a.for_each_nonzero([&](const Exponent& e, const RootTwoScalar& c) {
    if (e.degree() > 0) a_terms.emplace_back(e, c);
  });

  // b_e = -inv0 * sum_{f + g = e, f != 0} a_f b_g, filled in storage (degree) order.
  TriSeries b(cap);
  b.set(0, 0, 0, inv0);
  for (std::size_t pos = 1; pos < b.size(); ++pos) {
    const Exponent e = b.exponent_at(pos);
    RootTwoScalar acc;
    for (const auto& [f, af] : a_terms) {
      if (f.degree() > e.degree()) break;
      const int gi = e.i - f.i, gj = e.j - f.j, gk = e.k - f.k;
      if (gi < 0 || gj < 0 || gk < 0) continue;
      const RootTwoScalar& bg = b.coeff(gi, gj, gk);
      if (!bg.is_zero()) acc += af * bg;
    }
    if (!acc.is_zero()) b.set(e.i, e.j, e.k, -(inv0 * acc));
  }
  return b;
}

TriSeries compose_linear(std::span<const RootTwoScalar> coefficients, const LinearForm& form,
                         int cap) {
  // form^d = sum_{i+j+k=d} d!/(i! j! k!) alpha^i beta^j gamma^k x^i y^j z^k
  auto powers = [cap](const RootTwoScalar& base) {
    std::vector<RootTwoScalar> p(static_cast<std::size_t>(cap) + 1);
    p[0] = 1;
    for (int t = 1; t <= cap; ++t) p[t] = p[t - 1] * base;
    return p;
  };
  const auto pa = powers(form.x), pb = powers(form.y), pc = powers(form.z);
  std::vector<BigInt> fact(static_cast<std::size_t>(cap) + 1);
  for (int t = 0; t <= cap; ++t) fact[t] = factorial(t);

  TriSeries s(cap);
  const int top = std::min<int>(cap, static_cast<int>(coefficients.size()) - 1);
  for (int d = 0; d <= top; ++d) {
    const RootTwoScalar& cd = coefficients[d];
    if (cd.is_zero()) continue;
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; i + j <= d; ++j) {
        const int k = d - i - j;
        Rational multinomial(fact[d], fact[i] * fact[j] * fact[k]);
        multinomial.canonicalize();
        s.add_to(i, j, k, cd * RootTwoScalar(multinomial) * pa[i] * pb[j] * pc[k]);
      }
    }
  }
  return s;
}

TriSeries trig_series(Trig kind, const LinearForm& form, int cap) {
  // cos u = sum (-1)^t u^{2t}/(2t)!,  sin u = sum (-1)^t u^{2t+1}/(2t+1)!
  std::vector<RootTwoScalar> c(static_cast<std::size_t>(cap) + 1);
  const int parity = kind == Trig::cos ? 0 : 1;
  for (int d = parity; d <= cap; d += 2) {
    Rational v(BigInt(1), factorial(d));
    v.canonicalize();
    if (((d - parity) / 2) % 2 == 1) v = -v;
    c[d] = RootTwoScalar(v);
  }
  return compose_linear(c, form, cap);
}

}  // namespace treecalc::series
