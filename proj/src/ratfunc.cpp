#include "autalg/ratfunc.hpp"

#include <stdexcept>

namespace autalg {

UniPoly::UniPoly(Rational c) {
  if (!autalg::is_zero(c)) coeffs_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(Rational c, unsigned degree) {
  if (autalg::is_zero(c)) return {};
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = std::move(c);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && autalg::is_zero(coeffs_.back())) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(v));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& quot, UniPoly& rem) {
  if (b.is_zero()) throw std::domain_error("univariate division by zero");
  rem = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    unsigned shift = rem.degree() - b.degree();
    Rational c = rem.leading() / b.leading();
    q[shift] = c;
    rem = rem - UniPoly::monomial(c, shift) * b;
  }
  quot = UniPoly(std::move(q));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly r = *this;
  Rational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (autalg::is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) {
      out += autalg::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += autalg::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

RatFunc::RatFunc(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly(Rational(1));
    return;
  }
  UniPoly g = UniPoly::gcd(num, den);
  UniPoly q, r;
  UniPoly::divmod(num, g, num_, r);
  UniPoly::divmod(den, g, den_, r);
  Rational lead = den_.leading();
  num_ = num_ * UniPoly(Rational(1) / lead);
  den_ = den_ * UniPoly(Rational(1) / lead);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, UniPoly(Rational(1)), true);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) {
    // den is the constant 1 after normalization
    return num_.to_string(var);
  }
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace autalg
