#pragma once

#include <string>
#include <vector>

#include "autalg/rational.hpp"

namespace autalg {

/// Dense univariate polynomial over Q; coeffs[i] multiplies z^i and the
/// last stored coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(Rational c);  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly monomial(Rational c, unsigned degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& quot, UniPoly& rem);
  /// Monic gcd (zero if both inputs are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);

  UniPoly monic() const;
  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(z): reduced fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
  RatFunc(int c) : RatFunc(Rational(c)) {}                         // NOLINT
  RatFunc(UniPoly num, UniPoly den);

  static RatFunc variable() { return RatFunc(UniPoly::monomial(1, 1), UniPoly(Rational(1))); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Nonzero element of Q (a unit of Q[z]).
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var) const;

 private:
  RatFunc(UniPoly num, UniPoly den, bool /*already_reduced*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  UniPoly num_;
  UniPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline bool is_one(const RatFunc& f) { return f.is_one(); }

}  // namespace autalg
