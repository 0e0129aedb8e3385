#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "autalg/polynomial.hpp"

namespace autalg {

/// 2x2 matrix over a commutative polynomial ring (K[z1,z2] in practice).
struct Mat2Poly {
  CommPoly a00, a01, a10, a11;

  static Mat2Poly identity(const ContextPtr& ctx);
  const ContextPtr& context() const { return a00.context(); }

  CommPoly det() const { return a00 * a11 - a01 * a10; }
  friend Mat2Poly operator*(const Mat2Poly& x, const Mat2Poly& y);
  friend bool operator==(const Mat2Poly& x, const Mat2Poly& y) {
    return x.a00 == y.a00 && x.a01 == y.a01 && x.a10 == y.a10 && x.a11 == y.a11;
  }
  /// Applies a polynomial map entrywise (e.g. variable renaming or killing).
  template <class Fn>
  Mat2Poly map(Fn&& fn) const {
    return {fn(a00), fn(a01), fn(a10), fn(a11)};
  }
};

/// Generator of GE2: lower [[1,0],[p,1]], upper [[1,p],[0,1]] or diag(d0,d1).
struct ElemFactor {
  enum class Kind { Lower, Upper, Diagonal };
  Kind kind = Kind::Diagonal;
  CommPoly offset;
  Rational d0 = 1, d1 = 1;

  static ElemFactor lower(CommPoly p) { return {Kind::Lower, std::move(p), 1, 1}; }
  static ElemFactor upper(CommPoly p) { return {Kind::Upper, std::move(p), 1, 1}; }
  static ElemFactor diagonal(const ContextPtr& ctx, Rational a, Rational b) {
    if (is_zero(a) || is_zero(b)) throw std::invalid_argument("diagonal factor with zero entry");
    return {Kind::Diagonal, CommPoly::zero(ctx), std::move(a), std::move(b)};
  }

  Mat2Poly matrix(const ContextPtr& ctx) const;
  ElemFactor inverse() const;
  std::string kind_name() const;
};

/// Ordered product of factors; identity for an empty list.
Mat2Poly factor_product(const std::vector<ElemFactor>& factors, const ContextPtr& ctx);

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result of GE2 reduction: either a factorization whose ordered product is
/// the input, or the column pair where Euclidean reduction stalled.
struct Ge2Result {
  bool in_ge2 = false;
  std::vector<ElemFactor> factors;
  /// Stuck first-column pair (neither leading monomial divides the other).
  CommPoly stuck_a, stuck_b;
  /// Matrix reached when reduction stalled.
  Mat2Poly reached;
  /// Human-readable reduction log.
  std::vector<std::string> trace;
  TermOrder order;
};

/// Euclidean (leading-term) elimination on the first column. Throws
/// NotInvertible unless det(m) is a nonzero constant.
Ge2Result ge2_reduce(const Mat2Poly& m, const TermOrder& order = TermOrder::deglex());

std::string to_string(const Mat2Poly& m, const TermOrder& order = TermOrder::deglex());

}  // namespace autalg
