#include "autalg/mat2.hpp"

#include "autalg/groebner.hpp"

namespace autalg {

Mat2Poly Mat2Poly::identity(const ContextPtr& ctx) {
  return {CommPoly::one(ctx), CommPoly::zero(ctx), CommPoly::zero(ctx), CommPoly::one(ctx)};
}

Mat2Poly operator*(const Mat2Poly& x, const Mat2Poly& y) {
  return {x.a00 * y.a00 + x.a01 * y.a10, x.a00 * y.a01 + x.a01 * y.a11,
          x.a10 * y.a00 + x.a11 * y.a10, x.a10 * y.a01 + x.a11 * y.a11};
}

Mat2Poly ElemFactor::matrix(const ContextPtr& ctx) const {
  Mat2Poly m = Mat2Poly::identity(ctx);
  switch (kind) {
    case Kind::Lower:
      m.a10 = offset;
      break;
    case Kind::Upper:
      m.a01 = offset;
      break;
    case Kind::Diagonal:
      m.a00 = CommPoly::constant(ctx, d0);
      m.a11 = CommPoly::constant(ctx, d1);
      break;
  }
  return m;
}

ElemFactor ElemFactor::inverse() const {
  switch (kind) {
    case Kind::Lower:
      return lower(-offset);
    case Kind::Upper:
      return upper(-offset);
    case Kind::Diagonal:
      return {Kind::Diagonal, offset, Rational(1) / d0, Rational(1) / d1};
  }
  return *this;
}

std::string ElemFactor::kind_name() const {
  switch (kind) {
    case Kind::Lower:
      return "lower";
    case Kind::Upper:
      return "upper";
    case Kind::Diagonal:
      return "diagonal";
  }
  return "?";
}

Mat2Poly factor_product(const std::vector<ElemFactor>& factors, const ContextPtr& ctx) {
  Mat2Poly m = Mat2Poly::identity(ctx);
  for (const auto& f : factors) m = m * f.matrix(ctx);
  return m;
}

namespace {

// Left multiplication by an elementary matrix, in place.
void apply_lower(Mat2Poly& n, const CommPoly& p) {
  n.a10 += p * n.a00;
  n.a11 += p * n.a01;
}
void apply_upper(Mat2Poly& n, const CommPoly& p) {
  n.a00 += p * n.a10;
  n.a01 += p * n.a11;
}

}  // namespace

Ge2Result ge2_reduce(const Mat2Poly& m, const TermOrder& order) {
  const ContextPtr& ctx = m.context();
  CommPoly det = m.det();
  if (!det.is_unit()) throw NotInvertible("ge2_reduce: determinant " + det.to_string(order) + " is not a nonzero constant");

  Ge2Result out;
  out.order = order;
  Mat2Poly n = m;
  std::vector<ElemFactor> applied;  // E_k ... E_1 m = n
  while (!n.a10.is_zero()) {
    if (n.a00.is_zero()) {
      CommPoly s = CommPoly::constant(ctx, Rational(1) / n.a10.constant_term());
      apply_upper(n, s);
      applied.push_back(ElemFactor::upper(s));
      out.trace.push_back("a = 0: row1 += (" + s.to_string(order) + ")*row2");
      continue;
    }
    const Monomial la = n.a00.leading_monomial(order);
    const Monomial lb = n.a10.leading_monomial(order);
    if (la.divides(lb)) {
      auto red = leading_term_reduce(n.a10, n.a00, order);
      CommPoly s = -red.quotient;
      apply_lower(n, s);
      applied.push_back(ElemFactor::lower(s));
      out.trace.push_back("row2 -= (" + red.quotient.to_string(order) + ")*row1");
    } else if (lb.divides(la)) {
      auto red = leading_term_reduce(n.a00, n.a10, order);
      CommPoly s = -red.quotient;
      apply_upper(n, s);
      applied.push_back(ElemFactor::upper(s));
      out.trace.push_back("row1 -= (" + red.quotient.to_string(order) + ")*row2");
    } else {
      out.in_ge2 = false;
      out.stuck_a = n.a00;
      out.stuck_b = n.a10;
      out.reached = n;
      out.trace.push_back("stuck: leading monomials " + la.to_string(*ctx) + " and " + lb.to_string(*ctx) +
                          " do not divide each other");
      return out;
    }
  }

  // n = [[a, c], [0, d]] with a, d nonzero constants.
  Rational a = n.a00.constant_term();
  Rational d = n.a11.constant_term();
  for (auto it = applied.begin(); it != applied.end(); ++it) out.factors.push_back(it->inverse());
  if (a != 1 || d != 1) out.factors.push_back(ElemFactor::diagonal(ctx, a, d));
  if (!n.a01.is_zero()) out.factors.push_back(ElemFactor::upper(n.a01.scaled(Rational(1) / a)));
  out.in_ge2 = true;
  out.reached = n;
  if (!(factor_product(out.factors, ctx) == m)) throw std::logic_error("ge2_reduce: refactorization mismatch");
  return out;
}

std::string to_string(const Mat2Poly& m, const TermOrder& order) {
  return "[[" + m.a00.to_string(order) + ", " + m.a01.to_string(order) + "], [" + m.a10.to_string(order) + ", " +
         m.a11.to_string(order) + "]]";
}

}  // namespace autalg
