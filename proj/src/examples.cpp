#include "autalg/examples.hpp"

#include "autalg/parse.hpp"

namespace autalg {

ContextPtr xyz_context() {
  static const ContextPtr ctx = make_context({"x", "y", "z"});
  return ctx;
}

ContextPtr xy_over_z_context() {
  static const ContextPtr ctx = make_context({"x", "y"}, "z");
  return ctx;
}

ContextPtr xytz_context() {
  static const ContextPtr ctx = make_context({"x", "y", "t", "z"});
  return ctx;
}

ContextPtr tz_context() {
  static const ContextPtr ctx = make_context({"t", "z"});
  return ctx;
}

ContextPtr z12_context() { return z_pair_context(); }

CommEndo nagata() {
  const auto& c = xyz_context();
  return CommEndo(c, {parse_comm("x - 2*(y^2 + x*z)*y - (y^2 + x*z)^2*z", c), parse_comm("y + (y^2 + x*z)*z", c),
                      parse_comm("z", c)});
}

REndo nagata_rho0() {
  const auto& c = xy_over_z_context();
  return REndo(c, {parse_rpoly("x + y^2/z", c), parse_rpoly("y", c)});
}

REndo nagata_rho1() {
  const auto& c = xy_over_z_context();
  return REndo(c, {parse_rpoly("x", c), parse_rpoly("y + z^2*x", c)});
}

REndo nagata_over_qz() {
  const auto& c = xy_over_z_context();
  return REndo(c, {parse_rpoly("x - 2*(y^2 + x*z)*y - (y^2 + x*z)^2*z", c), parse_rpoly("y + (y^2 + x*z)*z", c)});
}

Derivation nagata_delta() {
  const auto& c = xyz_context();
  return Derivation(c, {parse_comm("-2*y", c), parse_comm("z", c), parse_comm("0", c)});
}

CommPoly nagata_w() { return parse_comm("y^2 + x*z", xyz_context()); }

FreeEndo anick() { return omega_m(1); }

FreeEndo anick_extended() {
  const auto& c = xytz_context();
  return FreeEndo(c, {parse_free("x + z*(x*z - z*y)", c), parse_free("y + (x*z - z*y)*z", c), parse_free("t", c),
                      parse_free("z", c)});
}

Mat2Poly cohn_matrix() { return cohn_scaled(CommPoly::one(z12_context())); }

Mat2Poly cohn_scaled(const CommPoly& h) {
  const auto& c = h.context();
  auto P = [&](const char* s) { return parse_comm(s, c); };
  return {P("1") + P("z1*z2") * h, P("z2^2") * h, P("-z1^2") * h, P("1") - P("z1*z2") * h};
}

FreeEndo sigma_h(const FreePoly& h) {
  const auto& c = xyz_context();
  if (h.arity() != 2) throw std::invalid_argument("sigma_h: h must live in K<t, z>");
  const FreePoly z = FreePoly::variable(c, 2);
  const FreePoly hv = h.compose({parse_free("x*z - z*y", c), z});
  return FreeEndo(c, {FreePoly::variable(c, 0) + z * hv, FreePoly::variable(c, 1) + hv * z, z});
}

FreeEndo omega_m(unsigned m) { return omega_m_scaled(m, Rational(1)); }

FreeEndo omega_m_scaled(unsigned m, const Rational& c) {
  if (m == 0) throw std::invalid_argument("omega_m: m must be positive");
  const auto& t = tz_context();
  return sigma_h(FreePoly::variable(t, 0).pow(m).scaled(c));
}

FreeEndo metabelian_rho() {
  const auto& c = xyz_context();
  return FreeEndo(c, {parse_free("x + x^2*[y, z]", c), parse_free("y", c), parse_free("z", c)});
}

TameWord<FreePoly> mennicke_factorization() {
  // Indices in {x, y, t, z}: x = 0, y = 1, t = 2. Each factor is
  // eps_ij(alpha z1^a z2^b), listed left to right.
  TameWord<FreePoly> w{xytz_context(), {}};
  w.gens = {EpsilonZ{2, 0, Rational(1), 1, 0},  EpsilonZ{2, 1, Rational(1), 0, 1},
            EpsilonZ{0, 2, Rational(-1), 0, 1}, EpsilonZ{1, 2, Rational(1), 1, 0},
            EpsilonZ{2, 0, Rational(-1), 1, 0}, EpsilonZ{2, 1, Rational(-1), 0, 1},
            EpsilonZ{0, 2, Rational(1), 0, 1},  EpsilonZ{1, 2, Rational(-1), 1, 0}};
  return w;
}

FreePoly psi_w_polynomial(const std::vector<PsiTerm>& terms) {
  const auto& c = xyz_context();
  const FreePoly y = FreePoly::variable(c, 1), z = FreePoly::variable(c, 2);
  const FreePoly yz = commutator(y, z);
  FreePoly w = FreePoly::zero(c);
  for (const auto& t : terms) w += (y.pow(t.p) * z.pow(t.q) * yz * y.pow(t.r) * z.pow(t.s)).scaled(t.alpha);
  if (!abelianize(w).is_zero()) throw std::logic_error("psi_w: w left the commutator ideal");
  return w;
}

FreeEndo psi_w(const std::vector<PsiTerm>& terms) {
  const auto& c = xyz_context();
  return FreeEndo(c, {FreePoly::variable(c, 0) + psi_w_polynomial(terms), FreePoly::variable(c, 1),
                      FreePoly::variable(c, 2)});
}

}  // namespace autalg
