#pragma once

#include <vector>

#include "autalg/derivation.hpp"
#include "autalg/endo.hpp"
#include "autalg/mat2.hpp"

namespace autalg {

ContextPtr xyz_context();
/// Context {x, y} with field variable z, for Q(z) coefficients.
ContextPtr xy_over_z_context();
/// Context {x, y, t, z}.
ContextPtr xytz_context();
/// Context {t, z}, where h(t, z) lives for sigma_h.
ContextPtr tz_context();
ContextPtr z12_context();

/// (x - 2(y^2+xz)y - (y^2+xz)^2 z, y + (y^2+xz)z, z).
CommEndo nagata();
/// rho0 = (x + y^2/z, y) and rho1 = (x, y + z^2 x) over Q(z).
REndo nagata_rho0();
REndo nagata_rho1();
/// The Nagata map written over Q(z) in the variables x, y.
REndo nagata_over_qz();

/// delta = (-2y, z, 0) and its kernel element w = y^2 + xz.
Derivation nagata_delta();
CommPoly nagata_w();

/// (x + z(xz - zy), y + (xz - zy)z, z).
FreeEndo anick();
/// Anick extended by t -> t on {x, y, t, z}.
FreeEndo anick_extended();

/// [[1 + z1 z2, z2^2], [-z1^2, 1 - z1 z2]].
Mat2Poly cohn_matrix();
/// [[1 + z1 z2 h, z2^2 h], [-z1^2 h, 1 - z1 z2 h]].
Mat2Poly cohn_scaled(const CommPoly& h);

/// (x + z h(xz - zy, z), y + h(xz - zy, z) z, z) for h in K<t, z>.
FreeEndo sigma_h(const FreePoly& h);
/// (x + z (xz - zy)^m, y + (xz - zy)^m z, z).
FreeEndo omega_m(unsigned m);
/// Same shape with (xz - zy)^m scaled by c (c = -1 gives the inverse).
FreeEndo omega_m_scaled(unsigned m, const Rational& c);

/// (x + x^2 [y, z], y, z).
FreeEndo metabelian_rho();

/// The eight-factor word of epsilon generators on {x, y, t, z}.
TameWord<FreePoly> mennicke_factorization();

/// Coefficient alpha of y^p z^q [y, z] y^r z^s.
struct PsiTerm {
  unsigned p = 0, q = 0, r = 0, s = 0;
  Rational alpha;
};
/// w = sum alpha y^p z^q [y,z] y^r z^s; lies in the commutator ideal.
FreePoly psi_w_polynomial(const std::vector<PsiTerm>& terms);
/// (x + w(y, z), y, z).
FreeEndo psi_w(const std::vector<PsiTerm>& terms);

}  // namespace autalg
