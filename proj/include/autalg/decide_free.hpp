#pragma once

#include "autalg/verdict.hpp"

namespace autalg {

/// [phi(x), phi(y)] = alpha [x, y] with alpha a nonzero constant.
Verdict dicks_test(const FreeEndo& phi);

/// Abelianize, recognize in K[x,y], lift the word and compare exactly.
Verdict recognize_aut_free2(const FreeEndo& phi);

/// Coordinate iff pi(f) is a coordinate of K[x,y] and the lifted
/// automorphism sends x to f.
Verdict recognize_coord_free2(const FreePoly& f);

/// Preimage of a commutative polynomial in the free algebra on the same
/// names (letters of each monomial in variable order).
FreePoly lift_to_free(const CommPoly& p, const ContextPtr& free_ctx);
/// Lifts every generator of a commutative word.
TameWord<FreePoly> lift_word(const TameWord<CommPoly>& w, const ContextPtr& free_ctx);

/// z-Jacobian of an x,y-linear z-endomorphism of K<x,y,z>: entry (i, j) is
/// the z-derivative of phi(x_j) in x_i, over K[z1, z2]. z-only summands are
/// ignored. Throws std::invalid_argument on nonlinear input.
Mat2Poly z_jacobian(const FreeEndo& phi);

/// Linear z-automorphisms: z-tame iff the z-Jacobian lies in GE2(K[z1,z2]).
/// A ZTame verdict carries an epsilon/affine word (translations last).
Verdict linear_z_tame_test(const FreeEndo& phi);

/// Peak reduction on bidegrees for z-endomorphisms of K<x,y,z> (z last).
Verdict recognize_z_tame_aut3(const FreeEndo& phi);

/// Sufficient wildness test through the x,y-linear component.
Verdict wild_via_linear_part(const FreeEndo& phi);

/// J_M(phi): entry (i, j) is the metabelian derivative of phi(x_j) in x_i.
PolyMatrix<CommPoly> jm_matrix(const FreeEndo& phi);

/// Automorphism of the free metabelian algebra iff det J_M is a nonzero constant.
Verdict metabelian_aut_test(const FreeEndo& phi);

/// eta: kills x1, y1, x2, y2 and keeps z1, z2 (context {z1, z2}).
CommPoly eta(const CommPoly& p);
/// eta applied to the upper-left 2x2 block of J_M(phi).
Mat2Poly eta_j2(const FreeEndo& phi);

/// For phi fixing z with identity abelianization: eta(J2(phi)) outside GE2
/// certifies wildness. Throws std::invalid_argument if the precondition fails.
Verdict metabelian_wild_test(const FreeEndo& phi);

/// General driver: divides phi by a z-tame witness theta with the same
/// abelianization (found by the commutative recognizer), then runs
/// metabelian_wild_test on theta^{-1} phi.
Verdict metabelian_wild_driver(const FreeEndo& phi);

/// Re-runs the computation embedded in a wildness certificate; true iff it
/// reproduces the recorded obstruction.
bool replay_certificate(const WildCertificate& cert);

}  // namespace autalg
