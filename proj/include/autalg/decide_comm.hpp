#pragma once

#include "autalg/verdict.hpp"

namespace autalg {

/// Peels triangular generators off (f, g) by cancelling top homogeneous
/// components until an affine map remains. Works over Q or Q(z).
/// An Automorphism verdict carries a word recomposing to phi exactly.
template <class F>
Verdict recognize_aut_k2(const Endo<Polynomial<F>>& phi);

/// Coordinate recognition in Q[x,y] via the (d,1)-gradings; a Coordinate
/// verdict carries a mate g and a word for (f, g).
Verdict recognize_coord_k2(const CommPoly& f);

/// Euclidean-type reduction of the gradient (p, q) = (f_x, f_y), x and y
/// being the first two variables of the context. Coordinate iff the
/// reduction reaches a unit paired with zero.
template <class F>
Verdict coord_test_sy(const Polynomial<F>& f, const TermOrder& order = TermOrder::deglex());

/// The same test with coefficients in Q(z), z being variable `z_index`.
Verdict coord_test_sy_qz(const CommPoly& f, size_t z_index, const TermOrder& order = TermOrder::deglex());

/// z-tame coordinate test: the gradient reduction in Q[x,y,z], z counted as
/// a variable, so only constants are units.
Verdict z_tame_coord_test(const CommPoly& f, const TermOrder& order = TermOrder::deglex());

/// Coordinate test in Q[z][x,y]: unimodular gradient (Groebner basis with a
/// unit certificate) plus the gradient reduction over Q(z). The verdict
/// notes whether the coordinate is z-tame.
Verdict z_coord_test(const CommPoly& f, const TermOrder& order = TermOrder::deglex());

/// z-tame recognition for z-fixing endomorphisms of Q[x,y,z] (z last): the
/// two-variable recognizer over Q(z), accepted only when every peeled
/// generator has Q[z] coefficients and constant units.
Verdict recognize_z_tame_aut_comm(const CommEndo& phi);

}  // namespace autalg
