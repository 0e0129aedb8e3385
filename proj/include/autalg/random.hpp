#pragma once

// Seeded generators of random test data: polynomials, matrices and tame
// words with known decompositions.

#include <cstdint>
#include <random>
#include <vector>

#include "autalg/endo.hpp"
#include "autalg/mat2.hpp"

namespace autalg {

using Rng = std::mt19937_64;

/// Nonzero rational p/q with |p| <= range, 1 <= q <= den.
Rational random_nonzero_rational(Rng& rng, int range = 5, int den = 3);
Rational random_rational(Rng& rng, int range = 5, int den = 3);

/// Random polynomial of total degree <= max_degree in the variables of
/// `vars` (indices into ctx), with up to `terms` terms.
CommPoly random_comm_poly(Rng& rng, const ContextPtr& ctx, const std::vector<size_t>& vars, unsigned max_degree,
                          unsigned terms = 4, bool allow_constant = true);
FreePoly random_free_poly(Rng& rng, const ContextPtr& ctx, const std::vector<size_t>& vars, unsigned max_degree,
                          unsigned terms = 4, bool allow_constant = true);

/// Random element of GL2(Q) with small entries.
std::vector<std::vector<Rational>> random_gl2(Rng& rng);

/// Random word of affine and triangular generators of K[x,y] (or the free
/// algebra on two letters). The product of the generator degrees is kept
/// below `degree_budget` so that evaluation stays tractable; free words
/// expand exponentially in the degree, hence the smaller defaults.
TameWord<CommPoly> random_tame_word_k2(Rng& rng, const ContextPtr& ctx, unsigned max_length, unsigned max_degree,
                                       uint64_t degree_budget = 60);
TameWord<FreePoly> random_tame_word_free2(Rng& rng, const ContextPtr& ctx, unsigned max_length, unsigned max_degree,
                                          uint64_t degree_budget = 16);

/// Random word of z-affine and z-triangular generators of K<x,y,z>
/// (z last): x -> x + q(y,z), y -> y + q(x,z), GL2(K) with z-translations.
TameWord<FreePoly> random_z_tame_word_free(Rng& rng, const ContextPtr& ctx, unsigned max_length, unsigned max_degree,
                                           uint64_t degree_budget = 12);

/// Random word of z-affine/z-triangular generators of K[z][x,y] (z last).
TameWord<CommPoly> random_z_tame_word_comm(Rng& rng, const ContextPtr& ctx, unsigned max_length,
                                           unsigned max_degree, uint64_t degree_budget = 12);

/// Product of `length` random elementary/diagonal factors over K[z1,z2].
std::vector<ElemFactor> random_elementary_factors(Rng& rng, const ContextPtr& ctx, unsigned length,
                                                  unsigned max_degree);

}  // namespace autalg
