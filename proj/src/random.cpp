#include "autalg/random.hpp"

#include <algorithm>

namespace autalg {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random exponent vector over `vars` with total degree exactly `deg`.
std::vector<size_t> random_letters(Rng& rng, const std::vector<size_t>& vars, unsigned deg) {
  std::vector<size_t> out;
  for (unsigned k = 0; k < deg; ++k) out.push_back(vars[static_cast<size_t>(uniform(rng, 0, static_cast<int>(vars.size()) - 1))]);
  return out;
}

unsigned budgeted_degree(Rng& rng, unsigned max_degree, uint64_t used, uint64_t budget) {
  unsigned cap = max_degree;
  while (cap > 1 && used * cap > budget) --cap;
  return static_cast<unsigned>(uniform(rng, 1, static_cast<int>(cap)));
}

}  // namespace

Rational random_nonzero_rational(Rng& rng, int range, int den) {
  int p = 0;
  while (p == 0) p = uniform(rng, -range, range);
  Rational q(p, uniform(rng, 1, den));
  q.canonicalize();
  return q;
}

Rational random_rational(Rng& rng, int range, int den) {
  Rational q(uniform(rng, -range, range), uniform(rng, 1, den));
  q.canonicalize();
  return q;
}

CommPoly random_comm_poly(Rng& rng, const ContextPtr& ctx, const std::vector<size_t>& vars, unsigned max_degree,
                          unsigned terms, bool allow_constant) {
  CommPoly p(ctx);
  if (vars.empty()) return allow_constant ? CommPoly::constant(ctx, random_rational(rng)) : p;
  const unsigned n = static_cast<unsigned>(uniform(rng, 1, static_cast<int>(std::max(1u, terms))));
  for (unsigned t = 0; t < n; ++t) {
    unsigned deg = static_cast<unsigned>(uniform(rng, allow_constant ? 0 : 1, static_cast<int>(max_degree)));
    Monomial m(ctx->arity());
    for (size_t v : random_letters(rng, vars, deg)) ++m.exps[v];
    p.add_term(m, random_nonzero_rational(rng));
  }
  return p;
}

FreePoly random_free_poly(Rng& rng, const ContextPtr& ctx, const std::vector<size_t>& vars, unsigned max_degree,
                          unsigned terms, bool allow_constant) {
  FreePoly p(ctx);
  if (vars.empty()) return allow_constant ? FreePoly::constant(ctx, random_rational(rng)) : p;
  const unsigned n = static_cast<unsigned>(uniform(rng, 1, static_cast<int>(std::max(1u, terms))));
  for (unsigned t = 0; t < n; ++t) {
    unsigned deg = static_cast<unsigned>(uniform(rng, allow_constant ? 0 : 1, static_cast<int>(max_degree)));
    Word w;
    for (size_t v : random_letters(rng, vars, deg)) w.push_back(static_cast<uint16_t>(v));
    p.add_term(w, random_nonzero_rational(rng));
  }
  return p;
}

std::vector<std::vector<Rational>> random_gl2(Rng& rng) {
  for (;;) {
    std::vector<std::vector<Rational>> m(2, std::vector<Rational>(2));
    for (auto& row : m)
      for (auto& e : row) e = random_rational(rng, 3, 2);
    if (m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0) return m;
  }
}

namespace {

template <class P>
Affine<P> random_affine(Rng& rng, const ContextPtr& ctx, bool constant_shift, size_t z_index) {
  auto m = random_gl2(rng);
  Affine<P> a;
  a.active = 2;
  a.matrix = {{P::constant(ctx, m[0][0]), P::constant(ctx, m[0][1])},
              {P::constant(ctx, m[1][0]), P::constant(ctx, m[1][1])}};
  for (int i = 0; i < 2; ++i) {
    if (constant_shift) {
      a.shift.push_back(P::constant(ctx, random_rational(rng)));
    } else {
      P s = P::constant(ctx, random_rational(rng));
      if (uniform(rng, 0, 1)) s += P::variable(ctx, z_index).pow(static_cast<unsigned>(uniform(rng, 1, 2))).scaled(random_nonzero_rational(rng));
      a.shift.push_back(s);
    }
  }
  return a;
}

// Triangular offset in the other active variable (and optionally z), with
// a nonzero top term of degree `deg` in that variable.
template <class P, class Gen>
P triangular_offset(Rng& rng, const ContextPtr& ctx, size_t other, unsigned deg, std::vector<size_t> vars, Gen gen) {
  P top = P::variable(ctx, other).pow(deg).scaled(random_nonzero_rational(rng));
  P rest = gen(rng, ctx, vars, deg, 3u, true);
  // Keep the degree in `other` at most deg.
  P kept(ctx);
  for (const auto& [key, c] : rest.terms()) {
    P t = P::term(ctx, key, c);
    if (t.degree_in(other) <= static_cast<int64_t>(deg)) kept += t;
  }
  return top + kept;
}

constexpr size_t kWordTermCap = 4000;

template <class P, class Gen>
TameWord<P> random_word(Rng& rng, const ContextPtr& ctx, unsigned max_length, unsigned max_degree, uint64_t budget,
                        bool with_z, Gen gen) {
  TameWord<P> w{ctx, {}};
  const size_t z = ctx->arity() - 1;
  const unsigned len = static_cast<unsigned>(uniform(rng, 1, static_cast<int>(max_length)));
  uint64_t used = 1;
  const bool track = with_z || std::is_same_v<P, FreePoly>;
  Endo<P> acc = Endo<P>::identity(ctx);
  size_t last = static_cast<size_t>(uniform(rng, 0, 1));
  for (unsigned k = 0; k < len; ++k) {
    if (uniform(rng, 0, 3) == 0) {
      Generator<P> a = random_affine<P>(rng, ctx, !with_z, z);
      if (track) acc = endo_compose(acc, generator_endo(a, ctx));
      w.gens.push_back(std::move(a));
      continue;
    }
    size_t idx = 1 - last;
    last = idx;
    size_t other = 1 - idx;
    unsigned deg = budgeted_degree(rng, max_degree, used, budget);
    used *= deg;
    std::vector<size_t> vars{other};
    if (with_z) vars.push_back(z);
    P off = triangular_offset<P>(rng, ctx, other, deg, vars, gen);
    typename P::Coeff alpha = random_nonzero_rational(rng, 3, 2);
    Generator<P> g = Triangular<P>{idx, alpha, off};
    if (!track) {
      w.gens.push_back(std::move(g));
      continue;
    }
    // The degree budget does not bound the term count (z-words and free
    // words fan out), so generators that overflow the cap are skipped.
    Endo<P> next = endo_compose(acc, generator_endo(g, ctx));
    size_t terms = 0;
    for (const auto& im : next.images) terms += im.size();
    if (terms > kWordTermCap) {
      used /= deg;
      continue;
    }
    acc = std::move(next);
    w.gens.push_back(std::move(g));
  }
  return w;
}

}  // namespace

TameWord<CommPoly> random_tame_word_k2(Rng& rng, const ContextPtr& ctx, unsigned max_length, unsigned max_degree,
                                       uint64_t degree_budget) {
  return random_word<CommPoly>(rng, ctx, max_length, max_degree, degree_budget, false,
                               [](Rng& r, const ContextPtr& c, const std::vector<size_t>& v, unsigned d, unsigned t,
                                  bool a) { return random_comm_poly(r, c, v, d, t, a); });
}

TameWord<FreePoly> random_tame_word_free2(Rng& rng, const ContextPtr& ctx, unsigned max_length, unsigned max_degree,
                                          uint64_t degree_budget) {
  return random_word<FreePoly>(rng, ctx, max_length, max_degree, degree_budget, false,
                               [](Rng& r, const ContextPtr& c, const std::vector<size_t>& v, unsigned d, unsigned t,
                                  bool a) { return random_free_poly(r, c, v, d, t, a); });
}

TameWord<FreePoly> random_z_tame_word_free(Rng& rng, const ContextPtr& ctx, unsigned max_length, unsigned max_degree,
                                           uint64_t degree_budget) {
  return random_word<FreePoly>(rng, ctx, max_length, max_degree, degree_budget, true,
                               [](Rng& r, const ContextPtr& c, const std::vector<size_t>& v, unsigned d, unsigned t,
                                  bool a) { return random_free_poly(r, c, v, d, t, a); });
}

TameWord<CommPoly> random_z_tame_word_comm(Rng& rng, const ContextPtr& ctx, unsigned max_length,
                                           unsigned max_degree, uint64_t degree_budget) {
  return random_word<CommPoly>(rng, ctx, max_length, max_degree, degree_budget, true,
                               [](Rng& r, const ContextPtr& c, const std::vector<size_t>& v, unsigned d, unsigned t,
                                  bool a) { return random_comm_poly(r, c, v, d, t, a); });
}

std::vector<ElemFactor> random_elementary_factors(Rng& rng, const ContextPtr& ctx, unsigned length,
                                                  unsigned max_degree) {
  std::vector<ElemFactor> out;
  std::vector<size_t> vars;
  for (size_t i = 0; i < ctx->arity(); ++i) vars.push_back(i);
  for (unsigned k = 0; k < length; ++k) {
    int kind = uniform(rng, 0, 5);
    if (kind == 0) {
      out.push_back(ElemFactor::diagonal(ctx, random_nonzero_rational(rng), random_nonzero_rational(rng)));
      continue;
    }
    CommPoly p = random_comm_poly(rng, ctx, vars, max_degree, 3, true);
    if (p.is_zero()) p = CommPoly::variable(ctx, 0);
    out.push_back(kind % 2 ? ElemFactor::lower(p) : ElemFactor::upper(p));
  }
  return out;
}

}  // namespace autalg
