#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "autalg/polynomial.hpp"

namespace autalg {

/// Outcome of top-reducing p by q: p = quotient*q + remainder with
/// quotient = sum of `multipliers`, recorded in the order applied.
template <class F>
struct Reduction {
  std::vector<std::pair<Monomial, F>> multipliers;
  Polynomial<F> quotient;
  Polynomial<F> remainder;
};

/// Repeatedly cancels the leading term of p with a monomial multiple of q
/// until the remainder is zero or its leading monomial is not divisible by
/// LM(q).
template <class F>
Reduction<F> leading_term_reduce(const Polynomial<F>& p, const Polynomial<F>& q, const TermOrder& order) {
  if (q.is_zero()) throw std::domain_error("leading_term_reduce: zero divisor");
  Reduction<F> out{{}, Polynomial<F>::zero(p.context() ? p.context() : q.context()), p};
  const Monomial& lm_q = q.leading_monomial(order);
  const F& lc_q = q.leading_coeff(order);
  while (!out.remainder.is_zero()) {
    const Monomial& lm_r = out.remainder.leading_monomial(order);
    if (!lm_q.divides(lm_r)) break;
    Monomial m = lm_r / lm_q;
    F c = out.remainder.leading_coeff(order) / lc_q;
    out.remainder -= q.times_monomial(m, c);
    out.quotient.add_term(m, c);
    out.multipliers.emplace_back(std::move(m), std::move(c));
  }
  return out;
}

/// Reduced Groebner basis together with, for every basis element, cofactors
/// expressing it in the input generators.
template <class F>
struct GroebnerBasis {
  std::vector<Polynomial<F>> basis;
  std::vector<std::vector<Polynomial<F>>> cofactors;
};

namespace detail {

template <class F>
struct Tracked {
  Polynomial<F> poly;
  std::vector<Polynomial<F>> cof;
};

template <class F>
void axpy(std::vector<Polynomial<F>>& acc, const std::vector<Polynomial<F>>& x, const Monomial& m, const F& c) {
  for (size_t i = 0; i < acc.size(); ++i) acc[i] -= x[i].times_monomial(m, c);
}

/// Full normal form of h against g, tracking cofactors when `track`.
template <class F>
Tracked<F> normal_form(Tracked<F> h, const std::vector<Tracked<F>>& g, const TermOrder& order, bool track) {
  Tracked<F> r{Polynomial<F>::zero(h.poly.context()), std::move(h.cof)};
  Polynomial<F> rest = std::move(h.poly);
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial(order);
    const F lc = rest.leading_coeff(order);
    bool reduced = false;
    for (const auto& gi : g) {
      const Monomial& lg = gi.poly.leading_monomial(order);
      if (!lg.divides(lm)) continue;
      Monomial m = lm / lg;
      F c = lc / gi.poly.leading_coeff(order);
      rest -= gi.poly.times_monomial(m, c);
      if (track) axpy(r.cof, gi.cof, m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.poly.add_term(lm, lc);
      rest.add_term(lm, -lc);
    }
  }
  return r;
}

}  // namespace detail

/// Buchberger's algorithm with the coprime-leading-monomial criterion,
/// followed by minimization and inter-reduction. The output is monic and
/// sorted by ascending leading monomial.
template <class F>
GroebnerBasis<F> buchberger_reduced(const std::vector<Polynomial<F>>& gens, const TermOrder& order,
                                    bool track_cofactors = false) {
  using P = Polynomial<F>;
  using T = detail::Tracked<F>;
  ContextPtr ctx;
  for (const auto& g : gens)
    if (!g.is_zero()) ctx = g.context();
  if (!ctx) throw std::invalid_argument("buchberger_reduced: all generators are zero");
  const size_t n = gens.size();
  auto unit_vector = [&](size_t k) {
    std::vector<P> v;
    if (!track_cofactors) return v;
    v.assign(n, P::zero(ctx));
    v[k] = P::one(ctx);
    return v;
  };

  std::vector<T> basis;
  for (size_t k = 0; k < n; ++k) {
    if (gens[k].is_zero()) continue;
    T t = detail::normal_form(T{gens[k], unit_vector(k)}, basis, order, track_cofactors);
    if (!t.poly.is_zero()) basis.push_back(std::move(t));
  }

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto pair_lcm = [&](const std::pair<size_t, size_t>& pr) {
    return Monomial::lcm(basis[pr.first].poly.leading_monomial(order),
                         basis[pr.second].poly.leading_monomial(order));
  };

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return order.less(pair_lcm(a), pair_lcm(b));
    });
    auto [i, j] = *best;
    pairs.erase(best);
    const Monomial li = basis[i].poly.leading_monomial(order);
    const Monomial lj = basis[j].poly.leading_monomial(order);
    if (Monomial::coprime(li, lj)) continue;
    Monomial l = Monomial::lcm(li, lj);
    F ci = F(1) / basis[i].poly.leading_coeff(order);
    F cj = F(1) / basis[j].poly.leading_coeff(order);
    T s{basis[i].poly.times_monomial(l / li, ci) - basis[j].poly.times_monomial(l / lj, cj), {}};
    if (track_cofactors) {
      s.cof.assign(n, P::zero(ctx));
      for (size_t k = 0; k < n; ++k)
        s.cof[k] = basis[i].cof[k].times_monomial(l / li, ci) - basis[j].cof[k].times_monomial(l / lj, cj);
    }
    T r = detail::normal_form(std::move(s), basis, order, track_cofactors);
    if (r.poly.is_zero()) continue;
    basis.push_back(std::move(r));
    for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::vector<T> minimal;
  for (size_t a = 0; a < basis.size(); ++a) {
    const Monomial la = basis[a].poly.leading_monomial(order);
    bool redundant = false;
    for (size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial lb = basis[b].poly.leading_monomial(order);
      if (lb.divides(la) && (lb != la || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }

  // Inter-reduce and normalize.
  GroebnerBasis<F> out;
  for (size_t a = 0; a < minimal.size(); ++a) {
    std::vector<T> others;
    for (size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    const Monomial lead = minimal[a].poly.leading_monomial(order);
    const F lc = minimal[a].poly.leading_coeff(order);
    // Keep the leading term and fully reduce the tail.
    T tail{minimal[a].poly - P::term(ctx, lead, lc), minimal[a].cof};
    if (track_cofactors)
      for (auto& c : tail.cof) c = P::zero(ctx);
    T red = detail::normal_form(std::move(tail), others, order, track_cofactors);
    P g = P::term(ctx, lead, lc) + red.poly;
    F inv = F(1) / lc;
    out.basis.push_back(g.scaled(inv));
    if (track_cofactors) {
      std::vector<P> cof(n, P::zero(ctx));
      for (size_t k = 0; k < n; ++k) cof[k] = (minimal[a].cof[k] + red.cof[k]).scaled(inv);
      out.cofactors.push_back(std::move(cof));
    }
  }
  std::vector<size_t> idx(out.basis.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return order.less(out.basis[a].leading_monomial(order), out.basis[b].leading_monomial(order));
  });
  GroebnerBasis<F> sorted;
  for (size_t k : idx) {
    sorted.basis.push_back(out.basis[k]);
    if (track_cofactors) sorted.cofactors.push_back(out.cofactors[k]);
  }
  return sorted;
}

/// True iff the generators span the unit ideal.
template <class F>
bool ideal_is_unit(const std::vector<Polynomial<F>>& gens, const TermOrder& order = TermOrder::deglex()) {
  auto gb = buchberger_reduced(gens, order);
  return gb.basis.size() == 1 && gb.basis.front().is_unit();
}

/// Full normal form of p modulo a list of polynomials (no cofactors).
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const std::vector<Polynomial<F>>& g, const TermOrder& order) {
  std::vector<detail::Tracked<F>> tg;
  for (const auto& gi : g)
    if (!gi.is_zero()) tg.push_back({gi, {}});
  return detail::normal_form(detail::Tracked<F>{p, {}}, tg, order, false).poly;
}

}  // namespace autalg
