#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "autalg/free_poly.hpp"
#include "autalg/polynomial.hpp"

namespace autalg {

/// Endomorphism given by the images of the variables. Composition follows
/// the convention "in phi*psi we first apply psi and then phi":
/// (phi*psi)(x_i) = psi(x_i) with the images of phi substituted.
template <class P>
struct Endo {
  ContextPtr ctx;
  std::vector<P> images;

  Endo() = default;
  Endo(ContextPtr c, std::vector<P> ims) : ctx(std::move(c)), images(std::move(ims)) {
    if (images.size() != ctx->arity()) throw std::invalid_argument("endomorphism needs one image per variable");
  }

  static Endo identity(const ContextPtr& c) {
    std::vector<P> ims;
    for (size_t i = 0; i < c->arity(); ++i) ims.push_back(P::variable(c, i));
    return Endo(c, std::move(ims));
  }

  size_t arity() const { return images.size(); }
  const P& operator[](size_t i) const { return images[i]; }

  /// phi(p) = p(phi(x_1), ..., phi(x_n)).
  P apply(const P& p) const { return p.compose(images); }

  bool is_identity() const { return *this == identity(ctx); }

  friend bool operator==(const Endo& a, const Endo& b) {
    return same_context(a.ctx, b.ctx) && a.images == b.images;
  }

  std::vector<std::string> to_strings(const TermOrder& order = TermOrder::deglex()) const {
    std::vector<std::string> out;
    for (const auto& p : images) out.push_back(p.to_string(order));
    return out;
  }
  std::string to_string(const TermOrder& order = TermOrder::deglex()) const {
    std::string s = "(";
    for (size_t i = 0; i < images.size(); ++i) s += (i ? ", " : "") + images[i].to_string(order);
    return s + ")";
  }
};

using CommEndo = Endo<CommPoly>;
using FreeEndo = Endo<FreePoly>;
using REndo = Endo<RPoly>;

/// phi*psi: apply psi first, then phi.
template <class P>
Endo<P> endo_compose(const Endo<P>& phi, const Endo<P>& psi) {
  if (!same_context(phi.ctx, psi.ctx)) throw std::invalid_argument("endo_compose: context mismatch");
  std::vector<P> ims;
  ims.reserve(psi.arity());
  for (const auto& p : psi.images) ims.push_back(p.compose(phi.images));
  return Endo<P>(phi.ctx, std::move(ims));
}

template <class P>
Endo<P> endo_compose(const std::vector<Endo<P>>& chain) {
  if (chain.empty()) throw std::invalid_argument("endo_compose: empty chain");
  Endo<P> acc = chain.front();
  for (size_t i = 1; i < chain.size(); ++i) acc = endo_compose(acc, chain[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Square polynomial matrices.

template <class P>
using PolyMatrix = std::vector<std::vector<P>>;

template <class P>
PolyMatrix<P> matrix_multiply(const PolyMatrix<P>& a, const PolyMatrix<P>& b) {
  const size_t n = a.size(), m = b.front().size(), k = b.size();
  PolyMatrix<P> c(n, std::vector<P>(m, P::zero(a[0][0].context())));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t l = 0; l < k; ++l) c[i][j] += a[i][l] * b[l][j];
  return c;
}

/// Laplace expansion along the first row; fine for the small sizes used here.
template <class P>
P determinant(const PolyMatrix<P>& m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  P det = P::zero(m[0][0].context());
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix<P> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<P> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    P term = m[0][j] * determinant(minor);
    if (j % 2) {
      det -= term;
    } else {
      det += term;
    }
  }
  return det;
}

/// Entry (i, j) is d phi(x_j) / d x_i.
template <class F>
PolyMatrix<Polynomial<F>> jacobian_comm(const Endo<Polynomial<F>>& phi) {
  const size_t n = phi.arity();
  PolyMatrix<Polynomial<F>> j(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t c = 0; c < n; ++c) j[i].push_back(phi.images[c].derivative(i));
  return j;
}

/// phi applied entrywise.
template <class P>
PolyMatrix<P> apply_to_matrix(const Endo<P>& phi, const PolyMatrix<P>& m) {
  PolyMatrix<P> out = m;
  for (auto& row : out)
    for (auto& e : row) e = phi.apply(e);
  return out;
}

// ---------------------------------------------------------------------------
// Tame generators.

/// x_i -> sum_j matrix[i][j] * x_j + shift[i] for i < active; later
/// variables are fixed. Shifts may involve fixed variables only.
template <class P>
struct Affine {
  size_t active = 0;
  PolyMatrix<P> matrix;
  std::vector<P> shift;
};

/// sigma(i, alpha, f): x_i -> alpha*x_i + f with f free of x_i.
template <class P>
struct Triangular {
  size_t index = 0;
  typename P::Coeff alpha = 1;
  P offset;
};

/// Swaps x_k and x_s.
struct Tau {
  size_t k = 0, s = 0;
};

/// epsilon_ij(alpha z1^a z2^b): x_j -> x_j + alpha z^a x_i z^b, z the last
/// variable.
struct EpsilonZ {
  size_t i = 0, j = 0;
  Rational alpha = 1;
  uint32_t a = 0, b = 0;
};

template <class P>
using Generator = std::variant<Affine<P>, Triangular<P>, Tau, EpsilonZ>;

template <class P>
Endo<P> generator_endo(const Generator<P>& g, const ContextPtr& ctx) {
  const size_t n = ctx->arity();
  Endo<P> e = Endo<P>::identity(ctx);
  if (const auto* a = std::get_if<Affine<P>>(&g)) {
    if (a->active > n || a->matrix.size() != a->active || a->shift.size() != a->active)
      throw std::invalid_argument("malformed affine generator");
    for (size_t i = 0; i < a->active; ++i) {
      P im = a->shift[i];
      for (size_t j = 0; j < a->active; ++j) im += a->matrix[i][j] * P::variable(ctx, j);
      e.images[i] = im;
    }
  } else if (const auto* t = std::get_if<Triangular<P>>(&g)) {
    if (t->index >= n) throw std::invalid_argument("triangular generator index out of range");
    e.images[t->index] = P::variable(ctx, t->index).scaled(t->alpha) + t->offset;
  } else if (const auto* s = std::get_if<Tau>(&g)) {
    if (s->k >= n || s->s >= n) throw std::invalid_argument("swap index out of range");
    std::swap(e.images[s->k], e.images[s->s]);
  } else {
    const auto& eps = std::get<EpsilonZ>(g);
    if (eps.i >= n || eps.j >= n || eps.i == eps.j) throw std::invalid_argument("malformed epsilon generator");
    const size_t z = n - 1;
    P zz = P::variable(ctx, z);
    P extra = zz.pow(eps.a) * P::variable(ctx, eps.i) * zz.pow(eps.b);
    e.images[eps.j] += extra.scaled(typename P::Coeff(eps.alpha));
  }
  return e;
}

namespace detail {

template <class P>
bool constant_matrix(const PolyMatrix<P>& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_constant()) return false;
  return true;
}

/// Inverse of an affine matrix: Gauss-Jordan over the field when every
/// entry is constant, adjugate over the ring for 2x2 with unit determinant.
template <class P>
PolyMatrix<P> affine_inverse_matrix(const PolyMatrix<P>& m, const ContextPtr& ctx) {
  using C = typename P::Coeff;
  const size_t n = m.size();
  if (constant_matrix(m)) {
    std::vector<std::vector<C>> a(n, std::vector<C>(2 * n, C(0)));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j].constant_term();
      a[i][n + i] = C(1);
    }
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      while (piv < n && is_zero(a[piv][col])) ++piv;
      if (piv == n) throw std::domain_error("affine generator matrix is singular");
      std::swap(a[piv], a[col]);
      C inv = C(1) / a[col][col];
      for (auto& v : a[col]) v = v * inv;
      for (size_t r = 0; r < n; ++r) {
        if (r == col || is_zero(a[r][col])) continue;
        C f = a[r][col];
        for (size_t c = 0; c < 2 * n; ++c) a[r][c] = a[r][c] - f * a[col][c];
      }
    }
    PolyMatrix<P> out(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) out[i].push_back(P::constant(ctx, a[i][n + j]));
    return out;
  }
  if (n != 2) throw std::domain_error("non-constant affine matrix inverse only supported in rank 2");
  P det = determinant(m);
  if (!det.is_unit()) throw std::domain_error("affine generator matrix is not invertible over the coefficient ring");
  C inv = C(1) / det.constant_term();
  return {{m[1][1].scaled(inv), (-m[0][1]).scaled(inv)}, {(-m[1][0]).scaled(inv), m[0][0].scaled(inv)}};
}

}  // namespace detail

template <class P>
Generator<P> generator_inverse(const Generator<P>& g, const ContextPtr& ctx) {
  if (const auto* a = std::get_if<Affine<P>>(&g)) {
    Affine<P> inv;
    inv.active = a->active;
    inv.matrix = detail::affine_inverse_matrix(a->matrix, ctx);
    for (size_t i = 0; i < a->active; ++i) {
      P s = P::zero(ctx);
      for (size_t j = 0; j < a->active; ++j) s -= inv.matrix[i][j] * a->shift[j];
      inv.shift.push_back(s);
    }
    return inv;
  }
  if (const auto* t = std::get_if<Triangular<P>>(&g)) {
    if (is_zero(t->alpha)) throw std::domain_error("triangular generator with zero scalar");
    typename P::Coeff inv = typename P::Coeff(1) / t->alpha;
    return Triangular<P>{t->index, inv, (-t->offset).scaled(inv)};
  }
  if (std::holds_alternative<Tau>(g)) return g;
  EpsilonZ e = std::get<EpsilonZ>(g);
  e.alpha = -e.alpha;
  return e;
}

/// Checks the invertibility side conditions of a generator.
template <class P>
void validate_generator(const Generator<P>& g, const ContextPtr& ctx) {
  if (const auto* a = std::get_if<Affine<P>>(&g)) {
    (void)detail::affine_inverse_matrix(a->matrix, ctx);
    for (const auto& s : a->shift)
      for (size_t i = 0; i < a->active; ++i)
        if (s.depends_on(i)) throw std::invalid_argument("affine shift depends on an active variable");
  } else if (const auto* t = std::get_if<Triangular<P>>(&g)) {
    if (is_zero(t->alpha)) throw std::invalid_argument("triangular generator with zero scalar");
    if (t->offset.depends_on(t->index)) throw std::invalid_argument("triangular offset depends on its own variable");
  } else if (const auto* s = std::get_if<Tau>(&g)) {
    if (s->k == s->s) throw std::invalid_argument("swap of a variable with itself");
  }
  (void)generator_endo(g, ctx);
}

/// Ordered product of generators g_1 g_2 ... g_k (g_k is applied first).
template <class P>
struct TameWord {
  ContextPtr ctx;
  std::vector<Generator<P>> gens;

  Endo<P> eval() const {
    Endo<P> acc = Endo<P>::identity(ctx);
    for (const auto& g : gens) acc = endo_compose(acc, generator_endo(g, ctx));
    return acc;
  }

  TameWord inverse() const {
    TameWord out{ctx, {}};
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) out.gens.push_back(generator_inverse(*it, ctx));
    return out;
  }

  void validate() const {
    for (const auto& g : gens) validate_generator(g, ctx);
  }

  TameWord& append(const TameWord& o) {
    gens.insert(gens.end(), o.gens.begin(), o.gens.end());
    return *this;
  }
};

template <class P>
Endo<P> tame_word_eval(const TameWord<P>& w) {
  return w.eval();
}

/// sigma(s,-1,x_k) sigma(k,1,-x_s) sigma(s,1,x_k): exchanges x_k and x_s.
template <class P>
std::vector<Generator<P>> tau_as_sigmas(size_t k, size_t s, const ContextPtr& ctx) {
  using C = typename P::Coeff;
  return {Triangular<P>{s, C(-1), P::variable(ctx, k)}, Triangular<P>{k, C(1), -P::variable(ctx, s)},
          Triangular<P>{s, C(1), P::variable(ctx, k)}};
}

std::string coeff_text(const Rational& c);
std::string coeff_text(const RatFunc& c, const std::string& var);

/// Human-readable generator, e.g. "sigma(x, 2, y^2)" or "eps(x, y, 1*z1^0*z2^1)".
template <class P>
std::string generator_to_string(const Generator<P>& g, const ContextPtr& ctx,
                                const TermOrder& order = TermOrder::deglex()) {
  if (const auto* a = std::get_if<Affine<P>>(&g)) {
    std::string s = "affine([";
    for (size_t i = 0; i < a->active; ++i) {
      s += i ? "; " : "";
      for (size_t j = 0; j < a->active; ++j) s += (j ? ", " : "") + a->matrix[i][j].to_string(order);
    }
    s += "], [";
    for (size_t i = 0; i < a->active; ++i) s += (i ? ", " : "") + a->shift[i].to_string(order);
    return s + "])";
  }
  if (const auto* t = std::get_if<Triangular<P>>(&g)) {
    std::string alpha;
    if constexpr (std::is_same_v<typename P::Coeff, Rational>) {
      alpha = coeff_text(t->alpha);
    } else {
      alpha = coeff_text(t->alpha, ctx->field_var());
    }
    return "sigma(" + ctx->name(t->index) + ", " + alpha + ", " + t->offset.to_string(order) + ")";
  }
  if (const auto* s = std::get_if<Tau>(&g)) return "tau(" + ctx->name(s->k) + ", " + ctx->name(s->s) + ")";
  const auto& e = std::get<EpsilonZ>(g);
  return "eps(" + ctx->name(e.i) + ", " + ctx->name(e.j) + ", " + coeff_text(e.alpha) + ", " + std::to_string(e.a) +
         ", " + std::to_string(e.b) + ")";
}

template <class P>
std::vector<std::string> word_to_strings(const TameWord<P>& w, const TermOrder& order = TermOrder::deglex()) {
  std::vector<std::string> out;
  for (const auto& g : w.gens) out.push_back(generator_to_string(g, w.ctx, order));
  return out;
}

}  // namespace autalg
