#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "autalg/context.hpp"
#include "autalg/monomial.hpp"
#include "autalg/ratfunc.hpp"
#include "autalg/rational.hpp"

namespace autalg {

/// Coefficient-field glue used by Polynomial<F>.
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static bool zero(const Rational& c) { return sgn(c) == 0; }
  static bool one(const Rational& c) { return c == 1; }
  /// Renders `c*mono` with its sign folded into the separator.
  static std::string term(const Rational& c, const std::string& mono, bool first, const VarContext&) {
    bool neg = sgn(c) < 0;
    Rational mag = neg ? Rational(-c) : c;
    std::string body;
    if (mono.empty()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = to_string(mag) + "*" + mono;
    }
    if (first) return neg ? "-" + body : body;
    return (neg ? " - " : " + ") + body;
  }
};

template <>
struct FieldOps<RatFunc> {
  static bool zero(const RatFunc& c) { return c.is_zero(); }
  static bool one(const RatFunc& c) { return c.is_one(); }
  static std::string term(const RatFunc& c, const std::string& mono, bool first, const VarContext& ctx) {
    if (c.is_constant()) return FieldOps<Rational>::term(c.num().coeff(0), mono, first, ctx);
    std::string coeff = c.to_string(ctx.field_var());
    if (c.is_polynomial()) coeff = "(" + coeff + ")";
    std::string body = mono.empty() ? coeff : coeff + "*" + mono;
    return first ? body : " + " + body;
  }
};

/// Sparse multivariate polynomial with coefficients in the field F. Terms
/// are stored once per monomial and zero coefficients are never stored.
template <class F>
class Polynomial {
 public:
  using Coeff = F;
  using TermMap = std::map<Monomial, F>;

  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(ContextPtr ctx, F c) {
    Polynomial p(ctx);
    p.add_term(Monomial(p.arity()), std::move(c));
    return p;
  }
  static Polynomial one(ContextPtr ctx) { return constant(std::move(ctx), F(1)); }
  static Polynomial variable(ContextPtr ctx, size_t i) {
    if (i >= ctx->arity()) throw std::out_of_range("variable index out of range");
    Polynomial p(ctx);
    p.add_term(Monomial::variable(ctx->arity(), i), F(1));
    return p;
  }
  static Polynomial term(ContextPtr ctx, Monomial m, F c) {
    Polynomial p(std::move(ctx));
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  const ContextPtr& context() const { return ctx_; }
  size_t arity() const { return ctx_ ? ctx_->arity() : 0; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  /// Nonzero constant: a unit of the polynomial ring.
  bool is_unit() const { return !terms_.empty() && is_constant(); }

  F coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? F(0) : it->second;
  }
  F constant_term() const { return coefficient(Monomial(arity())); }

  /// Adds c*m in place.
  void add_term(const Monomial& m, const F& c) {
    if (FieldOps<F>::zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (FieldOps<F>::zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.ctx_ ? a.ctx_ : b.ctx_);
    if (a.terms_.size() * b.terms_.size() < 64) {
      for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
      return r;
    }
    // Accumulate by hash, then build the ordered map from a sorted run.
    std::unordered_map<Monomial, F, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto [it, fresh] = acc.try_emplace(ma * mb, ca * cb);
        if (!fresh) it->second += ca * cb;
      }
    std::vector<std::pair<Monomial, F>> sorted;
    sorted.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!autalg::is_zero(c)) sorted.emplace_back(m, std::move(c));
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [m, c] : sorted) r.terms_.emplace_hint(r.terms_.end(), std::move(m), std::move(c));
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator*(const F& s, const Polynomial& p) { return p.scaled(s); }
  friend Polynomial operator*(const Polynomial& p, const F& s) { return p.scaled(s); }

  Polynomial scaled(const F& s) const {
    Polynomial r(ctx_);
    if (FieldOps<F>::zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * s);
    return r;
  }
  Polynomial times_monomial(const Monomial& mono, const F& s) const {
    Polynomial r(ctx_);
    if (FieldOps<F>::zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c * s);
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = one(ctx_);
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
  }

  /// Total degree; -1 for zero.
  int64_t total_degree() const {
    int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max<int64_t>(d, static_cast<int64_t>(m.degree()));
    return d;
  }
  /// Degree in variable i; -1 for zero.
  int64_t degree_in(size_t i) const {
    int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max<int64_t>(d, m.exps[i]);
    return d;
  }
  bool depends_on(size_t i) const { return degree_in(i) > 0; }

  /// Weighted degree (max over terms); -1 for zero. Missing weights count as 0.
  int64_t weighted_degree_max(const std::vector<int64_t>& w) const {
    int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree(m, w));
    return d;
  }
  Polynomial weighted_component(const std::vector<int64_t>& w, int64_t deg) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_)
      if (weighted_degree(m, w) == deg) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }
  /// Sum of the terms of maximal weighted degree; zero for zero.
  Polynomial weighted_leading_form(const std::vector<int64_t>& w) const {
    if (is_zero()) return *this;
    return weighted_component(w, weighted_degree_max(w));
  }

  const Monomial& leading_monomial(const TermOrder& order) const { return leading(order)->first; }
  const F& leading_coeff(const TermOrder& order) const { return leading(order)->second; }
  Polynomial leading_term(const TermOrder& order) const {
    auto it = leading(order);
    return term(ctx_, it->first, it->second);
  }
  Polynomial monic(const TermOrder& order) const {
    if (is_zero()) return *this;
    return scaled(F(1) / leading_coeff(order));
  }

  Polynomial derivative(size_t i) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
      if (m.exps[i] == 0) continue;
      Monomial d = m;
      --d.exps[i];
      r.add_term(d, c * F(Rational(m.exps[i])));
    }
    return r;
  }

  /// Substitutes images[i] for variable i. All images share one context.
  Polynomial compose(const std::vector<Polynomial>& images) const {
    if (images.size() != arity()) throw std::invalid_argument("composition arity mismatch");
    if (images.empty()) return *this;
    const ContextPtr& target = images.front().context();
    for (const auto& im : images)
      if (!im.is_zero() && !same_context(im.context(), target))
        throw std::invalid_argument("composition images must share one context");
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](size_t v, uint32_t e) -> const Polynomial& {
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(one(target));
      while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
      return cache[e];
    };
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(target, c);
      for (size_t v = 0; v < m.exps.size(); ++v)
        if (m.exps[v]) t = t * power(v, m.exps[v]);
      r += t;
    }
    return r;
  }

  /// Moves the polynomial into `target`, sending variable i to variable map[i].
  Polynomial rename(const ContextPtr& target, const std::vector<size_t>& map) const {
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
      Monomial n(target->arity());
      for (size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i]) n.exps.at(map.at(i)) += m.exps[i];
      r.add_term(n, c);
    }
    return r;
  }

  /// Terms listed by ascending term order, e.g. "1 + 2*y*z".
  std::string to_string(const TermOrder& order = TermOrder::deglex()) const {
    if (terms_.empty()) return "0";
    std::vector<const typename TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return order.less(a->first, b->first); });
    std::string out;
    bool first = true;
    for (auto* t : sorted) {
      out += FieldOps<F>::term(t->second, t->first.to_string(*ctx_), first, *ctx_);
      first = false;
    }
    return out;
  }

 private:
  typename TermMap::const_iterator leading(const TermOrder& order) const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (order.less(best->first, it->first)) best = it;
    return best;
  }
  void check_compatible(const Polynomial& o) const {
    if (ctx_ && o.ctx_ && !same_context(ctx_, o.ctx_))
      throw std::invalid_argument("polynomials live in different contexts");
  }
  void adopt(const Polynomial& o) {
    check_compatible(o);
    if (!ctx_) ctx_ = o.ctx_;
  }

  ContextPtr ctx_;
  TermMap terms_;
};

using CommPoly = Polynomial<Rational>;
/// Polynomial with coefficients in Q(z); z itself is not a ring variable.
using RPoly = Polynomial<RatFunc>;

/// Embeds K[x_0..x_{n-1}, z] into K(z)[x_0..x_{n-1}] where z is variable
/// `field_index` of p's context; `target` names the remaining variables.
RPoly to_rpoly(const CommPoly& p, size_t field_index, const ContextPtr& target);

/// Inverse of to_rpoly when every coefficient is a polynomial in z; the new
/// variable is appended at position `field_index` of `target`.
std::optional<CommPoly> from_rpoly(const RPoly& p, size_t field_index, const ContextPtr& target);

/// Coerces Q coefficients into Q(z).
RPoly lift_to_rpoly(const CommPoly& p, const ContextPtr& target);

}  // namespace autalg
