#include "autalg/free_poly.hpp"

#include <stdexcept>

namespace autalg {

FreePoly FreePoly::constant(ContextPtr ctx, Rational c) {
  FreePoly p(std::move(ctx));
  p.add_term({}, c);
  return p;
}

FreePoly FreePoly::variable(ContextPtr ctx, size_t i) {
  if (i >= ctx->arity()) throw std::out_of_range("variable index out of range");
  FreePoly p(std::move(ctx));
  p.add_term(Word{static_cast<uint16_t>(i)}, Rational(1));
  return p;
}

FreePoly FreePoly::term(ContextPtr ctx, Word w, Rational c) {
  FreePoly p(std::move(ctx));
  p.add_term(w, c);
  return p;
}

Rational FreePoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FreePoly::add_term(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

FreePoly FreePoly::operator-() const {
  FreePoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

void FreePoly::adopt(const FreePoly& o) {
  if (ctx_ && o.ctx_ && !same_context(ctx_, o.ctx_))
    throw std::invalid_argument("free polynomials live in different contexts");
  if (!ctx_) ctx_ = o.ctx_;
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  adopt(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  adopt(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  FreePoly r(a.ctx_ ? a.ctx_ : b.ctx_);
  r.adopt(b);
  Word w;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      w.assign(wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

bool operator==(const FreePoly& a, const FreePoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

FreePoly FreePoly::scaled(const Rational& s) const {
  FreePoly r(ctx_);
  if (sgn(s) == 0) return r;
  for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, c * s);
  return r;
}

FreePoly FreePoly::pow(unsigned e) const {
  FreePoly result = one(ctx_);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

int64_t FreePoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int64_t>(terms_.rbegin()->first.size());
}

int64_t FreePoly::degree_in(size_t var) const {
  int64_t d = -1;
  for (const auto& [w, c] : terms_) {
    int64_t k = 0;
    for (auto v : w) k += (v == var);
    d = std::max(d, k);
  }
  return d;
}

bool FreePoly::only_in(size_t var) const {
  for (const auto& [w, c] : terms_)
    for (auto v : w)
      if (v != var) return false;
  return true;
}

FreePoly FreePoly::compose(const std::vector<FreePoly>& images) const {
  if (images.size() != arity()) throw std::invalid_argument("composition arity mismatch");
  ContextPtr target = images.empty() ? ctx_ : images.front().context();
  for (const auto& im : images)
    if (!im.is_zero() && !same_context(im.context(), target))
      throw std::invalid_argument("composition images must share one context");
  // Products of images along common prefixes are shared through this cache.
  std::map<Word, FreePoly, WordLess> prefix;
  FreePoly r(target);
  for (const auto& [w, c] : terms_) {
    FreePoly acc = one(target);
    size_t start = 0;
    for (size_t len = w.size(); len > 0; --len) {
      auto it = prefix.find(Word(w.begin(), w.begin() + static_cast<long>(len)));
      if (it != prefix.end()) {
        acc = it->second;
        start = len;
        break;
      }
    }
    for (size_t k = start; k < w.size(); ++k) {
      acc = acc * images[w[k]];
      if (k + 1 < w.size()) prefix.emplace(Word(w.begin(), w.begin() + static_cast<long>(k + 1)), acc);
    }
    r += acc.scaled(c);
  }
  return r;
}

std::string word_to_string(const Word& w, const VarContext& ctx) {
  std::string out;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += ctx.name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string FreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    out += FieldOps<Rational>::term(c, word_to_string(w, *ctx_), first, *ctx_);
    first = false;
  }
  return out;
}

FreePoly commutator(const FreePoly& f, const FreePoly& g) { return f * g - g * f; }

ContextPtr commutative_context(const ContextPtr& ctx) { return make_context(ctx->names(), ctx->field_var()); }

CommPoly abelianize(const FreePoly& f) {
  ContextPtr cctx = commutative_context(f.context());
  CommPoly r(cctx);
  for (const auto& [w, c] : f.terms()) {
    Monomial m(cctx->arity());
    for (auto v : w) ++m.exps[v];
    r.add_term(m, c);
  }
  return r;
}

Bidegree bidegree(const Word& w, size_t z_index) {
  Bidegree b;
  for (auto v : w) {
    if (v == z_index) {
      ++b.e;
    } else {
      ++b.d;
    }
  }
  return b;
}

std::pair<Bidegree, FreePoly> bidegree_leading(const FreePoly& f, size_t z_index) {
  if (f.is_zero()) throw std::invalid_argument("bidegree_leading: zero polynomial");
  Bidegree best;
  bool have = false;
  for (const auto& [w, c] : f.terms()) {
    Bidegree b = bidegree(w, z_index);
    if (!have || best < b) best = b;
    have = true;
  }
  FreePoly lead(f.context());
  for (const auto& [w, c] : f.terms())
    if (bidegree(w, z_index) == best) lead.add_term(w, c);
  return {best, lead};
}

FreePoly xy_component(const FreePoly& f, size_t z_index, uint32_t k) {
  FreePoly r(f.context());
  for (const auto& [w, c] : f.terms())
    if (bidegree(w, z_index).d == k) r.add_term(w, c);
  return r;
}

FormanekElement hn_encode(const FreePoly& f, size_t z_index, uint32_t n) {
  FormanekElement h;
  h.n = n;
  for (const auto& [w, c] : f.terms()) {
    Word letters;
    std::vector<uint32_t> gaps(1, 0);
    for (auto v : w) {
      if (v == z_index) {
        ++gaps.back();
      } else {
        letters.push_back(v);
        gaps.push_back(0);
      }
    }
    if (letters.size() != n)
      throw std::invalid_argument("hn_encode: term " + word_to_string(w, *f.context()) + " is not of degree " +
                                  std::to_string(n) + " in the non-z variables");
    h.terms[{letters, gaps}] += c;
  }
  return h;
}

FreePoly hn_decode(const FormanekElement& h, const ContextPtr& ctx, size_t z_index) {
  FreePoly r(ctx);
  for (const auto& [key, c] : h.terms) {
    const auto& [letters, gaps] = key;
    Word w;
    for (size_t i = 0; i <= letters.size(); ++i) {
      w.insert(w.end(), gaps[i], static_cast<uint16_t>(z_index));
      if (i < letters.size()) w.push_back(letters[i]);
    }
    r.add_term(w, c);
  }
  return r;
}

FormanekElement t_action(const FormanekElement& h, const std::vector<uint32_t>& b) {
  if (b.size() != h.n + 1) throw std::invalid_argument("t_action: exponent vector length must be n+1");
  FormanekElement r;
  r.n = h.n;
  for (const auto& [key, c] : h.terms) {
    auto gaps = key.second;
    for (size_t i = 0; i < gaps.size(); ++i) gaps[i] += b[i];
    r.terms[{key.first, gaps}] += c;
  }
  return r;
}

ContextPtr formanek_context(uint32_t n) {
  std::vector<std::string> names;
  for (uint32_t i = 0; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return make_context(names);
}

std::map<Word, CommPoly> formanek_coefficients(const FormanekElement& h, const ContextPtr& tctx) {
  std::map<Word, CommPoly> out;
  for (const auto& [key, c] : h.terms) {
    auto it = out.try_emplace(key.first, CommPoly(tctx)).first;
    it->second.add_term(Monomial(key.second), c);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

ContextPtr z_pair_context() {
  static const ContextPtr ctx = make_context({"z1", "z2"});
  return ctx;
}

std::vector<CommPoly> z_derivatives(const FreePoly& f, size_t z_index) {
  const size_t n = f.arity();
  std::vector<CommPoly> out(n - 1, CommPoly(z_pair_context()));
  for (const auto& [w, c] : f.terms()) {
    uint32_t left = 0, right = 0;
    int letter = -1;
    for (auto v : w) {
      if (v == z_index) {
        (letter < 0 ? left : right)++;
      } else if (letter < 0) {
        letter = v;
      } else {
        throw std::invalid_argument("z_derivatives: input is not linear in the non-z variables");
      }
    }
    if (letter < 0) throw std::invalid_argument("z_derivatives: term without a non-z variable");
    size_t slot = static_cast<size_t>(letter) < z_index ? letter : letter - 1;
    out[slot].add_term(Monomial(std::vector<uint32_t>{left, right}), c);
  }
  return out;
}

ContextPtr metabelian_context(const ContextPtr& ctx) {
  std::vector<std::string> names;
  for (const auto& n : ctx->names()) names.push_back(n + "1");
  for (const auto& n : ctx->names()) names.push_back(n + "2");
  return make_context(names);
}

CommPoly m_derivative(const FreePoly& f, size_t i) {
  const size_t n = f.arity();
  ContextPtr mctx = metabelian_context(f.context());
  CommPoly r(mctx);
  for (const auto& [w, c] : f.terms()) {
    for (size_t k = 0; k < w.size(); ++k) {
      if (w[k] != i) continue;
      Monomial m(2 * n);
      for (size_t a = 0; a < k; ++a) ++m.exps[w[a]];
      for (size_t a = k + 1; a < w.size(); ++a) ++m.exps[n + w[a]];
      r.add_term(m, c);
    }
  }
  return r;
}

std::pair<CommPoly, CommPoly> derivative_identity_sides(const FreePoly& f) {
  const size_t n = f.arity();
  ContextPtr mctx = metabelian_context(f.context());
  CommPoly lhs(mctx);
  for (size_t i = 0; i < n; ++i) {
    CommPoly diff = CommPoly::variable(mctx, i) - CommPoly::variable(mctx, n + i);
    lhs += diff * m_derivative(f, i);
  }
  CommPoly ab = abelianize(f);
  std::vector<size_t> to_u(n), to_v(n);
  for (size_t i = 0; i < n; ++i) {
    to_u[i] = i;
    to_v[i] = n + i;
  }
  CommPoly rhs = ab.rename(mctx, to_u) - ab.rename(mctx, to_v);
  return {lhs, rhs};
}

MetabelianView metabelian_view(const FreePoly& f) {
  MetabelianView view;
  view.constant = f.constant_term();
  for (size_t i = 0; i < f.arity(); ++i) view.derivatives.push_back(m_derivative(f, i));
  auto [lhs, rhs] = derivative_identity_sides(f);
  if (!(lhs == rhs)) throw std::logic_error("metabelian_view: derivative identity violated");
  return view;
}

bool metabelian_equal(const FreePoly& f, const FreePoly& g) {
  if (f.constant_term() != g.constant_term()) return false;
  for (size_t i = 0; i < f.arity(); ++i)
    if (!(m_derivative(f, i) == m_derivative(g, i))) return false;
  return true;
}

}  // namespace autalg
