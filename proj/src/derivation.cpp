#include "autalg/derivation.hpp"

#include "autalg/random.hpp"

namespace autalg {

Derivation::Derivation(ContextPtr c, std::vector<CommPoly> ims) : ctx(std::move(c)), images(std::move(ims)) {
  if (images.size() != ctx->arity()) throw std::invalid_argument("derivation needs one value per variable");
  for (auto& im : images)
    if (im.is_zero()) im = CommPoly::zero(ctx);
  if (is_triangular()) kind = Kind::Triangular;
}

bool Derivation::is_triangular() const {
  for (size_t j = 0; j < images.size(); ++j)
    for (size_t i = 0; i <= j; ++i)
      if (images[j].depends_on(i)) return false;
  return true;
}

CommPoly Derivation::apply(const CommPoly& f) const {
  CommPoly r = CommPoly::zero(ctx);
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i].is_zero() || !f.depends_on(i)) continue;
    r += f.derivative(i) * images[i];
  }
  return r;
}

Derivation Derivation::negated() const {
  Derivation d = *this;
  for (auto& im : d.images) im = -im;
  if (d.factor) d.factor = -*d.factor;
  return d;
}

Derivation Derivation::extended(const ContextPtr& larger) const {
  if (larger->arity() < ctx->arity()) throw std::invalid_argument("extension context is smaller");
  std::vector<size_t> map(ctx->arity());
  for (size_t i = 0; i < map.size(); ++i) map[i] = i;
  std::vector<CommPoly> ims;
  for (const auto& im : images) ims.push_back(im.rename(larger, map));
  while (ims.size() < larger->arity()) ims.push_back(CommPoly::zero(larger));
  Derivation d(larger, std::move(ims));
  if (kind != Kind::Triangular) d.kind = kind;
  if (factor) d.factor = factor->rename(larger, map);
  return d;
}

ExpResult exp_derivation(const Derivation& delta, unsigned cap) {
  ExpResult out;
  std::vector<CommPoly> ims;
  for (size_t i = 0; i < delta.ctx->arity(); ++i) {
    CommPoly term = CommPoly::variable(delta.ctx, i);
    CommPoly sum = term;
    unsigned k = 1;
    for (;; ++k) {
      if (k > cap) throw NotNilpotentWithinCap(cap, i);
      term = delta.apply(term).scaled(Rational(1, k));
      if (term.is_zero()) break;
      sum += term;
    }
    out.terminated_at = std::max(out.terminated_at, k);
    ims.push_back(sum);
  }
  out.endo = CommEndo(delta.ctx, std::move(ims));
  return out;
}

Derivation w_delta(const Derivation& delta, const CommPoly& w) {
  CommPoly dw = delta.apply(w);
  if (!dw.is_zero())
    throw std::invalid_argument("w_delta: delta(w) = " + dw.to_string() + " is not zero");
  std::vector<CommPoly> ims;
  for (const auto& im : delta.images) ims.push_back(w * im);
  Derivation d(delta.ctx, std::move(ims));
  d.kind = Derivation::Kind::Scaled;
  d.factor = w;
  return d;
}

Derivation freudenburg_derivation(const CommPoly& f, const CommPoly& g) {
  const ContextPtr& ctx = f.context();
  if (ctx->arity() != 3) throw std::invalid_argument("freudenburg_derivation: needs three variables");
  CommPoly fx = f.derivative(0), fy = f.derivative(1), fz = f.derivative(2);
  CommPoly gx = g.derivative(0), gy = g.derivative(1), gz = g.derivative(2);
  // Expanding det(grad f; grad g; grad u) along the last row.
  Derivation d(ctx, {fy * gz - fz * gy, fz * gx - fx * gz, fx * gy - fy * gx});
  d.kind = Derivation::Kind::JacobianDeterminant;
  return d;
}

SmithReport smith_identity_check(const Derivation& delta, const CommPoly& w, unsigned cap) {
  if (!delta.is_triangular()) throw std::invalid_argument("smith_identity_check: derivation is not triangular");
  const ContextPtr& ctx = delta.ctx;
  const size_t n = ctx->arity();
  std::vector<std::string> names = ctx->names();
  std::string extra = "t";
  for (int k = 1; ctx->index_of(extra); ++k) extra = "t" + std::to_string(k);
  names.push_back(extra);
  ContextPtr big = make_context(names, ctx->field_var());
  std::vector<size_t> map(n);
  for (size_t i = 0; i < n; ++i) map[i] = i;

  Derivation dbig = delta.extended(big);
  CommPoly wbig = w.rename(big, map);
  CommPoly xnew = CommPoly::variable(big, n);

  SmithReport rep;
  rep.extended_ctx = big;
  rep.lhs = exp_derivation(w_delta(dbig, wbig), cap).endo;

  Derivation scaled = w_delta(dbig, xnew);
  CommEndo e = exp_derivation(scaled, cap).endo;
  CommEndo e_inv = exp_derivation(scaled.negated(), cap).endo;
  CommEndo theta = CommEndo::identity(big);
  theta.images[n] = xnew + wbig;
  CommEndo theta_inv = CommEndo::identity(big);
  theta_inv.images[n] = xnew - wbig;

  rep.rhs = endo_compose(std::vector<CommEndo>{e_inv, theta, e, theta_inv});
  rep.rhs_reversed = endo_compose(std::vector<CommEndo>{theta_inv, e, theta, e_inv});
  rep.holds = rep.lhs == rep.rhs;
  rep.reversed_holds = rep.lhs == rep.rhs_reversed;
  return rep;
}

namespace {

ContextPtr relation_context() {
  static const ContextPtr ctx = make_context({"x1", "x2", "x3"});
  return ctx;
}

CommEndo sigma(size_t i, const Rational& a, const CommPoly& f) {
  const ContextPtr& ctx = f.context();
  return generator_endo<CommPoly>(Triangular<CommPoly>{i, a, f}, ctx);
}

}  // namespace

bool check_relation_product(size_t i, const Rational& a, const CommPoly& f, const Rational& b, const CommPoly& g) {
  CommEndo lhs = endo_compose(sigma(i, a, f), sigma(i, b, g));
  CommEndo rhs = sigma(i, a * b, f.scaled(b) + g);
  return lhs == rhs;
}

bool check_relation_conjugation(size_t i, const Rational& a, const CommPoly& f, size_t j, const Rational& b,
                                const CommPoly& g) {
  const ContextPtr& ctx = f.context();
  auto s = Generator<CommPoly>(Triangular<CommPoly>{i, a, f});
  CommEndo si = generator_endo(s, ctx);
  CommEndo si_inv = generator_endo(generator_inverse(s, ctx), ctx);
  CommEndo lhs = endo_compose(std::vector<CommEndo>{si_inv, sigma(j, b, g), si});
  CommEndo rhs = sigma(j, b, si_inv.apply(g));
  return lhs == rhs;
}

bool check_relation_swap(size_t k, size_t s, size_t i, const Rational& a, const CommPoly& f) {
  const ContextPtr& ctx = f.context();
  CommEndo tau = CommEndo::identity(ctx);
  for (const auto& g : tau_as_sigmas<CommPoly>(k, s, ctx)) tau = endo_compose(tau, generator_endo(g, ctx));
  size_t j = i == k ? s : (i == s ? k : i);
  CommEndo lhs = endo_compose(std::vector<CommEndo>{tau, sigma(i, a, f), tau});
  CommEndo rhs = sigma(j, a, tau.apply(f));
  return lhs == rhs;
}

RelationReport check_defining_relations(size_t count, uint64_t seed, unsigned max_degree) {
  Rng rng(seed);
  const ContextPtr ctx = relation_context();
  RelationReport rep;
  auto pick = [&](size_t lo, size_t hi) { return std::uniform_int_distribution<size_t>(lo, hi)(rng); };
  auto others = [](std::initializer_list<size_t> skip) {
    std::vector<size_t> v;
    for (size_t t = 0; t < 3; ++t)
      if (std::find(skip.begin(), skip.end(), t) == skip.end()) v.push_back(t);
    return v;
  };
  for (size_t n = 0; n < count; ++n) {
    size_t i = pick(0, 2);
    Rational a = random_nonzero_rational(rng), b = random_nonzero_rational(rng);
    CommPoly f = random_comm_poly(rng, ctx, others({i}), max_degree);
    CommPoly g = random_comm_poly(rng, ctx, others({i}), max_degree);
    ++rep.checked[0];
    if (!check_relation_product(i, a, f, b, g)) {
      ++rep.failures[0];
      rep.failure_notes.push_back("product relation, i=" + std::to_string(i) + ", f=" + f.to_string());
    }

    size_t j = (i + pick(1, 2)) % 3;
    CommPoly f2 = random_comm_poly(rng, ctx, others({i, j}), max_degree);
    CommPoly g2 = random_comm_poly(rng, ctx, others({j}), max_degree);
    ++rep.checked[1];
    if (!check_relation_conjugation(i, a, f2, j, b, g2)) {
      ++rep.failures[1];
      rep.failure_notes.push_back("conjugation relation, i=" + std::to_string(i) + ", j=" + std::to_string(j));
    }

    size_t k = pick(0, 2);
    size_t s = (k + pick(1, 2)) % 3;
    ++rep.checked[2];
    if (!check_relation_swap(k, s, i, a, f)) {
      ++rep.failures[2];
      rep.failure_notes.push_back("swap relation, k=" + std::to_string(k) + ", s=" + std::to_string(s));
    }
  }
  return rep;
}

}  // namespace autalg
