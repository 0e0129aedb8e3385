#include "autalg/polynomial.hpp"

namespace autalg {

RPoly to_rpoly(const CommPoly& p, size_t field_index, const ContextPtr& target) {
  if (target->arity() + 1 != p.arity()) throw std::invalid_argument("to_rpoly: arity mismatch");
  std::map<Monomial, std::map<uint32_t, Rational>> gathered;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest(target->arity());
    for (size_t i = 0, j = 0; i < m.exps.size(); ++i) {
      if (i == field_index) continue;
      rest.exps[j++] = m.exps[i];
    }
    gathered[rest][m.exps[field_index]] += c;
  }
  RPoly r(target);
  for (const auto& [m, byz] : gathered) {
    uint32_t top = byz.rbegin()->first;
    std::vector<Rational> coeffs(top + 1, Rational(0));
    for (const auto& [k, c] : byz) coeffs[k] = c;
    r.add_term(m, RatFunc(UniPoly(std::move(coeffs)), UniPoly(Rational(1))));
  }
  return r;
}

std::optional<CommPoly> from_rpoly(const RPoly& p, size_t field_index, const ContextPtr& target) {
  if (p.arity() + 1 != target->arity()) throw std::invalid_argument("from_rpoly: arity mismatch");
  CommPoly r(target);
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_polynomial()) return std::nullopt;
    const auto& coeffs = c.num().coeffs();
    for (size_t k = 0; k < coeffs.size(); ++k) {
      if (is_zero(coeffs[k])) continue;
      Monomial full(target->arity());
      for (size_t i = 0, j = 0; i < full.exps.size(); ++i) {
        if (i == field_index) {
          full.exps[i] = static_cast<uint32_t>(k);
        } else {
          full.exps[i] = m.exps[j++];
        }
      }
      r.add_term(full, coeffs[k]);
    }
  }
  return r;
}

RPoly lift_to_rpoly(const CommPoly& p, const ContextPtr& target) {
  RPoly r(target);
  for (const auto& [m, c] : p.terms()) r.add_term(m, RatFunc(c));
  return r;
}

}  // namespace autalg
