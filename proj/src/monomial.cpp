#include "autalg/monomial.hpp"

#include <stdexcept>

namespace autalg {

std::string Monomial::to_string(const VarContext& ctx) const {
  std::string out;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.name(i);
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

TermOrder::TermOrder(Kind kind, std::vector<int64_t> weights)
    : kind_(kind), weights_(std::move(weights)) {
  if (kind_ == Kind::Weighted) {
    for (auto w : weights_)
      if (w < 0) throw std::invalid_argument("negative weight in term order");
  }
}

int64_t weighted_degree(const Monomial& m, const std::vector<int64_t>& weights) {
  int64_t d = 0;
  for (size_t i = 0; i < m.exps.size() && i < weights.size(); ++i)
    d += weights[i] * static_cast<int64_t>(m.exps[i]);
  return d;
}

namespace {

int lex_compare(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.exps.size(); ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(a, b);
    case Kind::DegLex: {
      auto da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      return lex_compare(a, b);
    }
    case Kind::DegRevLex: {
      auto da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (size_t i = a.exps.size(); i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
      }
      return 0;
    }
    case Kind::Weighted: {
      auto da = weighted_degree(a, weights_), db = weighted_degree(b, weights_);
      if (da != db) return da < db ? -1 : 1;
      return lex_compare(a, b);
    }
  }
  return 0;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::DegLex:
      return "deglex";
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Weighted: {
      std::string s = "weighted(";
      for (size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(weights_[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

TermOrder TermOrder::parse(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "deglex") return deglex();
  if (name == "degrevlex") return degrevlex();
  throw std::invalid_argument("unknown term order: " + name);
}

}  // namespace autalg
