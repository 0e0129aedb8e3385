#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "autalg/context.hpp"

namespace autalg {

/// Exponent vector x_0^e_0 ... x_{n-1}^e_{n-1}; length equals the context arity.
struct Monomial {
  std::vector<uint32_t> exps;

  Monomial() = default;
  explicit Monomial(size_t arity) : exps(arity, 0) {}
  explicit Monomial(std::vector<uint32_t> e) : exps(std::move(e)) {}

  static Monomial variable(size_t arity, size_t i, uint32_t power = 1) {
    Monomial m(arity);
    m.exps[i] = power;
    return m;
  }

  size_t arity() const { return exps.size(); }
  uint64_t degree() const {
    uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  bool is_one() const {
    for (auto e : exps)
      if (e) return false;
    return true;
  }
  bool divides(const Monomial& other) const {
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.arity());
    for (size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = a.exps[i] + b.exps[i];
    return m;
  }
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.arity());
    for (size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = a.exps[i] - b.exps[i];
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.arity());
    for (size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = std::max(a.exps[i], b.exps[i]);
    return m;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exps.size(); ++i)
      if (a.exps[i] && b.exps[i]) return false;
    return true;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "x^2*y", or "" for the unit monomial.
  std::string to_string(const VarContext& ctx) const;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 1469598103934665603ull;
    for (auto e : m.exps) h = (h ^ e) * 1099511628211ull;
    return static_cast<size_t>(h);
  }
};

/// Monomial order; variable 0 is the largest variable.
class TermOrder {
 public:
  enum class Kind { Lex, DegLex, DegRevLex, Weighted };

  TermOrder() = default;
  explicit TermOrder(Kind kind, std::vector<int64_t> weights = {});

  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder deglex() { return TermOrder(Kind::DegLex); }
  static TermOrder degrevlex() { return TermOrder(Kind::DegRevLex); }
  /// Weighted degree with lexicographic tie-break; missing weights are 0.
  static TermOrder weighted(std::vector<int64_t> weights) {
    return TermOrder(Kind::Weighted, std::move(weights));
  }

  Kind kind() const { return kind_; }
  const std::vector<int64_t>& weights() const { return weights_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;
  /// Accepts lex, deglex, degrevlex.
  static TermOrder parse(const std::string& name);

 private:
  Kind kind_ = Kind::DegLex;
  std::vector<int64_t> weights_;
};

int64_t weighted_degree(const Monomial& m, const std::vector<int64_t>& weights);

}  // namespace autalg
