#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "autalg/endo.hpp"

namespace autalg {

/// K-derivation of K[x_1..x_n], given by its values on the variables.
struct Derivation {
  enum class Kind { General, Triangular, JacobianDeterminant, Scaled };

  ContextPtr ctx;
  std::vector<CommPoly> images;
  Kind kind = Kind::General;
  /// Scaled: the factor w in w*delta.
  std::optional<CommPoly> factor;

  Derivation() = default;
  /// Classifies as Triangular when delta(x_j) involves only later variables.
  Derivation(ContextPtr c, std::vector<CommPoly> ims);

  /// delta(x_j) in K[x_{j+1}, ..., x_n] for every j.
  bool is_triangular() const;
  CommPoly apply(const CommPoly& f) const;
  Derivation negated() const;
  /// Same derivation on a context with extra trailing variables, killing them.
  Derivation extended(const ContextPtr& larger) const;
};

class NotNilpotentWithinCap : public std::runtime_error {
 public:
  NotNilpotentWithinCap(unsigned cap, size_t variable)
      : std::runtime_error("exp series did not terminate within " + std::to_string(cap) + " terms on variable " +
                           std::to_string(variable)),
        cap_(cap) {}
  unsigned cap() const { return cap_; }

 private:
  unsigned cap_;
};

struct ExpResult {
  CommEndo endo;
  /// Smallest k with delta^k(x_i) = 0 for every variable.
  unsigned terminated_at = 0;
};

constexpr unsigned kDefaultExpCap = 64;

/// exp(delta) = sum delta^k / k!, applied to every variable.
ExpResult exp_derivation(const Derivation& delta, unsigned cap = kDefaultExpCap);

/// w*delta; requires delta(w) = 0 (std::invalid_argument otherwise).
Derivation w_delta(const Derivation& delta, const CommPoly& w);

/// Determinant derivation u -> det(grad f; grad g; grad u) on a 3-variable context.
Derivation freudenburg_derivation(const CommPoly& f, const CommPoly& g);

struct SmithReport {
  /// exp(w delta), extended by fixing the new variable.
  CommEndo lhs;
  /// E^{-1} theta E theta^{-1} with E = exp(x_{n+1} delta) under
  /// the composition convention (phi psi applies psi first).
  CommEndo rhs;
  /// The same four factors multiplied in the opposite order.
  CommEndo rhs_reversed;
  bool holds = false;
  bool reversed_holds = false;
  ContextPtr extended_ctx;
};

/// Builds both sides of the stable-tameness identity in n+1 variables.
SmithReport smith_identity_check(const Derivation& delta, const CommPoly& w, unsigned cap = kDefaultExpCap);

/// Report for a batch of sampled instances of the tame-group relations.
struct RelationReport {
  size_t checked[3] = {0, 0, 0};
  size_t failures[3] = {0, 0, 0};
  std::vector<std::string> failure_notes;
  bool ok() const { return failures[0] + failures[1] + failures[2] == 0; }
};

/// sigma(i, a, f) sigma(i, b, g) = sigma(i, ab, bf + g)
bool check_relation_product(size_t i, const Rational& a, const CommPoly& f, const Rational& b, const CommPoly& g);
/// sigma(i,a,f)^{-1} sigma(j,b,g) sigma(i,a,f) = sigma(j, b, sigma(i,a,f)^{-1}(g))
bool check_relation_conjugation(size_t i, const Rational& a, const CommPoly& f, size_t j, const Rational& b,
                                const CommPoly& g);
/// tau_(ks) sigma(i,a,f) tau_(ks) = sigma(j, a, tau_(ks)(f)) with x_j = tau_(ks)(x_i).
bool check_relation_swap(size_t k, size_t s, size_t i, const Rational& a, const CommPoly& f);

/// Samples `count` instances of each relation in K[x1,x2,x3].
RelationReport check_defining_relations(size_t count, uint64_t seed, unsigned max_degree = 3);

}  // namespace autalg
