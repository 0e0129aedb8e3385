#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "autalg/polynomial.hpp"

namespace autalg {

/// Word in noncommuting variables, stored as a flat index sequence; the
/// empty word is 1.
using Word = std::vector<uint16_t>;

/// Length first, then lexicographic by variable index.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of the free associative algebra K<x_0, ..., x_{n-1}> over Q.
class FreePoly {
 public:
  using Coeff = Rational;
  using TermMap = std::map<Word, Rational, WordLess>;

  FreePoly() = default;
  explicit FreePoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static FreePoly zero(ContextPtr ctx) { return FreePoly(std::move(ctx)); }
  static FreePoly constant(ContextPtr ctx, Rational c);
  static FreePoly one(ContextPtr ctx) { return constant(std::move(ctx), Rational(1)); }
  static FreePoly variable(ContextPtr ctx, size_t i);
  static FreePoly term(ContextPtr ctx, Word w, Rational c);

  const ContextPtr& context() const { return ctx_; }
  size_t arity() const { return ctx_ ? ctx_->arity() : 0; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  bool is_unit() const { return !terms_.empty() && is_constant(); }
  Rational coefficient(const Word& w) const;
  Rational constant_term() const { return coefficient({}); }

  void add_term(const Word& w, const Rational& c);

  FreePoly operator-() const;
  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  /// Concatenation product; operand order is preserved.
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  FreePoly& operator*=(const FreePoly& o) { return *this = *this * o; }
  friend FreePoly operator*(const Rational& s, const FreePoly& p) { return p.scaled(s); }
  friend FreePoly operator*(const FreePoly& p, const Rational& s) { return p.scaled(s); }
  friend bool operator==(const FreePoly& a, const FreePoly& b);

  FreePoly scaled(const Rational& s) const;
  FreePoly pow(unsigned e) const;

  /// Total degree; -1 for zero.
  int64_t total_degree() const;
  int64_t degree_in(size_t var) const;
  bool depends_on(size_t var) const { return degree_in(var) > 0; }
  /// True if every word uses only variable `var` (constants included).
  bool only_in(size_t var) const;

  /// Substitutes images[i] for variable i.
  FreePoly compose(const std::vector<FreePoly>& images) const;

  /// Words by length-then-lexicographic order, e.g. "x + z*x*z - z^2*y".
  std::string to_string() const;
  std::string to_string(const TermOrder&) const { return to_string(); }

 private:
  void adopt(const FreePoly& o);

  ContextPtr ctx_;
  TermMap terms_;
};

std::string word_to_string(const Word& w, const VarContext& ctx);

/// [f, g] = fg - gf.
FreePoly commutator(const FreePoly& f, const FreePoly& g);

/// Natural map to the commutative polynomial ring on the same names.
CommPoly abelianize(const FreePoly& f);
/// Commutative context with the same variable names as `ctx`.
ContextPtr commutative_context(const ContextPtr& ctx);

/// (degree in the non-z variables, degree in z), ordered lexicographically.
struct Bidegree {
  uint32_t d = 0;
  uint32_t e = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  std::string to_string() const { return "(" + std::to_string(d) + "," + std::to_string(e) + ")"; }
};

Bidegree bidegree(const Word& w, size_t z_index);

/// Maximal bidegree and the sum of the terms attaining it. Throws on zero.
std::pair<Bidegree, FreePoly> bidegree_leading(const FreePoly& f, size_t z_index);

/// Sum of the terms whose degree in the non-z variables equals k.
FreePoly xy_component(const FreePoly& f, size_t z_index, uint32_t k);

/// Element of H_n written over the basis of non-z words u_1...u_n:
/// the term (u, (b_0..b_n)) stands for z^b_0 u_1 z^b_1 ... u_n z^b_n.
struct FormanekElement {
  uint32_t n = 0;
  std::map<std::pair<Word, std::vector<uint32_t>>, Rational> terms;
  friend bool operator==(const FormanekElement&, const FormanekElement&) = default;
};

/// Throws std::invalid_argument unless every word has non-z degree n.
FormanekElement hn_encode(const FreePoly& f, size_t z_index, uint32_t n);
FreePoly hn_decode(const FormanekElement& h, const ContextPtr& ctx, size_t z_index);

/// Applies t_0^b_0 ... t_n^b_n to every basis element.
FormanekElement t_action(const FormanekElement& h, const std::vector<uint32_t>& b);

/// Context {t0, ..., tn}.
ContextPtr formanek_context(uint32_t n);
/// Coefficient of every basis word as a polynomial in t_0..t_n.
std::map<Word, CommPoly> formanek_coefficients(const FormanekElement& h, const ContextPtr& tctx);

/// Context {z1, z2}.
ContextPtr z_pair_context();

/// z-derivatives of an element linear in the non-z variables: for every
/// non-z variable v, the image of sum a_ij z^i v z^j is sum a_ij z1^i z2^j.
std::vector<CommPoly> z_derivatives(const FreePoly& f, size_t z_index);

/// Context {n1..., n2...}: every name suffixed by 1, then by 2.
ContextPtr metabelian_context(const ContextPtr& ctx);

/// Formal metabelian partial derivative with respect to variable i.
CommPoly m_derivative(const FreePoly& f, size_t i);

/// (sum_i (u_i - v_i) d_i f, pi(f)(U) - pi(f)(V)); the two always agree.
std::pair<CommPoly, CommPoly> derivative_identity_sides(const FreePoly& f);

/// Constant term plus all metabelian partial derivatives.
struct MetabelianView {
  Rational constant;
  std::vector<CommPoly> derivatives;
  friend bool operator==(const MetabelianView&, const MetabelianView&) = default;
};

/// Builds the view and checks the identity
/// sum_i (u_i - v_i) d_i = pi(f)(U) - pi(f)(V).
MetabelianView metabelian_view(const FreePoly& f);
bool metabelian_equal(const FreePoly& f, const FreePoly& g);

/// Left and right sides of the fundamental derivative identity.
std::pair<CommPoly, CommPoly> derivative_identity_sides(const FreePoly& f);

}  // namespace autalg
