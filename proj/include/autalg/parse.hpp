#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "autalg/free_poly.hpp"
#include "autalg/polynomial.hpp"

namespace autalg {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

enum class ParseMode {
  Commutative,
  Free,
  /// Commutative with Q(z) coefficients: the context's field variable may
  /// appear and may be divided by.
  RationalFunction,
};

struct Expr {
  enum class Kind { Number, Variable, Sum, Difference, Product, Quotient, Power, Commutator, Negation, Group };
  Kind kind = Kind::Number;
  Rational value;
  std::string name;
  unsigned exponent = 0;
  std::vector<Expr> kids;
  size_t pos = 0;
};

/// Grammar: sums of products, explicit '*', '^' with a nonnegative integer
/// exponent, '[f, g]' commutators (free mode only), rational literals a/b,
/// division by constants. Variables must belong to `ctx` (or be its field
/// variable in RationalFunction mode).
Expr parse_expression(std::string_view source, const VarContext& ctx, ParseMode mode);

CommPoly lower_comm(const Expr& e, const ContextPtr& ctx);
FreePoly lower_free(const Expr& e, const ContextPtr& ctx);
RPoly lower_rpoly(const Expr& e, const ContextPtr& ctx);

CommPoly parse_comm(std::string_view source, const ContextPtr& ctx);
FreePoly parse_free(std::string_view source, const ContextPtr& ctx);
RPoly parse_rpoly(std::string_view source, const ContextPtr& ctx);

/// Splits on a separator at bracket depth zero.
std::vector<std::string> split_top_level(std::string_view text, char sep);

}  // namespace autalg
