#include "autalg/rational.hpp"

#include <stdexcept>

namespace autalg {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::optional<Integer> exact_root(const Integer& n, unsigned d) {
  if (d == 0) return std::nullopt;
  if (d == 1) return n;
  if (sgn(n) < 0) {
    if (d % 2 == 0) return std::nullopt;
    auto r = exact_root(Integer(-n), d);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), d) == 0) return std::nullopt;
  return r;
}

std::optional<Rational> exact_root(const Rational& q, unsigned d) {
  auto num = exact_root(q.get_num(), d);
  if (!num) return std::nullopt;
  auto den = exact_root(q.get_den(), d);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

}  // namespace autalg
