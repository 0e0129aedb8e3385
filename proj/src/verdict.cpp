#include "autalg/verdict.hpp"

#include <stdexcept>

namespace autalg {

std::string tag_name(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::Automorphism:
      return "automorphism";
    case VerdictTag::NotAutomorphism:
      return "not-automorphism";
    case VerdictTag::Tame:
      return "tame";
    case VerdictTag::NotTame:
      return "not-tame";
    case VerdictTag::ZTame:
      return "z-tame";
    case VerdictTag::NotZTame:
      return "not-z-tame";
    case VerdictTag::ZWild:
      return "z-wild";
    case VerdictTag::Wild:
      return "wild";
    case VerdictTag::Coordinate:
      return "coordinate";
    case VerdictTag::NotCoordinate:
      return "not-coordinate";
    case VerdictTag::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string kind_name(WildCertificate::Kind kind) {
  switch (kind) {
    case WildCertificate::Kind::GE2Obstruction:
      return "ge2-obstruction";
    case WildCertificate::Kind::BidegreeDeadlock:
      return "bidegree-deadlock";
    case WildCertificate::Kind::MetabelianObstruction:
      return "metabelian-obstruction";
  }
  return "?";
}

bool UnitCertificate::verify() const {
  if (generators.empty() || generators.size() != cofactors.size()) return false;
  CommPoly sum = CommPoly::zero(generators.front().context());
  for (size_t i = 0; i < generators.size(); ++i) sum += cofactors[i] * generators[i];
  return sum == CommPoly::one(generators.front().context());
}

void check_reduction_monotone(const std::vector<ReductionStep>& steps) {
  for (const auto& s : steps) {
    if (s.after.first + s.after.second >= s.before.first + s.before.second)
      throw std::logic_error("reduction step " + s.generator + " did not decrease the degree sum");
  }
}

}  // namespace autalg
