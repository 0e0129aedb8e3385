#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "autalg/endo.hpp"
#include "autalg/mat2.hpp"

namespace autalg {

enum class VerdictTag {
  Automorphism,
  NotAutomorphism,
  Tame,
  NotTame,
  ZTame,
  NotZTame,
  ZWild,
  Wild,
  Coordinate,
  NotCoordinate,
  Inconclusive,
};

/// Kebab-case name used in serialized output, e.g. "z-wild".
std::string tag_name(VerdictTag tag);

/// Certificate that a map is not (z-)tame.
struct WildCertificate {
  enum class Kind { GE2Obstruction, BidegreeDeadlock, MetabelianObstruction };
  Kind kind = Kind::GE2Obstruction;

  /// GE2Obstruction / MetabelianObstruction: the matrix outside GE2 and the
  /// first-column pair where Euclidean reduction stalled.
  std::optional<Mat2Poly> matrix;
  std::optional<Ge2Result> reduction;

  /// BidegreeDeadlock: the leading components that could not be reduced.
  std::optional<FreePoly> lead_u, lead_v;
  Bidegree bidegree_u, bidegree_v;
  size_t z_index = 0;
  std::vector<std::string> history;

  std::string reason;
  /// Which result licenses the conclusion drawn from the obstruction.
  std::string provenance;
};

std::string kind_name(WildCertificate::Kind kind);

/// Cofactors c_i with sum c_i * generators_i = 1.
struct UnitCertificate {
  std::vector<CommPoly> generators;
  std::vector<CommPoly> cofactors;
  bool verify() const;
};

/// One peeling step of a reduction: the generator removed and the degree
/// pair before and after.
struct ReductionStep {
  std::string generator;
  std::pair<int64_t, int64_t> before, after;
};

using AnyWord = std::variant<TameWord<CommPoly>, TameWord<FreePoly>, TameWord<RPoly>>;
using AnyMate = std::variant<CommPoly, FreePoly, RPoly>;

struct Verdict {
  VerdictTag tag = VerdictTag::Inconclusive;
  /// Algorithm step at which the decision was taken (e.g. "2").
  std::string step;
  std::string reason;
  std::vector<std::string> trace;
  TermOrder order = TermOrder::deglex();

  std::optional<AnyWord> word;
  std::optional<AnyMate> mate;
  std::optional<WildCertificate> wild;
  std::optional<UnitCertificate> unit;
  /// Scalar certificate (e.g. the constant in [f, g] = alpha [x, y]).
  std::optional<Rational> alpha;
  /// Leading-monomial pair at which a Euclidean-type reduction stalled.
  std::optional<std::pair<std::string, std::string>> stuck_pair;
  std::vector<ReductionStep> reduction;
  /// Additional labelled facts, serialized verbatim.
  std::vector<std::pair<std::string, std::string>> facts;

  bool decided() const { return tag != VerdictTag::Inconclusive; }
  void note(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  std::optional<std::string> fact(const std::string& key) const {
    for (const auto& [k, v] : facts)
      if (k == key) return v;
    return std::nullopt;
  }
};

/// Throws std::logic_error unless the recorded degree sums strictly decrease.
void check_reduction_monotone(const std::vector<ReductionStep>& steps);

}  // namespace autalg
