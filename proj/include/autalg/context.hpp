#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace autalg {

/// Ordered set of distinct variable names shared by polynomials of one ring.
/// `field_var` names the transcendental of Q(z) when coefficients are
/// rational functions.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names, std::string field_var = "z");

  size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::string& field_var() const { return field_var_; }
  std::optional<size_t> index_of(const std::string& name) const;

  friend bool operator==(const VarContext& a, const VarContext& b) {
    return a.names_ == b.names_ && a.field_var_ == b.field_var_;
  }

 private:
  std::vector<std::string> names_;
  std::string field_var_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names, std::string field_var = "z");

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Splits "x,y,z" into names.
std::vector<std::string> split_names(const std::string& csv);

}  // namespace autalg
