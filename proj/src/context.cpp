#include "autalg/context.hpp"

#include <set>
#include <stdexcept>

namespace autalg {

VarContext::VarContext(std::vector<std::string> names, std::string field_var)
    : names_(std::move(names)), field_var_(std::move(field_var)) {
  if (names_.empty()) throw std::invalid_argument("variable context must be nonempty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
}

std::optional<size_t> VarContext::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names, std::string field_var) {
  return std::make_shared<const VarContext>(std::move(names), std::move(field_var));
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace autalg
