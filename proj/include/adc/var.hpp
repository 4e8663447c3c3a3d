#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace adc {

// Dense index of a variable in a VarRegistry.
struct VarId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(VarId, VarId) = default;
};

class UnknownVariable : public std::runtime_error {
 public:
  explicit UnknownVariable(std::string name)
      : std::runtime_error("unknown variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// True for ASCII-letter-initial identifiers made of letters, digits and
// underscores that are not one of the reserved words.
bool is_valid_identifier(std::string_view name);

// Ordered set of variable names; indices run 0..arity()-1 in registration
// order.
class VarRegistry {
 public:
  VarRegistry() = default;
  explicit VarRegistry(const std::vector<std::string>& names);

  // Registry named x0, x1, ..., x{arity-1}.
  static VarRegistry with_arity(std::size_t arity);

  // Returns the existing id when the name is already registered.
  VarId add(std::string_view name);

  std::optional<VarId> find(std::string_view name) const;
  VarId lookup(std::string_view name) const;
  const std::string& name_of(VarId v) const;

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace adc
