#include "adc/var.hpp"

#include <array>
#include <cctype>

namespace adc {

namespace {

constexpr std::array<std::string_view, 4> kReserved = {"let", "in", "sin", "cos"};

}  // namespace

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  for (auto word : kReserved) {
    if (name == word) return false;
  }
  return true;
}

VarRegistry::VarRegistry(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (find(n)) throw std::invalid_argument("duplicate variable name '" + n + "'");
    add(n);
  }
}

VarRegistry VarRegistry::with_arity(std::size_t arity) {
  VarRegistry r;
  for (std::size_t i = 0; i < arity; ++i) r.add("x" + std::to_string(i));
  return r;
}

VarId VarRegistry::add(std::string_view name) {
  if (auto existing = find(name)) return *existing;
  if (!is_valid_identifier(name)) {
    throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
  }
  auto id = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return VarId{id};
}

std::optional<VarId> VarRegistry::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return VarId{it->second};
}

VarId VarRegistry::lookup(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw UnknownVariable(std::string(name));
}

const std::string& VarRegistry::name_of(VarId v) const {
  if (v.index >= names_.size()) {
    throw std::out_of_range("variable index " + std::to_string(v.index) + " not registered");
  }
  return names_[v.index];
}

}  // namespace adc
