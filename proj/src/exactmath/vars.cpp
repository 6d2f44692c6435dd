#include "rook/exactmath/vars.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace rook {
namespace {

const std::vector<std::string>* intern(const std::vector<std::string>& names) {
  static std::mutex mutex;
  static std::vector<std::unique_ptr<std::vector<std::string>>> registry;
  if (names.size() > Vars::kMaxVars)
    throw std::invalid_argument("at most 4 variables per ring");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("duplicate variable name: " + names[i]);
  std::lock_guard<std::mutex> lock(mutex);
  for (const auto& entry : registry)
    if (*entry == names) return entry.get();
  registry.push_back(std::make_unique<std::vector<std::string>>(names));
  return registry.back().get();
}

}  // namespace

Vars::Vars() : list_(intern({})) {}

Vars::Vars(std::initializer_list<std::string_view> names) {
  std::vector<std::string> v;
  for (auto n : names) v.emplace_back(n);
  list_ = intern(v);
}

Vars::Vars(const std::vector<std::string>& names) : list_(intern(names)) {}

std::optional<std::size_t> Vars::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < list_->size(); ++i)
    if ((*list_)[i] == name) return i;
  return std::nullopt;
}

std::size_t Vars::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown variable: " + std::string(name));
}

}  // namespace rook
