#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rook {

// Ordered list of variable names shared by polynomials of one ring.
//
// Lists are interned, so two Vars compare equal iff they name the same
// variables in the same order. Position fixes significance in the monomial
// order: later variables are more significant, so {x, s, t} gives x < s < t.
class Vars {
 public:
  static constexpr std::size_t kMaxVars = 4;

  Vars();
  Vars(std::initializer_list<std::string_view> names);
  explicit Vars(const std::vector<std::string>& names);

  std::size_t size() const { return list_->size(); }
  const std::string& name(std::size_t i) const { return (*list_)[i]; }
  const std::vector<std::string>& names() const { return *list_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws std::invalid_argument when the name is absent.
  std::size_t require(std::string_view name) const;

  bool operator==(const Vars& other) const { return list_ == other.list_; }
  bool operator!=(const Vars& other) const { return list_ != other.list_; }

 private:
  const std::vector<std::string>* list_;
};

}  // namespace rook
