#pragma once

// A Ring is the variable context of a polynomial: a dimension and the names
// of the coordinates. Coefficients are always exact rationals.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germlab/errors.hpp"

namespace germlab {

class Ring {
 public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidParameterError("ring needs at least one variable");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InvalidParameterError("empty variable name");
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw InvalidParameterError("duplicate variable name '" + names_[i] + "'");
    }
  }

  std::size_t dimension() const { return names_.size(); }

  const std::string& name(std::size_t i) const {
    if (i >= names_.size()) throw IndexOutOfRangeError();
    return names_[i];
  }

  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace germlab
