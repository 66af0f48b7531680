#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace logsteady {

enum class FieldRole {
  Generic,
  Solution,
  Subsolution,
  Supersolution,
  Potential,
  Eigenfunction,
  Coefficient,
};

std::string to_string(FieldRole role);

// Grid function: one value per node, plus a role tag for reports.
struct Field {
  std::vector<double> values;
  FieldRole role = FieldRole::Generic;

  Field() = default;
  explicit Field(std::size_t n, double fill = 0.0,
                 FieldRole tag = FieldRole::Generic)
      : values(n, fill), role(tag) {}
  Field(std::vector<double> v, FieldRole tag = FieldRole::Generic)
      : values(std::move(v)), role(tag) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  auto begin() { return values.begin(); }
  auto end() { return values.end(); }
  auto begin() const { return values.begin(); }
  auto end() const { return values.end(); }

  double min() const {
    return values.empty() ? 0.0
                          : *std::min_element(values.begin(), values.end());
  }
  double max() const {
    return values.empty() ? 0.0
                          : *std::max_element(values.begin(), values.end());
  }
};

}  // namespace logsteady
