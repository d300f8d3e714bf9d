#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "akivis/env_element.hpp"
#include "akivis/vector.hpp"

namespace akivis {

using CheckValue = std::variant<Vector, EnvElement>;

std::string to_string(const CheckValue& v);

struct Witness {
  std::vector<std::string> tuple;  // generator symbols (or rendered elements)
  std::string relation;            // which side-by-side comparison failed
  CheckValue lhs;
  CheckValue rhs;
};

// Outcome of one identity sweep. Fails iff at least one witness was kept.
struct CheckReport {
  std::string identity;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t witness_cap = 16;
  std::vector<Witness> witnesses;

  bool passed() const { return witnesses.empty(); }

  void record(std::vector<std::string> tuple, std::string relation, CheckValue lhs,
              CheckValue rhs);

  // Human-readable block, one witness per line.
  std::string to_text() const;
};

struct CheckOptions {
  std::size_t witness_cap = 16;
};

}  // namespace akivis
