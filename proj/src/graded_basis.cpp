#include "akivis/graded_basis.hpp"

#include "akivis/errors.hpp"

namespace akivis {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

GradedBasis::GradedBasis(std::vector<std::string> even, std::vector<std::string> odd)
    : even_count_(even.size()) {
  names_ = std::move(even);
  names_.insert(names_.end(), std::make_move_iterator(odd.begin()),
                std::make_move_iterator(odd.end()));
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidInput("empty generator symbol");
    if (!index_.emplace(names_[i], i).second)
      throw InvalidInput("duplicate generator symbol '" + names_[i] + "'");
  }
}

std::optional<std::size_t> GradedBasis::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedBasis::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw BasisMismatch("unknown generator '" + std::string(name) + "'");
}

}  // namespace akivis
