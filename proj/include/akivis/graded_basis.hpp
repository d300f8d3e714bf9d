#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace akivis {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

constexpr int bit(Parity p) { return static_cast<int>(p); }

// Koszul sign (-1)^{ab}.
constexpr int koszul(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

const char* to_string(Parity p);

// Ordered generator set Delta = Delta_0 u Delta_1. Every even symbol
// precedes every odd symbol; the position of a symbol is its index.
class GradedBasis {
 public:
  GradedBasis(std::vector<std::string> even, std::vector<std::string> odd);

  static std::shared_ptr<const GradedBasis> make(std::vector<std::string> even,
                                                 std::vector<std::string> odd) {
    return std::make_shared<const GradedBasis>(std::move(even), std::move(odd));
  }

  std::size_t size() const { return names_.size(); }
  std::size_t even_count() const { return even_count_; }
  std::size_t odd_count() const { return names_.size() - even_count_; }

  const std::string& name(std::size_t i) const { return names_.at(i); }
  Parity parity(std::size_t i) const {
    return i < even_count_ ? Parity::even : Parity::odd;
  }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws BasisMismatch for an unknown symbol.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) {
    return a.even_count_ == b.even_count_ && a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::size_t even_count_;
  std::unordered_map<std::string, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

// Same object, or structurally equal.
inline bool same_basis(const BasisPtr& a, const BasisPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace akivis
