#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace morsecell {

using Exponent = std::uint16_t;

inline constexpr std::size_t kMaxVars = 32;

/// A monomial x^a in a polynomial ring with a fixed number of variables,
/// stored as its exponent vector. The unit monomial is the all-zero vector.
class Monomial {
 public:
  Monomial() = default;

  /// The unit monomial over `num_vars` variables.
  explicit Monomial(std::size_t num_vars);

  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  std::size_t num_vars() const { return num_vars_; }
  Exponent operator[](std::size_t var) const { return exps_[var]; }
  void set(std::size_t var, int exponent);

  std::span<const Exponent> exponents() const { return {exps_.data(), num_vars_}; }
  unsigned degree() const;
  bool is_unit() const;

  /// Lexicographic comparison of exponent vectors (shorter ambient first).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t num_vars_ = 0;
};

/// Exponent vectors double as ℕ^r multidegrees.
using Multidegree = Monomial;

/// a | b. Throws AmbientMismatch when the ambient lengths differ.
bool divides(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);

/// b / a when a | b, otherwise nullopt.
std::optional<Monomial> quotient(const Monomial& b, const Monomial& a);

/// Componentwise maximum; the empty family gives the unit over `num_vars`.
Monomial lcm_of(std::span<const Monomial> ms, std::size_t num_vars);

/// Renders "x1^2*x3" style text; "1" for the unit. Missing names fall back
/// to x1, x2, ...
std::string to_string(const Monomial& m, std::span<const std::string> names = {});

/// Default variable names x1..xn.
std::vector<std::string> default_var_names(std::size_t num_vars);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace morsecell
