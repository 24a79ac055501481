#include "morsecell/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "morsecell/error.hpp"

namespace morsecell {

namespace {

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw AmbientMismatch("monomials live in rings with " + std::to_string(a.num_vars()) +
                          " and " + std::to_string(b.num_vars()) + " variables");
  }
}

std::size_t checked_num_vars(std::size_t n) {
  if (n > kMaxVars) {
    throw CapExceeded("at most " + std::to_string(kMaxVars) + " variables are supported, got " +
                      std::to_string(n));
  }
  return n;
}

}  // namespace

Monomial::Monomial(std::size_t num_vars)
    : num_vars_(static_cast<std::uint8_t>(checked_num_vars(num_vars))) {}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t var, int exponent) {
  if (var >= num_vars_) throw InvalidArgument("variable index out of range");
  if (exponent < 0) throw InvalidArgument("exponents must be nonnegative");
  if (exponent > std::numeric_limits<Exponent>::max()) throw CapExceeded("exponent overflow");
  exps_[var] = static_cast<Exponent>(exponent);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < num_vars_; ++i) d += exps_[i];
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.begin() + num_vars_, [](Exponent e) { return e == 0; });
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.num_vars_ <=> b.num_vars_; c != 0) return c;
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.num_vars_ == b.num_vars_ &&
         std::equal(a.exps_.begin(), a.exps_.begin() + a.num_vars_, b.exps_.begin());
}

std::size_t Monomial::hash() const {
  // FNV-1a over the used exponents.
  std::uint64_t h = 1469598103934665603ULL ^ num_vars_;
  for (std::size_t i = 0; i < num_vars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  Monomial r(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) r.set(i, std::max(a[i], b[i]));
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  Monomial r(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) r.set(i, std::min(a[i], b[i]));
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  Monomial r(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) r.set(i, int{a[i]} + int{b[i]});
  return r;
}

std::optional<Monomial> quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) return std::nullopt;
  Monomial r(b.num_vars());
  for (std::size_t i = 0; i < b.num_vars(); ++i) r.set(i, int{b[i]} - int{a[i]});
  return r;
}

Monomial lcm_of(std::span<const Monomial> ms, std::size_t num_vars) {
  Monomial r(num_vars);
  for (const auto& m : ms) r = lcm(r, m);
  return r;
}

std::vector<std::string> default_var_names(std::size_t num_vars) {
  std::vector<std::string> names;
  names.reserve(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    if (i < names.size()) {
      out << names[i];
    } else {
      out << 'x' << (i + 1);
    }
    if (m[i] > 1) out << '^' << m[i];
  }
  if (first) return "1";
  return out.str();
}

}  // namespace morsecell
