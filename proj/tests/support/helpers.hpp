#pragma once

#include <string>
#include <vector>

#include "morsecell/io.hpp"

namespace testing_support {

inline morsecell::NamedIdeal named_ideal(const std::vector<std::string>& gens, const std::vector<std::string>& vars) {
  std::vector<morsecell::Monomial> raw;
  for (const auto& g : gens) raw.push_back(morsecell::parse_monomial(g, vars));
  return {morsecell::MonomialIdeal::minimalize(std::move(raw)), vars};
}

inline morsecell::Monomial mono(const std::string& text, const morsecell::NamedIdeal& named) {
  return morsecell::parse_monomial(text, named.vars);
}

inline morsecell::GenMask mask_of(const morsecell::NamedIdeal& named, const std::vector<std::string>& members) {
  morsecell::GenMask mask = 0;
  for (const auto& m : members) mask |= morsecell::bit(*named.ideal.index_of(mono(m, named)));
  return mask;
}

/// I(C4) on w,x,y,z with the order wx > xy > yz > zw.
inline morsecell::NamedIdeal c4() { return named_ideal({"x*w", "x*y", "y*z", "z*w"}, {"w", "x", "y", "z"}); }
inline morsecell::TotalOrder c4_order(const morsecell::NamedIdeal& named) {
  return morsecell::parse_order("w*x,x*y,y*z,z*w", named);
}

}  // namespace testing_support
