#pragma once
// Shared fixture: the quaternion-type algebra and its four cyclic modules.

#include <vector>

#include "qtilt/basic_algebra.hpp"
#include "qtilt/builtin_spec.hpp"
#include "qtilt/path_algebra.hpp"
#include "qtilt/rmod.hpp"

namespace fixture {

inline const qtilt::Presentation& presentation() {
  static const qtilt::Presentation p = qtilt::parse_algebra_spec(qtilt::kBuiltinSpecText);
  return p;
}

inline const qtilt::QuotientAlgebra& quotient() {
  static const qtilt::QuotientAlgebra q = qtilt::QuotientAlgebra::complete(presentation());
  return q;
}

inline const qtilt::BasicAlgebra& algebra() {
  static const qtilt::BasicAlgebra a = qtilt::BasicAlgebra::from_quotient(quotient());
  return a;
}

inline qtilt::Matrix element(const std::string& text) {
  return quotient().normal_form(qtilt::parse_element(text, quotient().quiver(), quotient().field()));
}

inline qtilt::RightModule projective(uint32_t v) { return qtilt::projective_module(algebra(), v); }
inline qtilt::RightModule simple(uint32_t v) { return qtilt::simple_module(algebra(), v); }

/// M_1..M_4 as declared in the shipped presentation.
inline std::vector<qtilt::RightModule> cyclic_summands() {
  std::vector<qtilt::RightModule> out;
  for (const auto& decl : presentation().modules) {
    out.push_back(qtilt::cyclic_quotient(algebra(), decl.vertex, quotient().normal_form(decl.generator)));
  }
  return out;
}

/// P_1, P_2, P_3, M_1, M_2, M_3, M_4.
inline std::vector<qtilt::RightModule> summands() {
  std::vector<qtilt::RightModule> out;
  for (uint32_t v = 0; v < 3; ++v) out.push_back(projective(v));
  for (auto& m : cyclic_summands()) out.push_back(m);
  return out;
}

}  // namespace fixture
