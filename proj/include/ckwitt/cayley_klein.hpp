#pragma once

#include <array>
#include <optional>
#include <string_view>

// The four Cayley-Klein algebras with non-degenerate structure, identified by
// the signs (s1, s2) in
//
//   [J, P1] = P2,   [J, P2] = s1 P1,   [P1, P2] = s2 J
//
// together with the curvature signs (kappa1, kappa2) of the normalized form
// [J, P1] = P2, [J, P2] = -kappa2 P1, [P1, P2] = kappa1 J and the sign
// pattern of the quadratic Casimir kappa2 J^2 + kappa1 kappa2 P1^2 +
// kappa1 P2^2 reduced to units.

namespace ckwitt {

enum class CkType { elliptic, hyperbolic, co_hyperbolic, doubly_hyperbolic };

inline constexpr std::array<CkType, 4> all_ck_types = {
    CkType::elliptic, CkType::hyperbolic, CkType::co_hyperbolic,
    CkType::doubly_hyperbolic};

struct CkSigns {
  const char* name;
  int s1, s2;
  int kappa1, kappa2;
  std::array<int, 3> casimir;  // signs for (J^2, P1^2, P2^2)
};

inline const CkSigns& signs(CkType t) {
  static const CkSigns table[4] = {
      {"elliptic", -1, +1, +1, +1, {+1, +1, +1}},
      {"hyperbolic", -1, -1, -1, +1, {-1, +1, +1}},
      {"co_hyperbolic", +1, +1, +1, -1, {+1, -1, +1}},
      {"doubly_hyperbolic", +1, -1, -1, -1, {-1, -1, +1}},
  };
  return table[static_cast<int>(t)];
}

inline const char* name(CkType t) { return signs(t).name; }

inline std::optional<CkType> parse_ck_type(std::string_view s) {
  for (CkType t : all_ck_types)
    if (s == name(t)) return t;
  return std::nullopt;
}

}  // namespace ckwitt
