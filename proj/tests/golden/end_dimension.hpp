#pragma once
// dim End(P1 + P2 + P3 + M1 + M2 + M3 + M4) over GF(2), as computed by the
// intertwiner oracle in tests/oracle and frozen here. The library result is
// checked against this value, never the other way round.

#include <cstddef>

namespace golden {

inline constexpr std::size_t kEndDimension = 95;

}  // namespace golden
