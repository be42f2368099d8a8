#pragma once

namespace ordcal {

/// Three-way comparison result.
enum class Cmp : int { LT = -1, EQ = 0, GT = 1 };

inline Cmp flip(Cmp c) { return static_cast<Cmp>(-static_cast<int>(c)); }

template <typename T>
Cmp cmp_values(const T& a, const T& b) {
  if (a < b) return Cmp::LT;
  if (b < a) return Cmp::GT;
  return Cmp::EQ;
}

inline const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::EQ: return "EQ";
    default: return "GT";
  }
}

}  // namespace ordcal
