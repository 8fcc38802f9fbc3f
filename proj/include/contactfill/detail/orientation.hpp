#pragma once

#include "contactfill/numeric.hpp"

// Exact circular order of nonzero integer vectors. Angles are measured
// clockwise (decreasing standard angle) from a reference vector.
namespace contactfill::detail {

struct Vec2 {
  Integer x;
  Integer y;
};

inline Integer cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Integer dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// 0 when v lies in [0, half turn) clockwise from ref, 1 otherwise.
inline int clockwise_half(const Vec2& ref, const Vec2& v) {
  const Integer c = cross(ref, v);
  if (c < 0) return 0;
  if (c == 0 && dot(ref, v) > 0) return 0;
  return 1;
}

// Strict: the clockwise angle from ref to a is smaller than to b.
inline bool clockwise_before(const Vec2& ref, const Vec2& a, const Vec2& b) {
  const int ha = clockwise_half(ref, a);
  const int hb = clockwise_half(ref, b);
  if (ha != hb) return ha < hb;
  return cross(a, b) < 0;
}

// Same ray (positive multiple).
inline bool same_ray(const Vec2& a, const Vec2& b) { return cross(a, b) == 0 && dot(a, b) > 0; }

}  // namespace contactfill::detail
