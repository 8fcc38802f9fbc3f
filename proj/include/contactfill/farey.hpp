#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "contactfill/numeric.hpp"

namespace contactfill {

/// An extended rational p/q in lowest terms with q >= 0. Infinity is 1/0.
class Slope {
 public:
  /// Normalizes sign and common factors. Throws UndefinedSlope for 0/0.
  Slope(Integer p, Integer q);
  explicit Slope(const Rational& value);
  explicit Slope(long long n) : Slope(Integer(n), Integer(1)) {}

  static Slope infinity() { return Slope(Integer(1), Integer(0)); }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_integer() const { return q_ == 1; }

  /// Throws UndefinedSlope for infinity.
  Rational value() const;

  /// "p/q", or "inf" for 1/0.
  std::string str() const;
  /// Accepts "p/q", "n" and "inf".
  static Slope parse(std::string_view text);

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Integer p_;
  Integer q_;
};

/// Exact point on the boundary of the Poincare disk.
struct DiskPoint {
  Rational x;
  Rational y;
  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;
};

/// p/q -> (2pq, q^2 - p^2) / (p^2 + q^2): 0 at the top, infinity at the bottom,
/// positive slopes on the right half.
DiskPoint to_disk(const Slope& s);

Slope farey_sum(const Slope& r, const Slope& s);
Integer farey_mult(const Slope& r, const Slope& s);
bool has_edge(const Slope& r, const Slope& s);

/// True iff t lies strictly inside the arc traversed clockwise from `from` to
/// `to`. Throws DegenerateArc when from == to.
bool in_clockwise_arc(const Slope& t, const Slope& from, const Slope& to);

/// All Farey neighbours of s0 strictly inside the clockwise arc from `from` to
/// `to`, listed in clockwise order. Throws InfiniteFamily when s0 lies in the
/// closed arc, since its neighbours accumulate there.
std::vector<Slope> neighbors_in_arc(const Slope& s0, const Slope& from, const Slope& to);

}  // namespace contactfill
