#include "contactfill/farey.hpp"

#include <algorithm>
#include <tuple>

#include <boost/integer/common_factor.hpp>

#include "contactfill/detail/orientation.hpp"
#include "contactfill/error.hpp"

namespace contactfill {

namespace {

using detail::Vec2;

Vec2 disk_vector(const Slope& s) {
  return {2 * s.p() * s.q(), s.q() * s.q() - s.p() * s.p()};
}

// Returns (x, y, g) with a*x + b*y = g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_x = 1, x = 0;
  Integer old_y = 0, y = 1;
  while (r != 0) {
    const Integer quotient = floor_div(old_r, r);
    std::tie(old_r, r) = std::make_tuple(r, Integer(old_r - quotient * r));
    std::tie(old_x, x) = std::make_tuple(x, Integer(old_x - quotient * x));
    std::tie(old_y, y) = std::make_tuple(y, Integer(old_y - quotient * y));
  }
  if (old_r < 0) return {-old_x, -old_y, -old_r};
  return {old_x, old_y, old_r};
}

}  // namespace

Slope::Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw DomainError(ErrorKind::UndefinedSlope, "0/0 is not a slope");
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
  const Integer g = boost::multiprecision::gcd(abs(p_), q_);
  p_ /= g;
  q_ /= g;
}

Slope::Slope(const Rational& value) : Slope(numerator(value), denominator(value)) {}

Rational Slope::value() const {
  if (is_infinite()) throw DomainError(ErrorKind::UndefinedSlope, "infinity has no rational value");
  return Rational(p_, q_);
}

std::string Slope::str() const {
  if (is_infinite()) return "inf";
  return p_.str() + "/" + q_.str();
}

Slope Slope::parse(std::string_view text) {
  if (text == "inf" || text == "1/0") return infinity();
  return Slope(parse_rational(text));
}

DiskPoint to_disk(const Slope& s) {
  const Integer norm = s.p() * s.p() + s.q() * s.q();
  const Vec2 v = disk_vector(s);
  return {Rational(v.x, norm), Rational(v.y, norm)};
}

Slope farey_sum(const Slope& r, const Slope& s) {
  return Slope(r.p() + s.p(), r.q() + s.q());
}

Integer farey_mult(const Slope& r, const Slope& s) { return r.p() * s.q() - r.q() * s.p(); }

bool has_edge(const Slope& r, const Slope& s) { return abs(farey_mult(r, s)) == 1; }

bool in_clockwise_arc(const Slope& t, const Slope& from, const Slope& to) {
  if (from == to) {
    throw DomainError(ErrorKind::DegenerateArc, "arc endpoints coincide at " + from.str());
  }
  if (t == from || t == to) return false;
  return detail::clockwise_before(disk_vector(from), disk_vector(t), disk_vector(to));
}

std::vector<Slope> neighbors_in_arc(const Slope& s0, const Slope& from, const Slope& to) {
  if (s0 == from || s0 == to || in_clockwise_arc(s0, from, to)) {
    throw DomainError(ErrorKind::InfiniteFamily,
                      "neighbours of " + s0.str() + " accumulate inside the arc from " + from.str() +
                          " to " + to.str());
  }
  // One neighbour (pn, qn) with pn*q0 - qn*p0 = 1; every neighbour is then
  // (pn + k p0)/(qn + k q0), monotone in k around the circle and tending to s0.
  const auto [x, y, g] = extended_gcd(s0.q(), s0.p());
  const Integer pn = x;
  const Integer qn = -y;

  // Pull the endpoints back along k -> (pn + k p0)/(qn + k q0). The arc avoids
  // s0, the image of k = infinity, so it pulls back to a bounded real interval.
  auto pull_back = [&](const Slope& e) {
    const Integer num = qn * e.p() - pn * e.q();
    const Integer den = s0.p() * e.q() - s0.q() * e.p();
    return ratio(num, den);
  };
  const Rational u = pull_back(from);
  const Rational v = pull_back(to);
  const Rational lo = std::min(u, v);
  const Rational hi = std::max(u, v);

  std::vector<Slope> out;
  for (Integer k = floor(lo) + 1; k < hi; ++k) {
    Slope t(pn + k * s0.p(), qn + k * s0.q());
    if (in_clockwise_arc(t, from, to)) out.push_back(std::move(t));
  }
  const Vec2 ref = disk_vector(from);
  std::sort(out.begin(), out.end(), [&](const Slope& a, const Slope& b) {
    return detail::clockwise_before(ref, disk_vector(a), disk_vector(b));
  });
  return out;
}

}  // namespace contactfill
