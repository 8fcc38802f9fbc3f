#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's circular-order or translation-number code.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "contactfill/mcg.hpp"

namespace oracle {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct SmallSlope {
  long long p;
  long long q;
  bool operator==(const SmallSlope&) const = default;
};

// Standard angle of p/q on the disk boundary, via (2pq, q^2 - p^2).
inline double disk_angle(SmallSlope s) {
  const double x = 2.0 * static_cast<double>(s.p) * static_cast<double>(s.q);
  const double y = static_cast<double>(s.q * s.q - s.p * s.p);
  return std::atan2(y, x);
}

// Clockwise angle from a to b in [0, 2 pi).
inline double clockwise_angle(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d < 0) d += kTwoPi;
  return d;
}

inline bool in_arc(SmallSlope t, SmallSlope from, SmallSlope to) {
  if (t == from || t == to) return false;
  const double f = disk_angle(from);
  return clockwise_angle(f, disk_angle(t)) < clockwise_angle(f, disk_angle(to));
}

// Every reduced p/q with |p|, |q| <= bound, q >= 0, infinity as 1/0.
inline std::vector<SmallSlope> all_slopes(long long bound) {
  std::vector<SmallSlope> out{{1, 0}};
  for (long long q = 1; q <= bound; ++q) {
    for (long long p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) == 1) out.push_back({p, q});
    }
  }
  return out;
}

inline std::vector<SmallSlope> brute_neighbors(SmallSlope s0, SmallSlope from, SmallSlope to, long long bound) {
  std::vector<SmallSlope> out;
  for (const auto& t : all_slopes(bound)) {
    const long long det = t.p * s0.q - t.q * s0.p;
    if ((det == 1 || det == -1) && in_arc(t, from, to)) out.push_back(t);
  }
  return out;
}

// Floating-point translation number of the lifted action on oriented slopes:
// iterate the word N times, each letter moving a point by its canonical
// displacement in (-1/2, 1/2) turns (clockwise positive). Delta is expanded
// to (ab)^6 letter by letter.
inline double numeric_fdtc(const contactfill::mcg::Word& w, int iterations) {
  using contactfill::mcg::Generator;
  std::vector<std::pair<Generator, long long>> letters;
  for (const auto& l : w.letters()) {
    if (l.generator == Generator::Delta) {
      const long long reps = 6 * std::llabs(l.exponent);
      const long long sign = l.exponent > 0 ? 1 : -1;
      for (long long k = 0; k < reps; ++k) {
        if (sign > 0) {
          letters.emplace_back(Generator::A, 1);
          letters.emplace_back(Generator::B, 1);
        } else {
          letters.emplace_back(Generator::B, -1);
          letters.emplace_back(Generator::A, -1);
        }
      }
    } else {
      letters.emplace_back(l.generator, l.exponent);
    }
  }
  // Right-most letter first; start away from the special directions.
  double theta = 0.3;
  double lifted = 0.0;
  for (int it = 0; it < iterations; ++it) {
    for (auto l = letters.rbegin(); l != letters.rend(); ++l) {
      double u = std::cos(theta), v = std::sin(theta);
      const double k = static_cast<double>(l->second);
      if (l->first == Generator::A) {
        u += k * v;
      } else {
        v -= k * u;
      }
      const double next = std::atan2(v, u);
      double d = std::fmod(theta - next, kTwoPi);
      if (d > kTwoPi / 2) d -= kTwoPi;
      if (d <= -kTwoPi / 2) d += kTwoPi;
      lifted += d / kTwoPi;
      theta = next;
    }
  }
  return lifted / iterations;
}

inline contactfill::mcg::Word random_word(std::mt19937_64& rng, int max_length = 20, int max_exponent = 3,
                                          bool with_delta = true) {
  using contactfill::mcg::Generator;
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<int> gen(0, with_delta ? 6 : 5);
  std::uniform_int_distribution<int> exp(1, max_exponent);
  std::bernoulli_distribution negative(0.5);
  contactfill::mcg::Word w;
  const int n = length(rng);
  for (int i = 0; i < n; ++i) {
    const int g = gen(rng);
    const Generator generator = g == 6 ? Generator::Delta : (g % 2 == 0 ? Generator::A : Generator::B);
    const std::int64_t e = negative(rng) ? -exp(rng) : exp(rng);
    w.push_back({generator, e});
  }
  return w;
}

}  // namespace oracle
