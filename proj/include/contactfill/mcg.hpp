#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contactfill/numeric.hpp"

// Mapping classes of the genus-one surface with one boundary component,
// written as words in the Dehn twists a, b and the boundary twist d (delta).
namespace contactfill::mcg {

enum class Generator { A, B, Delta };

char to_char(Generator g) noexcept;

struct Letter {
  Generator generator;
  std::int64_t exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word read as function composition: the rightmost letter acts first.
/// Adjacent letters with the same generator are merged and zero exponents
/// dropped, so equal reduced words compare equal.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);

  static Word a(std::int64_t k = 1) { return Word{{Generator::A, k}}; }
  static Word b(std::int64_t k = 1) { return Word{{Generator::B, k}}; }
  static Word delta(std::int64_t k = 1) { return Word{{Generator::Delta, k}}; }

  /// Tokens from {a, b, d}, each optionally followed by ^k with k a nonzero
  /// integer; whitespace is optional. Throws DomainError(ParseError).
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void push_back(Letter letter);
  Word inverse() const;
  Word power(std::int64_t m) const;

  /// Every delta letter replaced by (ab)^6.
  Word expand_delta() const;

  /// e.g. "d^2 a^3 b^-1"; the identity prints as "1".
  std::string str() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Direction;

/// Integer 2x2 matrix of determinant one.
class MatSL2 {
 public:
  MatSL2() : MatSL2(1, 0, 0, 1) {}
  /// Throws InvalidParameter unless the determinant is one.
  MatSL2(Integer m11, Integer m12, Integer m21, Integer m22);

  static MatSL2 identity() { return {}; }

  const Integer& m11() const { return m11_; }
  const Integer& m12() const { return m12_; }
  const Integer& m21() const { return m21_; }
  const Integer& m22() const { return m22_; }

  Integer trace() const { return m11_ + m22_; }
  bool is_identity() const;
  bool is_minus_identity() const;
  MatSL2 operator-() const;
  MatSL2 power(std::int64_t k) const;
  Direction apply(const Direction& d) const;
  std::string str() const;

  friend MatSL2 operator*(const MatSL2& x, const MatSL2& y);
  friend bool operator==(const MatSL2&, const MatSL2&) = default;

 private:
  Integer m11_, m12_, m21_, m22_;
};

/// Primitive integer vector; (u, v) and (-u, -v) are distinct points of the
/// circle of oriented slopes.
struct Direction {
  Integer u;
  Integer v;
  /// Throws InvalidParameter for (0, 0).
  static Direction make(Integer u, Integer v);
  Direction opposite() const { return {-u, -v}; }
  friend bool operator==(const Direction&, const Direction&) = default;
};

/// A Direction together with the number of signed passes through the cut
/// direction (1, 0). Lifted coordinate = height + clockwise turn fraction.
struct LiftedPoint {
  Direction point;
  Integer height;
};

/// Matrix of one letter: a -> [[1,1],[0,1]], b -> [[1,0],[-1,1]], d -> I.
MatSL2 letter_matrix(const Letter& letter);
MatSL2 evaluate(const Word& w);

/// Applies the canonical lift of every letter, rightmost first. Positive
/// Dehn twists move points clockwise, which is the positive direction here.
/// Each delta adds exactly one turn to the height.
LiftedPoint act(const Word& w, LiftedPoint x);

enum class NTType { PseudoAnosov, Periodic, Reducible };
std::string_view to_string(NTType t) noexcept;

NTType nt_classify(const Word& w);

/// Fractional Dehn twist coefficient: the exact translation number of the
/// lifted action on oriented slopes, normalized so that fdtc(d) = 1.
Rational fdtc(const Word& w);

enum class Veering { Yes, No, Indeterminate };
std::string_view to_string(Veering v) noexcept;

Veering right_veering(const Word& w);

/// Literal match against the six genus-one normal-form templates.
struct NormalForm {
  int type = 0;                     // 1..6
  std::int64_t delta_power = 0;     // n
  std::vector<std::int64_t> r;      // r_1..r_k for types 1 and 2
  std::optional<std::int64_t> m;    // types 3 to 6
  std::string str() const;
};

std::optional<NormalForm> recognize_normal_form(const Word& w);

/// 3 + ceil(c) for pseudo-Anosov monodromies, 4 + floor(c) otherwise.
Integer n_K(const Word& w);

}  // namespace contactfill::mcg
