#include "contactfill/mcg.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "contactfill/detail/orientation.hpp"
#include "contactfill/error.hpp"

namespace contactfill::mcg {

namespace {

using detail::Vec2;

Vec2 as_vec(const Direction& d) { return {d.u, d.v}; }

const Vec2& cut() {
  static const Vec2 c{1, 0};
  return c;
}

// Clockwise turn fraction from the cut, compared exactly.
bool before_on_circle(const Direction& x, const Direction& y) {
  return detail::clockwise_before(cut(), as_vec(x), as_vec(y));
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    throw DomainError(ErrorKind::InvalidParameter, "exponent overflow");
  }
  return out;
}

std::int64_t checked_neg(std::int64_t x) {
  if (x == std::numeric_limits<std::int64_t>::min()) {
    throw DomainError(ErrorKind::InvalidParameter, "exponent overflow");
  }
  return -x;
}

}  // namespace

char to_char(Generator g) noexcept {
  switch (g) {
    case Generator::A: return 'a';
    case Generator::B: return 'b';
    case Generator::Delta: return 'd';
  }
  return '?';
}

// ---------------------------------------------------------------------------
// Word

Word::Word(std::initializer_list<Letter> letters) {
  for (const auto& l : letters) push_back(l);
}

void Word::push_back(Letter letter) {
  if (letter.exponent == 0) return;
  if (!letters_.empty() && letters_.back().generator == letter.generator) {
    letters_.back().exponent = checked_add(letters_.back().exponent, letter.exponent);
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(letter);
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  for (const auto& l : rhs.letters_) out.push_back(l);
  return out;
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back({it->generator, checked_neg(it->exponent)});
  }
  return out;
}

Word Word::power(std::int64_t m) const {
  if (m < 0) return inverse().power(checked_neg(m));
  Word out;
  for (std::int64_t i = 0; i < m; ++i) out = out * *this;
  return out;
}

Word Word::expand_delta() const {
  const Word ab6 = (a() * b()).power(6);
  Word out;
  for (const auto& l : letters_) {
    if (l.generator == Generator::Delta) {
      out = out * ab6.power(l.exponent);
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += to_char(l.generator);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

Word Word::parse(std::string_view text) {
  auto fail = [&](std::size_t pos, const std::string& why) -> void {
    throw DomainError(ErrorKind::ParseError,
                      why + " at position " + std::to_string(pos) + " in word '" + std::string(text) + "'");
  };
  auto skip_space = [&](std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  Word out;
  std::size_t pos = 0;
  skip_space(pos);
  if (pos < text.size() && text.substr(pos) == "1") return out;
  while (pos < text.size()) {
    Generator g{};
    switch (text[pos]) {
      case 'a': g = Generator::A; break;
      case 'b': g = Generator::B; break;
      case 'd': g = Generator::Delta; break;
      default: fail(pos, std::string("unexpected character '") + text[pos] + "'");
    }
    ++pos;
    skip_space(pos);
    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_space(pos);
      const std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::string_view digits = text.substr(start, pos - start);
      if (digits.empty() || digits == "-" || digits == "+") fail(start, "expected an exponent");
      exponent = to_int64(parse_integer(digits));
      if (exponent == 0) fail(start, "exponent must be nonzero");
    }
    out.push_back({g, exponent});
    skip_space(pos);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrices and directions

MatSL2::MatSL2(Integer m11, Integer m12, Integer m21, Integer m22)
    : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)), m22_(std::move(m22)) {
  if (m11_ * m22_ - m12_ * m21_ != 1) {
    throw DomainError(ErrorKind::InvalidParameter, "matrix " + str() + " is not in SL(2,Z)");
  }
}

bool MatSL2::is_identity() const { return m11_ == 1 && m12_ == 0 && m21_ == 0 && m22_ == 1; }
bool MatSL2::is_minus_identity() const { return m11_ == -1 && m12_ == 0 && m21_ == 0 && m22_ == -1; }

MatSL2 MatSL2::operator-() const { return {-m11_, -m12_, -m21_, -m22_}; }

MatSL2 operator*(const MatSL2& x, const MatSL2& y) {
  return {x.m11_ * y.m11_ + x.m12_ * y.m21_, x.m11_ * y.m12_ + x.m12_ * y.m22_,
          x.m21_ * y.m11_ + x.m22_ * y.m21_, x.m21_ * y.m12_ + x.m22_ * y.m22_};
}

MatSL2 MatSL2::power(std::int64_t k) const {
  if (k < 0) {
    const MatSL2 inv(m22_, -m12_, -m21_, m11_);
    return inv.power(checked_neg(k));
  }
  MatSL2 out;
  MatSL2 base = *this;
  for (auto e = static_cast<std::uint64_t>(k); e != 0; e >>= 1) {
    if (e & 1U) out = out * base;
    base = base * base;
  }
  return out;
}

Direction MatSL2::apply(const Direction& d) const {
  return {m11_ * d.u + m12_ * d.v, m21_ * d.u + m22_ * d.v};
}

std::string MatSL2::str() const {
  return "[[" + m11_.str() + "," + m12_.str() + "],[" + m21_.str() + "," + m22_.str() + "]]";
}

Direction Direction::make(Integer u, Integer v) {
  if (u == 0 && v == 0) throw DomainError(ErrorKind::InvalidParameter, "zero direction");
  const Integer g = boost::multiprecision::gcd(abs(u), abs(v));
  return {u / g, v / g};
}

MatSL2 letter_matrix(const Letter& letter) {
  const Integer k = letter.exponent;
  switch (letter.generator) {
    case Generator::A: return {1, k, 0, 1};
    case Generator::B: return {1, 0, -k, 1};
    case Generator::Delta: return MatSL2::identity();
  }
  return MatSL2::identity();
}

MatSL2 evaluate(const Word& w) {
  MatSL2 out;
  for (const auto& l : w.letters()) out = out * letter_matrix(l);
  return out;
}

// ---------------------------------------------------------------------------
// Lifted action

LiftedPoint act(const Word& w, LiftedPoint x) {
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->generator == Generator::Delta) {
      x.height += it->exponent;
      continue;
    }
    // a^k and b^k preserve an open half plane, so their canonical lifts move
    // every point less than half a turn: clockwise for k > 0.
    const Direction next = letter_matrix(*it).apply(x.point);
    if (it->exponent > 0 && before_on_circle(next, x.point)) {
      ++x.height;
    } else if (it->exponent < 0 && before_on_circle(x.point, next)) {
      --x.height;
    }
    x.point = next;
  }
  return x;
}

namespace {

// Exact displacement of the m-fold composite, which must cap to +-identity.
Rational rigid_displacement(const Word& w, std::int64_t m) {
  const Direction start{1, 0};
  LiftedPoint x{start, 0};
  for (std::int64_t i = 0; i < m; ++i) x = act(w, x);
  if (x.point == start) return Rational(x.height);
  if (x.point == start.opposite()) return Rational(x.height) + Rational(1, 2);
  throw std::logic_error("composite of " + w.str() + " is not a rigid rotation");
}

// Translation number of a lift known to have an integral translation number.
// |F^3(x) - x - 3 tau| < 1 leaves one admissible integer.
Integer integral_translation(const Word& w) {
  std::optional<Integer> found;
  for (const Direction& start : {Direction{1, 0}, Direction{1, 2}}) {
    LiftedPoint x{start, 0};
    for (int i = 0; i < 3; ++i) x = act(w, x);
    std::optional<Integer> candidate;
    for (int e = -1; e <= 1; ++e) {
      const bool admissible = e == 0 || (e > 0 && before_on_circle(start, x.point)) ||
                              (e < 0 && before_on_circle(x.point, start));
      const Integer shifted = x.height + e;
      if (admissible && shifted % 3 == 0) candidate = shifted / 3;
    }
    if (!candidate) throw std::logic_error("no integral translation number for " + w.str());
    if (found && *found != *candidate) {
      throw std::logic_error("inconsistent translation brackets for " + w.str());
    }
    found = candidate;
  }
  return *found;
}

}  // namespace

std::string_view to_string(NTType t) noexcept {
  switch (t) {
    case NTType::PseudoAnosov: return "pseudo-Anosov";
    case NTType::Periodic: return "periodic";
    case NTType::Reducible: return "reducible";
  }
  return "?";
}

NTType nt_classify(const Word& w) {
  const MatSL2 m = evaluate(w);
  const Integer t = abs(m.trace());
  if (t > 2) return NTType::PseudoAnosov;
  if (t < 2 || m.is_identity() || m.is_minus_identity()) return NTType::Periodic;
  return NTType::Reducible;
}

Rational fdtc(const Word& w) {
  const MatSL2 m = evaluate(w);
  if (m.is_identity() || m.is_minus_identity()) return rigid_displacement(w, 1);
  const Integer t = m.trace();
  if (abs(t) < 2) {
    // Orders 4, 6, 3 for traces 0, 1, -1: M^2 = -I or M^3 = +-I.
    const std::int64_t k = t == 0 ? 2 : 3;
    return rigid_displacement(w, k) / k;
  }
  if (t > 0) return Rational(integral_translation(w));
  // Negative trace: the square has positive trace and an integral value.
  return Rational(integral_translation(w * w), 2);
}

std::string_view to_string(Veering v) noexcept {
  switch (v) {
    case Veering::Yes: return "yes";
    case Veering::No: return "no";
    case Veering::Indeterminate: return "indeterminate";
  }
  return "?";
}

Veering right_veering(const Word& w) {
  const Rational c = fdtc(w);
  switch (nt_classify(w)) {
    case NTType::PseudoAnosov: return c > 0 ? Veering::Yes : Veering::No;
    case NTType::Periodic: return c >= 0 ? Veering::Yes : Veering::No;
    case NTType::Reducible:
      if (c > 0) return Veering::Yes;
      if (c < 0) return Veering::No;
      return Veering::Indeterminate;
  }
  return Veering::Indeterminate;
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

bool is(const Letter& l, Generator g, std::int64_t e) { return l.generator == g && l.exponent == e; }

// a^{r_1} b^{-1} ... a^{r_k} b^{-1} with r_i >= 0, some r_i > 0. A run of
// b^{-1}'s arrives merged as b^{-e}, standing for e - 1 zero exponents.
std::optional<std::vector<std::int64_t>> match_pa_tail(const std::vector<Letter>& ls) {
  std::vector<std::int64_t> r;
  bool positive = false;
  std::size_t i = 0;
  while (i < ls.size()) {
    std::int64_t current = 0;
    if (ls[i].generator == Generator::A) {
      if (ls[i].exponent <= 0) return std::nullopt;
      current = ls[i].exponent;
      positive = true;
      ++i;
    }
    if (i == ls.size() || ls[i].generator != Generator::B || ls[i].exponent >= 0) return std::nullopt;
    r.push_back(current);
    for (std::int64_t extra = -ls[i].exponent - 1; extra > 0; --extra) r.push_back(0);
    ++i;
  }
  if (!positive) return std::nullopt;
  return r;
}

std::optional<std::int64_t> match_periodic_tail(const std::vector<Letter>& ls) {
  if (ls.size() == 2 && ls[0].generator == Generator::A && ls[0].exponent >= -3 && ls[0].exponent <= -1 &&
      is(ls[1], Generator::B, -1)) {
    return ls[0].exponent;
  }
  return std::nullopt;
}

std::optional<std::int64_t> match_reducible_tail(const std::vector<Letter>& ls) {
  if (ls.empty()) return 0;
  if (ls.size() == 1 && ls[0].generator == Generator::B) return ls[0].exponent;
  return std::nullopt;
}

// Undo the merge of the prefix a b^2 a b^2 with whatever follows it.
std::optional<std::vector<Letter>> strip_half_twist_prefix(const std::vector<Letter>& ls) {
  if (ls.size() < 3 || !is(ls[0], Generator::A, 1) || !is(ls[1], Generator::B, 2) || !is(ls[2], Generator::A, 1)) {
    return std::nullopt;
  }
  std::vector<Letter> tail;
  if (ls.size() == 3) {
    tail.push_back({Generator::B, -2});
    return tail;
  }
  if (ls[3].generator != Generator::B) return std::nullopt;
  if (ls[3].exponent != 2) tail.push_back({Generator::B, ls[3].exponent - 2});
  tail.insert(tail.end(), ls.begin() + 4, ls.end());
  return tail;
}

}  // namespace

std::string NormalForm::str() const {
  std::string out = "type " + std::to_string(type) + ": n=" + std::to_string(delta_power);
  if (!r.empty()) {
    out += ", r=(";
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
    out += ")";
  }
  if (m) out += ", m=" + std::to_string(*m);
  return out;
}

std::optional<NormalForm> recognize_normal_form(const Word& w) {
  // delta is central, so collect it in front.
  NormalForm nf;
  Word rest;
  for (const auto& l : w.letters()) {
    if (l.generator == Generator::Delta) {
      nf.delta_power = checked_add(nf.delta_power, l.exponent);
    } else {
      rest.push_back(l);
    }
  }
  const auto& ls = rest.letters();

  if (auto r = match_pa_tail(ls)) {
    nf.type = 1;
    nf.r = *r;
    return nf;
  }
  if (auto m = match_periodic_tail(ls)) {
    nf.type = 3;
    nf.m = m;
    return nf;
  }
  if (auto m = match_reducible_tail(ls)) {
    nf.type = 5;
    nf.m = m;
    return nf;
  }
  if (auto tail = strip_half_twist_prefix(ls)) {
    if (auto r = match_pa_tail(*tail)) {
      nf.type = 2;
      nf.r = *r;
      return nf;
    }
    if (auto m = match_periodic_tail(*tail)) {
      nf.type = 4;
      nf.m = m;
      return nf;
    }
    if (auto m = match_reducible_tail(*tail)) {
      nf.type = 6;
      nf.m = m;
      return nf;
    }
  }
  return std::nullopt;
}

Integer n_K(const Word& w) {
  const Rational c = fdtc(w);
  if (nt_classify(w) == NTType::PseudoAnosov) return 3 + ceil(c);
  return 4 + floor(c);
}

}  // namespace contactfill::mcg
