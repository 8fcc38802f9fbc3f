#include "contactfill/surgery.hpp"

#include "contactfill/error.hpp"

namespace contactfill::surgery {

namespace {

// 1/x as an extended rational; x = 0 gives infinity.
Slope reciprocal(const Rational& x) { return Slope(denominator(x), numerator(x)); }

void require_negative(const Rational& r) {
  if (r >= 0) {
    throw DomainError(ErrorKind::InvalidCoefficient,
                      "contact coefficient " + format(r) + " must be negative");
  }
}

}  // namespace

Rational topological_coefficient(const Rational& r_contact, const Integer& tb) {
  return Rational(tb) + r_contact;
}

Slope transverse_framing_update(const Slope& s, TransverseSurgery kind) {
  switch (kind) {
    case TransverseSurgery::AdmissibleMinusOne: return Slope(s.p(), s.q() + s.p());
    case TransverseSurgery::InadmissiblePlusOne: return Slope(s.p(), s.q() - s.p());
  }
  throw DomainError(ErrorKind::InvalidParameter, "unknown transverse surgery");
}

Slope meridian_conversion(const Slope& s) {
  // (q, p) -> (-p, q)
  return Slope(s.q(), -s.p());
}

Slope binding_neighborhood_slope(const mcg::Word& w, const Integer& n) {
  if (n < 0) throw DomainError(ErrorKind::InvalidParameter, "n must be non-negative");
  const Rational c = mcg::fdtc(w);
  const Integer m = mcg::nt_classify(w) == mcg::NTType::PseudoAnosov ? ceil(c + n) : floor(c + n + 1);
  return Slope(Integer(1), m);
}

SolidTorus::SolidTorus(Slope meridian, Slope dividing, Side side)
    : meridian_(std::move(meridian)), dividing_(std::move(dividing)), side_(side) {
  if (meridian_ == dividing_) {
    throw DomainError(ErrorKind::InvalidTorus, "meridian and dividing slope coincide at " + meridian_.str());
  }
}

bool SolidTorus::admits(const Slope& t) const {
  return side_ == Side::Lower ? in_clockwise_arc(t, meridian_, dividing_)
                              : in_clockwise_arc(t, dividing_, meridian_);
}

MixedTorus::MixedTorus(Slope s_minus, Slope s_zero, Slope s_plus)
    : s_minus_(std::move(s_minus)), s_zero_(std::move(s_zero)), s_plus_(std::move(s_plus)) {
  if (s_minus_ == s_plus_ || !in_clockwise_arc(s_zero_, s_minus_, s_plus_)) {
    throw DomainError(ErrorKind::InvalidTorus, "slope " + s_zero_.str() + " is not clockwise of " +
                                                   s_minus_.str() + " and anticlockwise of " + s_plus_.str());
  }
}

std::vector<Slope> menke_candidates(const MixedTorus& t) {
  return neighbors_in_arc(t.s_zero(), t.s_plus(), t.s_minus());
}

bool unique_tight_lower(const Slope& r) {
  if (r.p() == 0) throw DomainError(ErrorKind::InvalidTorus, "meridian 0 equals the dividing slope");
  return abs(r.p()) == 1;
}

Slope lens_from_mixed_surgery(const Rational& r) {
  require_negative(r);
  return reciprocal(r - 1);
}

Slope seifert_coefficient(const mcg::Word& w, const Rational& r_contact) {
  require_negative(r_contact);
  return reciprocal(Rational(mcg::n_K(w)) - r_contact);
}

Slope seifert_coefficient_via_framings(const mcg::Word& w, const Rational& r_contact) {
  require_negative(r_contact);
  // Binding neighbourhood in the first contact structure, slope 1/m; in the
  // product framing of the torus bundle its core is Legendrian with tb = -m.
  const Slope binding = binding_neighborhood_slope(w, 1);
  // Inverse of the meridian conversion: (q, p) -> (p, -q).
  const Slope product(-binding.q(), binding.p());
  if (!product.is_integer()) throw std::logic_error("binding core framing is not integral");
  const Integer tb_core = product.value().convert_to<Integer>();
  // Stabilising once with each sign lowers tb by two.
  const Integer tb_mixed = tb_core - 2;
  const Rational product_coefficient = topological_coefficient(r_contact, tb_mixed);
  // Column (1, x) in product framing becomes (-x, 1) in Seifert framing.
  return meridian_conversion(Slope(product_coefficient));
}

}  // namespace contactfill::surgery
