#pragma once

#include <vector>

#include "contactfill/farey.hpp"
#include "contactfill/mcg.hpp"
#include "contactfill/numeric.hpp"

// Surgery-coefficient and framing bookkeeping. Matrices act on the column
// (q, p) of a slope p/q; callers only ever see Slope -> Slope maps.
namespace contactfill::surgery {

/// Contact (r)-surgery on a null-homologous Legendrian knot is topological
/// (tb + r)-surgery.
Rational topological_coefficient(const Rational& r_contact, const Integer& tb);

enum class TransverseSurgery {
  AdmissibleMinusOne,   // [[1, 1],[0, 1]] on (q, p)
  InadmissiblePlusOne,  // [[1,-1],[0, 1]] on (q, p)
};

/// Dividing slope of the knot neighbourhood, in page framing, after one
/// transverse surgery.
Slope transverse_framing_update(const Slope& s, TransverseSurgery kind);

/// The product framing becomes the meridian: [[0,-1],[1,0]] on (q, p).
Slope meridian_conversion(const Slope& s);

/// Dividing slope of the binding neighbourhood in the n-th contact structure:
/// 1/ceil(c + n) for pseudo-Anosov monodromy, 1/floor(c + n + 1) otherwise.
Slope binding_neighborhood_slope(const mcg::Word& w, const Integer& n);

enum class Side { Lower, Upper };

/// Tight solid torus S(r, s; l) or S(r, s; u).
class SolidTorus {
 public:
  /// Throws InvalidTorus when meridian == dividing.
  SolidTorus(Slope meridian, Slope dividing, Side side);

  const Slope& meridian() const { return meridian_; }
  const Slope& dividing() const { return dividing_; }
  Side side() const { return side_; }

  /// Whether a boundary-parallel convex torus may have dividing slope t:
  /// clockwise of r and anticlockwise of s (lower), or the mirror (upper).
  bool admits(const Slope& t) const;

 private:
  Slope meridian_;
  Slope dividing_;
  Side side_;
};

/// Slopes of T_{-1}, T and T_1 in a mixed neighbourhood.
class MixedTorus {
 public:
  /// Throws InvalidTorus unless s_zero is clockwise of s_minus and
  /// anticlockwise of s_plus.
  MixedTorus(Slope s_minus, Slope s_zero, Slope s_plus);

  const Slope& s_minus() const { return s_minus_; }
  const Slope& s_zero() const { return s_zero_; }
  const Slope& s_plus() const { return s_plus_; }

 private:
  Slope s_minus_;
  Slope s_zero_;
  Slope s_plus_;
};

/// Meridional slopes s allowed by the decomposition along a mixed torus:
/// anticlockwise of s_minus, clockwise of s_plus, and |s . s_zero| = 1.
std::vector<Slope> menke_candidates(const MixedTorus& t);

/// S(r, 0; l) carries a unique tight structure iff r = 1/n (n may be 0).
/// Throws InvalidTorus for r = 0.
bool unique_tight_lower(const Slope& r);

/// p/q = 1/(r - 1) for the lens space L(p, q) = S(r-1,0;l) u S(inf,0;u) left
/// over by negative contact (r)-surgery on a mixed knot. |p| = 1 is the
/// three-sphere. Throws InvalidCoefficient for r >= 0.
Slope lens_from_mixed_surgery(const Rational& r);

/// Seifert-framed surgery coefficient 1/(n_K - r) realised by contact
/// (r)-surgery, r < 0, on the doubly stabilised binding core. Infinity when
/// r = n_K. Throws InvalidCoefficient for r >= 0.
Slope seifert_coefficient(const mcg::Word& w, const Rational& r_contact);

/// The same coefficient via the framing matrices, starting from the binding
/// neighbourhood slope of the first contact structure.
Slope seifert_coefficient_via_framings(const mcg::Word& w, const Rational& r_contact);

}  // namespace contactfill::surgery
