#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "contactfill/citation.hpp"
#include "contactfill/farey.hpp"
#include "contactfill/mcg.hpp"
#include "contactfill/numeric.hpp"
#include "json.hpp"

namespace contactfill::fill {

/// Ordered by strength of filling.
enum class FillLevel { Tight, Weak, Strong, Liouville, Stein };

std::string_view to_string(FillLevel level) noexcept;
/// Throws ParseError.
FillLevel parse_fill_level(std::string_view text);

/// What is known about one contact structure. A tight status stores the
/// strongest filling known to exist (`lower`; empty when not even tightness
/// is asserted) and the strongest filling not yet excluded (`upper`).
class FillabilityStatus {
 public:
  static FillabilityStatus overtwisted(Citations citations = {});
  /// Throws InvalidParameter when lower > upper.
  static FillabilityStatus tight(std::optional<FillLevel> lower, FillLevel upper, Citations citations = {});
  /// Nothing known: no lower bound, upper bound Stein.
  static FillabilityStatus unknown() { return tight(std::nullopt, FillLevel::Stein); }

  bool is_overtwisted() const { return overtwisted_; }
  const std::optional<FillLevel>& lower() const { return lower_; }
  /// Meaningless for overtwisted structures.
  FillLevel upper() const { return upper_; }
  const Citations& citations() const { return citations_; }

  std::string str() const;
  nlohmann::json to_json() const;

  friend bool operator==(const FillabilityStatus&, const FillabilityStatus&) = default;

 private:
  FillabilityStatus() = default;

  bool overtwisted_ = false;
  std::optional<FillLevel> lower_;
  FillLevel upper_ = FillLevel::Stein;
  Citations citations_;
};

/// R(s): (0, s) for s > 0, (0, inf) for s = inf, (0, inf] u (-inf, s) for
/// s < 0. Throws InvalidParameter for s = 0.
bool r_set_contains(const Slope& s, const Slope& r);

/// Contact (r)-surgery on a mixed Legendrian knot in a structure with status
/// `base`.
FillabilityStatus mixed_surgery_verdict(const FillabilityStatus& base, const Rational& r);

/// Contact (r)-surgery on a mixed Legendrian knot in a structure containing
/// planar k-torsion. Throws InvalidParameter for k < 0.
FillabilityStatus planar_torsion_verdict(const Integer& k, const Rational& r);

enum class Ambient { RationalHomologySphere, General };
/// "qhs" or "general". Throws ParseError.
Ambient parse_ambient(std::string_view text);

/// "Some contact structure on the surgered manifold has this status", never
/// a statement about all of them.
struct ExistenceVerdict {
  std::optional<FillabilityStatus> witness;
  Citations citations;

  bool exists() const { return witness.has_value(); }
  std::string str() const;
  nlohmann::json to_json() const;
};

/// Surgery with Seifert-framed coefficient r on a genus-one fibered knot with
/// monodromy w. Throws InvalidParameter for r = 0.
ExistenceVerdict fibered_surgery_verdict(const mcg::Word& w, const Slope& r, Ambient ambient);

/// The rotative contact structure with n twists on a torus bundle.
/// Throws InvalidParameter for n < 0.
FillabilityStatus rotative_bundle_status(const Integer& n);

}  // namespace contactfill::fill
