#include "contactfill/fillability.hpp"

#include <algorithm>

#include "contactfill/error.hpp"

namespace contactfill::fill {

std::string_view to_string(FillLevel level) noexcept {
  switch (level) {
    case FillLevel::Tight: return "tight";
    case FillLevel::Weak: return "weak";
    case FillLevel::Strong: return "strong";
    case FillLevel::Liouville: return "liouville";
    case FillLevel::Stein: return "stein";
  }
  return "?";
}

FillLevel parse_fill_level(std::string_view text) {
  for (auto level : {FillLevel::Tight, FillLevel::Weak, FillLevel::Strong, FillLevel::Liouville, FillLevel::Stein}) {
    if (text == to_string(level)) return level;
  }
  throw DomainError(ErrorKind::ParseError, "unknown fillability level '" + std::string(text) + "'");
}

namespace {

std::string_view excluded_text(FillLevel upper) {
  switch (upper) {
    case FillLevel::Tight: return "not weakly fillable";
    case FillLevel::Weak: return "not strongly fillable";
    case FillLevel::Strong: return "not Liouville fillable";
    case FillLevel::Liouville: return "not Stein fillable";
    case FillLevel::Stein: return "nothing excluded";
  }
  return "";
}

void add_citation(Citations& out, const Citation& c) {
  if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
}

std::string citations_text(const Citations& citations) {
  std::string out;
  if (citations.empty()) return out;
  out += "citations:\n";
  for (const auto& c : citations) out += "  [" + c.id + "] " + c.statement + "\n";
  return out;
}

}  // namespace

FillabilityStatus FillabilityStatus::overtwisted(Citations citations) {
  FillabilityStatus s;
  s.overtwisted_ = true;
  s.upper_ = FillLevel::Tight;
  s.citations_ = std::move(citations);
  return s;
}

FillabilityStatus FillabilityStatus::tight(std::optional<FillLevel> lower, FillLevel upper, Citations citations) {
  if (lower && *lower > upper) {
    throw DomainError(ErrorKind::InvalidParameter, "lower bound " + std::string(to_string(*lower)) +
                                                       " exceeds upper bound " + std::string(to_string(upper)));
  }
  FillabilityStatus s;
  s.lower_ = lower;
  s.upper_ = upper;
  s.citations_ = std::move(citations);
  return s;
}

std::string FillabilityStatus::str() const {
  std::string out;
  if (overtwisted_) {
    out += "status: overtwisted\n";
  } else {
    out += "status: tight\n";
    out += "lower bound: " + std::string(lower_ ? to_string(*lower_) : "none asserted") + "\n";
    out += "upper bound: " + std::string(to_string(upper_)) + " (" + std::string(excluded_text(upper_)) + ")\n";
  }
  return out + citations_text(citations_);
}

nlohmann::json FillabilityStatus::to_json() const {
  nlohmann::json j;
  j["status"] = overtwisted_ ? "overtwisted" : "tight";
  if (overtwisted_) {
    j["bounds"] = nullptr;
  } else {
    j["bounds"] = {{"lower", lower_ ? nlohmann::json(to_string(*lower_)) : nlohmann::json(nullptr)},
                   {"upper", to_string(upper_)}};
  }
  j["citations"] = contactfill::to_json(citations_);
  return j;
}

bool r_set_contains(const Slope& s, const Slope& r) {
  if (s.p() == 0) throw DomainError(ErrorKind::InvalidParameter, "R(s) is undefined for s = 0");
  if (s.is_infinite()) return !r.is_infinite() && r.p() > 0;
  if (s.p() > 0) return !r.is_infinite() && r.p() > 0 && r.value() < s.value();
  if (r.is_infinite()) return true;
  return r.p() > 0 || r.value() < s.value();
}

FillabilityStatus mixed_surgery_verdict(const FillabilityStatus& base, const Rational& r) {
  if (r >= 0) return FillabilityStatus::overtwisted({cite::mixed_nonnegative_overtwisted()});

  // An overtwisted ambient structure is in particular not weakly fillable.
  const FillLevel base_upper = base.is_overtwisted() ? FillLevel::Tight : base.upper();
  FillLevel upper = FillLevel::Stein;
  std::optional<FillLevel> lower;
  Citations citations;
  if (base_upper < FillLevel::Liouville) {
    upper = std::min(upper, FillLevel::Strong);
    add_citation(citations, cite::mixed_surgery());
  }
  if (base_upper < FillLevel::Weak) upper = FillLevel::Tight;
  if (!base.is_overtwisted() && base.lower() && *base.lower() >= FillLevel::Weak) {
    lower = FillLevel::Weak;
    add_citation(citations, cite::negative_surgery_preserves_weak());
  }
  return FillabilityStatus::tight(lower, upper, std::move(citations));
}

FillabilityStatus planar_torsion_verdict(const Integer& k, const Rational& r) {
  if (k < 0) throw DomainError(ErrorKind::InvalidParameter, "planar torsion order must be non-negative");
  if (r >= 0) return FillabilityStatus::overtwisted({cite::mixed_nonnegative_overtwisted()});
  return FillabilityStatus::tight(std::nullopt, FillLevel::Strong,
                                  {cite::planar_torsion_not_strong(), cite::mixed_surgery()});
}

Ambient parse_ambient(std::string_view text) {
  if (text == "qhs") return Ambient::RationalHomologySphere;
  if (text == "general") return Ambient::General;
  throw DomainError(ErrorKind::ParseError, "unknown ambient '" + std::string(text) + "' (expected qhs or general)");
}

std::string ExistenceVerdict::str() const {
  std::string out;
  if (!witness) {
    out += "verdict: no conclusion\n";
    return out + citations_text(citations);
  }
  out += "verdict: there exists a contact structure with\n";
  out += "  lower bound: " + std::string(to_string(*witness->lower())) + "\n";
  out += "  upper bound: " + std::string(to_string(witness->upper())) + " (" +
         std::string(excluded_text(witness->upper())) + ")\n";
  return out + citations_text(citations);
}

nlohmann::json ExistenceVerdict::to_json() const {
  nlohmann::json j;
  j["kind"] = "existential";
  j["outcome"] = witness ? "exists" : "no-conclusion";
  j["witness"] = witness ? witness->to_json() : nlohmann::json(nullptr);
  j["citations"] = contactfill::to_json(citations);
  return j;
}

ExistenceVerdict fibered_surgery_verdict(const mcg::Word& w, const Slope& r, Ambient ambient) {
  if (r.p() == 0) throw DomainError(ErrorKind::InvalidParameter, "0-surgery is never in R(1/n_K)");
  const Slope bound(Integer(1), mcg::n_K(w));
  const bool qhs = ambient == Ambient::RationalHomologySphere;
  const Citation& theorem = qhs ? cite::fibered_rational_homology_sphere() : cite::fibered_general();

  ExistenceVerdict v;
  v.citations.push_back(theorem);
  if (!r_set_contains(bound, r)) return v;

  Citations trail{theorem, cite::rotative_torus_bundle(), cite::mixed_surgery(),
                  cite::negative_surgery_preserves_weak()};
  if (qhs) trail.push_back(cite::weak_to_strong());
  v.witness = FillabilityStatus::tight(qhs ? FillLevel::Strong : FillLevel::Weak, FillLevel::Strong, trail);
  v.citations = std::move(trail);
  return v;
}

FillabilityStatus rotative_bundle_status(const Integer& n) {
  if (n < 0) throw DomainError(ErrorKind::InvalidParameter, "twist count must be non-negative");
  if (n == 0) return FillabilityStatus::tight(FillLevel::Tight, FillLevel::Stein);
  return FillabilityStatus::tight(FillLevel::Weak, FillLevel::Weak, {cite::rotative_torus_bundle()});
}

}  // namespace contactfill::fill
