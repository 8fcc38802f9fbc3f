#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace contactfill {

/// A named mathematical fact that a verdict relies on.
struct Citation {
  std::string id;
  std::string statement;
  friend bool operator==(const Citation&, const Citation&) = default;
};

using Citations = std::vector<Citation>;

namespace cite {
const Citation& mixed_surgery();
const Citation& mixed_nonnegative_overtwisted();
const Citation& negative_surgery_preserves_weak();
const Citation& planar_torsion_not_strong();
const Citation& fibered_rational_homology_sphere();
const Citation& fibered_general();
const Citation& weak_to_strong();
const Citation& rotative_torus_bundle();
const Citation& eta_classification();
const Citation& eta_stein_bottom_row();
const Citation& eta_apex();
const Citation& eta4_announced_stein();
const Citation& xi_classification();
const Citation& xi_stein_bottom_row();
const Citation& xi_central_column();
const Citation& inner_triangle();
const Citation& edge_conjecture();
}  // namespace cite

nlohmann::json to_json(const Citations& citations);

}  // namespace contactfill
