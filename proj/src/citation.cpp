#include "contactfill/citation.hpp"

namespace contactfill {

namespace cite {

#define CONTACTFILL_CITATION(fn, id, text) \
  const Citation& fn() {                   \
    static const Citation c{id, text};     \
    return c;                              \
  }

CONTACTFILL_CITATION(mixed_surgery, "mixed-surgery",
                     "Contact (r)-surgery on a mixed Legendrian knot S+S-(L') cannot create a Liouville or "
                     "weak filling: a non-Liouville (non-weakly) fillable ambient stays so after surgery.")
CONTACTFILL_CITATION(mixed_nonnegative_overtwisted, "mixed-nonnegative-overtwisted",
                     "Contact (r)-surgery with r >= 0 on a mixed Legendrian knot yields an overtwisted "
                     "contact structure.")
CONTACTFILL_CITATION(negative_surgery_preserves_weak, "negative-surgery-weak",
                     "Negative contact surgery preserves weak fillability.")
CONTACTFILL_CITATION(planar_torsion_not_strong, "planar-torsion",
                     "A contact manifold containing planar k-torsion (k >= 0) is not strongly fillable "
                     "(Wendl).")
CONTACTFILL_CITATION(fibered_rational_homology_sphere, "fibered-qhs",
                     "For a genus-one fibered knot K in a rational homology sphere Y and r in R(1/n_K), "
                     "Y_r(K) carries a strongly fillable contact structure with no Liouville filling.")
CONTACTFILL_CITATION(fibered_general, "fibered-general",
                     "For a genus-one fibered knot K in a closed 3-manifold Y and r in R(1/n_K), Y_r(K) "
                     "carries a weakly fillable contact structure with no Liouville filling.")
CONTACTFILL_CITATION(weak_to_strong, "weak-to-strong",
                     "A weak filling of a rational homology sphere can be deformed into a strong filling "
                     "(Ohta-Ono).")
CONTACTFILL_CITATION(rotative_torus_bundle, "rotative-torus-bundle",
                     "The rotative contact structure with n >= 1 twists on a torus bundle is weakly but "
                     "not strongly fillable (Gay; Eliashberg for T^3).")
CONTACTFILL_CITATION(eta_classification, "eta-classification",
                     "-Sigma(2,3,6n-1) carries exactly n(n-1)/2 tight contact structures eta^n_{i,j}, all "
                     "strongly fillable (Ghiggini-Van Horn-Morris).")
CONTACTFILL_CITATION(eta_stein_bottom_row, "eta-stein-bottom-row",
                     "eta^n_{0,j} is Stein fillable (Ghiggini-Van Horn-Morris).")
CONTACTFILL_CITATION(eta_apex, "eta-apex",
                     "eta^n_{n-2,0} is not Liouville fillable for n >= 3 (Ghiggini).")
CONTACTFILL_CITATION(eta4_announced_stein, "eta4-announced-stein",
                     "Stein fillings of eta^4_{1,+-1} are announced in forthcoming work (Etnyre-Tosun "
                     "et al.); status: announced.")
CONTACTFILL_CITATION(xi_classification, "xi-classification",
                     "-Sigma(2,3,6n+1) carries exactly n(n+1)/2 tight contact structures xi^n_{i,j}, all "
                     "strongly fillable (Tosun).")
CONTACTFILL_CITATION(xi_stein_bottom_row, "xi-stein-bottom-row", "xi^n_{0,j} is Stein fillable (Tosun).")
CONTACTFILL_CITATION(xi_central_column, "xi-central-column",
                     "xi^n_{i,0} is not Liouville fillable for 1 <= i <= n-1, n >= 2 (Tosun).")
CONTACTFILL_CITATION(inner_triangle, "inner-triangle",
                     "Cells with l, r > 0 arise from Legendrian surgery on a mixed knot in a rotative "
                     "torus bundle, hence are strongly fillable but not Liouville fillable.")
CONTACTFILL_CITATION(edge_conjecture, "edge-conjecture",
                     "Conjecture: the edge cells eta^n_{i,+-(n-i-2)} and xi^n_{i,+-(n-i-1)}, i >= 1, are "
                     "Stein fillable.")

#undef CONTACTFILL_CITATION

}  // namespace cite

nlohmann::json to_json(const Citations& citations) {
  auto out = nlohmann::json::array();
  for (const auto& c : citations) out.push_back({{"id", c.id}, {"statement", c.statement}});
  return out;
}

}  // namespace contactfill
