#include "contactfill/cli.hpp"

#include <functional>
#include <optional>
#include <string_view>

#include "CLI11.hpp"
#include "contactfill/brieskorn.hpp"
#include "contactfill/error.hpp"
#include "contactfill/farey.hpp"
#include "contactfill/fillability.hpp"
#include "contactfill/mcg.hpp"
#include "contactfill/surgery.hpp"
#include "json.hpp"

namespace contactfill::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Output {
  std::string command;
  json result;
  std::string text;
};

json slopes_json(const std::vector<Slope>& slopes) {
  auto out = json::array();
  for (const auto& s : slopes) out.push_back(s.str());
  return out;
}

std::string slopes_text(const std::vector<Slope>& slopes) {
  std::string out;
  for (const auto& s : slopes) out += (out.empty() ? "" : " ") + s.str();
  return out.empty() ? "(none)" : out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Every leaf subcommand registers its positionals and a body that fills the
// output; computation lives in the library.
class Commands {
 public:
  Commands(CLI::App& app, Output& out) : app_(app), out_(out) {}

  void install() {
    farey();
    mcg();
    surgery();
    fill();
    brieskorn();
  }

 private:
  CLI::App* group(const std::string& name, const std::string& help) {
    auto* g = app_.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  }

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help,
                 std::vector<std::pair<std::string, std::string*>> positionals, std::function<void()> body) {
    auto* cmd = parent->add_subcommand(name, help);
    for (auto& [pname, target] : positionals) cmd->add_option(pname, *target)->required();
    const std::string full = parent->get_name() + " " + name;
    cmd->callback([this, full, body = std::move(body)] {
      out_.command = full;
      body();
    });
    return cmd;
  }

  void set(json result, std::string text) {
    out_.result = std::move(result);
    out_.text = std::move(text);
  }

  void farey() {
    auto* g = group("farey", "Farey graph arithmetic");
    leaf(g, "sum", "Farey sum of two slopes", {{"r", &s1_}, {"s", &s2_}}, [this] {
      const Slope v = farey_sum(Slope::parse(s1_), Slope::parse(s2_));
      set({{"slope", v.str()}}, v.str());
    });
    leaf(g, "mult", "Farey multiplication p_r q_s - q_r p_s", {{"r", &s1_}, {"s", &s2_}}, [this] {
      const Integer v = farey_mult(Slope::parse(s1_), Slope::parse(s2_));
      set({{"value", v.str()}}, v.str());
    });
    leaf(g, "edge", "Whether two slopes span a Farey edge", {{"r", &s1_}, {"s", &s2_}}, [this] {
      const Slope r = Slope::parse(s1_), s = Slope::parse(s2_);
      const bool e = has_edge(r, s);
      set({{"edge", e}, {"product", farey_mult(r, s).str()}}, yes_no(e));
    });
    leaf(g, "arc", "Whether t lies strictly inside the clockwise arc from..to",
         {{"t", &s1_}, {"from", &s2_}, {"to", &s3_}}, [this] {
           const bool in = in_clockwise_arc(Slope::parse(s1_), Slope::parse(s2_), Slope::parse(s3_));
           set({{"inside", in}}, yes_no(in));
         });
    leaf(g, "neighbors", "Farey neighbours of s0 inside the clockwise arc from..to",
         {{"s0", &s1_}, {"from", &s2_}, {"to", &s3_}}, [this] {
           const auto v = neighbors_in_arc(Slope::parse(s1_), Slope::parse(s2_), Slope::parse(s3_));
           set({{"slopes", slopes_json(v)}}, slopes_text(v));
         });
    leaf(g, "disk", "Exact point of a slope on the boundary of the Poincare disk", {{"s", &s1_}}, [this] {
      const DiskPoint d = to_disk(Slope::parse(s1_));
      set({{"x", format(d.x)}, {"y", format(d.y)}}, "(" + format(d.x) + ", " + format(d.y) + ")");
    });
  }

  void mcg() {
    auto* g = group("mcg", "Genus-one mapping classes");
    leaf(g, "eval", "SL(2,Z) matrix of a word", {{"word", &s1_}}, [this] {
      const mcg::MatSL2 m = mcg::evaluate(mcg::Word::parse(s1_));
      const auto row = [](const Integer& x, const Integer& y) { return nlohmann::json::array({x.str(), y.str()}); };
      set({{"matrix", nlohmann::json::array({row(m.m11(), m.m12()), row(m.m21(), m.m22())})},
           {"trace", m.trace().str()}},
          m.str());
    });
    leaf(g, "classify", "Nielsen-Thurston type", {{"word", &s1_}}, [this] {
      const mcg::Word w = mcg::Word::parse(s1_);
      const auto t = mcg::nt_classify(w);
      set({{"type", mcg::to_string(t)}, {"trace", mcg::evaluate(w).trace().str()}}, std::string(mcg::to_string(t)));
    });
    leaf(g, "fdtc", "Fractional Dehn twist coefficient", {{"word", &s1_}}, [this] {
      const Rational c = mcg::fdtc(mcg::Word::parse(s1_));
      set({{"fdtc", format(c)}}, format(c));
    });
    leaf(g, "rv", "Right-veering test", {{"word", &s1_}}, [this] {
      const mcg::Word w = mcg::Word::parse(s1_);
      const auto v = mcg::right_veering(w);
      set({{"right_veering", mcg::to_string(v)},
           {"type", mcg::to_string(mcg::nt_classify(w))},
           {"fdtc", format(mcg::fdtc(w))}},
          std::string(mcg::to_string(v)));
    });
    leaf(g, "nk", "The integer n_K of a genus-one fibered knot", {{"word", &s1_}}, [this] {
      const mcg::Word w = mcg::Word::parse(s1_);
      const Integer n = mcg::n_K(w);
      set({{"n_K", n.str()}, {"type", mcg::to_string(mcg::nt_classify(w))}, {"fdtc", format(mcg::fdtc(w))}},
          n.str());
    });
    leaf(g, "normalform", "Literal match against the six normal-form templates", {{"word", &s1_}}, [this] {
      const auto nf = mcg::recognize_normal_form(mcg::Word::parse(s1_));
      if (!nf) {
        set({{"matched", false}, {"type", nullptr}, {"n", nullptr}, {"r", nullptr}, {"m", nullptr}}, "no match");
        return;
      }
      set({{"matched", true},
           {"type", nf->type},
           {"n", nf->delta_power},
           {"r", nf->r.empty() ? json(nullptr) : json(nf->r)},
           {"m", nf->m ? json(*nf->m) : json(nullptr)}},
          nf->str());
    });
  }

  void surgery() {
    auto* g = group("surgery", "Surgery coefficients and framings");
    leaf(g, "topo", "Topological coefficient tb + r of contact (r)-surgery", {{"r", &s1_}, {"tb", &s2_}}, [this] {
      const Rational v = surgery::topological_coefficient(parse_rational(s1_), parse_integer(s2_));
      set({{"coefficient", format(v)}}, format(v));
    });
    auto* framing = leaf(g, "framing", "Dividing slope after transverse surgery", {{"slope", &s1_}}, [this] {
      const auto kind = kind_ == "admissible" ? surgery::TransverseSurgery::AdmissibleMinusOne
                                              : surgery::TransverseSurgery::InadmissiblePlusOne;
      Slope s = Slope::parse(s1_);
      for (int k = 0; k < times_; ++k) s = surgery::transverse_framing_update(s, kind);
      set({{"slope", s.str()}}, s.str());
    });
    framing->add_option("--kind", kind_, "admissible (-1) or inadmissible (+1)")
        ->required()
        ->check(CLI::IsMember({"admissible", "inadmissible"}));
    framing->add_option("--times", times_, "number of surgeries")->check(CLI::NonNegativeNumber);
    leaf(g, "meridian", "Product framing to meridian: [[0,-1],[1,0]] on (q,p)", {{"slope", &s1_}}, [this] {
      const Slope s = surgery::meridian_conversion(Slope::parse(s1_));
      set({{"slope", s.str()}}, s.str());
    });
    leaf(g, "binding-slope", "Dividing slope of the binding neighbourhood", {{"word", &s1_}, {"n", &s2_}}, [this] {
      const Slope s = surgery::binding_neighborhood_slope(mcg::Word::parse(s1_), parse_integer(s2_));
      set({{"slope", s.str()}}, s.str());
    });
    leaf(g, "menke", "Decomposition slopes for a mixed torus",
         {{"s_minus", &s1_}, {"s_zero", &s2_}, {"s_plus", &s3_}}, [this] {
           const surgery::MixedTorus t(Slope::parse(s1_), Slope::parse(s2_), Slope::parse(s3_));
           const auto v = surgery::menke_candidates(t);
           set({{"slopes", slopes_json(v)}}, slopes_text(v));
         });
    leaf(g, "unique-tight", "Whether S(r,0;l) has a unique tight structure", {{"r", &s1_}}, [this] {
      const bool u = surgery::unique_tight_lower(Slope::parse(s1_));
      set({{"unique", u}}, yes_no(u));
    });
    leaf(g, "lens", "Lens space p/q = 1/(r-1) split off by mixed surgery", {{"r", &s1_}}, [this] {
      const Slope s = surgery::lens_from_mixed_surgery(parse_rational(s1_));
      const bool sphere = abs(s.p()) == 1;
      set({{"slope", s.str()}, {"three_sphere", sphere}}, s.str() + (sphere ? " (three-sphere)" : ""));
    });
    leaf(g, "seifert", "Seifert-framed coefficient of contact (r)-surgery, r < 0", {{"word", &s1_}, {"r", &s2_}},
         [this] {
           const mcg::Word w = mcg::Word::parse(s1_);
           const Slope s = surgery::seifert_coefficient(w, parse_rational(s2_));
           set({{"slope", s.str()}, {"n_K", mcg::n_K(w).str()}}, s.str());
         });
  }

  void fill() {
    auto* g = group("fill", "Fillability verdicts");
    leaf(g, "rset", "Membership r in R(s)", {{"s", &s1_}, {"r", &s2_}}, [this] {
      const bool in = fill::r_set_contains(Slope::parse(s1_), Slope::parse(s2_));
      set({{"contains", in}}, yes_no(in));
    });
    auto* mixed = leaf(g, "mixed", "Contact (r)-surgery on a mixed Legendrian knot", {{"r", &s1_}}, [this] {
      fill::FillabilityStatus base = fill::FillabilityStatus::unknown();
      if (base_overtwisted_) {
        base = fill::FillabilityStatus::overtwisted();
      } else {
        std::optional<fill::FillLevel> lower;
        if (base_lower_ != "none") lower = fill::parse_fill_level(base_lower_);
        base = fill::FillabilityStatus::tight(lower, fill::parse_fill_level(base_upper_));
      }
      status(fill::mixed_surgery_verdict(base, parse_rational(s1_)));
    });
    mixed->add_option("--base-lower", base_lower_, "strongest filling known for the ambient (or none)");
    mixed->add_option("--base-upper", base_upper_, "strongest filling not excluded for the ambient");
    mixed->add_flag("--base-overtwisted", base_overtwisted_, "the ambient structure is overtwisted");
    leaf(g, "torsion", "Mixed-knot surgery in a structure with planar k-torsion", {{"k", &s1_}, {"r", &s2_}},
         [this] { status(fill::planar_torsion_verdict(parse_integer(s1_), parse_rational(s2_))); });
    auto* fibered = leaf(g, "fibered", "Surgery on a genus-one fibered knot", {{"word", &s1_}, {"r", &s2_}}, [this] {
      const auto v = fill::fibered_surgery_verdict(mcg::Word::parse(s1_), Slope::parse(s2_),
                                                   fill::parse_ambient(ambient_));
      set(v.to_json(), v.str());
    });
    fibered->add_option("--ambient", ambient_, "qhs (rational homology sphere) or general")
        ->check(CLI::IsMember({"qhs", "general"}));
    leaf(g, "rotative", "Rotative contact structure on a torus bundle", {{"n", &s1_}},
         [this] { status(fill::rotative_bundle_status(parse_integer(s1_))); });
  }

  void status(const fill::FillabilityStatus& s) { set(s.to_json(), s.str()); }

  void brieskorn() {
    auto* g = group("brieskorn", "Tight contact structures on -Sigma(2,3,6n-+1)");
    leaf(g, "list", "All cells of a family", {{"family", &s1_}, {"n", &s2_}}, [this] {
      const auto cells = brieskorn::enumerate(brieskorn::parse_family(s1_), to_int64(parse_integer(s2_)));
      auto arr = json::array();
      std::string text;
      for (const auto& c : cells) {
        arr.push_back(brieskorn::to_json(c));
        const auto lr = brieskorn::lr_params(c);
        text += c.str() + "  " + std::string(brieskorn::to_string(brieskorn::status(c).kind)) + "  l=" +
                std::to_string(lr.l) + " r=" + std::to_string(lr.r) + (lr.mixed() ? " mixed" : "") + "\n";
      }
      set({{"cells", arr}}, text);
    });
    leaf(g, "status", "Fillability status of one cell", {{"family", &s1_}, {"n", &s2_}, {"i", &s3_}, {"j", &s4_}},
         [this] {
           const auto c = cell();
           const auto st = brieskorn::status(c);
           std::string text = c.str() + ": " + std::string(brieskorn::to_string(st.kind)) + "\n" +
                              st.fillability().str();
           set(brieskorn::to_json(c), text);
         });
    leaf(g, "triangle", "Triangle table of a family", {{"family", &s1_}, {"n", &s2_}}, [this] {
      const auto family = brieskorn::parse_family(s1_);
      const auto n = to_int64(parse_integer(s2_));
      const std::string table = brieskorn::render_triangle(family, n);
      auto arr = json::array();
      for (const auto& c : brieskorn::enumerate(family, n)) arr.push_back(brieskorn::to_json(c));
      set({{"triangle", table}, {"cells", arr}}, table);
    });
    leaf(g, "lr", "Legendrian stabilisation counts (l, r) of a cell",
         {{"family", &s1_}, {"n", &s2_}, {"i", &s3_}, {"j", &s4_}}, [this] {
           const auto lr = brieskorn::lr_params(cell());
           set({{"l", lr.l}, {"r", lr.r}, {"mixed", lr.mixed()}},
               "l=" + std::to_string(lr.l) + " r=" + std::to_string(lr.r) + (lr.mixed() ? " (mixed)" : ""));
         });
  }

  brieskorn::Cell cell() const {
    return {brieskorn::parse_family(s1_), to_int64(parse_integer(s2_)), to_int64(parse_integer(s3_)),
            to_int64(parse_integer(s4_))};
  }

  CLI::App& app_;
  Output& out_;
  std::string s1_, s2_, s3_, s4_;
  std::string kind_;
  int times_ = 1;
  std::string base_lower_ = "none";
  std::string base_upper_ = "stein";
  bool base_overtwisted_ = false;
  std::string ambient_ = "qhs";
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for contact surgery, Farey graphs and genus-one monodromies", "contactfill"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "print a single JSON document");
  Output output;
  Commands commands(app, output);
  commands.install();

  auto emit_error = [&](std::string_view name, const std::string& message) {
    err << "error: " << name << ": " << message << "\n";
    if (as_json) {
      out << json{{"schema_version", kSchemaVersion},
                  {"command", output.command},
                  {"error", {{"name", name}, {"message", message}}}}
                 .dump(2)
          << "\n";
    }
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error("UsageError", e.what());
    return kExitUsage;
  } catch (const DomainError& e) {
    if (e.kind() == ErrorKind::ParseError) {
      emit_error(e.name(), e.what());
      return kExitUsage;
    }
    emit_error(e.name(), e.what());
    return kExitDomain;
  }

  if (as_json) {
    out << json{{"schema_version", kSchemaVersion}, {"command", output.command}, {"result", output.result}}.dump(2)
        << "\n";
  } else {
    out << output.text;
    if (output.text.empty() || output.text.back() != '\n') out << "\n";
  }
  return kExitOk;
}

}  // namespace contactfill::cli
