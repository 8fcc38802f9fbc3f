#include "contactfill/brieskorn.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "contactfill/error.hpp"

namespace contactfill::brieskorn {

namespace {

// Largest |j| allowed in row i.
std::int64_t row_width(Family f, std::int64_t n, std::int64_t i) {
  return f == Family::Eta ? n - i - 2 : n - i - 1;
}

std::int64_t min_n(Family f) { return f == Family::Eta ? 2 : 1; }
std::int64_t top_row(Family f, std::int64_t n) { return f == Family::Eta ? n - 2 : n - 1; }

void require_n(Family f, std::int64_t n) {
  if (n < min_n(f)) {
    throw DomainError(ErrorKind::InvalidParameter, std::string(to_string(f)) + " requires n >= " +
                                                       std::to_string(min_n(f)) + ", got " + std::to_string(n));
  }
}

void require_valid(const Cell& c) {
  if (!is_valid(c)) throw DomainError(ErrorKind::InvalidParameter, "invalid cell " + c.str());
}

bool even(std::int64_t x) { return x % 2 == 0; }

CellStatus eta_status(const Cell& c) {
  const auto [family, n, i, j] = c;
  const std::int64_t aj = std::abs(j);
  const Citation& base = cite::eta_classification();
  if (i == 0) return {CellStatusKind::SteinFillable, {base, cite::eta_stein_bottom_row()}};
  if (n == 4 && i == 1 && aj == 1) return {CellStatusKind::SteinFillable, {base, cite::eta4_announced_stein()}};
  if (i == n - 2 && j == 0 && n >= 3) return {CellStatusKind::StrongNotLiouville, {base, cite::eta_apex()}};
  if (n > 3 && 0 < i && i < n - 3 && aj < n - i - 2) {
    return {CellStatusKind::StrongNotLiouville, {base, cite::inner_triangle(), cite::rotative_torus_bundle()}};
  }
  // Parity leaves only edge cells in the band i = n-3, so nothing else remains.
  if (!(n > 2 && 1 <= i && i <= n - 3 && aj == n - i - 2)) {
    throw std::logic_error("eta status rules do not cover " + c.str());
  }
  return {CellStatusKind::EdgeConjecturedStein, {base, cite::edge_conjecture()}};
}

CellStatus xi_status(const Cell& c) {
  const auto [family, n, i, j] = c;
  const std::int64_t aj = std::abs(j);
  const Citation& base = cite::xi_classification();
  if (i == 0) return {CellStatusKind::SteinFillable, {base, cite::xi_stein_bottom_row()}};
  if (j == 0 && 1 <= i && i <= n - 1 && n >= 2) {
    return {CellStatusKind::StrongNotLiouville, {base, cite::xi_central_column()}};
  }
  if (n > 3 && 0 < i && i < n - 2 && aj < n - i - 1) {
    return {CellStatusKind::StrongNotLiouville, {base, cite::inner_triangle(), cite::rotative_torus_bundle()}};
  }
  if (!(n > 2 && 1 <= i && i <= n - 2 && aj == n - i - 1)) {
    throw std::logic_error("xi status rules do not cover " + c.str());
  }
  return {CellStatusKind::EdgeConjecturedStein, {base, cite::edge_conjecture()}};
}

}  // namespace

std::string_view to_string(Family f) noexcept { return f == Family::Eta ? "eta" : "xi"; }

Family parse_family(std::string_view text) {
  if (text == "eta") return Family::Eta;
  if (text == "xi") return Family::Xi;
  throw DomainError(ErrorKind::ParseError, "unknown family '" + std::string(text) + "' (expected eta or xi)");
}

std::string Cell::str() const {
  return std::string(to_string(family)) + "^" + std::to_string(n) + "_{" + std::to_string(i) + "," +
         std::to_string(j) + "}";
}

bool is_valid(const Cell& c) {
  if (c.n < min_n(c.family) || c.i < 0 || c.i > top_row(c.family, c.n)) return false;
  if (std::abs(c.j) > row_width(c.family, c.n, c.i)) return false;
  const bool same_parity = even(c.j) == even(c.n - c.i);
  return c.family == Family::Eta ? same_parity : !same_parity;
}

std::vector<Cell> enumerate(Family family, std::int64_t n) {
  require_n(family, n);
  std::vector<Cell> out;
  for (std::int64_t i = top_row(family, n); i >= 0; --i) {
    const std::int64_t w = row_width(family, n, i);
    for (std::int64_t j = -w; j <= w; ++j) {
      Cell c{family, n, i, j};
      if (is_valid(c)) out.push_back(c);
    }
  }
  return out;
}

std::string_view to_string(CellStatusKind k) noexcept {
  switch (k) {
    case CellStatusKind::SteinFillable: return "stein-fillable";
    case CellStatusKind::StrongNotLiouville: return "strong-not-liouville";
    case CellStatusKind::EdgeConjecturedStein: return "edge-conjectured-stein";
  }
  return "?";
}

char code(CellStatusKind k) noexcept {
  switch (k) {
    case CellStatusKind::SteinFillable: return 'S';
    case CellStatusKind::StrongNotLiouville: return 'N';
    case CellStatusKind::EdgeConjecturedStein: return 'C';
  }
  return '?';
}

fill::FillabilityStatus CellStatus::fillability() const {
  using fill::FillLevel;
  switch (kind) {
    case CellStatusKind::SteinFillable:
      return fill::FillabilityStatus::tight(FillLevel::Stein, FillLevel::Stein, citations);
    case CellStatusKind::StrongNotLiouville:
      return fill::FillabilityStatus::tight(FillLevel::Strong, FillLevel::Strong, citations);
    case CellStatusKind::EdgeConjecturedStein:
      return fill::FillabilityStatus::tight(FillLevel::Strong, FillLevel::Stein, citations);
  }
  throw std::logic_error("unknown cell status");
}

CellStatus status(const Cell& c) {
  require_valid(c);
  return c.family == Family::Eta ? eta_status(c) : xi_status(c);
}

LegendrianParams lr_params(const Cell& c) {
  require_valid(c);
  const std::int64_t s = row_width(c.family, c.n, c.i);
  return {(s + c.j) / 2, (s - c.j) / 2};
}

Cell cell_from_lr(Family family, std::int64_t n, LegendrianParams lr) {
  const std::int64_t offset = family == Family::Eta ? 2 : 1;
  return {family, n, n - lr.l - lr.r - offset, lr.l - lr.r};
}

std::string render_triangle(Family family, std::int64_t n) {
  require_n(family, n);
  const auto cells = enumerate(family, n);
  auto label = [](const Cell& c) {
    return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")" + code(status(c).kind);
  };
  std::size_t longest = 0;
  for (const auto& c : cells) longest = std::max(longest, label(c).size());
  // Cells in one row sit two j-steps apart, so a j-step of (longest+1)/2
  // columns keeps neighbours separated by at least one space.
  const std::int64_t step = static_cast<std::int64_t>((longest + 2) / 2);
  const std::int64_t reach = row_width(family, n, 0);

  const std::int64_t sigma = family == Family::Eta ? 6 * n - 1 : 6 * n + 1;
  std::string out = std::string(to_string(family)) + "^" + std::to_string(n) + " on -Sigma(2,3," +
                    std::to_string(sigma) + "): " + std::to_string(cells.size()) +
                    (cells.size() == 1 ? " tight contact structure" : " tight contact structures") + " (i,j)\n";
  for (std::int64_t i = top_row(family, n); i >= 0; --i) {
    std::string row;
    for (const auto& c : cells) {
      if (c.i != i) continue;
      const std::string text = label(c);
      const std::int64_t centre = (c.j + reach) * step + step;
      const std::int64_t start = std::max<std::int64_t>(0, centre - static_cast<std::int64_t>(text.size()) / 2);
      if (static_cast<std::int64_t>(row.size()) < start) row.resize(static_cast<std::size_t>(start), ' ');
      row += text;
    }
    out += row + "\n";
  }
  out += "S = Stein fillable, N = strongly fillable but not Liouville fillable, "
         "C = strongly fillable, conjectured Stein (edge)\n";
  return out;
}

nlohmann::json to_json(const Cell& c) {
  const CellStatus st = status(c);
  const LegendrianParams lr = lr_params(c);
  const auto bounds = st.fillability().to_json()["bounds"];
  return {{"family", to_string(c.family)},
          {"n", c.n},
          {"i", c.i},
          {"j", c.j},
          {"status", to_string(st.kind)},
          {"l", lr.l},
          {"r", lr.r},
          {"mixed", lr.mixed()},
          {"bounds", bounds},
          {"citations", contactfill::to_json(st.citations)}};
}

}  // namespace contactfill::brieskorn
