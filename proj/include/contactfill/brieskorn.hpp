#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "contactfill/citation.hpp"
#include "contactfill/fillability.hpp"
#include "json.hpp"

// Tight contact structures eta^n_{i,j} on -Sigma(2,3,6n-1) and xi^n_{i,j} on
// -Sigma(2,3,6n+1).
namespace contactfill::brieskorn {

enum class Family { Eta, Xi };

std::string_view to_string(Family f) noexcept;
/// "eta" or "xi". Throws ParseError.
Family parse_family(std::string_view text);

struct Cell {
  Family family;
  std::int64_t n;
  std::int64_t i;
  std::int64_t j;

  std::string str() const;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Eta: n >= 2, 0 <= i <= n-2, |j| <= n-i-2, j = n-i mod 2.
/// Xi:  n >= 1, 0 <= i <= n-1, |j| <= n-i-1, j != n-i mod 2.
bool is_valid(const Cell& c);

/// Cells row by row, i descending and j ascending. Throws InvalidParameter
/// when n is below the family's range.
std::vector<Cell> enumerate(Family family, std::int64_t n);

enum class CellStatusKind { SteinFillable, StrongNotLiouville, EdgeConjecturedStein };

std::string_view to_string(CellStatusKind k) noexcept;
/// S, N or C.
char code(CellStatusKind k) noexcept;

struct CellStatus {
  CellStatusKind kind;
  Citations citations;

  /// Every cell is strongly fillable; only Stein cells have a higher lower
  /// bound and only non-Liouville cells have a lower upper bound.
  fill::FillabilityStatus fillability() const;
};

/// Throws InvalidParameter for an invalid cell.
CellStatus status(const Cell& c);

/// Stabilisation counts of the Legendrian knot L_{l,r} whose Legendrian
/// surgery gives the cell: j = l - r, l + r = n-i-2 (eta) or n-i-1 (xi).
struct LegendrianParams {
  std::int64_t l;
  std::int64_t r;
  bool mixed() const { return l > 0 && r > 0; }
  friend bool operator==(const LegendrianParams&, const LegendrianParams&) = default;
};

/// Throws InvalidParameter for an invalid cell.
LegendrianParams lr_params(const Cell& c);
/// Inverse of lr_params.
Cell cell_from_lr(Family family, std::int64_t n, LegendrianParams lr);

/// Fixed-width triangle with the apex on top; each cell carries its status
/// code. Throws InvalidParameter when n is out of range.
std::string render_triangle(Family family, std::int64_t n);

/// {family, n, i, j, status, l, r, mixed, bounds, citations}
nlohmann::json to_json(const Cell& c);

}  // namespace contactfill::brieskorn
