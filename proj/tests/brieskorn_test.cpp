#include "contactfill/brieskorn.hpp"

#include <cstdlib>

#include <gtest/gtest.h>

#include "contactfill/error.hpp"

using namespace contactfill;
using namespace contactfill::brieskorn;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> coords(const std::vector<Cell>& cells) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& c : cells) out.emplace_back(c.i, c.j);
  return out;
}

std::int64_t span(const Cell& c) { return c.family == Family::Eta ? c.n - c.i - 2 : c.n - c.i - 1; }

const std::vector<std::pair<std::int64_t, std::int64_t>> kTenCells = {
    {3, 0}, {2, -1}, {2, 1}, {1, -2}, {1, 0}, {1, 2}, {0, -3}, {0, -1}, {0, 1}, {0, 3}};

}  // namespace

TEST(EnumerateTest, PublishedTables) {
  EXPECT_EQ(coords(enumerate(Family::Eta, 5)), kTenCells);
  EXPECT_EQ(coords(enumerate(Family::Xi, 4)), kTenCells);
  EXPECT_EQ(coords(enumerate(Family::Eta, 2)), (std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 0}}));
  EXPECT_THROW(enumerate(Family::Eta, 1), DomainError);
  EXPECT_THROW(enumerate(Family::Xi, 0), DomainError);
}

TEST(EnumerateTest, Counts) {
  for (std::int64_t n = 2; n <= 50; ++n) {
    EXPECT_EQ(enumerate(Family::Eta, n).size(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
  for (std::int64_t n = 1; n <= 50; ++n) {
    EXPECT_EQ(enumerate(Family::Xi, n).size(), static_cast<std::size_t>(n * (n + 1) / 2));
  }
}

TEST(EnumerateTest, MatchesBruteForceValidity) {
  for (Family f : {Family::Eta, Family::Xi}) {
    for (std::int64_t n = 2; n <= 12; ++n) {
      std::vector<Cell> brute;
      for (std::int64_t i = n; i >= -1; --i) {
        for (std::int64_t j = -n - 1; j <= n + 1; ++j) {
          if (is_valid({f, n, i, j})) brute.push_back({f, n, i, j});
        }
      }
      EXPECT_EQ(enumerate(f, n), brute);
    }
  }
}

TEST(StatusTest, Examples) {
  EXPECT_EQ(status({Family::Eta, 5, 1, 0}).kind, CellStatusKind::StrongNotLiouville);
  EXPECT_EQ(status({Family::Eta, 4, 1, 1}).kind, CellStatusKind::SteinFillable);
  EXPECT_EQ(status({Family::Eta, 4, 1, -1}).kind, CellStatusKind::SteinFillable);
  EXPECT_EQ(status({Family::Xi, 4, 2, 1}).kind, CellStatusKind::EdgeConjecturedStein);
  EXPECT_EQ(status({Family::Xi, 4, 2, -1}).kind, CellStatusKind::EdgeConjecturedStein);
  EXPECT_EQ(status({Family::Xi, 4, 1, 0}).kind, CellStatusKind::StrongNotLiouville);
  EXPECT_EQ(status({Family::Eta, 2, 0, 0}).kind, CellStatusKind::SteinFillable);
  EXPECT_THROW(status({Family::Eta, 5, 1, 1}), DomainError);
}

TEST(StatusTest, EveryCellHasExactlyOneRule) {
  for (Family f : {Family::Eta, Family::Xi}) {
    for (std::int64_t n = f == Family::Eta ? 2 : 1; n <= 50; ++n) {
      for (const Cell& c : enumerate(f, n)) {
        // Independent restatement of the rules; exactly one must fire.
        const std::int64_t aj = std::abs(c.j);
        int fired = 0;
        CellStatusKind expected{};
        auto fire = [&](bool cond, CellStatusKind k) {
          if (cond) {
            ++fired;
            expected = k;
          }
        };
        if (f == Family::Eta) {
          const bool special = c.n == 4 && c.i == 1 && aj == 1;
          const bool apex = c.i == c.n - 2 && c.j == 0 && c.n >= 3;
          const bool inner = 0 < c.i && c.i < c.n - 3 && aj < c.n - c.i - 2;
          fire(c.i == 0 || special, CellStatusKind::SteinFillable);
          fire(c.i > 0 && !special && (apex || inner), CellStatusKind::StrongNotLiouville);
          fire(c.i > 0 && !special && !apex && !inner, CellStatusKind::EdgeConjecturedStein);
        } else {
          const bool column = c.j == 0 && c.i >= 1 && c.n >= 2;
          const bool inner = 0 < c.i && c.i < c.n - 2 && aj < c.n - c.i - 1;
          fire(c.i == 0, CellStatusKind::SteinFillable);
          fire(c.i > 0 && (column || inner), CellStatusKind::StrongNotLiouville);
          fire(c.i > 0 && !column && !inner, CellStatusKind::EdgeConjecturedStein);
        }
        ASSERT_EQ(fired, 1) << c.str();
        ASSERT_EQ(status(c).kind, expected) << c.str();
        ASSERT_FALSE(status(c).citations.empty()) << c.str();
        if (expected == CellStatusKind::EdgeConjecturedStein) ASSERT_EQ(aj, span(c)) << c.str();
      }
    }
  }
}

TEST(StatusTest, FillabilityBounds) {
  for (const Cell& c : enumerate(Family::Eta, 6)) {
    const auto fs = status(c).fillability();
    ASSERT_TRUE(fs.lower().has_value());
    EXPECT_GE(*fs.lower(), fill::FillLevel::Strong);
    if (status(c).kind == CellStatusKind::StrongNotLiouville) EXPECT_EQ(fs.upper(), fill::FillLevel::Strong);
  }
}

TEST(LegendrianTest, Examples) {
  EXPECT_EQ(lr_params({Family::Eta, 5, 1, 0}), (LegendrianParams{1, 1}));
  EXPECT_TRUE(lr_params({Family::Eta, 5, 1, 0}).mixed());
  EXPECT_EQ(lr_params({Family::Eta, 5, 2, 1}), (LegendrianParams{1, 0}));
  EXPECT_FALSE(lr_params({Family::Eta, 5, 2, 1}).mixed());
  EXPECT_EQ(lr_params({Family::Xi, 4, 1, 2}), (LegendrianParams{2, 0}));
}

TEST(LegendrianTest, MixedIffInside) {
  for (Family f : {Family::Eta, Family::Xi}) {
    for (std::int64_t n = f == Family::Eta ? 2 : 1; n <= 50; ++n) {
      for (const Cell& c : enumerate(f, n)) {
        const LegendrianParams lr = lr_params(c);
        ASSERT_GE(lr.l, 0);
        ASSERT_GE(lr.r, 0);
        ASSERT_EQ(lr.l - lr.r, c.j);
        ASSERT_EQ(lr.l + lr.r, span(c));
        ASSERT_EQ(lr.mixed(), std::abs(c.j) < span(c)) << c.str();
        ASSERT_EQ(cell_from_lr(f, n, lr), c);
      }
    }
  }
}

TEST(TriangleTest, Rendering) {
  const std::string eta = render_triangle(Family::Eta, 5);
  EXPECT_NE(eta.find("10 tight contact structures"), std::string::npos);
  for (const auto& [i, j] : kTenCells) {
    const std::string label = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    EXPECT_NE(eta.find(label), std::string::npos) << label;
  }
  EXPECT_NE(eta.find("(3,0)N"), std::string::npos);
  EXPECT_NE(eta.find("(1,0)N"), std::string::npos);
  EXPECT_NE(eta.find("(0,-3)S"), std::string::npos);
  EXPECT_NE(eta.find("(2,1)C"), std::string::npos);

  const std::string xi = render_triangle(Family::Xi, 4);
  EXPECT_NE(xi.find("(2,-1)C"), std::string::npos);
  EXPECT_NE(xi.find("(1,0)N"), std::string::npos);

  const std::string two = render_triangle(Family::Eta, 2);
  EXPECT_NE(two.find("(0,0)S"), std::string::npos);
  EXPECT_EQ(two.find("(1,"), std::string::npos);
}

TEST(CellJsonTest, Fields) {
  const auto j = to_json({Family::Eta, 5, 1, 0});
  EXPECT_EQ(j["family"], "eta");
  EXPECT_EQ(j["l"], 1);
  EXPECT_EQ(j["mixed"], true);
  EXPECT_TRUE(j.contains("citations"));
}
