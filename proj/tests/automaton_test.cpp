#include <gtest/gtest.h>

#include <algorithm>
#include <regex>

#include "tesserae/automaton.hpp"
#include "tesserae/error.hpp"
#include "tesserae/oracle.hpp"
#include "test_support.hpp"

namespace tesserae {
namespace {

using testing::strings;

// Strip counts, treating a width no variant fits into as untileable.
CountSeries strip_series(const TileSet& tiles, int m, std::size_t length) {
  try {
    return series(trim_reachable(build_automaton(tiles, m)), length);
  } catch (const DomainError&) {
    CountSeries s{m, std::vector<BigInt>(length + 1, 0)};
    s.terms[0] = 1;
    return s;
  }
}

bool fits(const TileSet& tiles, int m) {
  return std::any_of(tiles.variants().begin(), tiles.variants().end(),
                     [m](const Polyomino& v) { return v.height() <= m; });
}

std::vector<std::string> series_of(const char* tiles, int width, std::size_t length) {
  return strings(series(trim_reachable(build_automaton(preset(tiles), width)), length).terms);
}

TEST(BuildAutomaton, HorizontalDominoesOnly) {
  const auto a = build_automaton(preset("domino"), 1);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.reach(), 1);
  EXPECT_EQ(a.states()[a.start()], 0u);
  EXPECT_EQ(strings(series(a, 6).terms),
            (std::vector<std::string>{"1", "0", "1", "0", "1", "0", "1"}));
}

TEST(BuildAutomaton, DominoWidthTwoMatchesBruteForce) {
  // Oracle first: exhaustive counts on 2 x n, n <= 6.
  std::vector<std::string> oracle;
  for (int n = 0; n <= 6; ++n) oracle.push_back(brute_force_count(preset("domino"), 2, n).get_str());
  EXPECT_EQ(oracle, (std::vector<std::string>{"1", "1", "2", "3", "5", "8", "13"}));
  EXPECT_EQ(series_of("domino", 2, 6), oracle);
}

TEST(BuildAutomaton, TTetrominoWidthFour) {
  const auto s = series_of("tetromino-T", 4, 12);
  EXPECT_EQ(s, (std::vector<std::string>{"1", "0", "0", "0", "2", "0", "0", "0", "6", "0", "0",
                                         "0", "18"}));
}

TEST(BuildAutomaton, NoFittingVariant) {
  // A straight tromino laid only vertically cannot enter a width-2 strip.
  const TileSet vertical({parse_polyomino("#\n#\n#")}, false, false);
  EXPECT_THROW(build_automaton(vertical, 2), DomainError);
  EXPECT_THROW(build_automaton(preset("domino"), 0), DomainError);
}

TEST(BuildAutomaton, EveryEntryNonNegativeAndStartEmpty) {
  for (const std::string& name : preset_names()) {
    for (int m = 1; m <= 5; ++m) {
      if (!fits(preset(name), m)) continue;
      const auto a = trim_reachable(build_automaton(preset(name), m));
      EXPECT_EQ(a.states()[a.start()], 0u);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (const auto& e : a.row(i)) EXPECT_GT(e.weight, 0);
      }
    }
  }
}

TEST(TrimReachable, RemovesUnreachableAndDeadStates) {
  using Edge = TransferAutomaton::Edge;
  // 0 <-> 1 is the live cycle; 2 is unreachable, 3 is a dead end.
  const TransferAutomaton a(
      1, 2, {0b00, 0b01, 0b10, 0b11}, 0,
      {{Edge{1, 2}, Edge{3, 1}}, {Edge{0, 1}, Edge{1, 1}}, {Edge{0, 5}}, {}});
  const TransferAutomaton t = trim_reachable(a);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(strings(series(a, 10).terms), strings(series(t, 10).terms));
  EXPECT_EQ(t.entry(t.start(), 1 - t.start()), 2);
}

TEST(TrimReachable, SeriesInvariantOnPresets) {
  for (const std::string& name : preset_names()) {
    for (int m = 1; m <= 5; ++m) {
      if (!fits(preset(name), m)) continue;
      const auto raw = build_automaton(preset(name), m);
      const auto trimmed = trim_reachable(raw);
      EXPECT_LE(trimmed.size(), raw.size());
      EXPECT_EQ(strings(series(raw, 12).terms), strings(series(trimmed, 12).terms))
          << name << " m=" << m;
    }
  }
}

TEST(TrimReachable, MonominoIsSingleState) {
  const auto a = trim_reachable(build_automaton(preset("monomino"), 3));
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.reach(), 0);
  EXPECT_EQ(series_of("monomino", 2, 4), (std::vector<std::string>(5, "1")));
}

TEST(TrimReachable, TTetrominoStillCounts) {
  const auto s = series_of("tetromino-T", 4, 4);
  EXPECT_EQ(s, (std::vector<std::string>{"1", "0", "0", "0", "2"}));
}

TEST(CountRect, PaperValues) {
  const auto tromino4 = build_automaton(preset("tromino-right"), 4);
  EXPECT_EQ(count_rect(tromino4, 3), 4);
  EXPECT_EQ(count_rect(tromino4, 0), 1);
  EXPECT_EQ(count_rect(build_automaton(preset("tetromino-L"), 4), 2), 2);
  EXPECT_EQ(count_rect(build_automaton(preset("tromino-right"), 5), 3), 0);
}

TEST(BruteForce, SmallValues) {
  EXPECT_EQ(brute_force_count(preset("tromino-right"), 2, 3), 2);
  EXPECT_EQ(brute_force_count(preset("tromino-right"), 4, 6), 18);
  EXPECT_EQ(brute_force_count(preset("tetromino-T"), 5, 8), 0);
  EXPECT_EQ(brute_force_count(preset("domino"), 3, 0), 1);
}

TEST(BruteForce, SizeCap) {
  EXPECT_THROW(brute_force_count(preset("domino"), 8, 9), SizeLimitError);
  EXPECT_THROW(brute_force_count(preset("domino"), 4, 4, 15), SizeLimitError);
  EXPECT_EQ(brute_force_count(preset("domino"), 4, 4, 16), 36);
}

TEST(OracleEquivalence, AllPresetsSmallRectangles) {
  for (const std::string& name : preset_names()) {
    const TileSet tiles = preset(name);
    for (int m = 1; m <= 5; ++m) {
      const auto s = strip_series(tiles, m, 8);
      for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(s.terms[static_cast<std::size_t>(n)], brute_force_count(tiles, m, n))
            << name << " " << m << "x" << n;
      }
    }
  }
}

TEST(AutomatonProperties, AreaDivisibility) {
  for (const std::string& name : preset_names()) {
    const TileSet tiles = preset(name);
    const std::size_t area = tiles.uniform_area();
    for (int m = 1; m <= 6; ++m) {
      const auto s = strip_series(tiles, m, 12);
      EXPECT_EQ(s.terms[0], 1);
      for (std::size_t n = 0; n <= 12; ++n) {
        EXPECT_GE(s.terms[n], 0);
        if ((static_cast<std::size_t>(m) * n) % area != 0) {
          EXPECT_EQ(s.terms[n], 0) << name << " " << m << "x" << n;
        }
      }
    }
  }
}

TEST(AutomatonProperties, WalkupTheorem) {
  for (int m = 1; m <= 12; ++m) {
    const auto s = strip_series(preset("tetromino-T"), m, 12);
    for (int n = 1; n <= 12; ++n) {
      const bool tileable = s.terms[static_cast<std::size_t>(n)] > 0;
      EXPECT_EQ(tileable, m % 4 == 0 && n % 4 == 0) << m << "x" << n;
    }
  }
}

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

TEST(ToDot, MonominoSelfLoop) {
  const std::string dot = to_dot(build_automaton(preset("monomino"), 1));
  EXPECT_EQ(count_matches(dot, std::regex(R"(\n  s\d+ \[label)")), 1u);
  EXPECT_NE(dot.find("s0 -> s0 [label=\"1\"]"), std::string::npos);
}

TEST(ToDot, DominoCycle) {
  const std::string dot = to_dot(build_automaton(preset("domino"), 1));
  EXPECT_EQ(count_matches(dot, std::regex(R"(\n  s\d+ \[label)")), 2u);
  EXPECT_NE(dot.find("s0 -> s1 [label=\"1\"]"), std::string::npos);
  EXPECT_NE(dot.find("s1 -> s0 [label=\"1\"]"), std::string::npos);
}

TEST(ToDot, NodeCountMatchesTrimmedStates) {
  const auto a = trim_reachable(build_automaton(preset("tromino-right"), 4));
  const std::string dot = to_dot(a);
  EXPECT_EQ(count_matches(dot, std::regex(R"(\n  s\d+ \[label)")), a.size());
  std::size_t edges = 0;
  for (std::size_t i = 0; i < a.size(); ++i) edges += a.row(i).size();
  EXPECT_EQ(count_matches(dot, std::regex(R"(s\d+ -> s\d+)")), edges);
}

}  // namespace
}  // namespace tesserae
