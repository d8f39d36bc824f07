#include <gtest/gtest.h>

#include <random>
#include <map>
#include <set>
#include <tuple>

#include "mctl/diagrams.hpp"
#include "oracles.hpp"

namespace mctl {
namespace {

ColorSequence seq(const char* s) { return ColorSequence::parse(s); }

TEST(ColorSequence, ParseAndValidate) {
  EXPECT_EQ(seq("rbrb").size(), 4u);
  EXPECT_EQ(seq("red,blue,red").str(), "red,blue,red");
  EXPECT_EQ(seq("r, b").str(), "rb");
  EXPECT_THROW(seq("rr"), ParseError);
  EXPECT_THROW(seq(""), ParseError);
  EXPECT_THROW(seq("r,,b"), ParseError);
  EXPECT_EQ(seq("rb").glued(seq("bg")), seq("rbg"));
}

TEST(Matchings, SmallCounts) {
  EXPECT_EQ(enumerate_matchings(1, 1).size(), 1u);
  EXPECT_TRUE(enumerate_matchings(1, 1)[0].is_identity());
  EXPECT_EQ(enumerate_matchings(2, 2).size(), 2u);
  EXPECT_EQ(enumerate_matchings(3, 3).size(), 5u);
  EXPECT_TRUE(enumerate_matchings(3, 2).empty());
  EXPECT_EQ(enumerate_matchings(0, 0).size(), 1u);
}

TEST(Matchings, AgreeWithBruteForceAndCatalan) {
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; m + k <= 12; ++k) {
      const auto& got = enumerate_matchings(m, k);
      std::set<std::vector<std::uint8_t>> mine;
      for (const auto& d : got) mine.insert(d.partners());
      EXPECT_EQ(mine.size(), got.size()) << "duplicates at " << m << "," << k;
      if ((m + k) % 2) {
        EXPECT_TRUE(got.empty());
        continue;
      }
      EXPECT_EQ(static_cast<long>(got.size()), oracle::catalan((m + k) / 2));
      if (m + k <= 10) {
        EXPECT_EQ(mine, oracle::noncrossing_pairings(m, k)) << m << "," << k;
      }
    }
}

TEST(Matchings, CanonicalOrderStartsWithB1PartnerIncreasing) {
  const auto& ms = enumerate_matchings(2, 2);
  EXPECT_EQ(ms[0].pairs(), (std::vector<std::pair<std::string, std::string>>{{"B1", "B2"}, {"T1", "T2"}}));
  EXPECT_TRUE(ms[1].is_identity());
}

TEST(Matchings, FromPairsValidates) {
  auto d = CrossinglessMatching::from_pairs(3, 1, {{"B1", "B2"}, {"B3", "T1"}});
  EXPECT_EQ(d.str(), "{B1-B2 B3-T1}");
  EXPECT_THROW(CrossinglessMatching::from_pairs(2, 2, {{"B1", "T2"}, {"B2", "T1"}}), ParseError);
  EXPECT_THROW(CrossinglessMatching::from_pairs(2, 0, {{"B1", "B1"}}), ParseError);
  EXPECT_THROW(CrossinglessMatching::from_pairs(2, 0, {{"B1", "B3"}}), ParseError);
  EXPECT_THROW(CrossinglessMatching::from_pairs(2, 2, {{"B1", "B2"}}), ParseError);
}

TEST(Coloring, Examples) {
  auto id = CrossinglessMatching::identity(2);
  auto c = color_matching(id, seq("rgb"), seq("rgb"));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->region_colors(), (std::map<std::string, Color>{{"b0", "r"}, {"b1", "g"}, {"b2", "b"}}));

  auto cupcap = CrossinglessMatching::from_pairs(2, 2, {{"B1", "B2"}, {"T1", "T2"}});
  auto u = color_matching(cupcap, seq("rbr"), seq("rbr"));
  ASSERT_TRUE(u);
  EXPECT_EQ(u->region_colors(), (std::map<std::string, Color>{{"b0", "r"}, {"b1", "b"}, {"t1", "b"}}));
  for (const auto& d : enumerate_matchings(2, 2)) EXPECT_FALSE(color_matching(d, seq("rbr"), seq("brb")));
  EXPECT_FALSE(color_matching(id, seq("rbr"), seq("rgr")));
}

TEST(Coloring, CountsFromTheLiterature) {
  EXPECT_EQ(colored_basis(seq("grgyrybgbyb"), seq("gyrorybrb")).size(), 4u);
  EXPECT_EQ(colored_basis(seq("rgb"), seq("rgb")).size(), 1u);
  EXPECT_EQ(colored_basis(seq("rbrb"), seq("rbrb")).size(), 5u);
  EXPECT_EQ(colored_basis(seq("r"), seq("b")).size(), 0u);
  EXPECT_EQ(colored_basis(seq("rgbrgb"), seq("rgbrgb")).size(), 1u);
}

TEST(Coloring, AlternatingTwoColorsUseEveryMatching) {
  const char* words[] = {"r", "rbr", "rbrbr", "rbrbrbr"};
  for (const char* a : words)
    for (const char* b : words) {
      ColorSequence x = seq(a), y = seq(b);
      EXPECT_EQ(colored_basis(x, y).size(), enumerate_matchings(x.points(), y.points()).size()) << a << " " << b;
    }
  EXPECT_EQ(colored_basis(seq("rbrb"), seq("rb")).size(), enumerate_matchings(3, 1).size());
}

using oracle::words_over;

TEST(Coloring, RederivedColorsMatchAndFlipIsBijective) {
  auto words = words_over({"r", "b", "g"}, 5);
  for (const auto& x : words)
    for (const auto& y : words) {
      const auto& basis = colored_basis(x, y);
      const auto& back = colored_basis(y, x);
      ASSERT_EQ(basis.size(), back.size());
      std::set<CrossinglessMatching> flipped;
      for (const auto& d : basis) {
        auto c = color_matching(d, x, y);
        ASSERT_TRUE(c);
        for (const auto& r : c->regions())
          for (const auto& iv : r.intervals) {
            std::size_t i = std::stoul(iv.substr(1));
            EXPECT_EQ(r.color, iv[0] == 'b' ? x[i] : y[i]);
          }
        ColoredMatching f = flip(*c);
        EXPECT_EQ(flip(f), *c);
        flipped.insert(f.matching());
      }
      EXPECT_EQ(flipped, std::set<CrossinglessMatching>(back.begin(), back.end()));
    }
}

TEST(Compose, CircleColorsAndResults) {
  auto cap = *elementary_cap(seq("brb"), 0);
  EXPECT_EQ(cap.first, seq("b"));
  auto cap_d = *color_matching(cap.second, seq("brb"), seq("b"));
  auto cup_d = flip(cap_d);
  auto [res, circles] = compose_matchings(cap_d, cup_d);
  EXPECT_TRUE(res.matching().is_identity());
  EXPECT_EQ(res.source(), seq("b"));
  ASSERT_EQ(circles.size(), 1u);
  EXPECT_EQ(circles[0], (Circle{"r", "b"}));

  auto id = *color_matching(CrossinglessMatching::identity(2), seq("rbr"), seq("rbr"));
  auto [r2, c2] = compose_matchings(id, id);
  EXPECT_EQ(r2, id);
  EXPECT_TRUE(c2.empty());

  auto u = *color_matching(CrossinglessMatching::from_pairs(2, 2, {{"B1", "B2"}, {"T1", "T2"}}), seq("rbr"), seq("rbr"));
  auto [r3, c3] = compose_matchings(u, u);
  EXPECT_EQ(r3, u);
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0], (Circle{"b", "r"}));
  EXPECT_THROW(compose_matchings(u, cup_d), std::invalid_argument);
}

TEST(Compose, NestedCirclesReportInsideOutside) {
  // cap-cap stacked on cup-cup around rbgbr: the inner loop bounds g inside b, the outer b inside r.
  auto x = seq("rbgbr");
  auto inner = *elementary_cap(x, 1);
  auto outer = *elementary_cap(inner.first, 0);
  auto down = *color_matching(compose_raw(outer.second, inner.second, inner.first).first, x, seq("r"));
  auto [res, circles] = compose_matchings(down, flip(down));
  EXPECT_TRUE(res.matching().is_identity());
  std::multiset<Circle> got(circles.begin(), circles.end());
  EXPECT_EQ(got, (std::multiset<Circle>{{"b", "r"}, {"g", "b"}}));
}

// Associativity up to the multiset of removed circles, on random composable triples.
TEST(Compose, AssociativeUpToCircles) {
  std::mt19937 rng(3);
  // Hom(x, y) can be nonzero only when the end letters and the length parity agree.
  std::map<std::tuple<Color, Color, std::size_t>, std::vector<ColorSequence>> classes;
  for (auto& w : words_over({"r", "b", "g"}, 8)) classes[{w.front(), w.back(), w.size() % 2}].push_back(w);
  std::vector<const std::vector<ColorSequence>*> nontrivial;
  for (const auto& [key, ws] : classes) nontrivial.push_back(&ws);
  int checked = 0;
  for (int attempt = 0; attempt < 20000 && checked < 300; ++attempt) {
    const auto& ws = *nontrivial[rng() % nontrivial.size()];
    const ColorSequence &w0 = ws[rng() % ws.size()], &w1 = ws[rng() % ws.size()], &w2 = ws[rng() % ws.size()],
                        &w3 = ws[rng() % ws.size()];
    const auto &h = colored_basis(w0, w1), &g = colored_basis(w1, w2), &f = colored_basis(w2, w3);
    if (h.empty() || g.empty() || f.empty()) continue;
    auto H = *color_matching(h[rng() % h.size()], w0, w1);
    auto G = *color_matching(g[rng() % g.size()], w1, w2);
    auto F = *color_matching(f[rng() % f.size()], w2, w3);
    auto [gh, c1] = compose_matchings(G, H);
    auto [left, c2] = compose_matchings(F, gh);
    auto [fg, c3] = compose_matchings(F, G);
    auto [right, c4] = compose_matchings(fg, H);
    EXPECT_EQ(left, right);
    std::multiset<Circle> a(c1.begin(), c1.end()), b(c3.begin(), c3.end());
    a.insert(c2.begin(), c2.end());
    b.insert(c4.begin(), c4.end());
    EXPECT_EQ(a, b);
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(Factor, ThroughStrandCut) {
  auto id = *color_matching(CrossinglessMatching::identity(2), seq("rbr"), seq("rbr"));
  auto f = factor(id);
  EXPECT_EQ(f.middle, seq("rbr"));
  EXPECT_TRUE(f.cup_part.matching().is_identity());

  auto u = *color_matching(CrossinglessMatching::from_pairs(2, 2, {{"B1", "B2"}, {"T1", "T2"}}), seq("rbr"), seq("rbr"));
  auto g = factor(u);
  EXPECT_EQ(g.middle, seq("r"));
  EXPECT_TRUE(g.cap_part.matching().is_cap_diagram());
  EXPECT_TRUE(g.cup_part.matching().is_cup_diagram());
  EXPECT_FALSE(u.matching().is_cap_diagram());

  for (const auto& d : enumerate_colored(seq("rbrgrb"), seq("rbrgbgrb"))) {
    auto fd = factor(d);
    auto [back, circles] = compose_matchings(fd.cup_part, fd.cap_part);
    EXPECT_EQ(back, d);
    EXPECT_TRUE(circles.empty());
    EXPECT_EQ(fd.middle.points(), d.matching().through_strands());
  }
}

}  // namespace
}  // namespace mctl
