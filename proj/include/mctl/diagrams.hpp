#pragma once

// Crossingless matchings on the strip, their forced region colorings, and
// stacking with closed-loop bookkeeping.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mctl/rings/cartan.hpp"

namespace mctl {

/// Nonempty word of colors with adjacent entries distinct.
class ColorSequence {
 public:
  explicit ColorSequence(std::vector<Color> colors) : colors_(std::move(colors)) {
    if (colors_.empty()) throw ParseError("color sequence must be nonempty");
    for (const auto& c : colors_)
      if (c.empty()) throw ParseError("empty color name");
    for (std::size_t i = 0; i + 1 < colors_.size(); ++i)
      if (colors_[i] == colors_[i + 1])
        throw ParseError("adjacent colors must differ (position " + std::to_string(i + 1) + ")");
  }

  /// "rbrb" (one letter per color) or "red,blue,red" (comma separated).
  static ColorSequence parse(std::string_view text) { return ColorSequence(split_colors(text)); }

  static std::vector<Color> split_colors(std::string_view text) {
    std::vector<Color> out;
    if (text.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (true) {
        std::size_t end = text.find(',', start);
        std::string_view piece = text.substr(start, end == std::string_view::npos ? end : end - start);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        if (piece.empty()) throw ParseError("empty color name in '" + std::string(text) + "'");
        out.emplace_back(piece);
        if (end == std::string_view::npos) break;
        start = end + 1;
      }
    } else {
      for (char c : text) {
        if (c == ' ') continue;
        out.emplace_back(1, c);
      }
    }
    return out;
  }

  std::size_t size() const { return colors_.size(); }
  /// Number of strands (boundary points) of the identity of this sequence.
  int points() const { return static_cast<int>(colors_.size()) - 1; }
  const Color& operator[](std::size_t i) const { return colors_[i]; }
  const Color& front() const { return colors_.front(); }
  const Color& back() const { return colors_.back(); }
  const std::vector<Color>& colors() const { return colors_; }

  ColorSequence prefix(std::size_t n) const {
    return ColorSequence(std::vector<Color>(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(n)));
  }
  ColorSequence slice(std::size_t first, std::size_t last) const {  // letters [first, last]
    return ColorSequence(std::vector<Color>(colors_.begin() + static_cast<std::ptrdiff_t>(first),
                                            colors_.begin() + static_cast<std::ptrdiff_t>(last) + 1));
  }
  ColorSequence appended(const Color& c) const {
    std::vector<Color> v = colors_;
    v.push_back(c);
    return ColorSequence(std::move(v));
  }
  /// Glue along a shared letter: back() must equal other.front().
  ColorSequence glued(const ColorSequence& other) const {
    if (back() != other.front()) throw std::invalid_argument("cannot glue " + str() + " and " + other.str());
    std::vector<Color> v = colors_;
    v.insert(v.end(), other.colors_.begin() + 1, other.colors_.end());
    return ColorSequence(std::move(v));
  }

  std::string str() const {
    const bool single = std::all_of(colors_.begin(), colors_.end(), [](const Color& c) { return c.size() == 1; });
    std::string s;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      if (!single && i) s += ',';
      s += colors_[i];
    }
    return s;
  }

  friend bool operator==(const ColorSequence&, const ColorSequence&) = default;
  friend auto operator<=>(const ColorSequence&, const ColorSequence&) = default;

 private:
  std::vector<Color> colors_;
};

/// Closed loop removed during stacking, with the colors just inside and just outside it.
struct Circle {
  Color inside;
  Color outside;
  friend bool operator==(const Circle&, const Circle&) = default;
  friend auto operator<=>(const Circle&, const Circle&) = default;
};

/// Perfect non-crossing pairing of m bottom points B1..Bm and k top points T1..Tk.
/// Index i < m is B(i+1); index m + j is T(j+1).
class CrossinglessMatching {
 public:
  CrossinglessMatching() = default;

  static CrossinglessMatching from_partners(int m, int k, std::vector<std::uint8_t> partner) {
    CrossinglessMatching d(m, k, std::move(partner));
    d.validate();
    return d;
  }

  static CrossinglessMatching from_pairs(int m, int k, const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (m < 0 || k < 0 || m + k > 250) throw ParseError("bad matching size");
    std::vector<std::uint8_t> partner(static_cast<std::size_t>(m + k), kUnset);
    for (const auto& [a, b] : pairs) {
      int i = index_of(a, m, k), j = index_of(b, m, k);
      if (i == j || partner[i] != kUnset || partner[j] != kUnset) throw ParseError("point used twice in matching");
      partner[i] = static_cast<std::uint8_t>(j);
      partner[j] = static_cast<std::uint8_t>(i);
    }
    return from_partners(m, k, std::move(partner));
  }

  static CrossinglessMatching identity(int n) {
    std::vector<std::uint8_t> p(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      p[i] = static_cast<std::uint8_t>(n + i);
      p[n + i] = static_cast<std::uint8_t>(i);
    }
    return CrossinglessMatching(n, n, std::move(p));
  }

  int bottom() const { return m_; }
  int top() const { return k_; }
  int size() const { return m_ + k_; }
  int partner(int i) const { return partner_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& partners() const { return partner_; }
  bool is_bottom(int i) const { return i < m_; }

  std::string label(int i) const { return is_bottom(i) ? "B" + std::to_string(i + 1) : "T" + std::to_string(i - m_ + 1); }

  static int index_of(std::string_view label, int m, int k) {
    if (label.size() < 2 || (label[0] != 'B' && label[0] != 'T')) throw ParseError("bad point label");
    int n = 0;
    for (char c : label.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad point label");
      n = n * 10 + (c - '0');
      if (n > 1000) throw ParseError("bad point label");
    }
    const int limit = label[0] == 'B' ? m : k;
    if (n < 1 || n > limit) throw ParseError("point label out of range");
    return label[0] == 'B' ? n - 1 : m + n - 1;
  }

  /// Canonical encoding: each pair listed once with the smaller index first, pairs sorted.
  std::vector<std::pair<std::string, std::string>> pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < size(); ++i)
      if (i < partner(i)) out.emplace_back(label(i), label(partner(i)));
    return out;
  }

  std::string str() const {
    std::string s;
    for (const auto& [a, b] : pairs()) s += (s.empty() ? "" : " ") + a + "-" + b;
    return "{" + s + "}";
  }

  int through_strands() const {
    int t = 0;
    for (int i = 0; i < m_; ++i) t += partner(i) >= m_;
    return t;
  }
  bool is_identity() const { return m_ == k_ && through_strands() == m_; }
  /// No pair joins two top points.
  bool is_cap_diagram() const { return through_strands() == k_; }
  /// No pair joins two bottom points.
  bool is_cup_diagram() const { return through_strands() == m_; }

  /// Position on the boundary circle: bottom left to right, then top right to left.
  int circular_position(int i) const { return i < m_ ? i : m_ + (k_ - 1 - (i - m_)); }
  int index_at(int pos) const { return pos < m_ ? pos : m_ + (k_ - 1 - (pos - m_)); }

  CrossinglessMatching flipped() const {
    std::vector<std::uint8_t> p(partner_.size());
    auto swap_side = [&](int i) { return i < m_ ? k_ + i : i - m_; };
    for (int i = 0; i < size(); ++i) p[swap_side(i)] = static_cast<std::uint8_t>(swap_side(partner(i)));
    return CrossinglessMatching(k_, m_, std::move(p));
  }

  friend bool operator==(const CrossinglessMatching&, const CrossinglessMatching&) = default;
  friend auto operator<=>(const CrossinglessMatching&, const CrossinglessMatching&) = default;

 private:
  static constexpr std::uint8_t kUnset = 255;

  CrossinglessMatching(int m, int k, std::vector<std::uint8_t> partner) : m_(m), k_(k), partner_(std::move(partner)) {}

  void validate() const {
    const int n = size();
    if (m_ < 0 || k_ < 0 || n > 250 || static_cast<int>(partner_.size()) != n) throw ParseError("bad matching size");
    if (n % 2) throw ParseError("matching needs an even number of points");
    for (int i = 0; i < n; ++i) {
      int j = partner_[i];
      if (j >= n || j == i || partner_[j] != i) throw ParseError("matching is not a perfect pairing");
    }
    for (int i = 0; i < n; ++i) {
      int a = circular_position(i), b = circular_position(partner(i));
      if (a > b) continue;
      for (int p = a + 1; p < b; ++p) {
        int q = circular_position(partner(index_at(p)));
        if (q < a || q > b) throw ParseError("matching has crossing chords");
      }
    }
  }

  int m_ = 0;
  int k_ = 0;
  std::vector<std::uint8_t> partner_;
};

namespace detail {

struct DiagramCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::shared_ptr<const std::vector<CrossinglessMatching>>> matchings;
};

inline DiagramCache& diagram_cache() {
  static DiagramCache cache;
  return cache;
}

}  // namespace detail

/// All of CM(m, k): the partner of the first boundary point (B1 when m > 0) increases,
/// then the enclosed and remaining points recursively. Empty when m + k is odd.
inline const std::vector<CrossinglessMatching>& enumerate_matchings(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("negative point count");
  auto& cache = detail::diagram_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.matchings.find({m, k});
    if (it != cache.matchings.end()) return *it->second;
  }
  auto out = std::make_shared<std::vector<CrossinglessMatching>>();
  const int n = m + k;
  if (n % 2 == 0) {
    // `todo` holds half-open circular intervals still to pair; the last one is split first.
    std::vector<int> pos_partner(static_cast<std::size_t>(n), -1);
    auto to_index = [&](int pos) { return pos < m ? pos : m + (k - 1 - (pos - m)); };
    std::function<void(std::vector<std::pair<int, int>>)> rec = [&](std::vector<std::pair<int, int>> todo) {
      while (!todo.empty() && todo.back().first >= todo.back().second) todo.pop_back();
      if (todo.empty()) {
        std::vector<std::uint8_t> partner(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) partner[to_index(p)] = static_cast<std::uint8_t>(to_index(pos_partner[p]));
        out->push_back(CrossinglessMatching::from_partners(m, k, std::move(partner)));
        return;
      }
      auto [lo, hi] = todo.back();
      todo.pop_back();
      for (int j = lo + 1; j < hi; j += 2) {
        pos_partner[lo] = j;
        pos_partner[j] = lo;
        auto next = todo;
        next.emplace_back(j + 1, hi);
        next.emplace_back(lo + 1, j);
        rec(std::move(next));
      }
    };
    rec({{0, n}});
  }
  std::lock_guard lock(cache.mu);
  auto [it, inserted] = cache.matchings.emplace(std::make_pair(m, k), std::move(out));
  return *it->second;
}

/// A crossingless matching between sequences x (bottom) and y (top) with the
/// forced region coloring. Boundary interval "b<i>" is colored x[i], "t<j>" y[j].
class ColoredMatching {
 public:
  struct Region {
    std::vector<std::string> intervals;  // sorted, b-intervals first
    Color color;
    friend bool operator==(const Region&, const Region&) = default;
  };

  const CrossinglessMatching& matching() const { return d_; }
  const ColorSequence& source() const { return x_; }
  const ColorSequence& target() const { return y_; }
  const std::vector<Region>& regions() const { return regions_; }

  /// Regions keyed by their leftmost boundary interval.
  std::map<std::string, Color> region_colors() const {
    std::map<std::string, Color> out;
    for (const auto& r : regions_) out.emplace(r.intervals.front(), r.color);
    return out;
  }

  friend bool operator==(const ColoredMatching& a, const ColoredMatching& b) {
    return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  friend std::optional<ColoredMatching> color_matching(const CrossinglessMatching&, const ColorSequence&,
                                                       const ColorSequence&);
  ColoredMatching(CrossinglessMatching d, ColorSequence x, ColorSequence y, std::vector<Region> r)
      : d_(std::move(d)), x_(std::move(x)), y_(std::move(y)), regions_(std::move(r)) {}

  CrossinglessMatching d_;
  ColorSequence x_;
  ColorSequence y_;
  std::vector<Region> regions_;
};

namespace detail {

/// Boundary intervals grouped by the gap following each circular position
/// (index n - 1 wraps to position 0). With no points, one group holds everything.
inline std::vector<std::vector<std::string>> boundary_gaps(int m, int k) {
  const int n = m + k;
  // Cyclic token walk: b0 B1 b1 ... Bm bm, tk Tk ... T1 t0. Point tokens are encoded as -1.
  std::vector<std::string> tokens;
  tokens.push_back("b0");
  for (int i = 1; i <= m; ++i) {
    tokens.push_back("");
    tokens.push_back("b" + std::to_string(i));
  }
  tokens.push_back("t" + std::to_string(k));
  for (int j = k; j >= 1; --j) {
    tokens.push_back("");
    tokens.push_back("t" + std::to_string(j - 1));
  }
  if (n == 0) return {{"b0", "t0"}};
  std::vector<std::vector<std::string>> gaps(static_cast<std::size_t>(n));
  int point = -1;
  std::vector<std::string> leading;
  for (const auto& t : tokens) {
    if (t.empty())
      ++point;
    else if (point < 0)
      leading.push_back(t);
    else
      gaps[point].push_back(t);
  }
  for (auto& t : leading) gaps[n - 1].push_back(std::move(t));
  return gaps;
}

inline bool interval_less(const std::string& a, const std::string& b) {
  if (a[0] != b[0]) return a[0] == 'b';
  return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
}

}  // namespace detail

/// The unique consistent coloring of d with bottom colors x and top colors y, if any.
inline std::optional<ColoredMatching> color_matching(const CrossinglessMatching& d, const ColorSequence& x,
                                                     const ColorSequence& y) {
  const int m = d.bottom(), k = d.top(), n = m + k;
  if (x.points() != m || y.points() != k) throw std::invalid_argument("sequence lengths do not fit the matching");
  if (x.front() != y.front() || x.back() != y.back()) return std::nullopt;
  auto gaps = detail::boundary_gaps(m, k);
  auto color_of = [&](const std::string& iv) -> const Color& {
    int i = std::stoi(iv.substr(1));
    return iv[0] == 'b' ? x[static_cast<std::size_t>(i)] : y[static_cast<std::size_t>(i)];
  };
  std::vector<ColoredMatching::Region> regions;
  if (n == 0) {
    regions.push_back({{"b0", "t0"}, x.front()});
    return ColoredMatching(d, x, y, std::move(regions));
  }
  // Walking a region's boundary: after gap p comes point p+1, its chord, then the gap after its partner.
  std::vector<int> region_of(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (region_of[start] >= 0) continue;
    const int id = static_cast<int>(regions.size());
    ColoredMatching::Region r;
    for (int g = start; region_of[g] < 0;) {
      region_of[g] = id;
      for (const auto& iv : gaps[g]) {
        const Color& c = color_of(iv);
        if (r.intervals.empty())
          r.color = c;
        else if (r.color != c)
          return std::nullopt;
        r.intervals.push_back(iv);
      }
      const int next_point = (g + 1) % n;
      g = d.circular_position(d.partner(d.index_at(next_point)));
    }
    std::sort(r.intervals.begin(), r.intervals.end(), detail::interval_less);
    regions.push_back(std::move(r));
  }
  for (int p = 0; p < n; ++p) {
    if (regions[region_of[p]].color == regions[region_of[(p + n - 1) % n]].color) return std::nullopt;
  }
  std::sort(regions.begin(), regions.end(), [](const auto& a, const auto& b) {
    return detail::interval_less(a.intervals.front(), b.intervals.front());
  });
  return ColoredMatching(d, x, y, std::move(regions));
}

namespace detail {

struct ColoredCache {
  std::mutex mu;
  std::map<std::pair<ColorSequence, ColorSequence>, std::shared_ptr<const std::vector<CrossinglessMatching>>> basis;
};

inline ColoredCache& colored_cache() {
  static ColoredCache cache;
  return cache;
}

}  // namespace detail

/// Matchings in CM(x, y) that admit a coloring, in enumerate_matchings order.
inline const std::vector<CrossinglessMatching>& colored_basis(const ColorSequence& x, const ColorSequence& y) {
  auto& cache = detail::colored_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.basis.find({x, y});
    if (it != cache.basis.end()) return *it->second;
  }
  auto out = std::make_shared<std::vector<CrossinglessMatching>>();
  if (x.front() == y.front() && x.back() == y.back())
    for (const auto& d : enumerate_matchings(x.points(), y.points()))
      if (color_matching(d, x, y)) out->push_back(d);
  std::lock_guard lock(cache.mu);
  auto [it, inserted] = cache.basis.emplace(std::make_pair(x, y), std::move(out));
  return *it->second;
}

inline std::vector<ColoredMatching> enumerate_colored(const ColorSequence& x, const ColorSequence& y) {
  std::vector<ColoredMatching> out;
  for (const auto& d : colored_basis(x, y)) out.push_back(*color_matching(d, x, y));
  return out;
}

/// upper after lower, where lower has `middle.points()` top points matching upper's bottom.
/// Loops are reported at their leftmost crossing of the middle line, where the
/// region to the left is outside the loop.
inline std::pair<CrossinglessMatching, std::vector<Circle>> compose_raw(const CrossinglessMatching& upper,
                                                                       const CrossinglessMatching& lower,
                                                                       const ColorSequence& middle) {
  const int m = lower.bottom(), k = lower.top(), l = upper.top();
  if (upper.bottom() != k || middle.points() != k) throw std::invalid_argument("composition interface mismatch");
  std::vector<std::uint8_t> partner(static_cast<std::size_t>(m + l));
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  // Outer endpoint r: r < m is lower bottom r, otherwise upper top r - m.
  auto trace = [&](int r) {
    bool in_lower = r < m;
    int idx = in_lower ? r : k + (r - m);
    while (true) {
      int p = in_lower ? lower.partner(idx) : upper.partner(idx);
      if (in_lower) {
        if (p < m) return p;
        seen[p - m] = 1;
        idx = p - m;  // continue in upper at its bottom point
      } else {
        if (p >= k) return m + (p - k);
        seen[p] = 1;
        idx = m + p;  // continue in lower at its top point
      }
      in_lower = !in_lower;
    }
  };
  for (int r = 0; r < m + l; ++r) partner[r] = static_cast<std::uint8_t>(trace(r));
  std::vector<Circle> circles;
  for (int j = 0; j < k; ++j) {
    if (seen[j]) continue;
    circles.push_back({middle[static_cast<std::size_t>(j + 1)], middle[static_cast<std::size_t>(j)]});
    int cur = j;
    do {
      seen[cur] = 1;
      int q = upper.partner(cur);
      seen[q] = 1;
      cur = lower.partner(m + q) - m;
    } while (cur != j);
  }
  return {CrossinglessMatching::from_partners(m, l, std::move(partner)), std::move(circles)};
}

/// top after bottom; bottom.target() must equal top.source().
inline std::pair<ColoredMatching, std::vector<Circle>> compose_matchings(const ColoredMatching& top,
                                                                        const ColoredMatching& bottom) {
  if (!(bottom.target() == top.source()))
    throw std::invalid_argument("cannot compose: " + bottom.target().str() + " vs " + top.source().str());
  auto [d, circles] = compose_raw(top.matching(), bottom.matching(), top.source());
  auto colored = color_matching(d, bottom.source(), top.target());
  if (!colored) throw InvariantViolation("stacked diagram lost its coloring");
  return {std::move(*colored), std::move(circles)};
}

inline ColoredMatching flip(const ColoredMatching& d) {
  return *color_matching(d.matching().flipped(), d.target(), d.source());
}

/// Side by side: a's points first. Region colors must agree at the seam.
inline CrossinglessMatching juxtapose_raw(const CrossinglessMatching& a, const CrossinglessMatching& b) {
  const int m = a.bottom() + b.bottom(), k = a.top() + b.top();
  std::vector<std::uint8_t> p(static_cast<std::size_t>(m + k));
  auto map_a = [&](int i) { return i < a.bottom() ? i : m + (i - a.bottom()); };
  auto map_b = [&](int i) { return i < b.bottom() ? a.bottom() + i : m + a.top() + (i - b.bottom()); };
  for (int i = 0; i < a.size(); ++i) p[map_a(i)] = static_cast<std::uint8_t>(map_a(a.partner(i)));
  for (int i = 0; i < b.size(); ++i) p[map_b(i)] = static_cast<std::uint8_t>(map_b(b.partner(i)));
  return CrossinglessMatching::from_partners(m, k, std::move(p));
}

inline ColoredMatching juxtapose(const ColoredMatching& a, const ColoredMatching& b) {
  auto d = color_matching(juxtapose_raw(a.matching(), b.matching()), a.source().glued(b.source()),
                          a.target().glued(b.target()));
  if (!d) throw InvariantViolation("juxtaposition lost its coloring");
  return *d;
}

/// d = cup_part after cap_part, both through the sequence z read off the through strands.
struct Factorization {
  ColorSequence middle;
  ColoredMatching cup_part;  // z -> target
  ColoredMatching cap_part;  // source -> z
};

inline Factorization factor(const ColoredMatching& cd) {
  const CrossinglessMatching& d = cd.matching();
  const int m = d.bottom(), k = d.top();
  std::vector<int> through_bottom;
  for (int i = 0; i < m; ++i)
    if (d.partner(i) >= m) through_bottom.push_back(i);
  const int t = static_cast<int>(through_bottom.size());
  std::vector<Color> z{cd.source().front()};
  for (int b : through_bottom) z.push_back(cd.source()[static_cast<std::size_t>(b + 1)]);
  ColorSequence middle(std::move(z));

  std::vector<std::uint8_t> cap(static_cast<std::size_t>(m + t));
  for (int i = 0; i < m; ++i)
    if (d.partner(i) < m) cap[i] = static_cast<std::uint8_t>(d.partner(i));
  for (int s = 0; s < t; ++s) {
    cap[through_bottom[s]] = static_cast<std::uint8_t>(m + s);
    cap[m + s] = static_cast<std::uint8_t>(through_bottom[s]);
  }
  std::vector<std::uint8_t> cup(static_cast<std::size_t>(t + k));
  for (int j = 0; j < k; ++j)
    if (d.partner(m + j) >= m) cup[t + j] = static_cast<std::uint8_t>(t + d.partner(m + j) - m);
  for (int s = 0; s < t; ++s) {
    int top = d.partner(through_bottom[s]) - m;
    cup[s] = static_cast<std::uint8_t>(t + top);
    cup[t + top] = static_cast<std::uint8_t>(s);
  }
  auto cap_d = color_matching(CrossinglessMatching::from_partners(m, t, std::move(cap)), cd.source(), middle);
  auto cup_d = color_matching(CrossinglessMatching::from_partners(t, k, std::move(cup)), middle, cd.target());
  if (!cap_d || !cup_d) throw InvariantViolation("factorization lost its coloring");
  return {middle, std::move(*cup_d), std::move(*cap_d)};
}

/// The elementary cap x -> z joining points i, i+1 (0-based) around the region x[i+1];
/// needs x[i] == x[i+2]. z drops letters i+1 and i+2.
inline std::optional<std::pair<ColorSequence, CrossinglessMatching>> elementary_cap(const ColorSequence& x, int i) {
  const int n = x.points();
  if (i < 0 || i + 1 >= n || x[i] != x[i + 2]) return std::nullopt;
  std::vector<Color> z;
  for (int j = 0; j <= n; ++j)
    if (j != i + 1 && j != i + 2) z.push_back(x[j]);
  std::vector<std::uint8_t> p(static_cast<std::size_t>(2 * n - 2));
  auto link = [&](int a, int b) {
    p[a] = static_cast<std::uint8_t>(b);
    p[b] = static_cast<std::uint8_t>(a);
  };
  link(i, i + 1);
  for (int j = 0, t = 0; j < n; ++j) {
    if (j == i || j == i + 1) continue;
    link(j, n + t++);
  }
  return std::make_pair(ColorSequence(std::move(z)), CrossinglessMatching::from_partners(n, n - 2, std::move(p)));
}

}  // namespace mctl
