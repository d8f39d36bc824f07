#pragma once

// Hecke algebra of the universal Coxeter group on an alphabet: standard basis
// arithmetic from the quadratic relation and the KL basis from Dyer's recursion.

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mctl/diagrams.hpp"

namespace mctl {

/// Element of the universal Coxeter group, stored as its unique reduced word (possibly empty).
class CoxeterWord {
 public:
  CoxeterWord() = default;
  /// Cancels adjacent equal letters until none remain; the result does not depend on the order.
  static CoxeterWord reduce(const std::vector<Color>& letters) {
    std::vector<Color> stack;
    for (const auto& c : letters) {
      if (c.empty()) throw ParseError("empty color name");
      if (!stack.empty() && stack.back() == c)
        stack.pop_back();
      else
        stack.push_back(c);
    }
    return CoxeterWord(std::move(stack));
  }
  /// Throws unless the letters already form a reduced word.
  static CoxeterWord reduced(std::vector<Color> letters) {
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i] == letters[i + 1]) throw ParseError("word is not reduced");
    return CoxeterWord(std::move(letters));
  }
  static bool is_reduced(const std::vector<Color>& letters) {
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i] == letters[i + 1]) return false;
    return true;
  }
  static CoxeterWord from(const ColorSequence& x) { return CoxeterWord(x.colors()); }

  const std::vector<Color>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Color& back() const { return letters_.back(); }

  CoxeterWord times(const Color& s) const {
    std::vector<Color> v = letters_;
    if (!v.empty() && v.back() == s)
      v.pop_back();
    else
      v.push_back(s);
    return CoxeterWord(std::move(v));
  }
  ColorSequence sequence() const { return ColorSequence(letters_); }
  std::string str() const { return letters_.empty() ? "" : ColorSequence(letters_).str(); }

  friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;
  friend auto operator<=>(const CoxeterWord&, const CoxeterWord&) = default;

 private:
  explicit CoxeterWord(std::vector<Color> letters) : letters_(std::move(letters)) {}
  std::vector<Color> letters_;
};

/// Integer Laurent polynomial in v; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c) {  // NOLINT: constants convert implicitly
    if (c) terms_.emplace(0, c);
  }
  static LaurentPoly monomial(int e, std::int64_t c = 1) {
    LaurentPoly p;
    if (c) p.terms_.emplace(e, c);
    return p;
  }
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly v_inv() { return monomial(-1); }

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }
  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, checked_neg(c));
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) out.add(e1 + e2, checked_mul(c1, c2));
    return out;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// e.g. "v^-1+v", "1+2v^2", "-v".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      std::string mag = (c == 1 || c == -1) && e != 0 ? "" : std::to_string(c < 0 ? -c : c);
      std::string var = e == 0 ? "" : (e == 1 ? "v" : "v^" + std::to_string(e));
      if (c < 0)
        s += "-";
      else if (!s.empty())
        s += "+";
      s += mag + var;
    }
    return s;
  }

 private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
  }
  static std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }
  void add(int e, std::int64_t c) {
    if (!c) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (!it->second) terms_.erase(it);
  }

  std::map<int, std::int64_t> terms_;
};

/// Finite combination of standard basis elements H_w (or of KL elements b_w, by context).
class HeckeElement {
 public:
  using Terms = std::map<CoxeterWord, LaurentPoly>;

  HeckeElement() = default;
  static HeckeElement one() { return standard(CoxeterWord()); }
  static HeckeElement standard(const CoxeterWord& w, const LaurentPoly& c = 1) {
    HeckeElement h;
    h.add(w, c);
    return h;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const CoxeterWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  void add(const CoxeterWord& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, LaurentPoly() - c);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& s, const HeckeElement& h) {
    HeckeElement out;
    for (const auto& [w, c] : h.terms_) out.add(w, s * c);
    return out;
  }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// Standard basis rendering, e.g. "H_rb + (v)H_r + v^2".
  std::string to_string(const char* symbol = "H") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [w, c] = *it;
      if (!s.empty()) s += " + ";
      if (w.empty()) {
        s += c.to_string();
        continue;
      }
      if (!(c == LaurentPoly(1))) s += "(" + c.to_string() + ")";
      s += std::string(symbol) + "_" + w.str();
    }
    return s;
  }

 private:
  Terms terms_;
};

/// h H_s, from H_s^2 = (v^-1 - v) H_s + 1.
inline HeckeElement mult_Hs(const HeckeElement& h, const Color& s) {
  HeckeElement out;
  const LaurentPoly quad = LaurentPoly::v_inv() - LaurentPoly::v();
  for (const auto& [w, c] : h.terms()) {
    if (!w.empty() && w.back() == s) {
      out.add(w, quad * c);
      out.add(w.times(s), c);
    } else {
      out.add(w.times(s), c);
    }
  }
  return out;
}

/// h H_w by folding right multiplication over the letters of w.
inline HeckeElement mult_Hw(HeckeElement h, const CoxeterWord& w) {
  for (const auto& s : w.letters()) h = mult_Hs(h, s);
  return h;
}

/// Product of two standard-basis expressions.
inline HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [w, c] : b.terms()) out += c * mult_Hw(a, w);
  return out;
}

/// b_s = H_s + v.
inline HeckeElement kl_generator(const Color& s) {
  return HeckeElement::standard(CoxeterWord::reduced({s})) + HeckeElement::standard(CoxeterWord(), LaurentPoly::v());
}

/// h b_s computed purely from the quadratic relation.
inline HeckeElement mult_bs(const HeckeElement& h, const Color& s) { return mult_Hs(h, s) + LaurentPoly::v() * h; }

namespace detail {

struct KLCache {
  std::mutex mu;
  std::map<CoxeterWord, HeckeElement> basis;
};

inline KLCache& kl_cache() {
  static KLCache cache;
  return cache;
}

}  // namespace detail

/// b_w in the standard basis: b_1 = 1, b_{xs} = b_x b_s for a fresh s, and
/// b_{xr} = b_x b_r - b_z when x = ...rb and z is x without its last letter.
inline HeckeElement kl_basis(const CoxeterWord& w) {
  auto& cache = detail::kl_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.basis.find(w);
    if (it != cache.basis.end()) return it->second;
  }
  HeckeElement b;
  const auto& L = w.letters();
  if (L.empty()) {
    b = HeckeElement::one();
  } else {
    const CoxeterWord x = CoxeterWord::reduced(std::vector<Color>(L.begin(), L.end() - 1));
    const Color& s = L.back();
    b = mult_bs(kl_basis(x), s);
    if (x.length() >= 2 && x.letters()[x.length() - 2] == s)
      b -= kl_basis(CoxeterWord::reduced(std::vector<Color>(L.begin(), L.end() - 2)));
  }
  std::lock_guard lock(cache.mu);
  cache.basis.emplace(w, b);
  return b;
}

/// KL expansion of b_x b_s: {xs} for a fresh s, {xr, z} for x = ...rb and s = r,
/// (v + v^-1) b_x when xs is not reduced.
inline std::map<CoxeterWord, LaurentPoly> mult_kl_by_bs(const CoxeterWord& x, const Color& s) {
  std::map<CoxeterWord, LaurentPoly> out;
  const auto& L = x.letters();
  if (!L.empty() && L.back() == s) {
    out.emplace(x, LaurentPoly::v() + LaurentPoly::v_inv());
  } else {
    out.emplace(x.times(s), 1);
    if (L.size() >= 2 && L[L.size() - 2] == s)
      out.emplace(CoxeterWord::reduced(std::vector<Color>(L.begin(), L.end() - 1)), 1);
  }
  return out;
}

/// Standard-basis expansion of a KL-basis combination.
inline HeckeElement kl_to_standard(const std::map<CoxeterWord, LaurentPoly>& kl) {
  HeckeElement out;
  for (const auto& [w, c] : kl) out += c * kl_basis(w);
  return out;
}

/// Rewrites a standard-basis element in the KL basis by peeling off longest terms
/// (b_w = H_w + shorter terms).
inline std::map<CoxeterWord, LaurentPoly> standard_to_kl(HeckeElement h) {
  std::map<CoxeterWord, LaurentPoly> out;
  while (!h.is_zero()) {
    const CoxeterWord* longest = nullptr;
    for (const auto& [w, c] : h.terms())
      if (!longest || w.length() > longest->length()) longest = &w;
    const CoxeterWord w = *longest;
    const LaurentPoly c = h.coefficient(w);
    out.emplace(w, c);
    h -= c * kl_basis(w);
    if (!h.coefficient(w).is_zero()) throw InvariantViolation("KL element has leading coefficient other than 1");
  }
  return out;
}

}  // namespace mctl
