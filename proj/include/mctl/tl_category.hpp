#pragma once

// Morphisms of the colored Temperley-Lieb 2-category over a Cartan matrix:
// finite linear combinations of colored matchings with fixed source and target.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mctl/diagrams.hpp"
#include "mctl/rings/cartan.hpp"

namespace mctl {

class TLMorphism {
 public:
  using Terms = std::map<CrossinglessMatching, RingElement>;

  TLMorphism(ColorSequence source, ColorSequence target, std::shared_ptr<const CartanMatrix> cartan)
      : source_(std::move(source)), target_(std::move(target)), cartan_(std::move(cartan)) {
    if (!cartan_) throw std::invalid_argument("morphism needs a Cartan matrix");
    for (const auto& seq : {source_, target_})
      for (const auto& c : seq.colors())
        if (!cartan_->contains(c)) throw ParseError("color '" + c + "' not in the alphabet");
  }

  static TLMorphism identity(const ColorSequence& x, std::shared_ptr<const CartanMatrix> A) {
    TLMorphism f(x, x, std::move(A));
    f.terms_.emplace(CrossinglessMatching::identity(x.points()), f.ring().one());
    return f;
  }

  /// coeff times one basis diagram; the diagram must be colorable from source to target.
  static TLMorphism basis(const CrossinglessMatching& d, const ColorSequence& source, const ColorSequence& target,
                          std::shared_ptr<const CartanMatrix> A) {
    TLMorphism f(source, target, std::move(A));
    f.add_term(d, f.ring().one());
    return f;
  }

  const ColorSequence& source() const { return source_; }
  const ColorSequence& target() const { return target_; }
  const CartanMatrix& cartan() const { return *cartan_; }
  const std::shared_ptr<const CartanMatrix>& cartan_ptr() const { return cartan_; }
  const RingSpec& ring() const { return cartan_->ring(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_endomorphism() const { return source_ == target_; }

  RingElement coefficient(const CrossinglessMatching& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? ring().zero() : it->second;
  }

  /// Adds c * d after checking d is a basis element of Hom(source, target).
  void add_term(const CrossinglessMatching& d, const RingElement& c) {
    if (d.bottom() != source_.points() || d.top() != target_.points() || !color_matching(d, source_, target_))
      throw std::invalid_argument("diagram " + d.str() + " is not in CM(" + source_.str() + ", " + target_.str() + ")");
    if (!(c.spec() == ring())) throw std::invalid_argument("coefficient ring mismatch");
    accumulate(d, c);
  }

  TLMorphism& operator+=(const TLMorphism& g) {
    check_parallel(g);
    for (const auto& [d, c] : g.terms_) accumulate(d, c);
    return *this;
  }
  TLMorphism& operator-=(const TLMorphism& g) {
    check_parallel(g);
    for (const auto& [d, c] : g.terms_) accumulate(d, -c);
    return *this;
  }
  friend TLMorphism operator+(TLMorphism f, const TLMorphism& g) { return f += g; }
  friend TLMorphism operator-(TLMorphism f, const TLMorphism& g) { return f -= g; }
  friend TLMorphism operator*(const RingElement& s, const TLMorphism& f) {
    TLMorphism out(f.source_, f.target_, f.cartan_);
    if (s.is_zero()) return out;
    for (const auto& [d, c] : f.terms_) {
      RingElement p = s * c;
      if (!p.is_zero()) out.terms_.emplace_hint(out.terms_.end(), d, std::move(p));
    }
    return out;
  }

  friend bool operator==(const TLMorphism& f, const TLMorphism& g) {
    return f.source_ == g.source_ && f.target_ == g.target_ && *f.cartan_ == *g.cartan_ && f.terms_ == g.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : terms_) s += (s.empty() ? "" : " + ") + ("(" + c.to_string() + ")" + d.str());
    return s;
  }

 private:
  friend TLMorphism compose(const TLMorphism&, const TLMorphism&);
  friend TLMorphism juxtapose(const TLMorphism&, const TLMorphism&);
  friend TLMorphism involution(const TLMorphism&);

  void check_parallel(const TLMorphism& g) const {
    if (!(source_ == g.source_) || !(target_ == g.target_)) throw std::invalid_argument("adding morphisms of different type");
    if (!(*cartan_ == *g.cartan_)) throw std::invalid_argument("adding morphisms over different Cartan matrices");
  }

  void accumulate(const CrossinglessMatching& d, const RingElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  ColorSequence source_;
  ColorSequence target_;
  std::shared_ptr<const CartanMatrix> cartan_;
  Terms terms_;
};

/// f after g. Each removed circle contributes a[outside][inside].
inline TLMorphism compose(const TLMorphism& f, const TLMorphism& g) {
  if (!(g.target() == f.source()))
    throw std::invalid_argument("cannot compose: " + g.target().str() + " vs " + f.source().str());
  if (!(f.cartan() == g.cartan())) throw std::invalid_argument("composing over different Cartan matrices");
  TLMorphism out(g.source(), f.target(), f.cartan_ptr());
  const CartanMatrix& A = f.cartan();
  std::map<std::vector<Circle>, RingElement> scalars;
  for (const auto& [df, cf] : f.terms_)
    for (const auto& [dg, cg] : g.terms_) {
      auto [d, circles] = compose_raw(df, dg, f.source());
      RingElement c = cf * cg;
      if (!circles.empty()) {
        std::sort(circles.begin(), circles.end());
        auto it = scalars.find(circles);
        if (it == scalars.end()) {
          RingElement s = A.ring().one();
          for (const auto& circle : circles) s *= A.entry(circle.outside, circle.inside);
          it = scalars.emplace(circles, std::move(s)).first;
        }
        c *= it->second;
      }
      out.accumulate(d, c);
    }
  return out;
}

/// f placed to the left of g; source and target glue along their shared end letters.
inline TLMorphism juxtapose(const TLMorphism& f, const TLMorphism& g) {
  if (!(f.cartan() == g.cartan())) throw std::invalid_argument("juxtaposing over different Cartan matrices");
  if (f.source().back() != g.source().front() || f.target().back() != g.target().front())
    throw std::invalid_argument("juxtaposition colors disagree at the interface");
  TLMorphism out(f.source().glued(g.source()), f.target().glued(g.target()), f.cartan_ptr());
  for (const auto& [df, cf] : f.terms_)
    for (const auto& [dg, cg] : g.terms_) out.accumulate(juxtapose_raw(df, dg), cf * cg);
  return out;
}

/// Upside-down flip of every diagram, coefficients unchanged.
inline TLMorphism involution(const TLMorphism& f) {
  TLMorphism out(f.target(), f.source(), f.cartan_ptr());
  for (const auto& [d, c] : f.terms_) out.terms_.emplace(d.flipped(), c);
  return out;
}

inline RingElement identity_coefficient(const TLMorphism& f) {
  if (!f.is_endomorphism()) throw std::invalid_argument("identity coefficient needs an endomorphism");
  return f.coefficient(CrossinglessMatching::identity(f.source().points()));
}

/// True iff f lies in the span of the non-identity diagrams of End(x).
inline bool in_lower_ideal(const TLMorphism& f) { return identity_coefficient(f).is_zero(); }

/// The cap x -> z joining points i, i+1 (0-based); nullopt when the colors forbid it.
inline std::optional<TLMorphism> cap_morphism(const ColorSequence& x, int i, std::shared_ptr<const CartanMatrix> A) {
  auto cap = elementary_cap(x, i);
  if (!cap) return std::nullopt;
  return TLMorphism::basis(cap->second, x, cap->first, std::move(A));
}

/// The cup z -> x creating points i, i+1 of x.
inline std::optional<TLMorphism> cup_morphism(const ColorSequence& x, int i, std::shared_ptr<const CartanMatrix> A) {
  auto cap = cap_morphism(x, i, std::move(A));
  if (!cap) return std::nullopt;
  return involution(*cap);
}

/// cap_i after f, capping points i, i+1 of f's target.
inline TLMorphism apply_cap(const TLMorphism& f, int i) {
  auto cap = cap_morphism(f.target(), i, f.cartan_ptr());
  if (!cap) throw std::invalid_argument("no cap at position " + std::to_string(i) + " of " + f.target().str());
  return compose(*cap, f);
}

/// f after cup_i, feeding a cup into points i, i+1 of f's source.
inline TLMorphism apply_cup(const TLMorphism& f, int i) {
  auto cup = cup_morphism(f.source(), i, f.cartan_ptr());
  if (!cup) throw std::invalid_argument("no cup at position " + std::to_string(i) + " of " + f.source().str());
  return compose(f, *cup);
}

/// Positions i at which x admits a cap (x[i] == x[i+2]).
inline std::vector<int> cap_positions(const ColorSequence& x) {
  std::vector<int> out;
  for (int i = 0; i + 1 < x.points(); ++i)
    if (x[i] == x[i + 2]) out.push_back(i);
  return out;
}

}  // namespace mctl
