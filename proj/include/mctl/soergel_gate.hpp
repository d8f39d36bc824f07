#pragma once

// Verdicts on whether the indecomposable attached to w categorifies b_w, the
// crystallographic failing primes, and the Dyer formula checked on both sides.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mctl/hecke.hpp"
#include "mctl/jones_wenzl.hpp"

namespace mctl {

/// Only the Cartan matrix of a realization enters any computation here.
struct RealizationSpec {
  std::shared_ptr<const CartanMatrix> cartan;

  explicit RealizationSpec(std::shared_ptr<const CartanMatrix> A) : cartan(std::move(A)) {
    if (!cartan) throw std::invalid_argument("realization needs a Cartan matrix");
  }
  explicit RealizationSpec(const CartanMatrix& A) : RealizationSpec(share(A)) {}

  static RealizationSpec crystallographic(const RingSpec& ring, const std::vector<Color>& alphabet) {
    return RealizationSpec(CartanMatrix::crystallographic(ring, alphabet));
  }
  static RealizationSpec symmetric_generic(const std::vector<Color>& alphabet) {
    return RealizationSpec(CartanMatrix::symmetric_delta(alphabet));
  }

  const RingSpec& ring() const { return cartan->ring(); }
  const std::vector<Color>& alphabet() const { return cartan->alphabet(); }
};

struct Verdict {
  CoxeterWord word;
  bool holds = true;
  std::vector<Obstruction> witnesses;  // empty iff holds
  bool input_was_reduced = true;
};

namespace detail {

inline void require_letters(const CoxeterWord& w, const RealizationSpec& R) {
  for (const auto& c : w.letters())
    if (!R.cartan->contains(c)) throw ParseError("color '" + c + "' not in the alphabet");
}

}  // namespace detail

/// holds is the existence of JW(w); witnesses are the run-wise obstructions. The
/// two computations are independent and must agree.
inline Verdict soergel_verdict(const CoxeterWord& w, const RealizationSpec& R) {
  detail::require_letters(w, R);
  Verdict v{w, true, {}, true};
  if (w.empty()) return v;
  const ColorSequence x = w.sequence();
  v.holds = jw_recursive(x, R.cartan).exists;
  v.witnesses = run_obstructions(x, R.cartan);
  if (v.holds != v.witnesses.empty())
    throw InvariantViolation("verdict for " + x.str() + ": JW existence disagrees with the run obstructions");
  return v;
}

/// Non-reduced input is reduced first and flagged.
inline Verdict soergel_verdict(const std::vector<Color>& letters, const RealizationSpec& R) {
  CoxeterWord w = CoxeterWord::reduce(letters);
  Verdict v = soergel_verdict(w, R);
  v.input_was_reduced = CoxeterWord::is_reduced(letters);
  return v;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<char> composite(n + 1, 0);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = 1;
  }
  return out;
}

/// Primes p <= max_prime dividing some C(k, m), 0 < m < k, for a maximal
/// alternating run of w with k + 1 letters.
inline std::set<std::uint64_t> failing_primes_by_binomials(const CoxeterWord& w, std::uint64_t max_prime) {
  std::set<std::uint64_t> out;
  if (w.length() < 3) return out;
  const ColorSequence x = w.sequence();
  std::set<int> lengths;
  for (auto [first, last] : maximal_alternating_runs(x)) lengths.insert(last - first);
  for (std::uint64_t p : primes_up_to(max_prime))
    for (int k : lengths)
      for (int m = 1; m < k; ++m) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
        if (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p))) out.insert(p);
      }
  return out;
}

/// Primes p <= max_prime for which the perpendicular-space solve over F_p finds no JW(w).
inline std::set<std::uint64_t> failing_primes_by_oracle(const CoxeterWord& w, std::uint64_t max_prime) {
  std::set<std::uint64_t> out;
  if (w.empty()) return out;
  std::vector<Color> alphabet;
  for (const auto& c : w.letters())
    if (std::find(alphabet.begin(), alphabet.end(), c) == alphabet.end()) alphabet.push_back(c);
  for (std::uint64_t p : primes_up_to(max_prime)) {
    auto A = share(CartanMatrix::crystallographic(RingSpec::prime_field(p), alphabet));
    if (!perp_space_oracle(w.sequence(), A).jw.exists) out.insert(p);
  }
  return out;
}

inline constexpr std::uint64_t kOracleCrossCheckBound = 13;

/// Failing primes of the crystallographic realization, with primes up to 13
/// confirmed by the F_p oracle.
inline std::set<std::uint64_t> failing_primes(const CoxeterWord& w, std::uint64_t max_prime) {
  auto by_rule = failing_primes_by_binomials(w, max_prime);
  const std::uint64_t bound = std::min(max_prime, kOracleCrossCheckBound);
  auto by_oracle = failing_primes_by_oracle(w, bound);
  std::set<std::uint64_t> small(by_rule.begin(), by_rule.upper_bound(bound));
  if (small != by_oracle) throw InvariantViolation("failing primes of " + w.str() + " disagree with the F_p oracle");
  return by_rule;
}

/// Both sides of b_x b_s. The TL side splits the image of JW(x) (x) id into
/// top idempotents; the Hecke side is the KL expansion. Only the index sets are compared.
struct DyerCheck {
  CoxeterWord x;
  Color s;
  bool degenerate = false;  // s is the last letter of x: no TL object, Hecke side only
  std::set<CoxeterWord> tl_summands;
  std::map<CoxeterWord, LaurentPoly> hecke;
  bool agree = false;
  std::optional<Obstruction> obstruction;
};

inline std::set<CoxeterWord> summand_set(const std::map<CoxeterWord, LaurentPoly>& kl) {
  std::set<CoxeterWord> out;
  for (const auto& [w, c] : kl) out.insert(w);
  return out;
}

inline DyerCheck categorified_dyer_check(const CoxeterWord& x, const Color& s, const RealizationSpec& R) {
  detail::require_letters(x, R);
  if (!R.cartan->contains(s)) throw ParseError("color '" + s + "' not in the alphabet");
  DyerCheck out{x, s, false, {}, mult_kl_by_bs(x, s), false, std::nullopt};
  if (!x.empty() && x.back() == s) {
    out.degenerate = true;
    if (out.hecke != std::map<CoxeterWord, LaurentPoly>{{x, LaurentPoly::v() + LaurentPoly::v_inv()}})
      throw InvariantViolation("degenerate Dyer case for " + x.str() + s);
    out.agree = true;
    return out;
  }
  const auto& A = R.cartan;
  const CoxeterWord xs = x.times(s);
  if (x.empty()) {
    out.tl_summands = {xs};
  } else {
    const ColorSequence seq = x.sequence();
    JWResult jx = jw_recursive(seq, A), jxs = jw_recursive(xs.sequence(), A);
    if (!jx.exists || !jxs.exists) {
      out.obstruction = jx.exists ? jxs.obstruction : jx.obstruction;
      return out;
    }
    const TLMorphism& top = *jxs.morphism;
    if (!identity_coefficient(top).is_one()) throw InvariantViolation("JW(" + xs.str() + ") has identity coefficient != 1");
    const TLMorphism P = juxtapose(*jx.morphism, TLMorphism::identity(ColorSequence({x.back(), s}), A));
    const int last = xs.sequence().points() - 2;
    if (x.length() < 2 || x.letters()[x.length() - 2] != s) {
      if (!(P == top)) throw InvariantViolation("fresh letter: JW(" + xs.str() + ") is not JW(x) (x) id");
      out.tl_summands = {xs};
    } else {
      auto [r, b, k, z] = detail::trailing_pair(seq);
      JWResult jz = jw_recursive(z, A);
      if (!jz.exists) {
        out.obstruction = jz.obstruction;
        return out;
      }
      const RingElement c = two_colored_quantum(k - 1, b, r, *A) / two_colored_quantum(k, r, b, *A);
      const TLMorphism gamma = compose(apply_cup(P, last), *jz.morphism);
      const TLMorphism delta = (-c) * compose(*jz.morphism, apply_cap(P, last));
      // V_z is a summand: delta gamma = JW(z); orthogonal to V_xs; together they exhaust P.
      if (!(compose(delta, gamma) == *jz.morphism)) throw InvariantViolation("delta o gamma != JW(z) for " + xs.str());
      if (!compose(top, gamma).is_zero()) throw InvariantViolation("JW(xs) o gamma != 0 for " + xs.str());
      if (!(top + compose(gamma, delta) == P)) throw InvariantViolation("summands do not exhaust JW(x) (x) id");
      out.tl_summands = {xs, CoxeterWord::from(z)};
    }
  }
  out.agree = out.tl_summands == summand_set(out.hecke);
  if (!out.agree) throw InvariantViolation("Dyer summands disagree for x=" + x.str() + ", s=" + s);
  return out;
}

/// Multiplicities of the summands V_y of x, labels read as group elements.
struct WordDecomposition {
  CoxeterWord word;
  std::map<CoxeterWord, int> multiplicities;
  std::optional<Obstruction> obstruction;
};

inline WordDecomposition decompose_word(const CoxeterWord& x, const RealizationSpec& R) {
  detail::require_letters(x, R);
  WordDecomposition out{x, {}, std::nullopt};
  if (x.empty()) {
    out.multiplicities.emplace(x, 1);
    return out;
  }
  Decomposition d = decompose_identity(x.sequence(), R.cartan);
  if (!d.complete()) {
    out.obstruction = d.obstruction;
    return out;
  }
  for (const auto& [y, m] : d.multiplicities) out.multiplicities.emplace(CoxeterWord::from(y), m);
  return out;
}

}  // namespace mctl
