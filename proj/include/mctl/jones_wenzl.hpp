#pragma once

// Top idempotents JW(x): the recursive construction, the run-wise side-by-side
// construction, the perpendicular-space solve, and the identity decomposition.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mctl/linear_solver.hpp"
#include "mctl/rings/quantum.hpp"
#include "mctl/tl_category.hpp"

namespace mctl {

/// Why JW(x) fails to exist. Fields not meaningful for the source are empty.
struct Obstruction {
  std::string source;  // "recursive", "binomial" or "oracle"
  std::optional<int> k;
  std::optional<int> m;
  std::optional<std::pair<Color, Color>> pair;
  std::optional<RingElement> value;
  std::optional<std::pair<int, int>> run;  // 1-based letter positions, inclusive
  std::string detail;
};

struct JWResult {
  ColorSequence word;
  bool exists = false;
  std::optional<TLMorphism> morphism;
  std::optional<Obstruction> obstruction;
};

/// Length of the maximal alternating final subsequence.
inline int tail_length(const ColorSequence& x) {
  int n = static_cast<int>(x.size());
  if (n <= 2) return n;
  int len = 2;
  while (len < n && x[n - 1 - len] == x[n - 1 - len + 2]) ++len;
  return len;
}

/// Maximal two-colored alternating runs as 0-based inclusive letter intervals.
/// Consecutive runs share one letter, so their strands partition the strands of x.
inline std::vector<std::pair<int, int>> maximal_alternating_runs(const ColorSequence& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::pair<int, int>> runs;
  int start = 0;
  for (int i = 2; i < n; ++i)
    if (x[i] != x[i - 2]) {
      runs.emplace_back(start, i - 1);
      start = i - 1;
    }
  runs.emplace_back(start, n - 1);
  return runs;
}

namespace detail {

struct DirectResult {
  std::optional<TLMorphism> jw;
  std::optional<Obstruction> failure;
};

struct JWCache {
  std::mutex mu;
  std::map<std::pair<std::string, ColorSequence>, DirectResult> direct;
  std::map<std::tuple<std::string, ColorSequence, int>, JWResult> results;
};

inline JWCache& jw_cache() {
  static JWCache cache;
  return cache;
}

template <class Compute>
JWResult memo_result(const CartanMatrix& A, const ColorSequence& x, int method, Compute&& compute) {
  auto& cache = jw_cache();
  const auto key = std::make_tuple(A.fingerprint(), x, method);
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.results.find(key);
    if (it != cache.results.end()) return it->second;
  }
  JWResult r = compute();
  std::lock_guard lock(cache.mu);
  cache.results.emplace(key, r);
  return r;
}

/// The recursion carried out literally in A's ring; fails at the first divisor that is not invertible.
inline DirectResult jw_direct(const ColorSequence& x, const std::shared_ptr<const CartanMatrix>& A) {
  auto& cache = jw_cache();
  const auto key = std::make_pair(A->fingerprint(), x);
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.direct.find(key);
    if (it != cache.direct.end()) return it->second;
  }
  DirectResult out;
  const int n = static_cast<int>(x.size());
  if (n <= 2) {
    out.jw = TLMorphism::identity(x, A);
  } else {
    const ColorSequence y = x.prefix(static_cast<std::size_t>(n - 1));
    DirectResult prev = jw_direct(y, A);
    if (!prev.jw) {
      out.failure = prev.failure;
    } else {
      const Color& s = x.back();
      const Color& b = y.back();
      const Color& r = y[static_cast<std::size_t>(n - 3)];
      TLMorphism P = juxtapose(*prev.jw, TLMorphism::identity(ColorSequence({b, s}), A));
      if (s != r) {
        out.jw = std::move(P);
      } else {
        const int k = tail_length(y);
        RingElement divisor = two_colored_quantum(k, r, b, *A);
        if (!divisor.is_invertible()) {
          out.failure = Obstruction{"recursive", k, 1, std::make_pair(r, b), divisor, std::nullopt,
                                    "[" + std::to_string(k) + "]_{" + r + "," + b + "} is not invertible"};
        } else {
          RingElement c = two_colored_quantum(k - 1, b, r, *A) / divisor;
          const int last = x.points() - 2;
          TLMorphism Q = apply_cup(P, last);  // z -> x
          out.jw = P + c * compose(Q, involution(Q));
        }
      }
    }
  }
  std::lock_guard lock(cache.mu);
  cache.direct.emplace(key, out);
  return out;
}

inline BigRational lift_to_rational(const RingElement& e) {
  const auto& v = e.storage();
  if (auto q = std::get_if<BigRational>(&v)) return *q;
  if (auto z = std::get_if<BigInt>(&v)) return BigRational(*z);
  if (auto f = std::get_if<ModP>(&v)) return BigRational(BigInt(static_cast<unsigned long>(f->value)));
  throw std::invalid_argument("no rational lift for " + e.to_string());
}

/// Entries lift(a) - delta over Q(delta). Every two-colored [m] is then a nonzero polynomial.
inline std::shared_ptr<const CartanMatrix> generic_lift(const CartanMatrix& A) {
  const RingSpec qd = RingSpec::rational_functions();
  CartanMatrix::Entries e;
  for (const auto& [key, v] : A.off_diagonal()) e.emplace(key, qd.from_rational(lift_to_rational(v)) - qd.delta());
  return std::make_shared<const CartanMatrix>(qd, A.alphabet(), std::move(e));
}

/// Same entries read in Q; used to solve over the fraction field of Z.
inline std::shared_ptr<const CartanMatrix> rational_version(const CartanMatrix& A) {
  const RingSpec q = RingSpec::rationals();
  CartanMatrix::Entries e;
  for (const auto& [key, v] : A.off_diagonal()) e.emplace(key, q.from_rational(lift_to_rational(v)));
  return std::make_shared<const CartanMatrix>(q, A.alphabet(), std::move(e));
}

/// Moves a morphism over Q into Z when every coefficient is integral.
inline std::optional<TLMorphism> integral_version(const TLMorphism& f, const std::shared_ptr<const CartanMatrix>& A) {
  TLMorphism out(f.source(), f.target(), A);
  for (const auto& [d, c] : f.terms()) {
    const BigRational& q = std::get<BigRational>(c.storage());
    if (q.get_den() != 1) return std::nullopt;
    out.add_term(d, A->ring().from_bigint(BigInt(q.get_num())));
  }
  return out;
}

}  // namespace detail

inline std::shared_ptr<const CartanMatrix> share(const CartanMatrix& A) { return std::make_shared<const CartanMatrix>(A); }

struct OracleResult {
  std::vector<TLMorphism> perp_basis;  // basis of the space killed by every cup on the right
  JWResult jw;
};

/// Solves f o cup = 0 for all cups over the basis of End(x); JW exists iff the
/// solution space is spanned by a vector with nonzero identity coefficient.
/// Over Z the solve runs over Q and JW must come out integral.
inline OracleResult perp_space_oracle(const ColorSequence& x, const std::shared_ptr<const CartanMatrix>& A) {
  if (A->ring().kind() == RingKind::Integers) {
    OracleResult q = perp_space_oracle(x, detail::rational_version(*A));
    OracleResult out{q.perp_basis, JWResult{x, false, std::nullopt, q.jw.obstruction}};
    if (q.jw.exists) {
      out.jw.morphism = detail::integral_version(*q.jw.morphism, A);
      out.jw.exists = out.jw.morphism.has_value();
      if (!out.jw.exists)
        out.jw.obstruction = Obstruction{"oracle", std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                                         "JW over Q has a non-integral coefficient"};
    }
    return out;
  }
  const auto& basis = colored_basis(x, x);
  const int N = static_cast<int>(basis.size());
  const CrossinglessMatching id = CrossinglessMatching::identity(x.points());
  std::map<CrossinglessMatching, int> column;
  for (const auto& d : basis)
    if (!(d == id)) column.emplace(d, static_cast<int>(column.size()));
  column.emplace(id, N - 1);

  SparseNullspace<RingElement> solver(N, N - 1);
  for (int i : cap_positions(x)) {
    auto cup = cup_morphism(x, i, A);
    const CrossinglessMatching& cup_d = cup->terms().begin()->first;
    std::map<CrossinglessMatching, SparseNullspace<RingElement>::Row> equations;
    for (const auto& d : basis) {
      auto [res, circles] = compose_raw(d, cup_d, x);
      RingElement s = A->ring().one();
      for (const auto& c : circles) s *= A->entry(c.outside, c.inside);
      auto& row = equations[res];
      auto [it, inserted] = row.try_emplace(column.at(d), s);
      if (!inserted) it->second += s;
    }
    for (auto& [res, row] : equations) solver.add_equation(std::move(row));
  }

  OracleResult out{{}, JWResult{x, false, std::nullopt, std::nullopt}};
  std::vector<int> with_identity;
  for (const auto& v : solver.nullspace(A->ring().one())) {
    TLMorphism f(x, x, A);
    for (const auto& d : basis) {
      auto it = v.find(column.at(d));
      if (it != v.end()) f.add_term(d, it->second);
    }
    if (!identity_coefficient(f).is_zero()) with_identity.push_back(static_cast<int>(out.perp_basis.size()));
    out.perp_basis.push_back(std::move(f));
  }
  if (with_identity.empty()) {
    out.jw.obstruction = Obstruction{"oracle", std::nullopt, std::nullopt, std::nullopt, A->ring().zero(), std::nullopt,
                                     "every element of the perpendicular space has identity coefficient 0"};
    return out;
  }
  if (out.perp_basis.size() > 1)
    throw InvariantViolation("perpendicular space of " + x.str() + " has dimension " +
                             std::to_string(out.perp_basis.size()) + " yet contains a vector with identity term");
  const TLMorphism& f = out.perp_basis.front();
  out.jw.exists = true;
  out.jw.morphism = (A->ring().one() / identity_coefficient(f)) * f;
  return out;
}

inline OracleResult perp_space_oracle(const ColorSequence& x, const CartanMatrix& A) {
  return perp_space_oracle(x, share(A));
}

/// Extends JW along initial subsequences: a fresh letter juxtaposes an identity
/// strand, repeating the second-to-last letter r of ...rb adds
/// ([k-1]_{b,r} / [k]_{r,b}) (JW(x) (x) 1) cup cap (JW(x) (x) 1), k = tail length.
/// A non-invertible divisor over Q, F_p or Z is resolved by running the recursion
/// over Q(delta) with entries lift(a) - delta and specializing at delta = 0: JW
/// exists exactly when every coefficient specializes.
inline JWResult jw_recursive(const ColorSequence& x, const std::shared_ptr<const CartanMatrix>& A) {
  return detail::memo_result(*A, x, 0, [&]() -> JWResult {
    detail::DirectResult direct = detail::jw_direct(x, A);
    if (direct.jw) return {x, true, std::move(direct.jw), std::nullopt};
    const RingKind kind = A->ring().kind();
    if (kind == RingKind::RationalFunctionDelta) {
      JWResult r = perp_space_oracle(x, A).jw;
      if (!r.exists) r.obstruction = direct.failure;
      return r;
    }
    detail::DirectResult generic = detail::jw_direct(x, detail::generic_lift(*A));
    if (!generic.jw) throw InvariantViolation("generic lift of the recursion failed for " + x.str());
    const RingSpec target = kind == RingKind::Integers ? RingSpec::rationals() : A->ring();
    const auto target_cartan = kind == RingKind::Integers ? detail::rational_version(*A) : A;
    TLMorphism spec(x, x, target_cartan);
    for (const auto& [d, c] : generic.jw->terms()) {
      auto v = specialize_at_zero(std::get<RatFunc>(c.storage()), target);
      if (!v) return {x, false, std::nullopt, direct.failure};
      if (!v->is_zero()) spec.add_term(d, *v);
    }
    if (kind != RingKind::Integers) return {x, true, std::move(spec), std::nullopt};
    auto integral = detail::integral_version(spec, A);
    if (!integral) return {x, false, std::nullopt, direct.failure};
    return {x, true, std::move(integral), std::nullopt};
  });
}

inline JWResult jw_recursive(const ColorSequence& x, const CartanMatrix& A) { return jw_recursive(x, share(A)); }

/// Binomial and oracle obstructions of the maximal alternating runs of x. A run
/// ...ts of length k+1 is checked through [k choose m]_{s,t}; when that value is
/// unavailable in the ring, the run itself goes to the perpendicular-space solve.
inline std::vector<Obstruction> run_obstructions(const ColorSequence& x, const std::shared_ptr<const CartanMatrix>& A) {
  std::vector<Obstruction> out;
  for (auto [first, last] : maximal_alternating_runs(x)) {
    const int k = last - first;
    if (k <= 1) continue;
    const Color& s = x[static_cast<std::size_t>(last)];
    const Color& t = x[static_cast<std::size_t>(last - 1)];
    bool undefined = false, failed = false;
    for (int m = 1; m < k; ++m) {
      auto b = two_colored_binomial(k, m, s, t, *A);
      if (!b) {
        undefined = true;
        continue;
      }
      if (!b->is_invertible()) {
        failed = true;
        out.push_back(Obstruction{"binomial", k, m, std::make_pair(s, t), *b, std::make_pair(first + 1, last + 1),
                                  "[" + std::to_string(k) + " choose " + std::to_string(m) + "]_{" + s + "," + t +
                                      "} is not invertible"});
      }
    }
    if (undefined && !failed) {
      const ColorSequence run = x.slice(static_cast<std::size_t>(first), static_cast<std::size_t>(last));
      if (!perp_space_oracle(run, A).jw.exists)
        out.push_back(Obstruction{"oracle", k, std::nullopt, std::make_pair(s, t), std::nullopt,
                                  std::make_pair(first + 1, last + 1), "no top idempotent on the run " + run.str()});
    }
  }
  return out;
}

/// JW(x) as the side-by-side product of the JW maps of the maximal alternating runs.
inline JWResult jw_descriptive(const ColorSequence& x, const std::shared_ptr<const CartanMatrix>& A) {
  return detail::memo_result(*A, x, 1, [&]() -> JWResult {
    auto obstructions = run_obstructions(x, A);
    if (!obstructions.empty()) return {x, false, std::nullopt, obstructions.front()};
    std::optional<TLMorphism> acc;
    for (auto [first, last] : maximal_alternating_runs(x)) {
      const ColorSequence run = x.slice(static_cast<std::size_t>(first), static_cast<std::size_t>(last));
      JWResult r = jw_recursive(run, A);
      if (!r.exists) throw InvariantViolation("run " + run.str() + " passed the binomial test but has no JW");
      acc = acc ? juxtapose(*acc, *r.morphism) : *r.morphism;
    }
    return {x, true, std::move(acc), std::nullopt};
  });
}

inline JWResult jw_descriptive(const ColorSequence& x, const CartanMatrix& A) { return jw_descriptive(x, share(A)); }

namespace detail {

struct TrailingPair {
  Color r, b;
  int k;
  ColorSequence z;
};

inline TrailingPair trailing_pair(const ColorSequence& x) {
  if (x.size() < 2) throw std::invalid_argument("word " + x.str() + " needs at least two letters");
  const std::size_t n = x.size();
  return {x[n - 2], x[n - 1], tail_length(x), x.prefix(n - 1)};
}

inline TLMorphism require_jw(const ColorSequence& w, const std::shared_ptr<const CartanMatrix>& A) {
  JWResult r = jw_recursive(w, A);
  if (!r.exists) throw std::invalid_argument("JW(" + w.str() + ") does not exist");
  return *r.morphism;
}

}  // namespace detail

/// For x = ...rb: closes the last strand of JW(x), checks the result is
/// -[k]_{r,b}/[k-1]_{b,r} JW(z) with z = x minus its last letter, returns that scalar.
inline RingElement partial_trace_check(const ColorSequence& x, const std::shared_ptr<const CartanMatrix>& A) {
  auto [r, b, k, z] = detail::trailing_pair(x);
  TLMorphism jx = detail::require_jw(x, A);
  TLMorphism jz = detail::require_jw(z, A);
  RingElement lower = two_colored_quantum(k - 1, b, r, *A);
  if (!lower.is_invertible()) throw std::invalid_argument("[k-1] is not invertible");
  RingElement scalar = -two_colored_quantum(k, r, b, *A) / lower;
  TLMorphism P = juxtapose(jx, TLMorphism::identity(ColorSequence({b, r}), A));
  const int last = P.source().points() - 2;
  TLMorphism closed = apply_cap(apply_cup(P, last), last);
  if (!(closed == scalar * jz))
    throw InvariantViolation("partial trace of JW(" + x.str() + ") is not " + scalar.to_string() + " JW(" + z.str() + ")");
  return scalar;
}

/// For x = ...rb: the coefficient in JW(xr) of the diagram capping and recupping
/// the last two strands, checked against [k-1]_{b,r}/[k]_{r,b} without dividing.
inline RingElement right_coefficient_check(const ColorSequence& x, const std::shared_ptr<const CartanMatrix>& A) {
  auto [r, b, k, z] = detail::trailing_pair(x);
  const ColorSequence xr = x.appended(r);
  TLMorphism j = detail::require_jw(xr, A);
  const int last = xr.points() - 2;
  auto cap = elementary_cap(xr, last);
  const CrossinglessMatching U = compose_raw(cap->second.flipped(), cap->second, cap->first).first;
  RingElement coeff = j.coefficient(U);
  if (!(coeff * two_colored_quantum(k, r, b, *A) == two_colored_quantum(k - 1, b, r, *A)))
    throw InvariantViolation("right coefficient of JW(" + xr.str() + ") is " + coeff.to_string());
  return coeff;
}

struct DecompositionPart {
  ColorSequence label;
  TLMorphism from_label;  // label -> word
  TLMorphism to_label;    // word -> label, with to_label o from_label = JW(label)
  TLMorphism idempotent;  // from_label o to_label
};

struct Decomposition {
  ColorSequence word;
  std::vector<DecompositionPart> parts;
  std::map<ColorSequence, int> multiplicities;
  std::optional<Obstruction> obstruction;
  bool complete() const { return !obstruction.has_value(); }
};

/// Splits the identity of End(x) into orthogonal idempotents, one per summand V_y,
/// by extending letter by letter: a fresh letter keeps each label, repeating the
/// second-to-last letter of a label ...rb splits it into ...rbr and the label minus b.
inline Decomposition decompose_identity(const ColorSequence& x, const std::shared_ptr<const CartanMatrix>& A) {
  Decomposition out{x, {}, {}, std::nullopt};
  const ColorSequence first = x.prefix(1);
  TLMorphism id1 = TLMorphism::identity(first, A);
  out.parts.push_back({first, id1, id1, id1});
  auto jw_or_fail = [&](const ColorSequence& w) -> std::optional<TLMorphism> {
    JWResult r = jw_recursive(w, A);
    if (!r.exists) out.obstruction = r.obstruction;
    return r.morphism;
  };
  for (std::size_t len = 2; len <= x.size(); ++len) {
    const Color& s = x[len - 1];
    std::vector<DecompositionPart> next;
    for (const auto& part : out.parts) {
      const ColorSequence& y = part.label;
      const TLMorphism strand = TLMorphism::identity(ColorSequence({y.back(), s}), A);
      TLMorphism alpha = juxtapose(part.from_label, strand);  // ys -> prefix
      TLMorphism beta = juxtapose(part.to_label, strand);     // prefix -> ys
      const ColorSequence ys = y.appended(s);
      auto jys = jw_or_fail(ys);
      if (!jys) return out;
      if (y.size() < 2 || y[y.size() - 2] != s) {
        next.push_back({ys, alpha, beta, compose(alpha, beta)});
        continue;
      }
      auto [r, b, k, z] = detail::trailing_pair(y);
      auto jz = jw_or_fail(z);
      auto jy = jw_or_fail(y);
      if (!jz || !jy) return out;
      RingElement c = two_colored_quantum(k - 1, b, r, *A) / two_colored_quantum(k, r, b, *A);
      TLMorphism P = juxtapose(*jy, strand);
      TLMorphism gamma = compose(apply_cup(P, ys.points() - 2), *jz);        // z -> ys
      TLMorphism delta = (-c) * compose(*jz, apply_cap(P, ys.points() - 2));  // ys -> z
      TLMorphism top_in = compose(alpha, *jys), top_out = compose(*jys, beta);
      next.push_back({ys, top_in, top_out, compose(top_in, top_out)});
      TLMorphism low_in = compose(alpha, gamma), low_out = compose(delta, beta);
      next.push_back({z, low_in, low_out, compose(low_in, low_out)});
    }
    out.parts = std::move(next);
  }
  for (const auto& p : out.parts) ++out.multiplicities[p.label];
  return out;
}

inline Decomposition decompose_identity(const ColorSequence& x, const CartanMatrix& A) {
  return decompose_identity(x, share(A));
}

}  // namespace mctl
