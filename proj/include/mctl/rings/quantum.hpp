#pragma once

// One- and two-colored quantum numbers, factorials and binomials.

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "mctl/rings/cartan.hpp"

namespace mctl {

/// [m] from [0]=0, [1]=1, [2]=two and [2][m] = [m+1] + [m-1], for any integer m.
inline RingElement quantum_number(int m, const RingElement& two) {
  const RingSpec spec = two.spec();
  RingElement prev = spec.zero();  // [j-1] going up, [j+1] going down
  RingElement cur = spec.zero();   // [j]
  if (m >= 0) {
    if (m == 0) return cur;
    cur = spec.one();
    for (int j = 1; j < m; ++j) {
      RingElement next = two * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  prev = spec.one();  // [1]
  for (int j = 0; j > m; --j) {
    RingElement next = two * cur - prev;  // [j-1] = [2][j] - [j+1]
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Quantum number over Q(delta) with [2] = delta.
inline RingElement quantum_number(int m, const RingSpec& spec) { return quantum_number(m, spec.delta()); }

namespace detail {

struct TwoColoredCache {
  std::mutex mu;
  // (fingerprint, s, t) -> [0..n]_{s,t} and [0..n]_{t,s}
  std::map<std::tuple<std::string, Color, Color>, std::pair<std::vector<RingElement>, std::vector<RingElement>>>
      positive;
  std::map<std::pair<int, int>, Poly> binomial_polys;
};

inline TwoColoredCache& two_colored_cache() {
  static TwoColoredCache cache;
  return cache;
}

}  // namespace detail

/// [m]_{s,t}: [0]=0, [1]=1, [2]_{s,t} = -a_{s,t},
/// [2]_{s,t} [m]_{t,s} = [m-1]_{s,t} + [m+1]_{s,t}. Memoized per Cartan matrix.
inline RingElement two_colored_quantum(int m, const Color& s, const Color& t, const CartanMatrix& A) {
  if (s == t) throw std::invalid_argument("two-colored quantum number needs distinct colors");
  const RingElement two_st = -A.entry(s, t);
  const RingElement two_ts = -A.entry(t, s);
  const RingSpec& spec = A.ring();
  if (m < 0) {
    // Run the recursion downwards: [j-1]_{s,t} = [2]_{s,t}[j]_{t,s} - [j+1]_{s,t}.
    RingElement up_st = spec.one(), up_ts = spec.one();
    RingElement cur_st = spec.zero(), cur_ts = spec.zero();
    for (int j = 0; j > m; --j) {
      RingElement next_st = two_st * cur_ts - up_st;
      RingElement next_ts = two_ts * cur_st - up_ts;
      up_st = std::move(cur_st);
      up_ts = std::move(cur_ts);
      cur_st = std::move(next_st);
      cur_ts = std::move(next_ts);
    }
    return cur_st;
  }
  auto& cache = detail::two_colored_cache();
  const auto key = std::make_tuple(A.fingerprint(), s, t);
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.positive.find(key);
    if (it != cache.positive.end() && static_cast<int>(it->second.first.size()) > m)
      return it->second.first[static_cast<std::size_t>(m)];
  }
  std::vector<RingElement> st{spec.zero(), spec.one()};
  std::vector<RingElement> ts{spec.zero(), spec.one()};
  while (static_cast<int>(st.size()) <= m) {
    const std::size_t j = st.size() - 1;
    st.push_back(two_st * ts[j] - st[j - 1]);
    ts.push_back(two_ts * st[j] - ts[j - 1]);
  }
  RingElement result = st[static_cast<std::size_t>(m)];
  std::lock_guard lock(cache.mu);
  auto& slot = cache.positive[key];
  if (slot.first.size() < st.size()) slot = {std::move(st), std::move(ts)};
  return result;
}

/// [k]!_{s,t} = [k]_{s,t} [k-1]_{t,s} [k-2]_{s,t} ... [1], subscripts alternating.
inline RingElement two_colored_factorial(int k, const Color& s, const Color& t, const CartanMatrix& A) {
  if (k < 0) throw std::invalid_argument("factorial of a negative number");
  RingElement r = A.ring().one();
  for (int j = k; j >= 1; --j) {
    const bool same = (k - j) % 2 == 0;
    r = r * (same ? two_colored_quantum(j, s, t, A) : two_colored_quantum(j, t, s, A));
  }
  return r;
}

/// The quantum binomial [k choose m] as an integer polynomial in [2] = delta.
inline Poly quantum_binomial_poly(int k, int m) {
  if (m < 0 || m > k) throw std::invalid_argument("quantum binomial needs 0 <= m <= k");
  auto& cache = detail::two_colored_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.binomial_polys.find({k, m});
    if (it != cache.binomial_polys.end()) return it->second;
  }
  const RingSpec qd = RingSpec::rational_functions();
  auto factorial = [&](int n) {
    RingElement r = qd.one();
    for (int j = 2; j <= n; ++j) r = r * quantum_number(j, qd);
    return r;
  };
  RingElement value = factorial(k) / (factorial(m) * factorial(k - m));
  const RatFunc& f = std::get<RatFunc>(value.storage());
  if (!f.den().is_one()) throw std::logic_error("quantum binomial is not a polynomial in delta");
  Poly p = f.num();
  std::lock_guard lock(cache.mu);
  cache.binomial_polys.emplace(std::make_pair(k, m), p);
  return p;
}

/// Two-colored binomial [k choose m]_{s,t}.
///
/// When a_{s,t} = a_{t,s} this is the ordinary quantum binomial evaluated at
/// [2] = -a_{s,t} (so the integer binomial when a = -2). Otherwise it is the
/// factorial ratio [k]!_{s,t} / ([m]!_{u} [k-m]!_{w}), with the subscripts of
/// the denominator factorials aligned with the alternation of the numerator;
/// std::nullopt when that denominator is not invertible in the ring, meaning
/// the value is not available on this path.
inline std::optional<RingElement> two_colored_binomial(int k, int m, const Color& s, const Color& t,
                                                       const CartanMatrix& A) {
  if (m < 0 || m > k) throw std::invalid_argument("two-colored binomial needs 0 <= m <= k");
  if (m == 0 || m == k) return A.ring().one();
  if (A.entry(s, t) == A.entry(t, s)) return evaluate(quantum_binomial_poly(k, m), -A.entry(s, t));
  const bool m_aligned = (k - m) % 2 == 0;
  const bool rest_aligned = m % 2 == 0;
  RingElement den = (m_aligned ? two_colored_factorial(m, s, t, A) : two_colored_factorial(m, t, s, A)) *
                    (rest_aligned ? two_colored_factorial(k - m, s, t, A) : two_colored_factorial(k - m, t, s, A));
  if (!den.is_invertible()) return std::nullopt;
  return two_colored_factorial(k, s, t, A) / den;
}

}  // namespace mctl
