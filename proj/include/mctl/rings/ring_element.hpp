#pragma once

// Pluggable exact coefficient rings: Q, F_p, Q(delta) and Z.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "mctl/rings/poly.hpp"

namespace mctl {

/// Raised for malformed user input (ring names, element strings, words, configs).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal cross-check between independent computations fails.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class RingKind { Rational, PrimeField, RationalFunctionDelta, Integers };

class RingElement;

class RingSpec {
 public:
  static RingSpec rationals() { return RingSpec(RingKind::Rational, 0); }
  static RingSpec rational_functions() { return RingSpec(RingKind::RationalFunctionDelta, 0); }
  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }

  static RingSpec prime_field(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) throw ParseError("prime out of range: " + std::to_string(p));
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw ParseError(std::to_string(p) + " is not prime");
    return RingSpec(RingKind::PrimeField, p);
  }

  /// Accepts `q`, `z`, `qdelta`, `fp:<p>`.
  static RingSpec parse(std::string_view s) {
    if (s == "q") return rationals();
    if (s == "z") return integers();
    if (s == "qdelta") return rational_functions();
    if (s.substr(0, 3) == "fp:") {
      std::string digits(s.substr(3));
      if (digits.empty() || digits.size() > 12 ||
          digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad prime in ring spec: " + std::string(s));
      return prime_field(std::stoull(digits));
    }
    throw ParseError("unknown ring: " + std::string(s));
  }

  RingKind kind() const { return kind_; }
  std::uint64_t p() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  bool has_delta() const { return kind_ == RingKind::RationalFunctionDelta; }

  std::string name() const {
    switch (kind_) {
      case RingKind::Rational: return "q";
      case RingKind::PrimeField: return "fp:" + std::to_string(p_);
      case RingKind::RationalFunctionDelta: return "qdelta";
      case RingKind::Integers: return "z";
    }
    return "?";
  }

  RingElement zero() const;
  RingElement one() const;
  RingElement from_int(long n) const;
  RingElement from_bigint(const BigInt& n) const;
  RingElement from_rational(const BigRational& q) const;  // throws if the denominator is not invertible
  RingElement delta() const;                              // Q(delta) only
  RingElement parse_element(std::string_view text) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  friend class RingElement;
  RingSpec(RingKind k, std::uint64_t p) : kind_(k), p_(p) {}
  RingKind kind_;
  std::uint64_t p_;
};

struct ModP {
  std::uint64_t value;
  std::uint64_t p;
  friend bool operator==(const ModP&, const ModP&) = default;
};

namespace detail {

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod " + std::to_string(p));
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

inline std::uint64_t reduce_mod(const BigInt& n, std::uint64_t p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace detail

/// A value in one of the RingSpec rings. Arithmetic between elements of
/// different rings throws std::invalid_argument.
class RingElement {
 public:
  using Storage = std::variant<BigRational, ModP, RatFunc, BigInt>;

  RingElement() : value_(BigRational(0)) {}
  explicit RingElement(Storage v) : value_(std::move(v)) {}

  const Storage& storage() const { return value_; }

  RingSpec spec() const {
    switch (value_.index()) {
      case 0: return RingSpec::rationals();
      case 1: return RingSpec(RingKind::PrimeField, std::get<ModP>(value_).p);
      case 2: return RingSpec::rational_functions();
      default: return RingSpec::integers();
    }
  }

  bool is_zero() const {
    return std::visit(
        [](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ModP>)
            return x.value == 0;
          else if constexpr (std::is_same_v<T, RatFunc>)
            return x.is_zero();
          else
            return x == 0;
        },
        value_);
  }

  bool is_one() const {
    return std::visit(
        [](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ModP>)
            return x.value == 1;
          else if constexpr (std::is_same_v<T, RatFunc>)
            return x.is_one();
          else
            return x == 1;
        },
        value_);
  }

  /// Fields: nonzero. Integers: +-1.
  bool is_invertible() const {
    if (const auto* z = std::get_if<BigInt>(&value_)) return *z == 1 || *z == -1;
    return !is_zero();
  }

  RingElement operator-() const {
    return RingElement(std::visit(
        [](const auto& x) -> Storage {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ModP>)
            return ModP{x.value == 0 ? 0 : x.p - x.value, x.p};
          else if constexpr (std::is_same_v<T, BigRational>)
            return BigRational(-x);
          else if constexpr (std::is_same_v<T, BigInt>)
            return BigInt(-x);
          else
            return -x;
        },
        value_));
  }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    return binary(a, b, [](const auto& x, const auto& y) {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, ModP>)
        return ModP{(x.value + y.value) % x.p, x.p};
      else
        return T(x + y);
    });
  }

  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    return binary(a, b, [](const auto& x, const auto& y) {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, ModP>)
        return ModP{(x.value + x.p - y.value) % x.p, x.p};
      else
        return T(x - y);
    });
  }

  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    return binary(a, b, [](const auto& x, const auto& y) {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, ModP>)
        return ModP{(x.value * y.value) % x.p, x.p};
      else
        return T(x * y);
    });
  }

  /// Exact division by an invertible element; throws std::domain_error otherwise.
  friend RingElement operator/(const RingElement& a, const RingElement& b) {
    if (!b.is_invertible()) throw std::domain_error("division by non-invertible element " + b.to_string());
    return binary(a, b, [](const auto& x, const auto& y) {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, ModP>)
        return ModP{(x.value * detail::mod_inverse(y.value, x.p)) % x.p, x.p};
      else if constexpr (std::is_same_v<T, BigInt>)
        return T(y == 1 ? x : BigInt(-x));
      else
        return T(x / y);
    });
  }

  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

  friend bool operator==(const RingElement& a, const RingElement& b) { return a.value_ == b.value_; }

  std::size_t complexity() const {
    if (const auto* f = std::get_if<RatFunc>(&value_)) return f->complexity();
    if (const auto* q = std::get_if<BigRational>(&value_))
      return mpz_sizeinbase(q->get_num_mpz_t(), 2) + mpz_sizeinbase(q->get_den_mpz_t(), 2);
    if (const auto* z = std::get_if<BigInt>(&value_)) return mpz_sizeinbase(z->get_mpz_t(), 2);
    return is_one() ? 0 : 1;
  }

  std::string to_string() const {
    return std::visit(
        [](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ModP>)
            return std::to_string(x.value);
          else if constexpr (std::is_same_v<T, RatFunc>)
            return x.to_string();
          else
            return x.get_str();
        },
        value_);
  }

 private:
  template <class Op>
  static RingElement binary(const RingElement& a, const RingElement& b, Op op) {
    if (a.value_.index() != b.value_.index()) throw std::invalid_argument("ring mismatch in arithmetic");
    return RingElement(std::visit(
        [&](const auto& x) -> Storage {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(b.value_);
          if constexpr (std::is_same_v<T, ModP>) {
            if (x.p != y.p) throw std::invalid_argument("ring mismatch: different primes");
          }
          return op(x, y);
        },
        a.value_));
  }

  Storage value_;
};

inline bool is_invertible(const RingElement& x) { return x.is_invertible(); }

inline RingElement RingSpec::from_bigint(const BigInt& n) const {
  switch (kind_) {
    case RingKind::Rational: return RingElement(BigRational(n));
    case RingKind::PrimeField: return RingElement(ModP{detail::reduce_mod(n, p_), p_});
    case RingKind::RationalFunctionDelta: return RingElement(RatFunc(Poly(n)));
    case RingKind::Integers: return RingElement(n);
  }
  throw std::logic_error("unreachable");
}

inline RingElement RingSpec::from_int(long n) const { return from_bigint(BigInt(n)); }
inline RingElement RingSpec::zero() const { return from_int(0); }
inline RingElement RingSpec::one() const { return from_int(1); }

inline RingElement RingSpec::from_rational(const BigRational& q) const {
  return from_bigint(BigInt(q.get_num())) / from_bigint(BigInt(q.get_den()));
}

inline RingElement RingSpec::delta() const {
  if (!has_delta()) throw ParseError("ring " + name() + " has no delta");
  return RingElement(RatFunc::delta());
}

/// Evaluates an integer polynomial at a ring element.
inline RingElement evaluate(const Poly& p, const RingElement& x) {
  RingSpec spec = x.spec();
  RingElement acc = spec.zero();
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + spec.from_bigint(p.coeff(i));
  return acc;
}

/// Value of f at delta = 0 in `target`, provided f is regular there (its
/// lowest-terms denominator does not vanish at 0 in the target ring).
inline std::optional<RingElement> specialize_at_zero(const RatFunc& f, const RingSpec& target) {
  RingElement den = target.from_bigint(f.den().coeff(0));
  if (!den.is_invertible()) return std::nullopt;
  return target.from_bigint(f.num().coeff(0)) / den;
}

namespace detail {

// Recursive-descent parser for ring element literals:
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | 'delta' | '(' expr ')'
class ElementParser {
 public:
  ElementParser(std::string_view text, const RingSpec& spec) : s_(text), spec_(spec) {}

  RingElement parse() {
    RingElement v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse ring element '" + std::string(s_) + "': " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RingElement expr() {
    RingElement v = term();
    for (;;) {
      if (accept('+'))
        v = v + term();
      else if (accept('-'))
        v = v - term();
      else
        return v;
    }
  }

  RingElement term() {
    RingElement v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        RingElement d = unary();
        if (!d.is_invertible()) fail("division by non-invertible " + d.to_string());
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RingElement unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RingElement power() {
    RingElement base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 4) fail("bad exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    RingElement r = spec_.one();
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  }

  RingElement atom() {
    skip_ws();
    if (accept('(')) {
      RingElement v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return spec_.from_bigint(BigInt(std::string(s_.substr(start, pos_ - start))));
    }
    if (s_.substr(pos_, 5) == "delta") {
      pos_ += 5;
      if (!spec_.has_delta()) fail("'delta' is not an element of ring " + spec_.name());
      return spec_.delta();
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const RingSpec& spec_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RingElement RingSpec::parse_element(std::string_view text) const {
  return detail::ElementParser(text, *this).parse();
}

}  // namespace mctl
