#pragma once

// Integer polynomials in one indeterminate (delta) and their field of
// fractions, kept in a canonical normal form so that equal values compare
// equal representation-wise.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mctl {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense polynomial over the integers; `coeffs()[i]` multiplies delta^i.
/// The coefficient vector never has a trailing zero, so zero is the empty vector.
class Poly {
 public:
  Poly() = default;
  Poly(long c) : coeffs_{BigInt(c)} { trim(); }  // NOLINT(google-explicit-constructor)
  explicit Poly(BigInt c) : coeffs_{std::move(c)} { trim(); }
  explicit Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly delta() { return Poly(std::vector<BigInt>{0, 1}); }

  static Poly monomial(const BigInt& c, int degree) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& lead() const { return coeffs_.back(); }

  BigInt coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)]
                                                              : BigInt(0);
  }

  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const BigInt& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const BigInt& c) { return a *= c; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Non-negative gcd of all coefficients; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Divides every coefficient by `c`, which must divide all of them.
  Poly exact_div(const BigInt& c) const {
    Poly r = *this;
    for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
  }

  /// Content removed and leading coefficient made positive.
  Poly primitive_part() const {
    if (is_zero()) return {};
    Poly r = exact_div(content());
    if (r.lead() < 0) r = -r;
    return r;
  }

  Poly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<BigInt> v(static_cast<std::size_t>(k), 0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }

  /// Prints e.g. `delta^2-1`, `-delta`, `2*delta+3`, `0`.
  std::string to_string(std::string_view var = "delta") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      BigInt a = abs(c);
      if (c < 0)
        out += "-";
      else if (!out.empty())
        out += "+";
      if (i == 0) {
        out += a.get_str();
        continue;
      }
      if (a != 1) out += a.get_str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// lead(b)^e * a mod b for some e >= 0; only meaningful up to a unit for gcds.
inline Poly pseudo_remainder(Poly a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero polynomial");
  const int db = b.degree();
  const BigInt lb = b.lead();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const BigInt la = a.lead();
    a *= lb;
    a -= (b * la).shifted(shift);
  }
  return a;
}

/// Primitive gcd with positive leading coefficient (primitive PRS); gcd(0,0)=0.
inline Poly gcd(const Poly& x, const Poly& y) {
  Poly a = x.primitive_part();
  Poly b = y.primitive_part();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Poly(1);
    Poly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Quotient a/b in Z[delta]; throws if b does not divide a there.
inline Poly exact_quotient(Poly a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_quotient: not divisible");
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const BigInt& lb = b.lead();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    if (!mpz_divisible_p(a.lead().get_mpz_t(), lb.get_mpz_t()))
      throw std::domain_error("exact_quotient: not divisible");
    BigInt c;
    mpz_divexact(c.get_mpz_t(), a.lead().get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(shift)] = c;
    a -= (b * c).shifted(shift);
  }
  if (!a.is_zero()) throw std::domain_error("exact_quotient: not divisible");
  return Poly(std::move(q));
}

/// Element of Q(delta) stored as num/den in Z[delta] with
///  - gcd(num, den) = 1 in Q[delta],
///  - gcd(content(num), content(den)) = 1,
///  - lead(den) > 0, and zero stored as 0/1.
/// That makes num/den lowest terms in the UFD Z[delta], hence canonical.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(1) {}

  static RatFunc fraction(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
  }

  static RatFunc from_rational(const BigRational& q) {
    return fraction(Poly(BigInt(q.get_num())), Poly(BigInt(q.get_den())));
  }

  static RatFunc delta() { return RatFunc(Poly::delta()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return RatFunc(a.num_ + b.num_);
      return fraction(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_one()) return fraction(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return fraction(a.num_ + b.num_ * a.den_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    Poly ad = exact_quotient(a.den_, g);
    Poly bd = exact_quotient(b.den_, g);
    return fraction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
  }

  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
    return fraction(a.num_ * b.num_, a.den_ * b.den_);
  }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(delta)");
    return fraction(den_, num_);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Rough size measure used for pivot selection.
  std::size_t complexity() const {
    std::size_t bits = 0;
    for (const auto& c : num_.coeffs()) bits += mpz_sizeinbase(c.get_mpz_t(), 2);
    for (const auto& c : den_.coeffs()) bits += mpz_sizeinbase(c.get_mpz_t(), 2);
    return 64 * static_cast<std::size_t>(num_.degree() + 1 + den_.degree()) + bits;
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    const bool bare = den_.term_count() == 1 && (den_.lead() == 1 || den_.is_constant());
    if (!bare) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (den_.degree() > 0) {
      Poly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_quotient(std::move(num_), g);
        den_ = exact_quotient(std::move(den_), g);
      }
    }
    BigInt c = num_.content();
    BigInt cd = den_.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
    if (c != 1) {
      num_ = num_.exact_div(c);
      den_ = den_.exact_div(c);
    }
    if (den_.lead() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace mctl
