#include <gtest/gtest.h>

#include <random>

#include "mctl/rings.hpp"

namespace mctl {
namespace {

const RingSpec kQd = RingSpec::rational_functions();
const RingSpec kQ = RingSpec::rationals();

RingElement el(const RingSpec& r, const char* s) { return r.parse_element(s); }

TEST(Poly, GcdAndExactQuotient) {
  Poly x = Poly::delta();
  Poly a = (x * x - Poly(1)) * (x + Poly(2));  // (d-1)(d+1)(d+2)
  Poly b = (x - Poly(1)) * (x * x + Poly(3));
  Poly g = gcd(a * BigInt(6), b * BigInt(4));
  EXPECT_EQ(g, x - Poly(1));
  EXPECT_EQ(exact_quotient(a, x - Poly(1)), (x + Poly(1)) * (x + Poly(2)));
  EXPECT_THROW(exact_quotient(a, x + Poly(5)), std::domain_error);
}

TEST(RatFunc, CanonicalForm) {
  Poly x = Poly::delta();
  RatFunc f = RatFunc::fraction(Poly(2) * (x * x - Poly(1)), Poly(-4) * (x - Poly(1)));
  EXPECT_EQ(f.num(), -(x + Poly(1)));
  EXPECT_EQ(f.den(), Poly(2));
  EXPECT_EQ(f.to_string(), "(-delta-1)/2");
  EXPECT_EQ(RatFunc::fraction(Poly(1), x).to_string(), "1/delta");
  EXPECT_TRUE(RatFunc::fraction(Poly(0), x) == RatFunc(0));
}

TEST(RingSpec, ParseNames) {
  EXPECT_EQ(RingSpec::parse("q"), RingSpec::rationals());
  EXPECT_EQ(RingSpec::parse("fp:7").p(), 7u);
  EXPECT_EQ(RingSpec::parse("qdelta"), RingSpec::rational_functions());
  EXPECT_THROW(RingSpec::parse("fp:9"), ParseError);
  EXPECT_THROW(RingSpec::parse("fp:"), ParseError);
  EXPECT_THROW(RingSpec::parse("reals"), ParseError);
}

TEST(RingElement, ParseAndPrintRoundTrip) {
  for (const char* s : {"0", "1", "-delta", "delta^2-1", "(delta^2-1)/delta", "1/delta", "2*delta+3",
                        "1/(2*delta)", "(-delta-1)/2", "-delta^3/(delta^2-1)"}) {
    RingElement e = el(kQd, s);
    EXPECT_EQ(kQd.parse_element(e.to_string()), e) << s;
  }
  EXPECT_EQ(el(kQd, "(delta^2-1)/(delta-1)").to_string(), "delta+1");
  EXPECT_EQ(el(kQ, "-6/4").to_string(), "-3/2");
  EXPECT_EQ(el(RingSpec::prime_field(5), "3/2").to_string(), "4");
  EXPECT_THROW(el(RingSpec::prime_field(5), "1/5"), ParseError);
  EXPECT_THROW(el(kQ, "delta"), ParseError);
  EXPECT_THROW(el(kQ, "2+"), ParseError);
}

TEST(RingElement, Invertibility) {
  EXPECT_FALSE(kQ.zero().is_invertible());
  EXPECT_FALSE(kQd.zero().is_invertible());
  EXPECT_FALSE(RingSpec::prime_field(3).from_int(3).is_invertible());
  EXPECT_TRUE(el(kQd, "delta^2-1").is_invertible());
  EXPECT_TRUE(RingSpec::integers().from_int(-1).is_invertible());
  EXPECT_FALSE(RingSpec::integers().from_int(2).is_invertible());
  EXPECT_THROW(kQ.one() / kQ.zero(), std::domain_error);
  EXPECT_THROW(kQ.one() + kQd.one(), std::invalid_argument);
  EXPECT_THROW(RingSpec::prime_field(3).one() + RingSpec::prime_field(5).one(), std::invalid_argument);
}

TEST(QuantumNumber, Examples) {
  EXPECT_EQ(quantum_number(0, kQd), kQd.zero());
  EXPECT_EQ(quantum_number(2, kQd), kQd.delta());
  // [2][2] = [3] + [1]
  EXPECT_EQ(quantum_number(3, kQd), el(kQd, "delta^2-1"));
  EXPECT_EQ(quantum_number(-3, kQd), el(kQd, "1-delta^2"));
}

TEST(QuantumNumber, NegativeIsMinusPositive) {
  for (int m = 0; m <= 30; ++m) EXPECT_EQ(quantum_number(-m, kQd), -quantum_number(m, kQd)) << m;
}

std::vector<Color> rb() { return {"r", "b"}; }

TEST(TwoColoredQuantum, Examples) {
  CartanMatrix sym = CartanMatrix::symmetric_delta(rb());
  EXPECT_EQ(two_colored_quantum(2, "r", "b", sym), kQd.delta());

  CartanMatrix generic(kQ, rb(), {{{"r", "b"}, el(kQ, "3/7")}, {{"b", "r"}, el(kQ, "-5")}});
  EXPECT_EQ(two_colored_quantum(3, "r", "b", generic), el(kQ, "3/7") * el(kQ, "-5") - kQ.one());
  EXPECT_EQ(two_colored_quantum(2, "r", "b", generic), el(kQ, "-3/7"));
  EXPECT_EQ(two_colored_quantum(2, "b", "r", generic), el(kQ, "5"));

  CartanMatrix cryst = CartanMatrix::crystallographic(kQ, rb());
  EXPECT_EQ(two_colored_quantum(5, "r", "b", cryst), kQ.from_int(5));
}

TEST(TwoColoredQuantum, SpecializationsUpToFifty) {
  CartanMatrix sym = CartanMatrix::symmetric_delta(rb());
  CartanMatrix cryst = CartanMatrix::crystallographic(RingSpec::integers(), rb());
  for (int m = -50; m <= 50; ++m) {
    EXPECT_EQ(two_colored_quantum(m, "r", "b", sym), quantum_number(m, kQd)) << m;
    EXPECT_EQ(two_colored_quantum(m, "b", "r", cryst), RingSpec::integers().from_int(m)) << m;
  }
}

// Odd symmetry and even twist, treating a_{s,t}, a_{t,s} as independent by
// sampling random rational pairs.
TEST(TwoColoredQuantum, OddSymmetryAndEvenTwist) {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 17);
  for (int trial = 0; trial < 20; ++trial) {
    BigRational ast(num(rng), den(rng)), ats(num(rng), den(rng));
    ast.canonicalize();
    ats.canonicalize();
    CartanMatrix A(kQ, rb(), {{{"r", "b"}, kQ.from_rational(ast)}, {{"b", "r"}, kQ.from_rational(ats)}});
    for (int m = -20; m <= 20; ++m) {
      RingElement st = two_colored_quantum(m, "r", "b", A);
      RingElement ts = two_colored_quantum(m, "b", "r", A);
      if (m % 2 != 0)
        EXPECT_EQ(st, ts) << "m=" << m;
      else
        EXPECT_EQ(st * A.entry("b", "r"), ts * A.entry("r", "b")) << "m=" << m;
    }
  }
}

TEST(TwoColoredBinomial, Examples) {
  CartanMatrix f3 = CartanMatrix::crystallographic(RingSpec::prime_field(3), rb());
  EXPECT_EQ(*two_colored_binomial(3, 1, "r", "b", f3), RingSpec::prime_field(3).zero());
  EXPECT_EQ(*two_colored_binomial(9, 0, "r", "b", f3), RingSpec::prime_field(3).one());
  CartanMatrix sym = CartanMatrix::symmetric_delta(rb());
  EXPECT_EQ(*two_colored_binomial(3, 1, "r", "b", sym), el(kQd, "delta^2-1"));
  EXPECT_THROW(two_colored_binomial(3, 4, "r", "b", sym), std::invalid_argument);
}

TEST(TwoColoredBinomial, CrystallographicIsIntegerBinomial) {
  CartanMatrix z = CartanMatrix::crystallographic(RingSpec::integers(), rb());
  for (int k = 0; k <= 14; ++k) {
    for (int m = 0; m <= k; ++m) {
      BigInt expected;
      mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
      EXPECT_EQ(*two_colored_binomial(k, m, "r", "b", z), RingSpec::integers().from_bigint(expected)) << k << "," << m;
    }
  }
}

TEST(TwoColoredBinomial, SymmetricMatchesFactorialRatio) {
  CartanMatrix sym = CartanMatrix::symmetric_delta(rb());
  for (int k = 0; k <= 9; ++k)
    for (int m = 0; m <= k; ++m) {
      RingElement ratio = two_colored_factorial(k, "r", "b", sym) /
                          (two_colored_factorial(m, "r", "b", sym) * two_colored_factorial(k - m, "r", "b", sym));
      EXPECT_EQ(*two_colored_binomial(k, m, "r", "b", sym), ratio);
    }
}

TEST(TwoColoredBinomial, AsymmetricUndefinedWhenDenominatorVanishes) {
  CartanMatrix A(kQ, rb(), {{{"r", "b"}, kQ.zero()}, {{"b", "r"}, kQ.from_int(3)}});
  // [2]_{r,b} = 0 sits in the denominator of [4 choose 2]_{r,b}.
  EXPECT_FALSE(two_colored_binomial(4, 2, "r", "b", A).has_value());
}

// Ring axioms on random triples, and normalize(normalize(x)) == normalize(x).
RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-6, 6), deg(0, 3);
  auto poly = [&] {
    std::vector<BigInt> v;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) v.emplace_back(c(rng));
    return Poly(std::move(v));
  };
  Poly den = poly();
  while (den.is_zero()) den = poly();
  return RatFunc::fraction(poly(), den);
}

TEST(RingAxioms, RandomizedRationalFunctions) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    RingElement a(random_ratfunc(rng)), b(random_ratfunc(rng)), c(random_ratfunc(rng));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, kQd.zero());
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    const RatFunc& f = std::get<RatFunc>(a.storage());
    EXPECT_EQ(RatFunc::fraction(f.num(), f.den()), f);
  }
}

TEST(RingAxioms, RandomizedPrimeFieldAndRationals) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (const RingSpec& r : {RingSpec::prime_field(7), RingSpec::prime_field(2147483647), kQ}) {
    for (int trial = 0; trial < 200; ++trial) {
      RingElement a = r.from_int(d(rng)), b = r.from_int(d(rng)), c = r.from_int(d(rng));
      if (r == kQ && !c.is_zero()) a = a / c;
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (b.is_invertible()) {
        EXPECT_EQ((a / b) * b, a);
      }
    }
  }
}

TEST(CartanMatrix, Validation) {
  EXPECT_THROW(CartanMatrix(kQ, rb(), {{{"r", "b"}, kQ.one()}}), ParseError);
  EXPECT_THROW(CartanMatrix(kQ, {"r", "r"}, {}), ParseError);
  EXPECT_THROW(CartanMatrix(kQ, rb(), {{{"r", "b"}, kQ.one()}, {{"b", "r"}, kQd.one()}}), ParseError);
  EXPECT_THROW(CartanMatrix(kQ, rb(), {{{"r", "r"}, kQ.one()}, {{"r", "b"}, kQ.one()}, {{"b", "r"}, kQ.one()}}),
               ParseError);
  CartanMatrix A = CartanMatrix::crystallographic(kQ, rb());
  EXPECT_EQ(A.entry("r", "r"), kQ.from_int(2));
  EXPECT_EQ(A.entry("r", "b"), kQ.from_int(-2));
}

}  // namespace
}  // namespace mctl
