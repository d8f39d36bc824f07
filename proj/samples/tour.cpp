// A short walk through the library: a Jones-Wenzl projector, where it stops
// existing in characteristic 2, the matching decomposition in the Hecke algebra.

#include <iostream>

#include "mctl/soergel_gate.hpp"

int main() {
  using namespace mctl;
  const std::vector<Color> colors{"r", "b", "g"};
  const auto generic = share(CartanMatrix::symmetric_delta(colors));
  const auto f2 = share(CartanMatrix::crystallographic(RingSpec::prime_field(2), colors));

  const ColorSequence x = ColorSequence::parse("rbrb");
  const JWResult j = jw_recursive(x, generic);
  std::cout << "JW(" << x.str() << ") over " << generic->ring().name() << ":\n";
  for (const auto& [d, c] : j.morphism->terms()) std::cout << "  " << c.to_string() << "  " << d.str() << "\n";

  for (const char* w : {"rbr", "rbrb", "rbrbr"}) {
    const Verdict v = soergel_verdict(CoxeterWord::reduced(ColorSequence::split_colors(w)), RealizationSpec(f2));
    std::cout << w << " over F_2: " << (v.holds ? "JW exists" : "no JW");
    for (const auto& o : v.witnesses) std::cout << "; " << o.detail;
    std::cout << "\n";
  }

  const CoxeterWord rbrb = CoxeterWord::from(x);
  std::cout << "summands of " << x.str() << ":";
  for (const auto& [y, m] : decompose_word(rbrb, RealizationSpec(generic)).multiplicities)
    std::cout << " " << m << "x" << y.str();
  std::cout << "\nb_r b_b b_r b_b in the KL basis:";
  HeckeElement prod = HeckeElement::one();
  for (const auto& c : rbrb.letters()) prod = mult_bs(prod, c);
  for (const auto& [y, c] : standard_to_kl(prod)) std::cout << " (" << c.to_string() << ")b_" << y.str();
  std::cout << "\nfailing primes of rbrbrbr: ";
  for (auto p : failing_primes(CoxeterWord::reduced(ColorSequence::split_colors("rbrbrbr")), 50)) std::cout << p << " ";
  std::cout << "\n";
}
