#pragma once

// Command-line front end. run_cli never exits the process; it returns
// 0 on success (an obstruction is a result), 2 on usage or parse errors and
// 3 when an internal consistency check fails.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mctl/json_io.hpp"

namespace mctl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

struct Options {
  std::string ring = "qdelta";
  std::string cartan;  // "-2" or "sym-delta"; empty means the ring's default
  std::string alphabet;
  std::string realization_file;
  std::string format = "json";
  int verbosity = 0;

  std::string word, bottom, top, left, by, x, s;
  std::string method = "recursive";
  std::uint64_t max_prime = 100;
};

/// Words may be empty only where the identity element is meaningful.
inline std::vector<Color> parse_letters(const std::string& text) {
  if (text.empty()) return {};
  return ColorSequence::split_colors(text);
}

class Driver {
 public:
  Driver(Options opt, std::ostream& out, std::ostream& err) : opt_(std::move(opt)), out_(out), err_(err) {}

  int jw() {
    const ColorSequence x = ColorSequence::parse(opt_.word);
    auto A = cartan_for({x.colors()});
    const JWResult r = opt_.method == "recursive"     ? jw_recursive(x, A)
                       : opt_.method == "descriptive" ? jw_descriptive(x, A)
                                                      : perp_space_oracle(x, A).jw;
    if (json_mode()) return emit(json_io::jw(r));
    out_ << "JW(" << x.str() << ") over " << A->ring().name() << ": ";
    if (!r.exists) {
      out_ << "does not exist\n  " << r.obstruction->detail << "\n";
      return kExitOk;
    }
    out_ << r.morphism->terms().size() << " terms\n";
    for (const auto& [d, c] : r.morphism->terms()) out_ << "  " << c.to_string() << "  " << d.str() << "\n";
    return kExitOk;
  }

  int failing_primes() {
    const CoxeterWord w = reduced_word(opt_.word);
    auto p = mctl::failing_primes(w, opt_.max_prime);
    if (json_mode()) return emit(json_io::primes(w, opt_.max_prime, p));
    out_ << "failing primes of " << w.str() << " up to " << opt_.max_prime << ":";
    for (auto q : p) out_ << " " << q;
    out_ << (p.empty() ? " none\n" : "\n");
    return kExitOk;
  }

  int count() {
    const ColorSequence b = ColorSequence::parse(opt_.bottom), t = ColorSequence::parse(opt_.top);
    const std::size_t n = colored_basis(b, t).size();
    if (json_mode()) return emit({{"bottom", json_io::colors(b)}, {"top", json_io::colors(t)}, {"count", n}});
    out_ << "|CM(" << b.str() << ", " << t.str() << ")| = " << n << "\n";
    return kExitOk;
  }

  int hecke_kl() {
    const CoxeterWord w = reduced_word(opt_.word);
    const HeckeElement b = kl_basis(w);
    if (json_mode()) {
      json j = json_io::hecke(b);
      j["basis"] = "standard";
      return emit(j);
    }
    out_ << "b_" << (w.empty() ? "1" : w.str()) << " = " << b.to_string() << "\n";
    return kExitOk;
  }

  int hecke_mult() {
    const CoxeterWord x = reduced_word(opt_.left);
    const auto letters = parse_letters(opt_.by);
    if (letters.size() != 1) throw ParseError("--by takes a single color");
    const auto kl = mult_kl_by_bs(x, letters[0]);
    if (json_mode()) {
      json j = json_io::hecke_terms(kl);
      j["basis"] = "kl";
      return emit(j);
    }
    std::string s;
    for (const auto& [w, c] : kl)
      s += (s.empty() ? "" : " + ") + (c == LaurentPoly(1) ? "" : "(" + c.to_string() + ")") + "b_" + (w.empty() ? "1" : w.str());
    out_ << "b_" << (x.empty() ? "1" : x.str()) << " b_" << letters[0] << " = " << s << "\n";
    return kExitOk;
  }

  int decompose() {
    const CoxeterWord w = reduced_word(opt_.word);
    const RealizationSpec R(cartan_for({w.letters()}));
    const WordDecomposition d = decompose_word(w, R);
    if (json_mode()) return emit(json_io::decomposition(d));
    if (d.obstruction) {
      out_ << "cannot decompose " << w.str() << ": " << d.obstruction->detail << "\n";
      return kExitOk;
    }
    out_ << w.str() << " =";
    bool first = true;
    for (const auto& [y, m] : d.multiplicities) {
      out_ << (first ? " " : " + ") << (m == 1 ? "" : std::to_string(m) + " ") << "V_" << (y.empty() ? "1" : y.str());
      first = false;
    }
    out_ << "\n";
    return kExitOk;
  }

  int verdict() {
    const CoxeterWord w = reduced_word(opt_.word);
    const Verdict v = soergel_verdict(w, RealizationSpec(cartan_for({w.letters()})));
    if (json_mode()) return emit(json_io::verdict(v));
    out_ << w.str() << ": " << (v.holds ? "holds" : "fails") << "\n";
    for (const auto& o : v.witnesses) out_ << "  " << o.detail << "\n";
    return kExitOk;
  }

  int check() {
    const CoxeterWord x = reduced_word(opt_.x);
    const auto letters = parse_letters(opt_.s);
    if (letters.size() != 1) throw ParseError("--s takes a single color");
    const DyerCheck d = categorified_dyer_check(x, letters[0], RealizationSpec(cartan_for({x.letters(), letters})));
    if (json_mode()) return emit(json_io::dyer_check(d));
    out_ << "x=" << (x.empty() ? "1" : x.str()) << " s=" << d.s << ": ";
    if (d.degenerate)
      out_ << "degenerate case, Hecke side only";
    else if (d.obstruction)
      out_ << "no TL side: " << d.obstruction->detail;
    else
      out_ << (d.agree ? "summands agree" : "summands disagree");
    out_ << "\n";
    return kExitOk;
  }

 private:
  using json = nlohmann::json;

  bool json_mode() const { return opt_.format == "json"; }

  int emit(const json& j) {
    out_ << j.dump() << "\n";
    return kExitOk;
  }

  void log(int level, const std::string& msg) {
    if (opt_.verbosity >= level) err_ << msg << "\n";
  }

  CoxeterWord reduced_word(const std::string& text) {
    const auto letters = parse_letters(text);
    CoxeterWord w = CoxeterWord::reduce(letters);
    if (!CoxeterWord::is_reduced(letters))
      err_ << "warning: '" << text << "' is not reduced; using " << (w.empty() ? "the identity" : w.str()) << "\n";
    return w;
  }

  /// The realization file, or the ring shorthand with the uniform matrix over the
  /// given alphabet (default: the colors in use, in order of appearance).
  std::shared_ptr<const CartanMatrix> cartan_for(const std::vector<std::vector<Color>>& used) {
    if (!opt_.realization_file.empty()) {
      std::ifstream in(opt_.realization_file);
      if (!in) throw ParseError("cannot read realization file " + opt_.realization_file);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("realization file is not JSON: ") + e.what());
      }
      auto A = share(json_io::cartan_from(j));
      log(1, "realization " + A->fingerprint());
      return A;
    }
    std::vector<Color> alphabet = parse_letters(opt_.alphabet);
    if (alphabet.empty())
      for (const auto& seq : used)
        for (const auto& c : seq)
          if (std::find(alphabet.begin(), alphabet.end(), c) == alphabet.end()) alphabet.push_back(c);
    if (alphabet.empty()) alphabet.push_back("r");
    const RingSpec ring = RingSpec::parse(opt_.ring);
    std::string shape = opt_.cartan;
    if (shape.empty()) shape = ring.has_delta() ? "sym-delta" : "-2";
    std::shared_ptr<const CartanMatrix> A;
    if (shape == "-2")
      A = share(CartanMatrix::crystallographic(ring, alphabet));
    else if (shape == "sym-delta") {
      if (!ring.has_delta()) throw ParseError("--cartan sym-delta needs --ring qdelta");
      A = share(CartanMatrix::symmetric_delta(alphabet));
    } else
      throw ParseError("--cartan must be -2 or sym-delta");
    log(1, "realization " + A->fingerprint());
    return A;
  }

  Options opt_;
  std::ostream& out_;
  std::ostream& err_;
};

/// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Colored Temperley-Lieb, Jones-Wenzl and Hecke algebra computations", "mctl"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.set_help_all_flag("--help-all", "Expand all help");

  auto* ring = app.add_option("--ring", opt.ring, "Coefficient ring: q, fp:<p>, qdelta, z")->capture_default_str();
  auto* cart = app.add_option("--cartan", opt.cartan, "Cartan matrix: -2 or sym-delta (default by ring)");
  auto* alpha = app.add_option("--alphabet", opt.alphabet, "Colors, e.g. rbg or red,blue (default: colors in use)");
  auto* file = app.add_option("--realization", opt.realization_file, "JSON file with alphabet, cartan and ring");
  file->excludes(ring)->excludes(cart)->excludes(alpha);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("-v,--verbose", opt.verbosity, "Log more to stderr");

  Driver* driver = nullptr;
  int (Driver::*action)() = nullptr;
  auto bind = [&](CLI::App* sub, int (Driver::*fn)()) {
    sub->fallthrough();
    sub->callback([&action, fn] { action = fn; });
  };

  auto* jw = app.add_subcommand("jw", "Jones-Wenzl projector of a color word");
  jw->add_option("--word", opt.word, "Color word, e.g. rbr")->required();
  jw->add_option("--method", opt.method, "recursive, descriptive or oracle")
      ->check(CLI::IsMember({"recursive", "descriptive", "oracle"}))
      ->capture_default_str();
  bind(jw, &Driver::jw);

  auto* fp = app.add_subcommand("failing-primes", "Primes where the crystallographic verdict fails");
  fp->add_option("--word", opt.word, "Reduced word")->required();
  fp->add_option("--max-prime", opt.max_prime, "Largest prime examined")->check(CLI::Range(2, 10000000))->capture_default_str();
  bind(fp, &Driver::failing_primes);

  auto* count = app.add_subcommand("count", "Number of colored crossingless matchings");
  count->add_option("--bottom", opt.bottom, "Bottom color sequence")->required();
  count->add_option("--top", opt.top, "Top color sequence")->required();
  bind(count, &Driver::count);

  auto* hecke = app.add_subcommand("hecke", "Hecke algebra of the universal Coxeter group");
  hecke->require_subcommand(1);
  hecke->fallthrough();
  auto* kl = hecke->add_subcommand("kl", "KL basis element in the standard basis");
  kl->add_option("--word", opt.word, "Reduced word (empty for the identity)")->required();
  bind(kl, &Driver::hecke_kl);
  auto* mult = hecke->add_subcommand("mult", "KL expansion of b_x b_s");
  mult->add_option("--left", opt.left, "The word x")->required();
  mult->add_option("--by", opt.by, "The color s")->required();
  bind(mult, &Driver::hecke_mult);

  auto* dec = app.add_subcommand("decompose", "Summands of a color word");
  dec->add_option("--word", opt.word, "Reduced word")->required();
  bind(dec, &Driver::decompose);

  auto* ver = app.add_subcommand("verdict", "Whether the indecomposable categorifies the KL element");
  ver->add_option("--word", opt.word, "Reduced word")->required();
  bind(ver, &Driver::verdict);

  auto* chk = app.add_subcommand("check", "Dyer formula on the diagram and Hecke sides");
  chk->add_option("--x", opt.x, "Reduced word x")->required();
  chk->add_option("--s", opt.s, "Color s")->required();
  bind(chk, &Driver::check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Driver d(opt, out, err);
    driver = &d;
    if (!action) throw ParseError("no command given");
    return (driver->*action)();
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace mctl::cli
