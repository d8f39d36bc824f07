#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mctl/rings/ring_element.hpp"

namespace mctl {

using Color = std::string;

/// Cartan matrix of a realization: off-diagonal entries a_{s,t} in one ring,
/// diagonal fixed to 2. A circle with outside color s and inside color t
/// evaluates to entry(s, t).
class CartanMatrix {
 public:
  using Entries = std::map<std::pair<Color, Color>, RingElement>;

  CartanMatrix(RingSpec ring, std::vector<Color> alphabet, Entries off_diagonal)
      : ring_(ring), alphabet_(std::move(alphabet)), entries_(std::move(off_diagonal)), two_(ring.from_int(2)) {
    if (alphabet_.empty()) throw ParseError("Cartan matrix needs a nonempty alphabet");
    std::set<Color> seen;
    for (const auto& c : alphabet_) {
      if (c.empty()) throw ParseError("empty color name");
      if (!seen.insert(c).second) throw ParseError("duplicate color '" + c + "'");
    }
    for (const auto& [key, value] : entries_) {
      if (!seen.count(key.first) || !seen.count(key.second))
        throw ParseError("Cartan entry for unknown color pair " + key.first + "," + key.second);
      if (key.first == key.second) {
        if (!(value == two_)) throw ParseError("diagonal Cartan entries must equal 2");
        continue;
      }
      if (!(value.spec() == ring_)) throw ParseError("Cartan entry not in ring " + ring_.name());
    }
    for (auto it = entries_.begin(); it != entries_.end();) {
      if (it->first.first == it->first.second)
        it = entries_.erase(it);
      else
        ++it;
    }
    for (const auto& s : alphabet_)
      for (const auto& t : alphabet_)
        if (s != t && !entries_.count({s, t}))
          throw ParseError("missing Cartan entry " + s + "," + t);
    fingerprint_ = ring_.name() + "|";
    for (const auto& [key, value] : entries_)
      fingerprint_ += key.first + "," + key.second + "=" + value.to_string() + ";";
  }

  /// Every off-diagonal entry equal to `value`.
  static CartanMatrix uniform(RingSpec ring, const std::vector<Color>& alphabet, const RingElement& value) {
    Entries e;
    for (const auto& s : alphabet)
      for (const auto& t : alphabet)
        if (s != t) e.emplace(std::make_pair(s, t), value);
    return CartanMatrix(ring, alphabet, std::move(e));
  }

  /// a_{s,t} = -delta over Q(delta): the uncolored-circle specialization.
  static CartanMatrix symmetric_delta(const std::vector<Color>& alphabet) {
    RingSpec r = RingSpec::rational_functions();
    return uniform(r, alphabet, -r.delta());
  }

  /// a_{s,t} = -2, the crystallographic realization.
  static CartanMatrix crystallographic(RingSpec ring, const std::vector<Color>& alphabet) {
    return uniform(ring, alphabet, ring.from_int(-2));
  }

  const RingSpec& ring() const { return ring_; }
  const std::vector<Color>& alphabet() const { return alphabet_; }
  const Entries& off_diagonal() const { return entries_; }
  const std::string& fingerprint() const { return fingerprint_; }

  bool contains(const Color& c) const { return std::find(alphabet_.begin(), alphabet_.end(), c) != alphabet_.end(); }

  const RingElement& entry(const Color& s, const Color& t) const {
    if (s == t) {
      if (!contains(s)) throw std::invalid_argument("color '" + s + "' not in alphabet");
      return two_;
    }
    auto it = entries_.find({s, t});
    if (it == entries_.end()) throw std::invalid_argument("color pair " + s + "," + t + " not in alphabet");
    return it->second;
  }

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.fingerprint_ == b.fingerprint_; }

 private:
  RingSpec ring_;
  std::vector<Color> alphabet_;
  Entries entries_;
  RingElement two_;
  std::string fingerprint_;
};

}  // namespace mctl
