#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "usm/extension.hpp"
#include "usm/group.hpp"

namespace usm {

/// Oriented pair <x,y>, unoriented pair (x,y), square (z).
enum class Symbol : std::uint8_t { O, U, S };

struct Letter {
  Symbol kind = Symbol::S;
  Elem x = kIdentity;
  Elem y = kIdentity;  // unused for squares
  int exp = 1;          // +1 or -1
  bool operator==(const Letter&) const = default;
};

/// Freely reduced word in the free group on the symbols <x,y>, (x,y), (z).
class UWord {
 public:
  UWord() = default;

  static UWord o(Elem x, Elem y) { return UWord(Letter{Symbol::O, x, y, 1}); }
  static UWord u(Elem x, Elem y) { return UWord(Letter{Symbol::U, x, y, 1}); }
  static UWord s(Elem z) { return UWord(Letter{Symbol::S, z, kIdentity, 1}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  UWord& operator*=(const UWord& o);
  friend UWord operator*(UWord a, const UWord& b) { return a *= b; }
  bool operator==(const UWord&) const = default;

  UWord inverse() const;
  /// Payload conjugation w^g: every payload p becomes g p g^-1.
  UWord conj(const FiniteGroup& g, Elem by) const;

  /// Text form, e.g. "O[a,c] O[ab,c]^-1".
  std::string format(const FiniteGroup& g) const;
  /// Parses O[x,y], U[x,y], S[z] tokens with optional ^k; payloads are group elements.
  static UWord parse(const FiniteGroup& g, std::string_view text);

 private:
  explicit UWord(Letter l) : letters_{l} {}
  void push(const Letter& l);
  std::vector<Letter> letters_;
};

/// v w v^-1
UWord conjugate(const UWord& v, const UWord& w);
/// [v, w] = v w v^-1 w^-1
UWord commutator(const UWord& v, const UWord& w);

/// <x,y> -> [x,y], (x,y) -> {x,y}, (z) -> z^2.
Elem canonical_image(const UWord& w, const FiniteGroup& g);

/// Image of w in a square-central extension of G, evaluated on lifts. For w
/// in K' the result lies in the central fiber; its bits pair w with each cocycle.
SquareCentralExtension::Element word_image(const UWord& w, const SquareCentralExtension& e);

}  // namespace usm
