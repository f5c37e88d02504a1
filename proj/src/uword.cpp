#include "usm/uword.hpp"

#include <cctype>
#include <charconv>

#include "usm/error.hpp"

namespace usm {

void UWord::push(const Letter& l) {
  if (!letters_.empty()) {
    const Letter& t = letters_.back();
    if (t.kind == l.kind && t.x == l.x && t.y == l.y && t.exp == -l.exp) {
      letters_.pop_back();
      return;
    }
  }
  letters_.push_back(l);
}

UWord& UWord::operator*=(const UWord& o) {
  for (const Letter& l : o.letters_) push(l);
  return *this;
}

UWord UWord::inverse() const {
  UWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    Letter l = *it;
    l.exp = -l.exp;
    out.push(l);
  }
  return out;
}

UWord UWord::conj(const FiniteGroup& g, Elem by) const {
  UWord out;
  for (Letter l : letters_) {
    l.x = g.conj(by, l.x);
    if (l.kind != Symbol::S) l.y = g.conj(by, l.y);
    out.push(l);
  }
  return out;
}

std::string UWord::format(const FiniteGroup& g) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    switch (l.kind) {
      case Symbol::O:
        out += "O[" + g.label(l.x) + "," + g.label(l.y) + "]";
        break;
      case Symbol::U:
        out += "U[" + g.label(l.x) + "," + g.label(l.y) + "]";
        break;
      case Symbol::S:
        out += "S[" + g.label(l.x) + "]";
        break;
    }
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

UWord UWord::parse(const FiniteGroup& g, std::string_view text) {
  UWord out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw UsageError("bad word '" + std::string(text) + "': " + why); };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (text.substr(i) == "1") break;
    Symbol kind;
    if (c == 'O') {
      kind = Symbol::O;
    } else if (c == 'U') {
      kind = Symbol::U;
    } else if (c == 'S') {
      kind = Symbol::S;
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    if (i + 1 >= text.size() || text[i + 1] != '[') fail("expected '[' after symbol");
    // find the matching ']' while tracking parentheses inside payloads
    std::size_t j = i + 2;
    int depth = 0;
    std::vector<std::size_t> commas;
    for (; j < text.size(); ++j) {
      if (text[j] == '(') ++depth;
      if (text[j] == ')') --depth;
      if (text[j] == ',' && depth == 0) commas.push_back(j);
      if (text[j] == ']' && depth == 0) break;
    }
    if (j >= text.size()) fail("unclosed '['");
    std::string_view body = text.substr(i + 2, j - i - 2);
    Letter l{kind, kIdentity, kIdentity, 1};
    if (kind == Symbol::S) {
      if (!commas.empty()) fail("S takes one payload");
      l.x = g.parse_element(body);
    } else {
      if (commas.size() != 1) fail("pairs take two payloads");
      std::size_t k = commas[0] - (i + 2);
      l.x = g.parse_element(body.substr(0, k));
      l.y = g.parse_element(body.substr(k + 1));
    }
    i = j + 1;
    long long power = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t s = i + 1;
      std::size_t e = s;
      if (e < text.size() && (text[e] == '-' || text[e] == '+')) ++e;
      while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) ++e;
      std::string_view num = text.substr(s, e - s);
      if (!num.empty() && num.front() == '+') num.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), power);
      if (ec != std::errc() || ptr != num.data() + num.size()) fail("bad exponent");
      i = e;
    }
    if (power < 0) {
      l.exp = -1;
      power = -power;
    }
    for (long long r = 0; r < power; ++r) out.push(l);
  }
  return out;
}

UWord conjugate(const UWord& v, const UWord& w) { return v * w * v.inverse(); }

UWord commutator(const UWord& v, const UWord& w) { return v * w * v.inverse() * w.inverse(); }

Elem canonical_image(const UWord& w, const FiniteGroup& g) {
  Elem acc = kIdentity;
  for (const Letter& l : w.letters()) {
    Elem v = kIdentity;
    switch (l.kind) {
      case Symbol::O:
        v = g.commutator(l.x, l.y);
        break;
      case Symbol::U:
        v = g.unoriented_commutator(l.x, l.y);
        break;
      case Symbol::S:
        v = g.mul(l.x, l.x);
        break;
    }
    acc = g.mul(acc, l.exp > 0 ? v : g.inv(v));
  }
  return acc;
}

SquareCentralExtension::Element word_image(const UWord& w, const SquareCentralExtension& e) {
  SquareCentralExtension::Element acc = e.lift(kIdentity);
  for (const Letter& l : w.letters()) {
    auto x = e.lift(l.x);
    SquareCentralExtension::Element v;
    switch (l.kind) {
      case Symbol::O:
        v = e.commutator(x, e.lift(l.y));
        break;
      case Symbol::U:
        v = e.unoriented_commutator(x, e.lift(l.y));
        break;
      case Symbol::S:
        v = e.mul(x, x);
        break;
    }
    acc = e.mul(acc, l.exp > 0 ? v : e.inv(v));
  }
  return acc;
}

}  // namespace usm
