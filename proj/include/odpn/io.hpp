#pragma once
// Text form of diagrams. The printer emits the compact canonical form; the
// parser accepts the same grammar with insignificant whitespace, normalizes
// sums and Veblen applications, and leaves validity to the caller.
//
//   term := "0" | "Om" | "pi" | term "+" term
//         | "phi(" term "," term ")" | "suc(" term "," int ")"
//         | "d(" term ";" quads ";" term ")"
//   quads := empty | "[" int "," term "," term "," term "]" ("," "[" ... "]")*

#include <cctype>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "order.hpp"

namespace odpn {

inline void printTo(std::string& out, Ref x) {
  switch (x->tag) {
    case Tag::Zero:
      out += '0';
      return;
    case Tag::Omega:
      out += "Om";
      return;
    case Tag::Pi:
      out += "pi";
      return;
    case Tag::Infinity:
      out += "oo";
      return;
    case Tag::Sum:
      for (size_t k = 0; k < x->comps.size(); ++k) {
        if (k) out += '+';
        printTo(out, x->comps[k]);
      }
      return;
    case Tag::Veblen:
      out += "phi(";
      printTo(out, x->a);
      out += ',';
      printTo(out, x->b);
      out += ')';
      return;
    case Tag::Suc:
      out += "suc(";
      printTo(out, x->a);
      out += ',';
      out += std::to_string(x->k);
      out += ')';
      return;
    case Tag::D:
      out += "d(";
      printTo(out, x->a);
      out += ';';
      for (size_t k = 0; k < x->quads.size(); ++k) {
        if (k) out += ',';
        Quad const& q = x->quads[k];
        out += '[';
        out += std::to_string(q.j);
        out += ',';
        printTo(out, q.kappa);
        out += ',';
        printTo(out, q.tau);
        out += ',';
        printTo(out, q.nu);
        out += ']';
      }
      out += ';';
      printTo(out, x->b);
      out += ')';
      return;
  }
}

inline std::string print(Ref x) {
  std::string out;
  printTo(out, x);
  return out;
}

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(std::string const& what, size_t p)
      : std::runtime_error(what + " at offset " + std::to_string(p)), pos(p) {}
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string const& text) : s_(text) {}

  Ref parseAll() {
    Ref t = parseTerm();
    skipWs();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

 private:
  std::string const& s_;
  size_t pos_ = 0;

  void skipWs() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skipWs();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  bool eatWord(char const* w) {
    skipWs();
    size_t n = std::strlen(w);
    if (s_.compare(pos_, n, w) == 0) {
      pos_ += n;
      return true;
    }
    return false;
  }

  int parseInt() {
    skipWs();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return std::stoi(s_.substr(start, pos_ - start));
  }

  Ref parseTerm() {
    std::vector<Ref> comps;
    comps.push_back(parsePrimary());
    while (eat('+')) comps.push_back(parsePrimary());
    if (comps.size() == 1) return comps[0];
    return mkSum(comps);
  }

  Ref parsePrimary() {
    skipWs();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    if (eatWord("phi")) {
      expect('(');
      Ref a = parseTerm();
      expect(',');
      Ref b = parseTerm();
      expect(')');
      return mkVeblen(a, b);
    }
    if (eatWord("suc")) {
      expect('(');
      Ref b = parseTerm();
      expect(',');
      int k = parseInt();
      expect(')');
      if (k < 1) throw ParseError("successor index must be positive", pos_);
      return rawSuc(b, k);
    }
    if (eatWord("d")) {
      expect('(');
      Ref sub = parseTerm();
      expect(';');
      std::vector<Quad> quads;
      skipWs();
      while (pos_ < s_.size() && s_[pos_] == '[') {
        ++pos_;
        Quad q;
        q.j = parseInt();
        expect(',');
        q.kappa = parseTerm();
        expect(',');
        q.tau = parseTerm();
        expect(',');
        q.nu = parseTerm();
        expect(']');
        quads.push_back(q);
        if (!eat(',')) break;
        skipWs();
        if (pos_ >= s_.size() || s_[pos_] != '[') {
          throw ParseError("expected quad after ','", pos_);
        }
      }
      expect(';');
      Ref body = parseTerm();
      expect(')');
      return rawD(sub, quads, body);
    }
    if (eatWord("pi")) return pi();
    if (eatWord("Om")) return omega();
    if (pos_ < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      // Decimal literal: 0 is the constant, n > 0 the numeral 1 + ... + 1
      // with 1 = phi(0,0). Canonical output never prints numerals above 0,
      // so round trips stay byte-exact.
      int n = parseInt();
      if (n == 0) return zero();
      std::vector<Ref> ones(static_cast<size_t>(n), mkVeblen(zero(), zero()));
      return ones.size() == 1 ? ones[0] : mkSum(ones);
    }
    throw ParseError("expected a term", pos_);
  }
};

}  // namespace detail

inline Ref parse(std::string const& text) { return detail::Parser(text).parseAll(); }

// Strata-then-text order: the canonical enumeration order.
inline bool canonicalLess(Ref a, Ref b) {
  if (a->ell != b->ell) return a->ell < b->ell;
  return print(a) < print(b);
}

inline std::vector<std::string> splitLines(std::string const& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace odpn
