#pragma once
// Finite 0/1 index sequences over half-open index windows [d, ell). These
// drive the stepwise relations: the window records which reflection indices
// a walk has already passed. Lexicographic order compares only sequences
// sharing a base; extensions of a common prefix are incomparable.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace odpn {

struct IndexSeq {
  int d = 2;
  int ell = 2;
  std::vector<uint8_t> bits;  // bits[i - d] is s(i), i in [d, ell)

  bool operator==(IndexSeq const& o) const = default;

  int length() const { return ell - d; }
  bool isNull() const {
    for (uint8_t b : bits) {
      if (b) return false;
    }
    return true;
  }
  int ones() const {
    int n = 0;
    for (uint8_t b : bits) n += b ? 1 : 0;
    return n;
  }
  int at(int i) const {
    if (i < d || i >= ell) throw std::out_of_range("index outside sequence window");
    return bits[static_cast<size_t>(i - d)];
  }

  // s|i: shrink the window to [d, min(max(i,d), ell)).
  IndexSeq restrict(int i) const {
    int nl = i < d ? d : i;
    if (nl > ell) nl = ell;
    IndexSeq r;
    r.d = d;
    r.ell = nl;
    r.bits.assign(bits.begin(), bits.begin() + (nl - d));
    return r;
  }

  void push(int bit) {
    bits.push_back(static_cast<uint8_t>(bit ? 1 : 0));
    ++ell;
  }

  std::string str() const {
    std::string s = "s[" + std::to_string(d) + "," + std::to_string(ell) + "):";
    for (uint8_t b : bits) s += b ? '1' : '0';
    return s;
  }
};

inline IndexSeq makeSeq(int d, std::vector<int> const& bits) {
  IndexSeq s;
  s.d = d;
  s.ell = d + static_cast<int>(bits.size());
  for (int b : bits) s.bits.push_back(static_cast<uint8_t>(b ? 1 : 0));
  return s;
}

inline IndexSeq nullSeq(int d, int ell) {
  IndexSeq s;
  s.d = d;
  s.ell = ell;
  s.bits.assign(static_cast<size_t>(ell - d), 0);
  return s;
}

// Strict order: same base, equal prefix, then 0 against 1. A proper window
// extension of the other sequence compares as neither smaller nor larger.
inline bool lexLess(IndexSeq const& s, IndexSeq const& t) {
  if (s.d != t.d) return false;
  size_t n = std::min(s.bits.size(), t.bits.size());
  for (size_t k = 0; k < n; ++k) {
    if (s.bits[k] != t.bits[k]) return s.bits[k] < t.bits[k];
  }
  return false;
}

// s subseteq_e t: t extends s on the same base.
inline bool initialSegOf(IndexSeq const& s, IndexSeq const& t) {
  if (s.d != t.d || s.ell > t.ell) return false;
  for (size_t k = 0; k < s.bits.size(); ++k) {
    if (s.bits[k] != t.bits[k]) return false;
  }
  return true;
}

inline bool properInitialSegOf(IndexSeq const& s, IndexSeq const& t) {
  return s.ell < t.ell && initialSegOf(s, t);
}

// s * t: concatenation, defined when the windows abut.
inline IndexSeq concatSeq(IndexSeq const& s, IndexSeq const& t) {
  if (s.ell != t.d) throw std::invalid_argument("concat windows must abut");
  IndexSeq r = s;
  r.ell = t.ell;
  r.bits.insert(r.bits.end(), t.bits.begin(), t.bits.end());
  return r;
}

// Longest common initial segment on a shared base.
inline IndexSeq meetSeq(IndexSeq const& s, IndexSeq const& t) {
  if (s.d != t.d) throw std::invalid_argument("meet needs a shared base");
  IndexSeq r;
  r.d = s.d;
  r.ell = s.d;
  size_t n = std::min(s.bits.size(), t.bits.size());
  for (size_t k = 0; k < n; ++k) {
    if (s.bits[k] != t.bits[k]) break;
    r.bits.push_back(s.bits[k]);
    ++r.ell;
  }
  return r;
}

// Unitary: at most one 1, and only in the final position.
inline bool isUnitary(IndexSeq const& s) {
  for (size_t k = 0; k < s.bits.size(); ++k) {
    if (s.bits[k] && k + 1 != s.bits.size()) return false;
  }
  return s.ones() <= 1;
}

// Split after every 1; each piece is unitary and the pieces concatenate
// back to s.
inline std::vector<IndexSeq> unitaryDecomp(IndexSeq const& s) {
  std::vector<IndexSeq> out;
  int start = s.d;
  for (int i = s.d; i < s.ell; ++i) {
    if (s.at(i)) {
      IndexSeq piece;
      piece.d = start;
      piece.ell = i + 1;
      piece.bits.assign(s.bits.begin() + (start - s.d), s.bits.begin() + (i + 1 - s.d));
      out.push_back(piece);
      start = i + 1;
    }
  }
  if (start < s.ell || out.empty()) {
    IndexSeq piece;
    piece.d = start;
    piece.ell = s.ell;
    piece.bits.assign(s.bits.begin() + (start - s.d), s.bits.end());
    out.push_back(piece);
  }
  return out;
}

// The family I(2): base 2, windows up to [2, N-2].
inline std::vector<IndexSeq> allI2(int N) {
  std::vector<IndexSeq> out;
  for (int ell = 2; ell <= N - 2; ++ell) {
    int len = ell - 2;
    for (uint32_t mask = 0; mask < (1u << len); ++mask) {
      IndexSeq s;
      s.d = 2;
      s.ell = ell;
      for (int k = 0; k < len; ++k) s.bits.push_back((mask >> k) & 1u);
      out.push_back(s);
    }
  }
  return out;
}

// I(2, N-2): the full-window members of I(2).
inline std::vector<IndexSeq> allI2Full(int N) {
  std::vector<IndexSeq> out;
  for (IndexSeq const& s : allI2(N)) {
    if (s.ell == N - 2) out.push_back(s);
  }
  return out;
}

// Termination weight: counts the room a sequence still has, in base-3 digits.
// Decreases strictly under both proper window extension and lex increase.
inline long long weightE(IndexSeq const& s, int N) {
  if (s.d != 2) throw std::invalid_argument("weight is defined on base-2 sequences");
  long long e = 0;
  auto pow3 = [](int k) {
    long long v = 1;
    while (k-- > 0) v *= 3;
    return v;
  };
  for (int i = 2; i < s.ell; ++i) {
    e += pow3(N - 3 - i) * (1 - s.at(i));
  }
  for (int i = s.ell; i <= N - 3; ++i) {
    e += 2 * pow3(N - 3 - i);
  }
  return e;
}

inline IndexSeq parseSeq(std::string const& text) {
  // Form: s[d,ell):bits
  auto fail = []() -> IndexSeq {
    throw std::invalid_argument("malformed index sequence");
  };
  size_t lb = text.find('[');
  size_t comma = text.find(',', lb == std::string::npos ? 0 : lb);
  size_t rb = text.find(')', comma == std::string::npos ? 0 : comma);
  size_t colon = text.find(':', rb == std::string::npos ? 0 : rb);
  if (text.substr(0, 2) != "s[" || comma == std::string::npos ||
      rb == std::string::npos || colon == std::string::npos) {
    return fail();
  }
  IndexSeq s;
  s.d = std::stoi(text.substr(2, comma - 2));
  s.ell = std::stoi(text.substr(comma + 1, rb - comma - 1));
  std::string bits = text.substr(colon + 1);
  if (static_cast<int>(bits.size()) != s.ell - s.d) return fail();
  for (char c : bits) {
    if (c != '0' && c != '1') return fail();
    s.bits.push_back(c == '1');
  }
  return s;
}

}  // namespace odpn
