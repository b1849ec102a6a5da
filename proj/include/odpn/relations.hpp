#pragma once
// Indexed predecessor chains over D^Q, the pi-chain element alpha_pi, the
// stepwise resolvent sequence (eta_i^n), and the two bracket relations
// lhd_i / lhd^i together with their stage variant lhd_i^s.

#include <stdexcept>

#include "subterms.hpp"

namespace odpn {

// pd_i-chain from x, inclusive, ending at the first term where pd_i leaves
// D^Q (always pi for validly formed terms). x itself must be in D^Q or pi.
inline std::vector<Ref> chainI(int i, Ref x) {
  std::vector<Ref> out;
  Ref cur = x;
  while (cur) {
    out.push_back(cur);
    if (!inDQ(cur)) break;
    cur = pdI(i, cur);
  }
  return out;
}

inline bool precI(int i, Ref a, Ref b) {
  if (!inDQ(a)) return false;
  Ref cur = pdI(i, a);
  while (cur) {
    if (cur == b) return true;
    if (!inDQ(cur)) break;
    cur = pdI(i, cur);
  }
  return false;
}

inline bool preceqI(int i, Ref a, Ref b) { return a == b || precI(i, a, b); }

// Plain subscript relation: a -< b iff b appears on a's subscript chain.
inline bool precDotRel(Ref a, Ref b) { return precDot(a, b); }

struct NoPiAncestor : std::runtime_error {
  explicit NoPiAncestor(std::string const& w) : std::runtime_error(w) {}
};

// alpha_pi: the unique element of the subscript chain lying in D_pi.
inline Ref alphaPi(Ref eta) {
  Ref cur = eta;
  while (isD(cur)) {
    if (cur->a->tag == Tag::Pi) return cur;
    cur = cur->a;
  }
  throw NoPiAncestor("diagram has no element of D_pi on its subscript chain");
}

struct DecompSeq {
  std::vector<Ref> entries;
  int lh() const { return static_cast<int>(entries.size()); }
};

// Resolvent sequence of eta at index i in [2, N-1). Every entry except the
// last carries i among its quad indices; the last entry is eta's pi-chain
// element. Entry 0 is the least chain element above eta carrying i, found by
// walking pd_i; successors jump to the range of the previous entry.
inline DecompSeq decompSeq(int i, Ref eta) {
  if (!inDQ(eta)) throw std::invalid_argument("decompSeq needs a D^Q diagram");
  DecompSeq s;
  Ref terminal = alphaPi(eta);

  Ref first = nullptr;
  for (Ref c : chainI(i, eta)) {
    if (inDQ(c) && inIn(i, c)) {
      first = c;
      break;
    }
  }
  if (!first) {
    s.entries.push_back(terminal);
    return s;
  }
  s.entries.push_back(first);
  for (;;) {
    Ref cur = s.entries.back();
    Ref rg = rgI(i, cur);
    Ref next = nullptr;
    if (rg) {
      for (Ref c : chainI(i, rg)) {
        if (inDQ(c) && inIn(i, c)) {
          next = c;
          break;
        }
      }
    }
    if (!next) {
      s.entries.push_back(terminal);
      return s;
    }
    s.entries.push_back(next);
    if (s.entries.size() > 4096) {
      throw std::runtime_error("resolvent sequence failed to terminate");
    }
  }
}

// a lhd_i b: both in D^Q, i active in a, and b sits strictly inside the
// interval (a, rg_i(a)) along the pd_i chain. Defined for 2 <= i < N-1.
inline bool lhd(int i, Ref a, Ref b) {
  if (!inDQ(a) || !inDQ(b)) return false;
  if (!inIn(i, a)) return false;
  Ref rg = rgI(i, a);
  if (!rg) return false;
  return precI(i, a, b) && precI(i, b, rg);
}

// a lhd^i b: i active in a and b lies in [rg_i(a), pd_{i+1}(a)) along pd_i.
inline bool lhdUp(int i, Ref a, Ref b) {
  if (!inDQ(a)) return false;
  if (!inIn(i, a)) return false;
  Ref rg = rgI(i, a);
  Ref up = pdI(i + 1, a);
  if (!rg || !up) return false;
  return preceqI(i, rg, b) && precI(i, b, up);
}

// a lhd_i^s b: shared defined range, a below b on the pd_i chain, i active
// in a. Meaningful for 2 <= i <= N-1.
inline bool lhdS(int i, Ref a, Ref b) {
  if (!inDQ(a) || !inDQ(b)) return false;
  if (!inIn(i, a)) return false;
  Ref ra = rgI(i, a);
  Ref rb = rgI(i, b);
  if (!ra || !rb || ra != rb) return false;
  return precI(i, a, b);
}

// Two-indexed bracket at the single active index of the three-level system.
inline bool lhdM32(Ref a, Ref b) {
  if (!inDQ(a) || !inDQ(b)) return false;
  Ref rg = rgI(2, a);
  if (!rg) return false;
  return precDot(a, b) && precDot(b, rg);
}

}  // namespace odpn
