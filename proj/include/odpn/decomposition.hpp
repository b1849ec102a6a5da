#pragma once
// Decompositions alpha(s): projections of a diagram along an index sequence,
// built from the pointwise predecessor ppd and the resolvent sequences. The
// induced sequence s[k;a,b] records which indices separate two diagrams, and
// the stepwise relations prec_s / lhd_s / lhd_s^+ drive the operators.

#include "indexseq.hpp"
#include "validity.hpp"

namespace odpn {

// Pointwise predecessor: jump to the range where the index is active.
inline Ref ppdI(int i, Ref x) {
  if (!inDQ(x)) return nullptr;
  return inIn(i, x) ? rgI(i, x) : pdI(i, x);
}

inline std::vector<Ref> chainP(int i, Ref x) {
  std::vector<Ref> out;
  Ref cur = x;
  while (cur) {
    out.push_back(cur);
    if (!inDQ(cur)) break;
    cur = ppdI(i, cur);
  }
  return out;
}

inline bool precP(int i, Ref a, Ref b) {
  if (!inDQ(a)) return false;
  Ref cur = ppdI(i, a);
  while (cur) {
    if (cur == b) return true;
    if (!inDQ(cur)) break;
    cur = ppdI(i, cur);
  }
  return false;
}

inline bool preceqP(int i, Ref a, Ref b) { return a == b || precP(i, a, b); }

namespace detail {

inline Ref astUnitary(Ref alpha, IndexSeq const& s);

inline std::mutex& astMutex() {
  static std::mutex m;
  return m;
}

// alpha(s) for unitary s, memoized on (diagram, window, final bit).
inline Ref astUnitaryCached(Ref alpha, IndexSeq const& s) {
  static std::map<std::pair<int, std::string>, Ref> cache;
  auto key = std::make_pair(alpha->id, s.str());
  {
    std::lock_guard<std::mutex> g(astMutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Ref v = astUnitary(alpha, s);
  std::lock_guard<std::mutex> g(astMutex());
  cache.emplace(key, v);
  return v;
}

inline Ref astUnitary(Ref alpha, IndexSeq const& s) {
  if (s.isNull()) return alpha;
  int const i = s.ell - 1;
  DecompSeq di = decompSeq(i, alpha);
  Ref a0 = di.entries[0];

  // The split condition: every earlier index resolves strictly higher, and
  // the range at i stays below those resolvents.
  Ref rg = rgI(i, alpha);
  std::vector<Ref> earlier;
  bool split = true;
  for (int j = s.d; j < i; ++j) {
    Ref aj0 = decompSeq(j, alpha).entries[0];
    earlier.push_back(aj0);
    if (!lt(a0, aj0) || !rg || !leq(rg, aj0)) split = false;
  }
  if (!split) return alphaPi(alpha);

  std::vector<Ref> cand = earlier;
  if (di.lh() >= 2) cand.push_back(di.entries[1]);
  if (cand.empty()) return alphaPi(alpha);
  Ref aprime = cand[0];
  for (Ref c : cand) {
    if (lt(c, aprime)) aprime = c;
  }
  if (aprime->ell >= alpha->ell) return alphaPi(alpha);
  Ref target = astUnitaryCached(aprime, s);

  // Climb the pointwise chain from the resolvent at i, stopping below the
  // projected bound: alpha(s) is the highest chain point under it.
  Ref best = a0;
  for (Ref c : chainP(i + 1, a0)) {
    if (!lt(c, target)) break;
    best = c;
  }
  return best;
}

}  // namespace detail

// alpha(s): fold the unitary decomposition of s.
inline Ref astSeq(Ref alpha, IndexSeq const& s) {
  Ref cur = alpha;
  for (IndexSeq const& piece : unitaryDecomp(s)) {
    cur = detail::astUnitaryCached(cur, piece);
  }
  return cur;
}

// s[k; a, b]: which indices in [k, N-2) see an active diagram strictly
// between the projections of a and b. Built bit by bit, lower indices first.
inline IndexSeq astBracket(int k, int N, Ref a, Ref b) {
  IndexSeq s;
  s.d = k;
  s.ell = k;
  for (int i = k; i < N - 2; ++i) {
    Ref as = astSeq(a, s);
    Ref bs = astSeq(b, s);
    int bit = 0;
    Ref cur = as;
    while (cur && cur != bs) {
      if (inDQ(cur) && inIn(i, cur)) {
        bit = 1;
        break;
      }
      cur = inDQ(cur) ? pdI(i, cur) : nullptr;
    }
    s.push(bit);
  }
  return s;
}

// t subseteq s[a, b]: t agrees with the induced sequence on its own window.
inline bool inducedAgrees(IndexSeq const& t, Ref a, Ref b) {
  IndexSeq s;
  s.d = t.d;
  s.ell = t.d;
  for (int i = t.d; i < t.ell; ++i) {
    Ref as = astSeq(a, s);
    Ref bs = astSeq(b, s);
    int bit = 0;
    Ref cur = as;
    while (cur && cur != bs) {
      if (inDQ(cur) && inIn(i, cur)) {
        bit = 1;
        break;
      }
      cur = inDQ(cur) ? pdI(i, cur) : nullptr;
    }
    if (bit != t.at(i)) return false;
    s.push(bit);
  }
  return true;
}

// a prec_s b: s agrees with the induced sequence and every initial segment
// projects into a pointwise-predecessor step.
inline bool precS(Ref a, IndexSeq const& s, Ref b) {
  if (!inducedAgrees(s, a, b)) return false;
  for (int j = s.d; j <= s.ell; ++j) {
    IndexSeq t = s.restrict(j);
    if (!precP(t.ell, astSeq(a, t), astSeq(b, t))) return false;
  }
  return true;
}

// a prec_s^- b: the pointwise steps are required only on initial segments
// shorter in ones-count than u*s.
inline bool precSMinus(IndexSeq const& u, Ref a, IndexSeq const& s, Ref b) {
  if (!inducedAgrees(s, a, b)) return false;
  int bound = u.ones() + s.ones();
  for (int j = s.d; j <= s.ell; ++j) {
    IndexSeq t = s.restrict(j);
    if (t.ones() < bound && !precP(t.ell, astSeq(a, t), astSeq(b, t))) {
      return false;
    }
  }
  return true;
}

// a lhd_s b: bracket relation at the projection level.
inline bool lhdSeqRel(Ref a, IndexSeq const& s, Ref b) {
  if (!inducedAgrees(s, a, b)) return false;
  if (s.ell > s.d && !precS(a, s.restrict(s.ell - 1), b)) return false;
  return lhd(s.ell, astSeq(a, s), astSeq(b, s));
}

namespace detail {

inline std::vector<IndexSeq> allSeqBase(int d, int N) {
  std::vector<IndexSeq> out;
  for (int ell = d; ell <= N - 2; ++ell) {
    int len = ell - d;
    for (uint32_t mask = 0; mask < (1u << len); ++mask) {
      IndexSeq s;
      s.d = d;
      s.ell = ell;
      for (int k = 0; k < len; ++k) s.bits.push_back((mask >> k) & 1u);
      out.push_back(s);
    }
  }
  return out;
}

// Witness search for the extra clause of lhd_s^+: a descending chain of
// bracket steps based at i, from x down to the first resolvent of x at i.
inline bool bracketPath(int i, int N, Ref x, Ref goal,
                        std::vector<Ref> const& carrier) {
  std::vector<Ref> frontier = {x};
  RefSet seen;
  seen.insert(x);
  auto seqs = allSeqBase(i, N);
  while (!frontier.empty()) {
    std::vector<Ref> next;
    for (Ref c : frontier) {
      for (Ref y : carrier) {
        if (seen.count(y)) continue;
        bool step = false;
        for (IndexSeq const& v : seqs) {
          if (lhdSeqRel(c, v, y)) {
            step = true;
            break;
          }
        }
        if (!step) continue;
        if (y == goal) return true;
        seen.insert(y);
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace detail

// a lhd_s^+ b over a finite carrier: lhd_s plus, at each set bit whose index
// is inactive in the projection, a chain of bracket steps witnessing that the
// projection still reaches its resolvent.
inline bool lhdSPlus(Ref a, IndexSeq const& s, Ref b, int N,
                     std::vector<Ref> const& carrier) {
  if (!lhdSeqRel(a, s, b)) return false;
  for (int i = s.d; i < s.ell; ++i) {
    if (!s.at(i)) continue;
    Ref proj = astSeq(a, s.restrict(i));
    if (inDQ(proj) && inIn(i, proj)) continue;
    if (!inDQ(proj)) return false;
    Ref goal = decompSeq(i, proj).entries[0];
    if (goal == proj) continue;
    if (!detail::bracketPath(i, N, proj, goal, carrier)) return false;
  }
  return true;
}

// Stage pair at the top index: the resolvent's stage first.
inline std::pair<Ref, Ref> stBar(int N, Ref a) {
  Ref a0 = decompSeq(N - 2, a).entries[0];
  return {stI(N - 1, a0), stI(N - 1, a)};
}

// The full projection tuple, ordered by descending lexicographic position.
inline std::vector<Ref> barTuple(int N, Ref a) {
  auto fam = allI2Full(N);
  std::sort(fam.begin(), fam.end(), [](IndexSeq const& x, IndexSeq const& y) {
    return lexLess(y, x);
  });
  std::vector<Ref> out;
  for (IndexSeq const& s : fam) out.push_back(astSeq(a, s));
  return out;
}

// gamma prec^{pl}_{N-1} alpha: lexicographic drop in the projection tuple.
inline bool precNPl(int N, Ref g, Ref a) {
  for (IndexSeq const& s : allI2Full(N)) {
    bool higherAgree = true;
    for (IndexSeq const& t : allI2Full(N)) {
      if (lexLess(s, t) && astSeq(g, t) != astSeq(a, t)) {
        higherAgree = false;
        break;
      }
    }
    if (higherAgree && precP(N - 2, astSeq(g, s), astSeq(a, s))) return true;
  }
  return false;
}

}  // namespace odpn
