#pragma once
// Closure sets C^alpha(X) and the operators built over them: the goodness
// test G, Gamma_2, the Mahlo pair Gamma_30 / Gamma_32, the level family
// G_s / G_i with Gamma_N, stage-normed fixpoint iteration, wellfounded
// parts, and the distinguished-set predicates. Every definition is
// relativized to a finite subdiagram-closed carrier: diagram quantifiers
// range over carrier members, set variables over carrier subsets.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "decomposition.hpp"

namespace odpn {

using Carrier = std::vector<Ref>;

// X|a = {x in X : x < a}.
inline RefSet restrictBelow(RefSet const& xs, Ref bound) {
  RefSet out;
  for (Ref x : xs)
    if (lt(x, bound)) out.insert(x);
  return out;
}

// g <= X|a: some x in X below a dominates g.
inline bool leqRestricted(RefSet const& xs, Ref g, Ref bound) {
  for (Ref x : xs)
    if (lt(x, bound) && leq(g, x)) return true;
  return false;
}

// a <= X: some member of X dominates a.
inline bool leqIntoSet(Ref a, RefSet const& xs) {
  for (Ref x : xs)
    if (leq(a, x)) return true;
  return false;
}

inline bool isSubset(RefSet const& a, RefSet const& b) {
  for (Ref x : a)
    if (!b.count(x)) return false;
  return true;
}

inline RefSet intersect(RefSet const& a, RefSet const& b) {
  RefSet out;
  for (Ref x : a)
    if (b.count(x)) out.insert(x);
  return out;
}

// Membership in C^alpha(X): the closure of {0,Om,pi} u (X|alpha) under +,
// phi, suc, and collapses with subscript above alpha. The decision recurses
// only into subterms of the query, so it never leaves a subdiagram-closed
// carrier. A sum can enter through any contiguous split, not only component
// by component; both slices of a split are strictly shorter terms.
class CMembership {
 public:
  CMembership(Ref bound, RefSet const& xs) : bound_(bound), xs_(xs) {}

  bool contains(Ref g) {
    auto it = memo_.find(g);
    if (it != memo_.end()) return it->second;
    bool v = decide(g);
    memo_.emplace(g, v);
    return v;
  }

 private:
  bool inXBelow(Ref g) const { return lt(g, bound_) && xs_.count(g) != 0; }

  bool decide(Ref g) {
    switch (g->tag) {
      case Tag::Zero:
      case Tag::Omega:
      case Tag::Pi:
        return true;
      case Tag::Infinity:
        return false;
      default:
        break;
    }
    if (inXBelow(g)) return true;
    switch (g->tag) {
      case Tag::Sum: {
        auto const& cs = g->comps;
        for (size_t k = 1; k < cs.size(); ++k) {
          Ref lo = rawSum(std::vector<Ref>(cs.begin(), cs.begin() + k));
          Ref hi = rawSum(std::vector<Ref>(cs.begin() + k, cs.end()));
          if (contains(lo) && contains(hi)) return true;
        }
        return false;
      }
      case Tag::Veblen:
        return contains(g->a) && contains(g->b);
      case Tag::Suc:
        return contains(g->k == 1 ? g->a : rawSuc(g->a, g->k - 1));
      case Tag::D: {
        if (!lt(bound_, g->a)) return false;
        if (!contains(g->a) || !contains(g->b)) return false;
        for (Quad const& q : g->quads)
          if (!contains(q.kappa) || !contains(q.tau) || !contains(q.nu))
            return false;
        return true;
      }
      default:
        return false;
    }
  }

  Ref bound_;
  RefSet const& xs_;
  std::unordered_map<Ref, bool> memo_;
};

// gamma in C^alpha(X).
inline bool inC(Ref gamma, Ref alpha, RefSet const& xs) {
  CMembership c(alpha, xs);
  return c.contains(gamma);
}

// C^alpha(X) cut to the carrier.
inline RefSet closureSet(Ref alpha, RefSet const& xs, Carrier const& u) {
  CMembership c(alpha, xs);
  RefSet out;
  for (Ref g : u)
    if (c.contains(g)) out.insert(g);
  return out;
}

// a in G(X): a constructs itself and its closure below a is already in X.
inline bool inG(Ref alpha, RefSet const& xs, Carrier const& u) {
  CMembership c(alpha, xs);
  if (!c.contains(alpha)) return false;
  for (Ref g : u)
    if (lt(g, alpha) && !xs.count(g) && c.contains(g)) return false;
  return true;
}

inline RefSet gSet(RefSet const& xs, Carrier const& u) {
  RefSet out;
  for (Ref a : u)
    if (inG(a, xs, u)) out.insert(a);
  return out;
}

// R' = subscripts whose D-class is inhabited inside the carrier.
inline RefSet rPrime(Carrier const& u) {
  RefSet out;
  for (Ref x : u)
    if (isD(x)) out.insert(x->a);
  return out;
}

inline RefSet gamma2(RefSet const& xs, Carrier const& u) {
  RefSet rp = rPrime(u);
  RefSet gs = gSet(xs, u);
  RefSet out;
  for (Ref a : u)
    if (lt(a, pi()) && !rp.count(a) && gs.count(a)) out.insert(a);
  return out;
}

// M_3 = {pi} u {rho in D^Q : rg_2(rho) = pi}.
inline bool inM3(Params const& p, Ref x) { return detail::m3Member(p, x); }

namespace detail {

// V(X) at alpha: every good lhd-predecessor of alpha is already in X.
inline bool vHoldsM32(Ref alpha, RefSet const& gs, RefSet const& xs,
                      Carrier const& u) {
  for (Ref g : u)
    if (lhdM32(g, alpha) && gs.count(g) && !xs.count(g)) return false;
  return true;
}

// The SR clause shared by Gamma_30 and Gamma_N: for alpha in SR, every good
// collapse with subscript alpha must already be in X.
inline bool srSecured(Ref alpha, RefSet const& gs, RefSet const& xs,
                      Carrier const& u) {
  if (classify(alpha) != Class::R_SR) return true;
  for (Ref g : u)
    if (isD(g) && g->a == alpha && gs.count(g) && !xs.count(g)) return false;
  return true;
}

inline RefSet gamma30Core(Params const& p, RefSet const& gs, RefSet const& xs,
                          Carrier const& u) {
  RefSet out;
  for (Ref a : u) {
    if (!lt(a, pi()) || inM3(p, a)) continue;
    if (!gs.count(a) || !vHoldsM32(a, gs, xs, u)) continue;
    if (!srSecured(a, gs, xs, u)) continue;
    out.insert(a);
  }
  return out;
}

}  // namespace detail

inline bool vPredM32(Ref alpha, RefSet const& xs, Carrier const& u) {
  RefSet gs = gSet(xs, u);
  return detail::vHoldsM32(alpha, gs, xs, u);
}

inline RefSet gamma30(Params const& p, RefSet const& xs, Carrier const& u) {
  RefSet gs = gSet(xs, u);
  return detail::gamma30Core(p, gs, xs, u);
}

// Gamma_32 admits Mahlo points only once Gamma_30 is exhausted inside X.
inline RefSet gamma32(Params const& p, RefSet const& xs, Carrier const& u) {
  RefSet gs = gSet(xs, u);
  RefSet out = detail::gamma30Core(p, gs, xs, u);
  if (isSubset(out, xs)) {
    for (Ref a : u) {
      if (!lt(a, pi()) || !inM3(p, a)) continue;
      if (gs.count(a) && detail::vHoldsM32(a, gs, xs, u)) out.insert(a);
    }
  }
  return out;
}

struct NotADQTerm : std::invalid_argument {
  explicit NotADQTerm(std::string const& what) : std::invalid_argument(what) {}
};

// Descent measure on D^Q terms. Mahlo points pair their own stage with a pi
// marker; the marker slot stores pi itself, which the stage bounds keep
// strictly above every second component it is compared against.
struct MahloHeight {
  Ref first;
  Ref second;
  bool secondIsPiMarker = false;
};

inline MahloHeight mahloHeight(Params const& p, Ref rho) {
  if (!inDQ(rho)) throw NotADQTerm("mahlo height needs a D^Q term");
  Ref st = stI(2, rho);
  if (!st) throw NotADQTerm("mahlo height needs level-2 stage data");
  if (inM3(p, rho)) return {st, pi(), true};
  Ref rg = rgI(2, rho);
  Ref rgSt = rg ? stI(2, rg) : nullptr;
  if (!rgSt) throw NotADQTerm("mahlo height needs a staged level-2 range");
  return {rgSt, st, false};
}

inline bool heightLess(MahloHeight const& x, MahloHeight const& y) {
  if (lt(x.first, y.first)) return true;
  if (x.first != y.first) return false;
  return lt(x.second, y.second);
}

// The G_s / G_i family. G_1 = G; for s in I(2), G_s constrains lhd^+_s
// neighbors that already passed every level below 2 + #s; G_i meets all G_s
// at its level and gLess[i] accumulates G_1, ..., G_{i-1}.
struct GiFamily {
  RefSet g1;
  std::map<int, RefSet> gi;     // 2 <= i <= N-2
  std::map<int, RefSet> gLess;  // 2 <= i <= N-1
};

namespace detail {

inline RefSet gSCore(int N, IndexSeq const& s, RefSet const& gate,
                     RefSet const& xs, Carrier const& u) {
  std::vector<Ref> dq;
  for (Ref x : u)
    if (inDQ(x)) dq.push_back(x);
  RefSet out;
  for (Ref a : u) {
    bool ok = true;
    if (inDQ(a)) {
      for (Ref g : dq) {
        if (!gate.count(g) || !lhdSPlus(g, s, a, N, u)) continue;
        if (!leqRestricted(xs, g, a)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.insert(a);
  }
  return out;
}

}  // namespace detail

inline GiFamily giFamily(Params const& p, RefSet const& xs, Carrier const& u) {
  GiFamily f;
  f.g1 = gSet(xs, u);
  f.gLess[2] = f.g1;
  std::vector<IndexSeq> family = allI2(p.N);
  for (int i = 2; i <= p.N - 2; ++i) {
    RefSet cur;
    bool first = true;
    for (IndexSeq const& s : family) {
      if (2 + s.ones() != i) continue;
      RefSet gs = detail::gSCore(p.N, s, f.gLess[i], xs, u);
      cur = first ? std::move(gs) : intersect(cur, gs);
      first = false;
    }
    f.gi[i] = cur;
    f.gLess[i + 1] = intersect(f.gLess[i], cur);
  }
  return f;
}

inline RefSet gS(Params const& p, IndexSeq const& s, RefSet const& xs,
                 Carrier const& u) {
  GiFamily f = giFamily(p, xs, u);
  auto it = f.gLess.find(2 + s.ones());
  if (it == f.gLess.end()) throw std::invalid_argument("sequence outside I(2)");
  return detail::gSCore(p.N, s, it->second, xs, u);
}

inline RefSet gI(Params const& p, int i, RefSet const& xs, Carrier const& u) {
  if (i == 1) return gSet(xs, u);
  GiFamily f = giFamily(p, xs, u);
  auto it = f.gi.find(i);
  if (it == f.gi.end()) throw std::invalid_argument("level outside [1, N-2]");
  return it->second;
}

inline RefSet gLessSet(Params const& p, int i, RefSet const& xs,
                       Carrier const& u) {
  GiFamily f = giFamily(p, xs, u);
  auto it = f.gLess.find(i);
  if (it == f.gLess.end()) throw std::invalid_argument("level outside [2, N-1]");
  return it->second;
}

// Gamma_N: points below pi that are good at every level, have their SR
// collapses secured, and whose decomposition-related lower neighbors are
// already bounded inside X. The neighbor gate applies to D^Q pairs; for
// other terms no bracket sequence exists and the gate is vacuous.
inline RefSet gammaN(Params const& p, RefSet const& xs, Carrier const& u) {
  GiFamily f = giFamily(p, xs, u);
  RefSet const& gate = f.gLess[p.N - 1];
  RefSet out;
  for (Ref a : u) {
    if (!lt(a, pi()) || !gate.count(a)) continue;
    if (!detail::srSecured(a, f.g1, xs, u)) continue;
    bool ok = true;
    if (inDQ(a)) {
      for (Ref g : u) {
        if (!gate.count(g) || !inDQ(g)) continue;
        IndexSeq s = astBracket(2, p.N, g, a);
        if (precS(g, s, a) && !leqRestricted(xs, g, a)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.insert(a);
  }
  return out;
}

using OperatorFn = std::function<RefSet(RefSet const&)>;

inline OperatorFn operatorByName(Params const& p, Carrier const& u,
                                 std::string const& name) {
  if (name == "gamma2")
    return [u](RefSet const& xs) { return gamma2(xs, u); };
  if (name == "gamma32")
    return [p, u](RefSet const& xs) { return gamma32(p, xs, u); };
  if (name == "gammaN")
    return [p, u](RefSet const& xs) { return gammaN(p, xs, u); };
  throw std::invalid_argument("unknown operator: " + name);
}

// One inductive-definition run. stages[a] is the first round x with
// a in Op(S_x) and a not yet in S_x, where S_0 = {} and S_{x+1} = S_x u
// Op(S_x). The run stops at the first round that adds nothing; closed then
// records Op(W) subset of W literally. nonMonotoneSteps lists rounds whose
// raw output dropped an element produced in an earlier round; the cumulative
// stages never lose members, so this is a diagnostic, not a failure.
struct StageMap {
  std::map<Ref, int, IdLess> stages;
  RefSet w;
  bool closed = false;
  int rounds = 0;
  std::vector<int> nonMonotoneSteps;
};

inline StageMap iterate(OperatorFn const& op, Carrier const& u) {
  StageMap r;
  RefSet s;
  RefSet prevOut;
  int cap = static_cast<int>(u.size()) + 2;
  for (int x = 0; x <= cap; ++x) {
    RefSet out = op(s);
    for (Ref g : prevOut) {
      if (!out.count(g)) {
        r.nonMonotoneSteps.push_back(x);
        break;
      }
    }
    bool grew = false;
    for (Ref g : out) {
      if (s.insert(g).second) {
        r.stages.emplace(g, x);
        grew = true;
      }
    }
    r.rounds = x + 1;
    prevOut = std::move(out);
    if (!grew) {
      r.w = s;
      r.closed = true;
      return r;
    }
  }
  r.w = s;
  return r;
}

// Wellfounded part of < inside xs: the least Y with Y = {a in xs : xs|a
// subset of Y}. Kahn-style chase; whatever the chase never reaches is
// exactly the ill-founded residue, so defective comparisons surface here.
inline RefSet wPart(RefSet const& xs) {
  std::vector<Ref> v(xs.begin(), xs.end());
  int n = static_cast<int>(v.size());
  std::vector<int> pending(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lt(v[j], v[i])) ++pending[i];
  std::vector<int> ready;
  std::vector<char> done(n, 0);
  for (int i = 0; i < n; ++i)
    if (pending[i] == 0) ready.push_back(i);
  RefSet out;
  while (!ready.empty()) {
    int i = ready.back();
    ready.pop_back();
    done[i] = 1;
    out.insert(v[i]);
    for (int j = 0; j < n; ++j)
      if (!done[j] && lt(v[i], v[j]) && --pending[j] == 0) ready.push_back(j);
  }
  return out;
}

// W_pi membership: constructible over the fixpoint without a cut.
inline bool inWPi(Ref alpha, RefSet const& w) { return inC(alpha, pi(), w); }

namespace detail {

// alpha^- : the largest carrier R-member at or below alpha; 0 when none.
inline Ref alphaMinus(Ref alpha, Carrier const& u) {
  Ref best = zero();
  for (Ref x : u)
    if (inR(x) && leq(x, alpha) && (best == zero() || lt(best, x))) best = x;
  return best;
}

// beta in U_i(X;alpha): for staged D^Q terms, the K-spectrum of the level-i
// stage sits inside X below alpha^-. Terms without level-i data are in
// vacuously.
inline bool uIMember(int i, Ref beta, RefSet const& xs, Ref alphaMinusBound,
                     Carrier const& u) {
  if (!inDQ(beta)) return true;
  Ref rg = rgI(i, beta);
  Ref st = stI(i, beta);
  if (!rg || !st) return true;
  for (Ref sig : u) {
    if (!leq(sig, rg)) continue;
    for (Ref k : kSigma(sig, st))
      if (!(xs.count(k) && lt(k, alphaMinusBound))) return false;
  }
  return true;
}

// The per-delta tower of distinguished predicates, built top-down: level
// N-1 has no H constraints, and each lower level threads V*_{i+1} through
// H_i before cutting V*_i along the pd_i chains.
struct DistTower {
  std::map<int, RefSet> uI;      // 2 <= i <= N-1
  std::map<int, RefSet> vSI;     // 2 <= i <= N-2
  std::map<int, RefSet> hSI;     // 2 <= i <= N-2
  std::map<int, RefSet> vStarI;  // 2 <= i <= N-1
  std::map<int, RefSet> uStarI;  // 2 <= i <= N-1
};

inline DistTower distTower(Params const& p, RefSet const& xs, Ref delta,
                           Carrier const& u) {
  int N = p.N;
  DistTower t;
  Ref am = alphaMinus(delta, u);
  std::vector<Ref> dq;
  for (Ref x : u)
    if (inDQ(x)) dq.push_back(x);
  for (int i = 2; i <= N - 1; ++i) {
    RefSet s;
    for (Ref b : u)
      if (uIMember(i, b, xs, am, u)) s.insert(b);
    t.uI[i] = std::move(s);
  }
  RefSet all(u.begin(), u.end());
  RefSet hGeq = all;
  RefSet uGeq = all;
  for (int i = N - 1; i >= 2; --i) {
    uGeq = intersect(uGeq, t.uI[i]);
    if (i <= N - 2) {
      RefSet vs;
      for (;;) {
        RefSet next;
        for (Ref a : u) {
          bool ok = true;
          if (rgI(i, a)) {
            for (Ref b : dq) {
              if (!t.uI[i].count(b) || !lhdS(i, b, a)) continue;
              if (!vs.count(b)) {
                ok = false;
                break;
              }
            }
          }
          if (ok) next.insert(a);
        }
        if (next == vs) break;
        vs = std::move(next);
      }
      RefSet hs;
      for (Ref a : u) {
        bool ok = true;
        if (rgI(i, a)) {
          for (Ref b : dq) {
            if (!t.uI[i].count(b) || !lhdS(i, b, a)) continue;
            if (!(t.vStarI[i + 1].count(b) && vs.count(b))) {
              ok = false;
              break;
            }
          }
        }
        if (ok) hs.insert(a);
      }
      t.vSI[i] = std::move(vs);
      hGeq = intersect(hGeq, hs);
      t.hSI[i] = std::move(hs);
    }
    RefSet vst;
    RefSet ust;
    for (Ref a : u) {
      bool vOk = true;
      bool uOk = true;
      for (Ref b : chainI(i, a)) {
        if (!lt(b, pi())) continue;
        if (vOk && !hGeq.count(b)) vOk = false;
        if (uOk && !uGeq.count(b)) uOk = false;
        if (!vOk && !uOk) break;
      }
      if (vOk) vst.insert(a);
      if (uOk) ust.insert(a);
    }
    t.vStarI[i] = std::move(vst);
    t.uStarI[i] = std::move(ust);
  }
  return t;
}

}  // namespace detail

// Diagonalized V*_2: alpha judged inside its own tower.
inline RefSet vStar2Diag(Params const& p, RefSet const& xs, Carrier const& u) {
  RefSet out;
  for (Ref a : u) {
    detail::DistTower t = detail::distTower(p, xs, a, u);
    if (t.vStarI[2].count(a)) out.insert(a);
  }
  return out;
}

// V*(X): diagonalized V*_2 whose closure below the point stays inside it.
inline RefSet vStarDiag(Params const& p, RefSet const& xs, Carrier const& u) {
  RefSet v2 = vStar2Diag(p, xs, u);
  RefSet out;
  for (Ref a : u) {
    if (!v2.count(a)) continue;
    CMembership c(a, xs);
    bool ok = true;
    for (Ref g : u) {
      if (lt(g, a) && !v2.count(g) && c.contains(g)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(a);
  }
  return out;
}

namespace detail {

inline bool isDistinguishedWith(RefSet const& xs, RefSet const& vStar,
                                Carrier const& u) {
  for (Ref x : xs)
    if (!lt(x, pi())) return false;
  for (Ref a : u) {
    if (!leqIntoSet(a, xs)) continue;
    CMembership c(a, xs);
    RefSet vc;
    for (Ref g : vStar)
      if (c.contains(g)) vc.insert(g);
    Ref ap = sucInCarrier(a, u);
    if (restrictBelow(wPart(vc), ap) != restrictBelow(xs, ap)) return false;
  }
  return true;
}

}  // namespace detail

// D[X]: X sits below pi and, below every alpha^+ it reaches, coincides with
// the wellfounded part of V*(X) cap C^alpha(X).
inline bool isDistinguished(Params const& p, RefSet const& xs,
                            Carrier const& u) {
  return detail::isDistinguishedWith(xs, vStarDiag(p, xs, u), u);
}

struct DistinguishedRecord {
  Ref delta = nullptr;
  std::map<int, RefSet> uI;       // U_i(X;delta), 2 <= i <= N-1
  std::map<int, RefSet> vSI;      // V^s_i(X;delta), 2 <= i <= N-2
  std::map<int, RefSet> hSI;      // H^s_i(X;delta), 2 <= i <= N-2
  std::map<int, RefSet> vStarI;   // V*_i(X;delta), 2 <= i <= N-1
  std::map<int, RefSet> uStarI;   // U*_i(X;delta), 2 <= i <= N-1
  std::map<int, RefSet> uvStarI;  // U*_i cap V*_i
  RefSet vStar;                   // V*(X), diagonalized
  RefSet vcDelta;                 // VC^delta(X)
  bool isD = false;
};

inline DistinguishedRecord distinguishedPredicates(Params const& p,
                                                   RefSet const& xs, Ref delta,
                                                   Carrier const& u) {
  DistinguishedRecord r;
  r.delta = delta;
  detail::DistTower t = detail::distTower(p, xs, delta, u);
  r.uI = std::move(t.uI);
  r.vSI = std::move(t.vSI);
  r.hSI = std::move(t.hSI);
  r.vStarI = std::move(t.vStarI);
  r.uStarI = std::move(t.uStarI);
  for (auto const& [i, us] : r.uStarI) r.uvStarI[i] = intersect(us, r.vStarI[i]);
  r.vStar = vStarDiag(p, xs, u);
  CMembership c(delta, xs);
  for (Ref g : r.vStar)
    if (c.contains(g)) r.vcDelta.insert(g);
  r.isD = detail::isDistinguishedWith(xs, r.vStar, u);
  return r;
}

}  // namespace odpn
