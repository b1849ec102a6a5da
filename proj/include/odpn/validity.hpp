#pragma once
// Formation conditions for the three systems. A report carries one entry per
// violated clause; clause names are the stable identifiers used by the CLI
// and the harness. Subdiagrams are validated first, so clause checks may
// assume well-formed components.

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "relations.hpp"

namespace odpn {

struct Violation {
  std::string clause;
  std::string detail;
};

struct ValidityReport {
  bool valid = true;
  std::vector<Violation> violations;
  // For each active index i, which range-condition case admitted the term.
  std::map<int, int> d12Subcase;

  void fail(std::string clause, std::string detail) {
    valid = false;
    violations.push_back({std::move(clause), std::move(detail)});
  }
};

namespace detail {

inline Ref kappaPlus(Ref kappa) {
  return kappa->tag == Tag::Pi ? infinity() : rawSuc(kappa, 1);
}

inline bool validCached(Params const& p, Ref x);

// eta -> its regular successor-level membership for the given system is
// checked structurally where needed; here only the collapse condition.
inline bool odMuHolds(Ref eta) {
  Ref sigma = eta->a;
  std::vector<Ref> scope = {sigma, eta->b};
  for (Quad const& q : eta->quads) {
    scope.push_back(q.kappa);
    scope.push_back(q.tau);
    scope.push_back(q.nu);
  }
  return allLt(bAboveSet(sigma, scope), eta->b);
}

// K_tau(st) < rho for every level tau up to and including bound.
inline bool kBoundHolds(Ref bound, Ref st, Ref rho) {
  for (Ref tau : levelCandidatesBelow(bound, st)) {
    if (!allLt(kSigma(tau, st), rho)) return false;
  }
  return true;
}

inline bool m3Member(Params const& p, Ref x) {
  if (x->tag == Tag::Pi) return true;
  if (!inDQ(x)) return false;
  if (!validCached(p, x)) return false;
  return rgI(2, x) == pi();
}

inline void checkCommonShape(Params const& p, Ref x, ValidityReport& r) {
  switch (x->tag) {
    case Tag::Zero:
    case Tag::Omega:
    case Tag::Pi:
      return;
    case Tag::Infinity:
      r.fail("TauShape", "virtual top element is not a diagram");
      return;
    case Tag::Sum: {
      if (x->comps.size() < 2) r.fail("TauShape", "sum needs two components");
      for (size_t k = 0; k < x->comps.size(); ++k) {
        Ref c = x->comps[k];
        if (c->tag == Tag::Sum || c->tag == Tag::Zero) {
          r.fail("TauShape", "sum component must be a nonzero non-sum");
        }
        if (k > 0 && lt(x->comps[k - 1], c)) {
          r.fail("TauShape", "sum components must be non-increasing");
        }
      }
      return;
    }
    case Tag::Veblen: {
      if (!isVeblenNormal(x)) {
        r.fail("TauShape", "second argument absorbs the Veblen form");
      }
      return;
    }
    case Tag::Suc: {
      if (!inDQ(x->a)) {
        r.fail("TauShape", "successor-regular base must carry quads");
      }
      return;
    }
    case Tag::D: {
      if (x->quads.empty()) {
        Class c = classify(x->a);
        if (c != Class::R_SR) {
          r.fail("TauShape", "plain collapse subscript must be Omega or successor-regular");
        }
      } else {
        if (x->a->tag != Tag::Pi && !inDQ(x->a)) {
          r.fail("TauShape", "indexed collapse subscript must be pi or indexed");
        }
      }
      if (!odMuHolds(x)) {
        r.fail("OdMu", "exposed bodies above the subscript must stay below the body");
      }
      return;
    }
  }
}

inline void checkM32Quads(Params const& p, Ref x, ValidityReport& r) {
  Ref sigma = x->a;
  if (x->quads.size() != 1) {
    r.fail("TauShape", "three-level system carries exactly one quad");
    return;
  }
  Quad const& q = x->quads[0];
  if (q.j != 2) {
    r.fail("TauShape", "quad index must be 2");
  }
  if (q.tau != sigma) {
    r.fail("TauShape", "quad predecessor slot must repeat the subscript");
  }
  Ref kappa = q.kappa;
  Ref nu = q.nu;
  if (!(preceqDot(sigma, kappa) && m3Member(p, kappa))) {
    r.fail("Rg32", "range must be a reflecting level on the subscript chain");
    return;
  }
  if (sigma->tag == Tag::Pi && !leq(nu, x->b)) {
    r.fail("StBound32Pi", "stage at pi must not exceed the body");
  }
  if (kappa->tag != Tag::Pi && !lt(nu, kappaPlus(kappa))) {
    r.fail("StBound32", "stage must lie below the range successor");
  }
  if (kappa->tag == Tag::Pi) {
    // Walk everything above x on the subscript chain; reflecting members
    // must have strictly larger stages.
    Ref cur = sigma;
    while (cur && cur->tag != Tag::Pi) {
      if (inDQ(cur) && m3Member(p, cur)) {
        if (!lt(nu, stI(2, cur))) {
          r.fail("Case1M32", "stage must grow along the chain toward pi");
          break;
        }
      }
      cur = isD(cur) ? cur->a : nullptr;
    }
    if (r.valid) r.d12Subcase[2] = 1;
  } else {
    // kappa is the least reflecting member above x; everything strictly
    // between must range at kappa with a stage above nu.
    if (!precDot(x, kappa)) {
      r.fail("Case2M32", "range must appear on the subscript chain");
    } else {
      Ref cur = sigma;
      while (cur && cur != kappa) {
        if (!inDQ(cur) || rgI(2, cur) != kappa || !lt(nu, stI(2, cur))) {
          r.fail("Case2M32", "chain below the range must point at it with larger stages");
          break;
        }
        cur = cur->a;
      }
      if (r.valid) r.d12Subcase[2] = 2;
    }
  }
  if (!kBoundHolds(kappa, nu, x)) {
    r.fail("D2", "stage components must collapse below the diagram");
  }
}

// The three admissible relations between a stage-range pair and the one at
// the predecessor: fresh (.1), inherited shrinking (.2), jump past (.3).
inline std::array<bool, 3> d12Cases(Ref x, int i, Ref kappa, Ref pd, Ref st) {
  std::array<bool, 3> out{false, false, false};
  if (kappa == pd) {
    Ref a1 = nullptr;
    for (Ref c = x; isD(c); c = c->a) {
      if (c->a == kappa) {
        a1 = c;
        break;
      }
    }
    if (a1 && allLt(bAbove(kappa, st), a1->b)) out[0] = true;
  }
  if (rgI(i, pd) == kappa && stI(i, pd) && lt(st, stI(i, pd))) {
    out[1] = true;
  }
  {
    Ref rgp = rgI(i, pd);
    bool ok = rgp && precI(i, rgp, kappa);
    if (ok) {
      for (Ref tau = rgp; tau && tau != kappa; tau = pdI(i, tau)) {
        Ref rt = rgI(i, tau);
        if (!rt || !preceqI(i, rt, kappa)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      Ref sigma1 = nullptr;
      for (Ref c = pdI(i, pd); c && c != kappa; c = pdI(i, c)) {
        if (rgI(i, c) == kappa) {
          sigma1 = c;
          break;
        }
      }
      if (sigma1 && lt(st, stI(i, sigma1))) out[2] = true;
    }
  }
  return out;
}

inline void checkPiNQuads(Params const& p, Ref x, ValidityReport& r) {
  int const N = p.N;
  Ref sigma = x->a;
  auto const& qs = x->quads;
  size_t const l = qs.size() - 1;

  bool jOk = qs[0].j >= 2;
  for (size_t m = 0; m + 1 < qs.size(); ++m) {
    if (qs[m].j >= qs[m + 1].j) jOk = false;
  }
  if (qs[l].j != N - 1) jOk = false;
  if (!jOk) {
    r.fail("JMonotone", "indices must increase strictly from >=2 up to N-1");
    return;
  }

  if (qs[l].kappa->tag != Tag::Pi) {
    r.fail("KappaL", "last range must be pi");
  }
  for (size_t m = 0; m <= l; ++m) {
    Ref kap = qs[m].kappa;
    if (kap->tag != Tag::Pi && !inDQ(kap)) {
      r.fail("KappaL", "range must be pi or indexed");
    } else if (!preceqDot(sigma, kap)) {
      r.fail("KappaL", "range must lie on the subscript chain");
    }
  }

  if (sigma->tag == Tag::Pi && !leq(qs[l].nu, x->b)) {
    r.fail("NuBound", "last stage at pi must not exceed the body");
  }
  for (size_t m = 0; m < l; ++m) {
    if (qs[m].kappa->tag != Tag::Pi && !lt(qs[m].nu, kappaPlus(qs[m].kappa))) {
      r.fail("NuBound", "stage must lie below its range successor");
    }
  }

  if (qs[0].tau != sigma) {
    r.fail("TauShape", "first predecessor slot must repeat the subscript");
  }
  for (size_t m = 0; m <= l; ++m) {
    Ref tau = qs[m].tau;
    if (tau->tag != Tag::Pi && !inDQ(tau)) {
      r.fail("TauShape", "predecessor slot must be pi or indexed");
    } else if (!preceqDot(sigma, tau)) {
      r.fail("TauShape", "predecessor slot must lie on the subscript chain");
    }
  }
  if (qs[l].tau->tag == Tag::Pi && sigma->tag != Tag::Pi) {
    r.fail("Eq5Pred", "pi predecessor at the last index forces subscript pi");
  }
  if (!r.valid) return;

  for (int i : inSet(x)) {
    Ref kappa = rgI(i, x);
    Ref pd = pdI(i, x);
    Ref st = stI(i, x);

    if (!preceqI(i, pd, kappa)) {
      r.fail("D11", "i=" + std::to_string(i) + ": predecessor must reach the range");
      continue;
    }
    if (i < N - 1) {
      Ref up = pdI(i + 1, x);
      if (pd == up) {
        r.fail("D11", "i=" + std::to_string(i) + ": predecessors at i and i+1 must differ");
      }
      if (!preceqI(i, kappa, up)) {
        r.fail("D11", "i=" + std::to_string(i) + ": range must reach the next predecessor");
      }
      if (inPair(i, kappa) != inPair(i, up)) {
        r.fail("D11", "i=" + std::to_string(i) + ": range and next predecessor must agree at i");
      }
      if (!r.valid) continue;
    }

    int sub = 0;
    auto cases = d12Cases(x, i, kappa, pd, st);
    for (int c = 0; c < 3 && sub == 0; ++c) {
      if (cases[static_cast<size_t>(c)]) sub = c + 1;
    }
    if (sub == 0) {
      r.fail("D12", "i=" + std::to_string(i) + ": no range condition case applies");
    } else {
      r.d12Subcase[i] = sub;
    }

    if (!kBoundHolds(kappa, st, x)) {
      r.fail("D2PiN", "i=" + std::to_string(i) + ": stage components must collapse below the diagram");
    }
  }
}

inline ValidityReport validateUncached(Params const& p, Ref x) {
  ValidityReport r;
  for (Ref c : children(x)) {
    if (!validCached(p, c)) {
      r.fail("TauShape", "component is not a diagram of the system");
    }
  }
  if (!r.valid) return r;
  checkCommonShape(p, x, r);
  if (!r.valid && x->tag != Tag::D) return r;
  if (x->tag == Tag::D && !x->quads.empty()) {
    switch (p.sys) {
      case System::OdSuper:
        break;  // no range conditions at the base level
      case System::OdM32:
        checkM32Quads(p, x, r);
        break;
      case System::OdPiN:
        checkPiNQuads(p, x, r);
        break;
    }
  }
  return r;
}

inline std::mutex& validMutex() {
  static std::mutex m;
  return m;
}

inline bool validCached(Params const& p, Ref x) {
  static std::unordered_map<uint64_t, bool> cache;
  uint64_t key = (static_cast<uint64_t>(x->id) << 10) |
                 (static_cast<uint64_t>(p.N & 0xff) << 2) |
                 static_cast<uint64_t>(p.sys);
  {
    std::lock_guard<std::mutex> g(validMutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  bool v = validateUncached(p, x).valid;
  std::lock_guard<std::mutex> g(validMutex());
  cache.emplace(key, v);
  return v;
}

}  // namespace detail

inline ValidityReport validate(Params const& p, Ref x) {
  return detail::validateUncached(p, x);
}

inline bool isValid(Params const& p, Ref x) { return detail::validCached(p, x); }

// Which of the three range-condition cases hold at index i, independently.
inline std::array<bool, 3> d12Profile(Ref x, int i) {
  if (!inDQ(x) || !inIn(i, x)) return {false, false, false};
  return detail::d12Cases(x, i, rgI(i, x), pdI(i, x), stI(i, x));
}

}  // namespace odpn
