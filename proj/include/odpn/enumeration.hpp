#pragma once
// Exhaustive enumeration of valid diagrams by symbol count, a shape-naive
// oracle for cross-checking, and a seeded random generator biased toward
// deep subscript chains. The exact enumerator prunes with necessary shape
// facts but always filters through the validity check, so its output is
// precisely the valid fragment of each stratum.

#include <random>

#include "io.hpp"
#include "validity.hpp"

namespace odpn {

namespace detail {

inline void sortCanonical(std::vector<Ref>& v) {
  std::sort(v.begin(), v.end(), canonicalLess);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct Enumerator {
  Params p;
  int maxEll;
  bool naive;  // skip shape pruning, rely on the validity filter alone
  std::vector<std::vector<Ref>> byEll;

  std::vector<Ref> run() {
    byEll.assign(static_cast<size_t>(maxEll) + 1, {});
    if (maxEll >= 1) byEll[1] = {zero(), omega(), pi()};
    for (int ell = 2; ell <= maxEll; ++ell) {
      std::vector<Ref> cand;
      addSums(ell, cand);
      addVeblen(ell, cand);
      addSuc(ell, cand);
      addD(ell, cand);
      std::vector<Ref>& out = byEll[static_cast<size_t>(ell)];
      for (Ref x : cand) {
        if (x->ell == ell && isValid(p, x)) out.push_back(x);
      }
      sortCanonical(out);
    }
    std::vector<Ref> all;
    for (auto const& stratum : byEll) {
      all.insert(all.end(), stratum.begin(), stratum.end());
    }
    sortCanonical(all);
    return all;
  }

  std::vector<Ref> const& at(int ell) const {
    return byEll[static_cast<size_t>(ell)];
  }

  void addSums(int ell, std::vector<Ref>& cand) {
    for (int l1 = 1; l1 < ell; ++l1) {
      for (Ref lead : at(l1)) {
        if (lead->tag == Tag::Sum || lead->tag == Tag::Zero) continue;
        for (Ref rest : at(ell - l1)) {
          if (rest->tag == Tag::Zero) continue;
          Ref follow = rest->tag == Tag::Sum ? rest->comps[0] : rest;
          if (!naive && lt(lead, follow)) continue;
          cand.push_back(rawSum({lead, rest}));
        }
      }
    }
  }

  void addVeblen(int ell, std::vector<Ref>& cand) {
    for (int la = 1; la < ell - 1; ++la) {
      for (Ref a : at(la)) {
        for (Ref b : at(ell - 1 - la)) {
          Ref v = rawVeblen(a, b);
          if (!naive && !isVeblenNormal(v)) continue;
          cand.push_back(v);
        }
      }
    }
  }

  void addSuc(int ell, std::vector<Ref>& cand) {
    for (int k = 1; k < ell; ++k) {
      for (Ref base : at(ell - k)) {
        if (!naive && !inDQ(base)) continue;
        if (base->tag == Tag::Suc) continue;  // stored forms never nest
        cand.push_back(rawSuc(base, k));
      }
    }
  }

  void addD(int ell, std::vector<Ref>& cand) {
    for (int ls = 1; ls < ell - 1; ++ls) {
      for (Ref sub : at(ls)) {
        int rest = ell - 1 - ls;  // quads + body
        appendQuadLists(sub, rest, cand);
      }
    }
  }

  // Enumerate quad lists with strictly increasing indices, then the body.
  void appendQuadLists(Ref sub, int budget, std::vector<Ref>& cand) {
    std::vector<Quad> quads;
    buildQuads(sub, 2, budget, quads, cand);
  }

  void buildQuads(Ref sub, int minJ, int budget, std::vector<Quad>& quads,
                  std::vector<Ref>& cand) {
    // Close the list with a body consuming the rest of the budget.
    if (budget >= 1) {
      bool shapeOk = true;
      if (!naive) {
        if (quads.empty()) {
          shapeOk = classify(sub) == Class::R_SR;
        } else {
          shapeOk = sub->tag == Tag::Pi || inDQ(sub);
          if (p.sys == System::OdPiN && quads.back().j != p.N - 1) shapeOk = false;
          if (p.sys == System::OdM32 && quads.size() != 1) shapeOk = false;
        }
      }
      if (shapeOk) {
        for (Ref body : at(budget)) {
          cand.push_back(rawD(sub, quads, body));
        }
      }
    }
    // Extend with one more quad: costs 1 + |kappa| + |tau| + |nu|.
    for (int j = minJ; j <= p.N - 1; ++j) {
      if (p.sys == System::OdM32 && (j != 2 || !quads.empty())) continue;
      for (int lk = 1; lk + 3 <= budget - 1; ++lk) {
        for (Ref kap : at(lk)) {
          if (!naive && p.sys != System::OdSuper) {
            if (kap->tag != Tag::Pi && !inDQ(kap)) continue;
            if (!preceqDot(sub, kap)) continue;
            if (p.sys == System::OdPiN && j == p.N - 1 && kap->tag != Tag::Pi) continue;
          }
          for (int lt1 = 1; lk + lt1 + 2 <= budget - 1; ++lt1) {
            for (Ref tau : at(lt1)) {
              if (!naive && p.sys != System::OdSuper) {
                if (tau->tag != Tag::Pi && !inDQ(tau)) continue;
                if (!preceqDot(sub, tau)) continue;
                if (quads.empty() && tau != sub) continue;
                if (p.sys == System::OdM32 && tau != sub) continue;
              }
              for (int ln = 1; lk + lt1 + ln + 1 <= budget - 1; ++ln) {
                for (Ref nu : at(ln)) {
                  quads.push_back({j, kap, tau, nu});
                  buildQuads(sub, j + 1, budget - 1 - lk - lt1 - ln, quads, cand);
                  quads.pop_back();
                }
              }
            }
          }
        }
      }
    }
  }
};

}  // namespace detail

// All valid diagrams with at most maxSymbols symbols, canonically ordered.
inline std::vector<Ref> enumerateValid(Params const& p, int maxSymbols) {
  detail::Enumerator e{p, maxSymbols, false, {}};
  return e.run();
}

// Shape-naive oracle: every stored tree is generated and filtered only by
// the validity check.
inline std::vector<Ref> enumerateNaive(Params const& p, int maxSymbols) {
  detail::Enumerator e{p, maxSymbols, true, {}};
  return e.run();
}

// Seeded random diagrams biased toward deep subscript chains: grow a chain
// rho_0 = d(pi; ...), rho_{k+1} = d(rho_k; ...) with occasional activation
// of every index block, validating each step.
inline std::vector<Ref> randomDiagrams(Params const& p, int count,
                                       uint64_t seed, int maxSymbols = 64) {
  std::mt19937_64 rng(seed);
  std::vector<Ref> pool = enumerateValid(p, 4);
  std::vector<Ref> small;
  for (Ref x : pool) {
    if (lt(x, pi()) || x == pi()) small.push_back(x);
  }
  auto pick = [&](std::vector<Ref> const& v) {
    return v[rng() % v.size()];
  };
  std::vector<Ref> out;
  int const NN = p.N;
  int const topJ = p.sys == System::OdM32 ? 2 : NN - 1;
  for (int n = 0; n < count; ++n) {
    // Start a chain at pi with a descending-stage step pattern.
    Ref nu = pick(small);
    Ref body = pick(small);
    Ref cur = rawD(pi(), {{topJ, pi(), pi(), nu}}, body);
    if (!isValid(p, cur)) {
      cur = rawD(pi(), {{topJ, pi(), pi(), zero()}}, pick(small));
      if (!isValid(p, cur)) cur = rawD(pi(), {{topJ, pi(), pi(), zero()}}, zero());
    }
    int depth = 1 + static_cast<int>(rng() % 4);
    for (int step = 0; step < depth && cur->ell < maxSymbols; ++step) {
      Ref prevNu = stI(topJ, cur);
      std::vector<Ref> lower;
      for (Ref x : small) {
        if (prevNu && lt(x, prevNu)) lower.push_back(x);
      }
      Ref next = nullptr;
      bool tryBlock = p.sys == System::OdPiN && NN > 4 && rng() % 2 == 0 &&
                      isD(cur) && isD(cur->a);
      if (tryBlock) {
        // Activate index 2 afresh and keep the top index descending:
        // d(cur; [2,cur,cur,mu],[N-1,pi,pd,nu']; b).
        Ref pd5 = cur->a;
        if (!lower.empty()) {
          Ref nu2 = pick(lower);
          Ref mu = pick(small);
          std::vector<Quad> qs = {{2, cur, cur, mu}, {NN - 1, pi(), pd5, nu2}};
          Ref t = rawD(cur, qs, pick(small));
          if (isValid(p, t)) next = t;
        }
      }
      if (!next && !lower.empty()) {
        Ref t = rawD(cur, {{topJ, pi(), cur, pick(lower)}}, pick(small));
        if (isValid(p, t)) next = t;
      }
      if (!next) break;
      cur = next;
    }
    out.push_back(cur);
  }
  return out;
}

}  // namespace odpn
