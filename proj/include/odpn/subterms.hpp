#pragma once
// Finite subdiagram functionals: outermost-collapse collectors (K, K^d) and the
// exposed-body sets B_tau / B_{>sigma} feeding every collapse-side condition.
// K_sigma itself lives in order.hpp (mutually recursive with the order).

#include "order.hpp"

namespace odpn {

// Outermost d-subterms (maximal: nothing above them is a d-term).
inline std::vector<Ref> kD(Ref x) {
  if (isD(x)) return {x};
  RefSet acc;
  for (Ref c : children(x)) {
    auto v = kD(c);
    acc.insert(v.begin(), v.end());
  }
  return std::vector<Ref>(acc.begin(), acc.end());
}

// Outermost strongly-critical collapses: stops at an empty-quad d-term, looks
// through D^Q terms into their components.
inline std::vector<Ref> kAll(Ref x) {
  if (inSC(x)) return {x};
  RefSet acc;
  for (Ref c : children(x)) {
    auto v = kAll(c);
    acc.insert(v.begin(), v.end());
  }
  return std::vector<Ref>(acc.begin(), acc.end());
}

namespace detail {
// unseal(sub) decides whether a d-subterm's contents are exposed at this level.
template <typename F>
inline void collectB(Ref x, F const& unseal, RefSet& acc) {
  switch (x->tag) {
    case Tag::Zero:
    case Tag::Omega:
    case Tag::Pi:
    case Tag::Infinity:
      return;
    case Tag::Sum:
    case Tag::Veblen:
    case Tag::Suc:
      for (Ref c : children(x)) collectB(c, unseal, acc);
      return;
    case Tag::D: {
      if (!unseal(x->a)) return;
      acc.insert(x->b);
      collectB(x->b, unseal, acc);
      collectB(x->a, unseal, acc);
      for (Quad const& q : x->quads) {
        collectB(q.kappa, unseal, acc);
        collectB(q.tau, unseal, acc);
        collectB(q.nu, unseal, acc);
      }
      return;
    }
  }
}
}  // namespace detail

// B_tau(x): bodies of d-subterms whose subscript is >= tau, recursively.
inline std::vector<Ref> bSet(Ref tau, Ref x) {
  RefSet acc;
  detail::collectB(x, [tau](Ref sub) { return !lt(sub, tau); }, acc);
  return std::vector<Ref>(acc.begin(), acc.end());
}

// B_{>sigma}(x): bodies of d-subterms whose subscript is strictly above sigma.
inline std::vector<Ref> bAbove(Ref sigma, Ref x) {
  RefSet acc;
  detail::collectB(x, [sigma](Ref sub) { return lt(sigma, sub); }, acc);
  return std::vector<Ref>(acc.begin(), acc.end());
}

inline std::vector<Ref> bAboveSet(Ref sigma, std::vector<Ref> const& xs) {
  RefSet acc;
  for (Ref x : xs) {
    detail::collectB(x, [sigma](Ref sub) { return lt(sigma, sub); }, acc);
  }
  return std::vector<Ref>(acc.begin(), acc.end());
}

// Finite level set standing in for "for all tau <= bound" in K-conditions:
// regular-shaped subdiagrams of x below the bound, plus the bound itself.
inline std::vector<Ref> levelCandidatesBelow(Ref bound, Ref x) {
  RefSet acc;
  for (Ref c : sdPlus(x)) {
    switch (c->tag) {
      case Tag::Omega:
      case Tag::Pi:
      case Tag::Suc:
      case Tag::D:
        if (leq(c, bound)) acc.insert(c);
        break;
      default:
        break;
    }
  }
  acc.insert(bound);
  return std::vector<Ref>(acc.begin(), acc.end());
}

}  // namespace odpn
