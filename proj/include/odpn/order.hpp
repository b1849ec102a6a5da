#pragma once
// The strict total order on diagrams, the subscript-chain relation, and the
// K_sigma subterm functional (the order and K are mutually recursive: distinct
// d-subscripts are compared through K-sets). Also the order-sensitive
// normalizing constructors mkSum / mkVeblen.

#include <algorithm>
#include <cassert>

#include "diagram.hpp"

namespace odpn {

enum class Ordering : int8_t { Less = -1, Equal = 0, Greater = 1 };

inline Ordering compare(Ref x, Ref y);

inline bool lt(Ref x, Ref y) { return compare(x, y) == Ordering::Less; }
inline bool leq(Ref x, Ref y) { return compare(x, y) != Ordering::Greater; }

// --- subscript chain ---------------------------------------------------------
// alpha ≺ beta: transitive closure of membership alpha ∈ D_beta. The upward
// chain from a d-term lists its subscript, that term's subscript, and so on,
// ending at the first non-d element (Omega, pi, or a Suc).
inline std::vector<Ref> subChainUp(Ref a) {
  std::vector<Ref> out;
  Ref cur = a;
  while (isD(cur)) {
    cur = cur->a;
    out.push_back(cur);
  }
  return out;
}

inline bool precDot(Ref a, Ref b) {
  Ref cur = a;
  while (isD(cur)) {
    cur = cur->a;
    if (cur == b) return true;
  }
  return false;
}

inline bool preceqDot(Ref a, Ref b) { return a == b || precDot(a, b); }

// --- K_sigma -----------------------------------------------------------------
// For x in D_tau:  K_sigma(x) = {x}                   if x ≺ sigma (tau ⪯ sigma)
//                             = K_sigma({tau} u c(x))  if sigma < tau
//                             = K_sigma(tau)           if tau < sigma, tau ⋠ sigma
// and K distributes over the structure of non-d terms (empty on symbols).
inline std::vector<Ref> kSigma(Ref sigma, Ref x) {
  static std::unordered_map<uint64_t, std::vector<Ref>> memo;
  static std::mutex mu;
  uint64_t key = (static_cast<uint64_t>(sigma->id) << 32) | static_cast<uint32_t>(x->id);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  RefSet acc;
  auto add = [&acc](std::vector<Ref> const& v) { acc.insert(v.begin(), v.end()); };
  switch (x->tag) {
    case Tag::Zero:
    case Tag::Omega:
    case Tag::Pi:
    case Tag::Infinity:
      break;
    case Tag::Sum:
      for (Ref c : x->comps) add(kSigma(sigma, c));
      break;
    case Tag::Veblen:
      add(kSigma(sigma, x->a));
      add(kSigma(sigma, x->b));
      break;
    case Tag::Suc:
      add(kSigma(sigma, x->a));
      break;
    case Tag::D: {
      Ref tau = x->a;
      if (preceqDot(tau, sigma)) {
        acc.insert(x);
      } else if (compare(sigma, tau) == Ordering::Less) {
        add(kSigma(sigma, tau));
        add(kSigma(sigma, x->b));
        for (Quad const& q : x->quads) {
          add(kSigma(sigma, q.kappa));
          add(kSigma(sigma, q.tau));
          add(kSigma(sigma, q.nu));
        }
      } else {
        add(kSigma(sigma, tau));
      }
      break;
    }
  }
  std::vector<Ref> out(acc.begin(), acc.end());
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, std::move(out)).first->second;
}

inline std::vector<Ref> kSigmaSet(Ref sigma, std::vector<Ref> const& xs) {
  RefSet acc;
  for (Ref x : xs) {
    auto v = kSigma(sigma, x);
    acc.insert(v.begin(), v.end());
  }
  return std::vector<Ref>(acc.begin(), acc.end());
}

// --- finite set-order conventions (max of empty set is 0) --------------------
inline bool allLt(std::vector<Ref> const& ys, Ref b) {
  for (Ref y : ys) {
    if (!lt(y, b)) return false;
  }
  return true;
}

inline bool allLeq(std::vector<Ref> const& zs, Ref g) {
  for (Ref z : zs) {
    if (!leq(z, g)) return false;
  }
  return true;
}

// Y < Z : some member of Z bounds all of Y strictly. Vacuous for empty Y only
// when Z is nonempty; Y < {b} is the usual "everything below b".
inline bool setLtSet(std::vector<Ref> const& ys, std::vector<Ref> const& zs) {
  for (Ref z : zs) {
    if (allLt(ys, z)) return true;
  }
  return false;
}

// Z <= Y : every member of Z is below-or-equal some member of Y.
inline bool setLeqSet(std::vector<Ref> const& zs, std::vector<Ref> const& ys) {
  for (Ref z : zs) {
    bool ok = false;
    for (Ref y : ys) {
      if (leq(z, y)) { ok = true; break; }
    }
    if (!ok) return false;
  }
  return true;
}

inline Ref maxOf(std::vector<Ref> const& ys) {
  Ref m = zero();
  for (Ref y : ys) {
    if (lt(m, y)) m = y;
  }
  return m;
}

// --- comparison --------------------------------------------------------------
namespace detail {

// Substrata of d-terms keyed by the subscript's shape. Valid terms only ever
// produce the first three; Junk keeps the order total on malformed input.
enum class DGroup { SCOmega, SCSR, DQLike, Junk };

inline DGroup dGroup(Ref x) {
  Ref sub = x->a;
  switch (sub->tag) {
    case Tag::Omega: return DGroup::SCOmega;
    case Tag::Suc: return DGroup::SCSR;
    case Tag::Pi: return DGroup::DQLike;
    case Tag::D: return sub->quads.empty() ? DGroup::Junk : DGroup::DQLike;
    default: return DGroup::Junk;
  }
}

inline Ordering flip(Ordering o) {
  return o == Ordering::Less ? Ordering::Greater
       : o == Ordering::Greater ? Ordering::Less : Ordering::Equal;
}

inline Ordering cmpInt(long long a, long long b) {
  return a < b ? Ordering::Less : a > b ? Ordering::Greater : Ordering::Equal;
}

inline Ordering cmpJunk(Ref x, Ref y) {
  if (x->ell != y->ell) return cmpInt(x->ell, y->ell);
  return cmpInt(x->id, y->id);
}

inline Ordering cmpCore(Ref x, Ref y);

// d-term vs d-term with distinct subscripts sigma != tau, both regular-shaped
// ({pi} u D^Q). Each side is below its own subscript; the tie goes through the
// K-set at the smaller subscript.
inline Ordering cmpDQDistinct(Ref x, Ref y) {
  Ref sigma = x->a;
  Ref tau = y->a;
  if (leq(tau, x)) return Ordering::Greater;  // y < tau <= x
  if (leq(sigma, y)) return Ordering::Less;   // x < sigma <= y
  if (compare(sigma, tau) == Ordering::Greater) {
    return allLt(kSigma(tau, x), y) ? Ordering::Less : Ordering::Greater;
  }
  for (Ref g : kSigma(sigma, y)) {
    if (leq(x, g)) return Ordering::Less;
  }
  return Ordering::Greater;
}

// Suc vs d-term.
inline Ordering cmpSucD(Ref s, Ref y) {
  switch (dGroup(y)) {
    case DGroup::SCOmega:
      return Ordering::Greater;  // base in D^Q sits above Omega, y below it
    case DGroup::SCSR: {
      // y occupies the gap directly under its subscript zeta in SR.
      Ref zeta = y->a;
      if (s == zeta) return Ordering::Greater;  // d_zeta(b) < zeta
      return compare(s, zeta);
    }
    case DGroup::DQLike: {
      // s = base^{+k}: immediate successors of base within R; no member of
      // {pi} u D^Q lies strictly between base and base^{+k}.
      if (s->a == y) return Ordering::Greater;
      Ordering c = compare(s->a, y);
      return c == Ordering::Equal ? Ordering::Greater : c;
    }
    default:
      return cmpJunk(s, y);
  }
}

// Omega vs d-term.
inline Ordering cmpOmegaD(Ref y) {
  switch (dGroup(y)) {
    case DGroup::SCOmega: return Ordering::Greater;  // d_Omega(b) < Omega
    case DGroup::SCSR: return Ordering::Less;        // gap sits above Omega
    case DGroup::DQLike: return Ordering::Less;      // Omega < D^Q
    default: return cmpJunk(omega(), y);
  }
}

// Same-subscript d-terms: body first, then the quadruple sequences read from
// the last quadruple back to the first, componentwise (j, kappa, tau, nu);
// a strict prefix in that reading is smaller.
inline Ordering cmpDSameSub(Ref x, Ref y) {
  Ordering c = compare(x->b, y->b);
  if (c != Ordering::Equal) return c;
  size_t nx = x->quads.size(), ny = y->quads.size();
  for (size_t t = 0; t < std::min(nx, ny); ++t) {
    Quad const& qx = x->quads[nx - 1 - t];
    Quad const& qy = y->quads[ny - 1 - t];
    c = cmpInt(qx.j, qy.j);
    if (c != Ordering::Equal) return c;
    c = compare(qx.kappa, qy.kappa);
    if (c != Ordering::Equal) return c;
    c = compare(qx.tau, qy.tau);
    if (c != Ordering::Equal) return c;
    c = compare(qx.nu, qy.nu);
    if (c != Ordering::Equal) return c;
  }
  return cmpInt(static_cast<long long>(nx), static_cast<long long>(ny));
}

inline Ordering cmpDD(Ref x, Ref y) {
  if (x->a == y->a) return cmpDSameSub(x, y);
  DGroup gx = dGroup(x), gy = dGroup(y);
  if (gx == DGroup::Junk || gy == DGroup::Junk) return cmpJunk(x, y);
  if (gx != gy) {
    // SCOmega < (SCSR and DQLike interleaved by subscript) handled below;
    // the strict stratum is only Omega-collapses at the bottom.
    if (gx == DGroup::SCOmega) return Ordering::Less;
    if (gy == DGroup::SCOmega) return Ordering::Greater;
    if (gx == DGroup::SCSR) {
      // x under subscript zeta = lambda^{+j}; no regular sits in (lambda, zeta).
      Ref lambda = x->a->a;
      Ordering c = compare(lambda, y);
      return c == Ordering::Equal ? Ordering::Greater : c;
    }
    // gx == DQLike, gy == SCSR
    Ref lambda = y->a->a;
    Ordering c = compare(x, lambda);
    return c == Ordering::Equal ? Ordering::Less : c;
  }
  switch (gx) {
    case DGroup::SCOmega:
      return cmpDSameSub(x, y);  // both subscripts are Omega
    case DGroup::SCSR: {
      Ordering c = compare(x->a, y->a);  // disjoint gaps, ordered by subscript
      return c == Ordering::Equal ? cmpDSameSub(x, y) : c;
    }
    default:
      return cmpDQDistinct(x, y);
  }
}

inline Ordering cmpCore(Ref x, Ref y) {
  if (x == y) return Ordering::Equal;
  if (x->tag == Tag::Infinity) return Ordering::Greater;
  if (y->tag == Tag::Infinity) return Ordering::Less;
  if (x->tag == Tag::Zero) return Ordering::Less;
  if (y->tag == Tag::Zero) return Ordering::Greater;

  if (x->tag == Tag::Sum || y->tag == Tag::Sum) {
    std::vector<Ref> xs = x->tag == Tag::Sum ? x->comps : std::vector<Ref>{x};
    std::vector<Ref> ys = y->tag == Tag::Sum ? y->comps : std::vector<Ref>{y};
    size_t n = std::min(xs.size(), ys.size());
    for (size_t i = 0; i < n; ++i) {
      Ordering c = compare(xs[i], ys[i]);
      if (c != Ordering::Equal) return c;
    }
    return cmpInt(static_cast<long long>(xs.size()), static_cast<long long>(ys.size()));
  }

  if (x->tag == Tag::Veblen && y->tag == Tag::Veblen) {
    Ordering c = compare(x->a, y->a);
    if (c == Ordering::Equal) return compare(x->b, y->b);
    if (c == Ordering::Less) {
      return compare(x->b, y) == Ordering::Less ? Ordering::Less : Ordering::Greater;
    }
    return compare(y->b, x) == Ordering::Less ? Ordering::Greater : Ordering::Less;
  }
  if (x->tag == Tag::Veblen) {
    // y is strongly critical: phi(a,b) < y iff a < y and b < y
    return (lt(x->a, y) && lt(x->b, y)) ? Ordering::Less : Ordering::Greater;
  }
  if (y->tag == Tag::Veblen) return flip(cmpCore(y, x));

  // atoms: Omega, Pi, Suc, D
  if (x->tag == Tag::Pi) return Ordering::Greater;  // x != y, pi maximal
  if (y->tag == Tag::Pi) return Ordering::Less;
  if (x->tag == Tag::Omega && y->tag == Tag::Omega) return Ordering::Equal;
  if (x->tag == Tag::Omega) return cmpOmegaD(y);
  if (y->tag == Tag::Omega) return flip(cmpOmegaD(x));
  if (x->tag == Tag::Suc && y->tag == Tag::Suc) {
    Ordering c = compare(x->a, y->a);
    return c == Ordering::Equal ? cmpInt(x->k, y->k) : c;
  }
  if (x->tag == Tag::Suc) return cmpSucD(x, y);
  if (y->tag == Tag::Suc) return flip(cmpSucD(y, x));
  return cmpDD(x, y);
}

}  // namespace detail

inline Ordering compare(Ref x, Ref y) {
  if (x == y) return Ordering::Equal;
  static std::unordered_map<uint64_t, Ordering> memo;
  static std::mutex mu;
  uint64_t key = (static_cast<uint64_t>(x->id) << 32) | static_cast<uint32_t>(y->id);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Ordering r = detail::cmpCore(x, y);
  uint64_t rkey = (static_cast<uint64_t>(y->id) << 32) | static_cast<uint32_t>(x->id);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, r);
  memo.emplace(rkey, detail::flip(r));
  return r;
}

// --- normalizing constructors -------------------------------------------------

// phi(a,b) absorbs into b when b is already closed under phi_a: either a Veblen
// term with strictly larger first argument, or a strongly critical atom above a.
inline Ref mkVeblen(Ref a, Ref b) {
  if (b->tag == Tag::Veblen && compare(b->a, a) == Ordering::Greater) return b;
  Class cb = classify(b);
  if ((cb == Class::SC || cb == Class::R_Pi || cb == Class::R_SR || cb == Class::R_DQ) &&
      lt(a, b)) {
    return b;
  }
  return rawVeblen(a, b);
}

// Ordinal sum normal form: flatten, drop zeros, absorb left addends strictly
// below a later component (a + b = b for a < b). Result is non-increasing.
inline Ref mkSum(std::vector<Ref> const& comps) {
  std::vector<Ref> flat;
  for (Ref c : comps) {
    if (c->tag == Tag::Sum) {
      flat.insert(flat.end(), c->comps.begin(), c->comps.end());
    } else if (!isZero(c)) {
      flat.push_back(c);
    }
  }
  std::vector<Ref> out;
  for (Ref c : flat) {
    while (!out.empty() && lt(out.back(), c)) out.pop_back();
    out.push_back(c);
  }
  return rawSum(out);
}

inline Ref mkPlus(Ref a, Ref b) { return mkSum({a, b}); }

// Stored-term normal form predicates (structural invariants of valid terms).
inline bool isSumNormal(Ref x) {
  if (x->tag != Tag::Sum) return true;
  for (Ref c : x->comps) {
    if (c->tag == Tag::Sum || isZero(c)) return false;
  }
  for (size_t i = 0; i + 1 < x->comps.size(); ++i) {
    if (lt(x->comps[i], x->comps[i + 1])) return false;
  }
  return true;
}

inline bool isVeblenNormal(Ref x) {
  if (x->tag != Tag::Veblen) return true;
  Ref b = x->b;
  if (b->tag == Tag::Veblen && compare(b->a, x->a) == Ordering::Greater) return false;
  Class cb = classify(b);
  if ((cb == Class::SC || cb == Class::R_Pi || cb == Class::R_SR || cb == Class::R_DQ) &&
      lt(x->a, b)) {
    return false;
  }
  return true;
}

// alpha^+ relative to a finite carrier: the least R-member of the carrier above
// alpha, else the virtual top.
inline Ref sucInCarrier(Ref alpha, std::vector<Ref> const& carrier) {
  Ref best = infinity();
  for (Ref c : carrier) {
    if (inR(c) && lt(alpha, c) && lt(c, best)) best = c;
  }
  return best;
}

}  // namespace odpn
