#pragma once
// Term algebra of ordinal diagrams over {0, Om, pi, +, phi, ^{+k}, d_sigma^q alpha}.
// Terms are interned: one immutable Node per distinct term, pointer equality is
// term equality. Raw constructors canonicalize shape only (flatten Sum/Suc, drop
// zero summands); order-sensitive normalization lives in order.hpp.

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace odpn {

enum class Tag : uint8_t { Zero, Omega, Pi, Infinity, Sum, Veblen, Suc, D };

enum class System : uint8_t { OdSuper, OdM32, OdPiN };

struct Params {
  System sys = System::OdPiN;
  int N = 4;  // OdPiN only; indices i range over [2, N-1]
};

struct Node;
using Ref = Node const*;

struct Quad {
  int j;      // in [2, N-1]
  Ref kappa;  // in {pi} u D^Q
  Ref tau;    // in {pi} u D^Q
  Ref nu;
};

struct Node {
  Tag tag;
  int k = 0;                 // Suc: exponent, >= 1 after flattening
  Ref a = nullptr;           // Veblen first / Suc base / D subscript
  Ref b = nullptr;           // Veblen second / D body
  std::vector<Ref> comps;    // Sum components, size >= 2, none Sum, none Zero
  std::vector<Quad> quads;   // D quadruples, m = 0..l
  long long ell = 0;         // symbol count; each j slot counts one symbol
  size_t hash = 0;
  int id = 0;                // creation index, stable within a process
};

namespace detail {

inline uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct KeyHash {
  size_t operator()(std::vector<uint64_t> const& k) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint64_t v : k) h = mix(h, v);
    return static_cast<size_t>(h);
  }
};

struct Interner {
  std::deque<Node> arena;
  std::unordered_map<std::vector<uint64_t>, Ref, KeyHash> table;
  std::mutex mu;
};

inline Interner& interner() {
  static Interner it;
  return it;
}

inline uint64_t nid(Ref r) { return r ? static_cast<uint64_t>(r->id) + 1 : 0; }

inline Ref intern(Node&& n) {
  std::vector<uint64_t> key;
  key.push_back(static_cast<uint64_t>(n.tag));
  key.push_back(static_cast<uint64_t>(n.k));
  key.push_back(nid(n.a));
  key.push_back(nid(n.b));
  key.push_back(n.comps.size());
  for (Ref c : n.comps) key.push_back(nid(c));
  key.push_back(n.quads.size());
  for (Quad const& q : n.quads) {
    key.push_back(static_cast<uint64_t>(q.j));
    key.push_back(nid(q.kappa));
    key.push_back(nid(q.tau));
    key.push_back(nid(q.nu));
  }
  Interner& it = interner();
  std::lock_guard<std::mutex> lock(it.mu);
  auto found = it.table.find(key);
  if (found != it.table.end()) return found->second;
  n.hash = KeyHash{}(key);
  n.id = static_cast<int>(it.arena.size());
  it.arena.push_back(std::move(n));
  Ref r = &it.arena.back();
  it.table.emplace(std::move(key), r);
  return r;
}

inline Ref atom(Tag t) {
  Node n;
  n.tag = t;
  n.ell = 1;
  return intern(std::move(n));
}

}  // namespace detail

inline Ref zero() { static Ref r = detail::atom(Tag::Zero); return r; }
inline Ref omega() { static Ref r = detail::atom(Tag::Omega); return r; }
inline Ref pi() { static Ref r = detail::atom(Tag::Pi); return r; }
// Virtual top pi^+ = infinity; never a subterm of a diagram, only a comparison bound.
inline Ref infinity() { static Ref r = detail::atom(Tag::Infinity); return r; }

inline bool isZero(Ref a) { return a->tag == Tag::Zero; }
inline bool isD(Ref a) { return a->tag == Tag::D; }
inline bool inDQ(Ref a) { return a->tag == Tag::D && !a->quads.empty(); }
inline bool inSC(Ref a) { return a->tag == Tag::D && a->quads.empty(); }

// Sum with shape canonicalization: flattens nested sums, drops zero summands.
// Component ORDER is kept as given; use mkSum (order.hpp) for stored terms.
inline Ref rawSum(std::vector<Ref> comps) {
  std::vector<Ref> flat;
  for (Ref c : comps) {
    if (c->tag == Tag::Sum) {
      flat.insert(flat.end(), c->comps.begin(), c->comps.end());
    } else if (!isZero(c)) {
      flat.push_back(c);
    }
  }
  if (flat.empty()) return zero();
  if (flat.size() == 1) return flat[0];
  Node n;
  n.tag = Tag::Sum;
  n.comps = std::move(flat);
  n.ell = static_cast<long long>(n.comps.size()) - 1;
  for (Ref c : n.comps) n.ell += c->ell;
  return detail::intern(std::move(n));
}

inline Ref rawVeblen(Ref a, Ref b) {
  Node n;
  n.tag = Tag::Veblen;
  n.a = a;
  n.b = b;
  n.ell = 1 + a->ell + b->ell;
  return detail::intern(std::move(n));
}

// sigma^{+k}; (sigma^{+j})^{+k} flattens to sigma^{+(j+k)}.
inline Ref rawSuc(Ref base, int k) {
  if (k < 1) throw std::invalid_argument("rawSuc: k must be >= 1");
  if (base->tag == Tag::Suc) return rawSuc(base->a, base->k + k);
  Node n;
  n.tag = Tag::Suc;
  n.a = base;
  n.k = k;
  n.ell = base->ell + k;
  return detail::intern(std::move(n));
}

inline Ref rawD(Ref sub, std::vector<Quad> quads, Ref body) {
  Node n;
  n.tag = Tag::D;
  n.a = sub;
  n.b = body;
  n.quads = std::move(quads);
  n.ell = 1 + sub->ell + body->ell;
  for (Quad const& q : n.quads) n.ell += 1 + q.kappa->ell + q.tau->ell + q.nu->ell;
  return detail::intern(std::move(n));
}

inline long long ellSize(Ref a) { return a->ell; }

// All Ref sets are ordered by interning id: deterministic within a process and
// stable across runs that construct terms in the same order.
struct IdLess {
  bool operator()(Ref x, Ref y) const { return x->id < y->id; }
};
using RefSet = std::set<Ref, IdLess>;

// 1 = phi(0,0); n = 1 + ... + 1 in sum normal form (equal components).
inline Ref one() { static Ref r = rawVeblen(zero(), zero()); return r; }
inline Ref natural(long long n) {
  if (n < 0) throw std::invalid_argument("natural: negative");
  if (n == 0) return zero();
  return rawSum(std::vector<Ref>(static_cast<size_t>(n), one()));
}

enum class Class : uint8_t { ZeroClass, P, SC, R_Pi, R_SR, R_DQ, SumClass };

// R = {pi} u D^Q u SR; Omega reports at the SR level (regular, directly above
// the countable stratum). Infinity is internal and never classified.
inline Class classify(Ref a) {
  switch (a->tag) {
    case Tag::Zero: return Class::ZeroClass;
    case Tag::Omega: return Class::R_SR;
    case Tag::Pi: return Class::R_Pi;
    case Tag::Sum: return Class::SumClass;
    case Tag::Veblen: return Class::P;
    case Tag::Suc: return Class::R_SR;
    case Tag::D: return a->quads.empty() ? Class::SC : Class::R_DQ;
    default: throw std::logic_error("classify: internal tag");
  }
}

inline bool inR(Ref a) {
  Class c = classify(a);
  return c == Class::R_Pi || c == Class::R_SR || c == Class::R_DQ;
}

inline Ref bodyOf(Ref a) {
  if (!isD(a)) throw std::invalid_argument("bodyOf: not a d-term");
  return a->b;
}

// Quadruple components as diagrams, without index encodings.
inline std::vector<Ref> qSet(Ref a) {
  if (!isD(a)) throw std::invalid_argument("qSet: not a d-term");
  RefSet s;
  for (Quad const& q : a->quads) {
    s.insert(q.kappa);
    s.insert(q.tau);
    s.insert(q.nu);
  }
  return std::vector<Ref>(s.begin(), s.end());
}

// Quadruple components with j indices as numeral diagrams (set-order checks).
inline std::vector<Ref> qSetWithIndices(Ref a) {
  RefSet s;
  for (Quad const& q : a->quads) {
    s.insert(natural(q.j));
    s.insert(q.kappa);
    s.insert(q.tau);
    s.insert(q.nu);
  }
  return std::vector<Ref>(s.begin(), s.end());
}

// c(eta) = {b(eta)} u Q(eta)
inline std::vector<Ref> cSetOf(Ref a) {
  std::vector<Ref> v = qSet(a);
  RefSet s(v.begin(), v.end());
  s.insert(bodyOf(a));
  return std::vector<Ref>(s.begin(), s.end());
}

// Direct structural children: Sum components; Veblen arguments; Suc base;
// D subscript, quadruple diagram components, body.
inline std::vector<Ref> children(Ref a) {
  std::vector<Ref> out;
  switch (a->tag) {
    case Tag::Sum:
      out = a->comps;
      break;
    case Tag::Veblen:
      out = {a->a, a->b};
      break;
    case Tag::Suc:
      out = {a->a};
      break;
    case Tag::D:
      out.push_back(a->a);
      for (Quad const& q : a->quads) {
        out.push_back(q.kappa);
        out.push_back(q.tau);
        out.push_back(q.nu);
      }
      out.push_back(a->b);
      break;
    default:
      break;
  }
  return out;
}

namespace detail {
inline void collectSd(Ref a, RefSet& acc) {
  for (Ref c : children(a)) {
    if (acc.insert(c).second) collectSd(c, acc);
  }
}
}  // namespace detail

// Proper subdiagrams; a itself excluded. Ordered by interning id (stable).
inline std::vector<Ref> sd(Ref a) {
  static std::unordered_map<Ref, std::vector<Ref>> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
  }
  RefSet acc;
  detail::collectSd(a, acc);
  std::vector<Ref> out(acc.begin(), acc.end());
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(a, std::move(out)).first->second;
}

inline std::vector<Ref> sdPlus(Ref a) {
  std::vector<Ref> out = sd(a);
  out.push_back(a);
  return out;
}

// --- D^Q accessors -----------------------------------------------------------
// For rho = d_sigma^q(alpha) with q = (j_m,kappa_m,tau_m,nu_m), m = 0..l:
// with m = min{m <= l : j <= j_m}: pd_j(rho) = tau_m; when j = j_m the slot is
// explicit (st_j = nu_m, rg_j = kappa_m); otherwise in_j is inherited from tau_m
// and is empty once the chain reaches pi.

inline std::optional<size_t> quadSlot(Ref rho, int j) {
  if (!inDQ(rho)) return std::nullopt;
  for (size_t m = 0; m < rho->quads.size(); ++m) {
    if (j <= rho->quads[m].j) return m;
  }
  return std::nullopt;
}

inline std::vector<int> inSet(Ref rho) {
  std::vector<int> out;
  if (inDQ(rho)) {
    for (Quad const& q : rho->quads) out.push_back(q.j);
  }
  return out;
}

inline bool inIn(int i, Ref rho) {
  if (!inDQ(rho)) return false;
  for (Quad const& q : rho->quads) {
    if (q.j == i) return true;
  }
  return false;
}

// pd_i; nullptr when undefined (rho not in D^Q, or i above the top index).
inline Ref pdI(int i, Ref rho) {
  auto m = quadSlot(rho, i);
  return m ? rho->quads[*m].tau : nullptr;
}

// in_i as the inherited (st_i, rg_i) pair; nullopt = undefined.
inline std::optional<std::pair<Ref, Ref>> inPair(int i, Ref rho) {
  Ref cur = rho;
  while (inDQ(cur)) {
    auto m = quadSlot(cur, i);
    if (!m) return std::nullopt;
    Quad const& q = cur->quads[*m];
    if (q.j == i) return std::make_pair(q.nu, q.kappa);
    cur = q.tau;
  }
  return std::nullopt;
}

inline Ref stI(int i, Ref rho) {
  auto p = inPair(i, rho);
  return p ? p->first : nullptr;
}

inline Ref rgI(int i, Ref rho) {
  auto p = inPair(i, rho);
  return p ? p->second : nullptr;
}

}  // namespace odpn
