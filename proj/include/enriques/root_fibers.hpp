#pragma once

#include "enriques/curves.hpp"
#include "enriques/errors.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace enriques {

// ---------------------------------------------------------------- types

struct DynkinType {
  char family = 'A';
  int n = 1;

  DynkinType() = default;
  DynkinType(char f, int rank) : family(f), n(rank) {
    const bool ok = (f == 'A' && n >= 1) || (f == 'D' && n >= 4) || (f == 'E' && n >= 6 && n <= 8);
    if (!ok) throw std::invalid_argument("invalid Dynkin type " + std::string(1, f) + std::to_string(n));
  }

  static DynkinType parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Dynkin type: " + s);
    return DynkinType(s[0], std::stoi(s.substr(1)));
  }

  std::string str() const { return std::string(1, family) + std::to_string(n); }

  // E before D before A, larger rank first.
  int family_rank() const { return family == 'E' ? 0 : family == 'D' ? 1 : 2; }
  friend auto operator<=>(const DynkinType& a, const DynkinType& b) {
    if (auto c = a.family_rank() <=> b.family_rank(); c != 0) return c;
    return b.n <=> a.n;
  }
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

struct KodairaType {
  enum class Kind { I, Istar, II, III, IV, IIstar, IIIstar, IVstar, Smooth };
  Kind kind = Kind::Smooth;
  int n = 0;

  KodairaType() = default;
  KodairaType(Kind k, int idx = 0) : kind(k), n(idx) {
    if (k == Kind::I && n < 1) throw std::invalid_argument("I_n needs n >= 1");
    if (k == Kind::Istar && n < 0) throw std::invalid_argument("I_n* needs n >= 0");
    if (k != Kind::I && k != Kind::Istar) n = 0;
  }
  static KodairaType I(int n) { return {Kind::I, n}; }
  static KodairaType Istar(int n) { return {Kind::Istar, n}; }

  static KodairaType parse(const std::string& s) {
    if (s == "smooth") return {};
    if (s == "II") return {Kind::II};
    if (s == "III") return {Kind::III};
    if (s == "IV") return {Kind::IV};
    if (s == "II*") return {Kind::IIstar};
    if (s == "III*") return {Kind::IIIstar};
    if (s == "IV*") return {Kind::IVstar};
    if (s.size() >= 2 && s[0] == 'I') {
      const bool star = s.back() == '*';
      const std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
      if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
        const int k = std::stoi(digits);
        return star ? Istar(k) : I(k);
      }
    }
    throw std::invalid_argument("bad Kodaira type: " + s);
  }

  std::string str() const {
    switch (kind) {
      case Kind::I: return "I" + std::to_string(n);
      case Kind::Istar: return "I" + std::to_string(n) + "*";
      case Kind::II: return "II";
      case Kind::III: return "III";
      case Kind::IV: return "IV";
      case Kind::IIstar: return "II*";
      case Kind::IIIstar: return "III*";
      case Kind::IVstar: return "IV*";
      case Kind::Smooth: return "smooth";
    }
    return "?";
  }

  std::size_t components() const {
    switch (kind) {
      case Kind::I: return static_cast<std::size_t>(n);
      case Kind::Istar: return static_cast<std::size_t>(n) + 5;
      case Kind::II: return 1;
      case Kind::III: return 2;
      case Kind::IV: return 3;
      case Kind::IIstar: return 9;
      case Kind::IIIstar: return 8;
      case Kind::IVstar: return 7;
      case Kind::Smooth: return 1;
    }
    return 0;
  }

  bool multiplicative() const { return kind == Kind::I; }
  bool additive() const { return kind != Kind::I && kind != Kind::Smooth; }

  friend auto operator<=>(const KodairaType&, const KodairaType&) = default;
};

// Root lattice of the components not meeting the zero section.
inline std::vector<DynkinType> root_type(const KodairaType& k) {
  using K = KodairaType::Kind;
  switch (k.kind) {
    case K::I: return k.n >= 2 ? std::vector<DynkinType>{{'A', k.n - 1}} : std::vector<DynkinType>{};
    case K::Istar: return {{'D', k.n + 4}};
    case K::III: return {{'A', 1}};
    case K::IV: return {{'A', 2}};
    case K::IIstar: return {{'E', 8}};
    case K::IIIstar: return {{'E', 7}};
    case K::IVstar: return {{'E', 6}};
    default: return {};
  }
}

// ---------------------------------------------------------------- canonical graphs

// Canonical vertex orders:
//   A_n  path order.
//   D_n  long arm from its leaf to the branch vertex (positions 0..n-3), then the two fork leaves.
//   E_n  short-arm leaf, short-arm inner vertex, center, long arm outward, branch leaf.
inline CurveConfig dynkin_graph(const DynkinType& d) {
  const int n = d.n;
  std::vector<std::array<int, 3>> e;
  if (d.family == 'A') {
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
  } else if (d.family == 'D') {
    for (int i = 0; i + 1 < n - 2; ++i) e.push_back({i, i + 1, 1});
    e.push_back({n - 3, n - 2, 1});
    e.push_back({n - 3, n - 1, 1});
  } else {
    for (int i = 0; i + 1 < n - 1; ++i) e.push_back({i, i + 1, 1});
    e.push_back({2, n - 1, 1});
  }
  return CurveConfig::from_edges(static_cast<std::size_t>(n), e);
}

inline std::vector<int> highest_root(const DynkinType& d) {
  const auto n = static_cast<std::size_t>(d.n);
  if (d.family == 'A') return std::vector<int>(n, 1);
  if (d.family == 'D') {
    std::vector<int> h(n, 2);
    h[0] = 1;
    h[n - 2] = h[n - 1] = 1;
    return h;
  }
  switch (d.n) {
    case 6: return {1, 2, 3, 2, 1, 2};
    case 7: return {2, 3, 4, 3, 2, 1, 2};
    default: return {2, 4, 6, 5, 4, 3, 2, 3};
  }
}

struct AffineShape {
  CurveConfig config;
  std::vector<int> mult;
};

// Canonical extended diagrams with their null vectors.
//   I_n (n>=3) cycle order; I_2 and III two vertices with product 2; IV as I_3.
//   I_n*  leaves a,b, chain c_0..c_n, leaves c,d.
//   IV*   center, then three arms of length 2 outward.
//   III*  center, branch leaf, then two arms of length 3 outward.
//   II*   center, branch leaf, arm of length 2, arm of length 5, each outward.
inline AffineShape affine_graph(const KodairaType& k) {
  using K = KodairaType::Kind;
  std::vector<std::array<int, 3>> e;
  std::vector<int> mult;
  std::size_t n = 0;
  auto chain = [&](std::vector<int> verts) {
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) e.push_back({verts[i], verts[i + 1], 1});
  };
  switch (k.kind) {
    case K::I:
    case K::III:
    case K::IV: {
      const int m = k.kind == K::I ? k.n : k.kind == K::III ? 2 : 3;
      if (m < 2) throw NotAffine("irreducible fiber has no (-2)-curve dual graph");
      n = static_cast<std::size_t>(m);
      if (m == 2) {
        e.push_back({0, 1, 2});
      } else {
        for (int i = 0; i < m; ++i) e.push_back({i, (i + 1) % m, 1});
      }
      mult.assign(n, 1);
      break;
    }
    case K::Istar: {
      const int c = k.n + 1;
      n = static_cast<std::size_t>(c + 4);
      std::vector<int> ch;
      for (int i = 0; i < c; ++i) ch.push_back(2 + i);
      chain(ch);
      e.push_back({0, 2, 1});
      e.push_back({1, 2, 1});
      e.push_back({c + 1, c + 2, 1});
      e.push_back({c + 1, c + 3, 1});
      mult.assign(n, 2);
      mult[0] = mult[1] = mult[n - 2] = mult[n - 1] = 1;
      break;
    }
    case K::IVstar:
      n = 7;
      chain({0, 1, 2});
      chain({0, 3, 4});
      chain({0, 5, 6});
      mult = {3, 2, 1, 2, 1, 2, 1};
      break;
    case K::IIIstar:
      n = 8;
      e.push_back({0, 1, 1});
      chain({0, 2, 3, 4});
      chain({0, 5, 6, 7});
      mult = {4, 2, 3, 2, 1, 3, 2, 1};
      break;
    case K::IIstar:
      n = 9;
      e.push_back({0, 1, 1});
      chain({0, 2, 3});
      chain({0, 4, 5, 6, 7, 8});
      mult = {6, 3, 4, 2, 5, 4, 3, 2, 1};
      break;
    default:
      throw NotAffine("irreducible fiber has no (-2)-curve dual graph");
  }
  return {CurveConfig::from_edges(n, e), mult};
}

// ---------------------------------------------------------------- recognition

namespace detail {

struct TreeInfo {
  std::vector<int> deg;
  std::size_t edges = 0;
  int max_weight = 0;
};

inline TreeInfo tree_info(const CurveConfig& c) {
  TreeInfo t;
  t.deg.assign(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c(i, j) != 0) {
        ++t.edges;
        ++t.deg[i];
        ++t.deg[j];
        t.max_weight = std::max(t.max_weight, c(i, j));
      }
  return t;
}

// Vertices from start outward, away from prev, until a leaf or a branch vertex.
inline std::vector<std::size_t> walk_arm(const CurveConfig& c, std::size_t start, std::size_t prev) {
  std::vector<std::size_t> arm{start};
  std::size_t cur = start, p = prev;
  while (true) {
    std::optional<std::size_t> next;
    auto nb = c.neighbors(cur);
    if (nb.size() > 2) break;
    for (auto w : nb)
      if (w != p) next = w;
    if (!next) break;
    p = cur;
    cur = *next;
    arm.push_back(cur);
  }
  return arm;
}

struct Arms {
  std::size_t center;
  std::vector<std::vector<std::size_t>> arms;  // sorted by length, ties by first vertex
};

inline Arms arms_of(const CurveConfig& c, std::size_t center) {
  Arms a{center, {}};
  for (auto w : c.neighbors(center)) a.arms.push_back(walk_arm(c, w, center));
  std::stable_sort(a.arms.begin(), a.arms.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return a;
}

}  // namespace detail

struct DynkinRecognition {
  DynkinType type;
  std::vector<std::size_t> order;  // order[k] = config vertex at canonical position k
};

inline DynkinRecognition recognize_dynkin(const CurveConfig& c) {
  const std::size_t n = c.size();
  if (n == 0) throw NotDynkin("empty configuration");
  if (!c.connected()) throw NotDynkin("disconnected configuration");
  auto t = detail::tree_info(c);
  if (t.max_weight > 1) throw NotDynkin("multiple edge");
  if (t.edges != n - 1) throw NotDynkin("contains a cycle");
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.deg[i] > 3) throw NotDynkin("vertex of valency greater than 3");
    if (t.deg[i] == 3) branch.push_back(i);
  }
  if (branch.size() > 1) throw NotDynkin("more than one branch vertex");
  if (branch.empty()) {
    std::size_t leaf = 0;
    while (n > 1 && t.deg[leaf] != 1) ++leaf;
    auto order = n == 1 ? std::vector<std::size_t>{0} : detail::walk_arm(c, leaf, leaf);
    return {DynkinType('A', static_cast<int>(n)), order};
  }
  auto a = detail::arms_of(c, branch[0]);
  const auto l0 = a.arms[0].size(), l1 = a.arms[1].size(), l2 = a.arms[2].size();
  std::vector<std::size_t> order;
  if (l0 == 1 && l1 == 1) {
    order.assign(a.arms[2].rbegin(), a.arms[2].rend());
    order.push_back(a.center);
    order.push_back(a.arms[0][0]);
    order.push_back(a.arms[1][0]);
    return {DynkinType('D', static_cast<int>(n)), order};
  }
  if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
    order.assign(a.arms[1].rbegin(), a.arms[1].rend());
    order.push_back(a.center);
    order.insert(order.end(), a.arms[2].begin(), a.arms[2].end());
    order.push_back(a.arms[0][0]);
    return {DynkinType('E', static_cast<int>(n)), order};
  }
  throw NotDynkin("tree is affine or hyperbolic");
}

inline DynkinType classify_dynkin(const CurveConfig& c) { return recognize_dynkin(c).type; }

struct AffineRecognition {
  KodairaType type;
  std::vector<int> mult;  // null vector, indexed by config vertex
};

// additive selects III / IV for the numerically identical I_2 / I_3 graphs.
inline AffineRecognition recognize_affine(const CurveConfig& c, bool additive = false) {
  using K = KodairaType::Kind;
  const std::size_t n = c.size();
  if (n == 0 || !c.connected()) throw NotAffine("empty or disconnected configuration");
  if (n == 1) throw NotAffine("single curve");
  AffineRecognition r;
  r.mult.assign(n, 1);
  auto t = detail::tree_info(c);
  if (n == 2) {
    if (c(0, 1) != 2) throw NotAffine("two curves with product " + std::to_string(c(0, 1)));
    r.type = additive ? KodairaType(K::III) : KodairaType::I(2);
    return r;
  }
  if (t.max_weight > 1) throw NotAffine("multiple edge");
  if (t.edges == n) {
    for (auto d : t.deg)
      if (d != 2) throw NotAffine("cycle with extra edges");
    r.type = (n == 3 && additive) ? KodairaType(K::IV) : KodairaType::I(static_cast<int>(n));
    return r;
  }
  if (t.edges != n - 1) throw NotAffine("too many cycles");
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.deg[i] > 4) throw NotAffine("vertex of valency greater than 4");
    if (t.deg[i] == 4) {
      if (n != 5) throw NotAffine("valency 4 outside D4~");
      r.mult.assign(n, 1);
      r.mult[i] = 2;
      r.type = KodairaType::Istar(0);
      return r;
    }
    if (t.deg[i] == 3) branch.push_back(i);
  }
  if (branch.size() == 2) {
    for (auto b : branch) {
      int leaves = 0;
      for (auto w : c.neighbors(b)) leaves += t.deg[w] == 1;
      if (leaves != 2) throw NotAffine("branch vertex without two leaves");
    }
    for (std::size_t i = 0; i < n; ++i) r.mult[i] = t.deg[i] == 1 ? 1 : 2;
    r.type = KodairaType::Istar(static_cast<int>(n) - 5);
    return r;
  }
  if (branch.size() != 1) throw NotAffine("not an extended Dynkin tree");
  auto a = detail::arms_of(c, branch[0]);
  const auto l0 = a.arms[0].size(), l1 = a.arms[1].size(), l2 = a.arms[2].size();
  auto fill = [&](const std::vector<std::size_t>& arm, std::vector<int> m) {
    for (std::size_t i = 0; i < arm.size(); ++i) r.mult[arm[i]] = m[i];
  };
  if (l0 == 2 && l1 == 2 && l2 == 2) {
    r.mult[a.center] = 3;
    for (const auto& arm : a.arms) fill(arm, {2, 1});
    r.type = KodairaType(K::IVstar);
  } else if (l0 == 1 && l1 == 3 && l2 == 3) {
    r.mult[a.center] = 4;
    fill(a.arms[0], {2});
    fill(a.arms[1], {3, 2, 1});
    fill(a.arms[2], {3, 2, 1});
    r.type = KodairaType(K::IIIstar);
  } else if (l0 == 1 && l1 == 2 && l2 == 5) {
    r.mult[a.center] = 6;
    fill(a.arms[0], {3});
    fill(a.arms[1], {4, 2});
    fill(a.arms[2], {5, 4, 3, 2, 1});
    r.type = KodairaType(K::IIstar);
  } else {
    throw NotAffine("tree is Dynkin or hyperbolic");
  }
  return r;
}

inline KodairaType classify_affine(const CurveConfig& c, bool additive = false) {
  return recognize_affine(c, additive).type;
}

// ---------------------------------------------------------------- fundamental cycle

inline bool negative_definite(const CurveConfig& c) {
  const std::size_t n = c.size();
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix m(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = -c(i, j);
    if (determinant(std::move(m)) <= 0) return false;
  }
  return true;
}

struct ArtinResult {
  std::vector<int> coeffs;
  std::size_t steps = 0;
};

inline ArtinResult artin_iteration(const CurveConfig& c) {
  if (c.empty()) throw NonDefinite("empty configuration");
  if (!negative_definite(c)) throw NonDefinite("Artin iteration would not terminate");
  const std::size_t n = c.size();
  ArtinResult r{std::vector<int>(n, 1), 0};
  while (true) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      long long p = 0;
      for (std::size_t j = 0; j < n; ++j) p += static_cast<long long>(r.coeffs[j]) * c(i, j);
      if (p > 0) {
        ++r.coeffs[i];
        ++r.steps;
        changed = true;
        break;
      }
    }
    if (!changed) return r;
  }
}

inline std::vector<int> fundamental_cycle_coeffs(const CurveConfig& c) { return artin_iteration(c).coeffs; }

// Fundamental cycle of the curves in verts, as a divisor on the ambient.
inline Divisor fundamental_cycle(const ConfigPtr& ambient, std::span<const std::size_t> verts) {
  auto z = fundamental_cycle_coeffs(ambient->induced(verts));
  Divisor d(ambient);
  for (std::size_t i = 0; i < verts.size(); ++i) d.coeffs[verts[i]] = z[i];
  return d;
}

inline Divisor fundamental_cycle(const ConfigPtr& config) {
  std::vector<std::size_t> all(config->size());
  std::iota(all.begin(), all.end(), 0);
  return fundamental_cycle(config, all);
}

// ---------------------------------------------------------------- fiber shapes

struct FiberShape {
  CurveConfig config;
  std::vector<int> mult;
  std::variant<DynkinType, KodairaType> kind;

  static FiberShape dynkin(const DynkinType& d) { return {dynkin_graph(d), highest_root(d), d}; }
  static FiberShape kodaira(const KodairaType& k) {
    auto a = affine_graph(k);
    return {std::move(a.config), std::move(a.mult), k};
  }

  bool is_kodaira() const { return std::holds_alternative<KodairaType>(kind); }
  std::string kind_str() const {
    return is_kodaira() ? std::get<KodairaType>(kind).str() : std::get<DynkinType>(kind).str();
  }

  std::vector<DynkinType> roots() const {
    if (is_kodaira()) return root_type(std::get<KodairaType>(kind));
    return {std::get<DynkinType>(kind)};
  }

  long long self_intersection() const {
    long long s = 0;
    for (std::size_t i = 0; i < mult.size(); ++i)
      for (std::size_t j = 0; j < mult.size(); ++j) s += static_cast<long long>(mult[i]) * config(i, j) * mult[j];
    return s;
  }

  // Checks the multiplicity invariants; throws InvariantViolation.
  void validate() const {
    if (mult.size() != config.size()) throw InvariantViolation("multiplicity vector size");
    for (int m : mult)
      if (m <= 0) throw InvariantViolation("non-positive multiplicity");
    if (is_kodaira()) {
      for (std::size_t i = 0; i < mult.size(); ++i) {
        long long p = 0;
        for (std::size_t j = 0; j < mult.size(); ++j) p += static_cast<long long>(config(i, j)) * mult[j];
        if (p != 0) throw InvariantViolation("fiber class is not orthogonal to its components");
      }
    } else {
      if (self_intersection() != -2) throw InvariantViolation("highest root does not have square -2");
    }
  }
};

inline std::vector<std::size_t> simple_components(const FiberShape& f) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < f.mult.size(); ++i)
    if (f.mult[i] == 1) s.push_back(i);
  return s;
}

// ---------------------------------------------------------------- E8 embeddings

namespace detail {

using RootSet = std::bitset<240>;

struct E8Roots {
  std::vector<std::array<int, 8>> roots;  // doubled coordinates
  std::vector<RootSet> minus_one, zero;   // by root: roots with product -1 / 0
};

inline const E8Roots& e8_roots() {
  static const E8Roots data = [] {
    E8Roots r;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int si : {2, -2})
          for (int sj : {2, -2}) {
            std::array<int, 8> v{};
            v[i] = si;
            v[j] = sj;
            r.roots.push_back(v);
          }
    for (int mask = 0; mask < 256; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
      std::array<int, 8> v{};
      for (int k = 0; k < 8; ++k) v[k] = (mask >> k) & 1 ? -1 : 1;
      r.roots.push_back(v);
    }
    const std::size_t n = r.roots.size();
    r.minus_one.assign(n, {});
    r.zero.assign(n, {});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        int d = 0;
        for (int k = 0; k < 8; ++k) d += r.roots[a][k] * r.roots[b][k];
        if (d == -4) r.minus_one[a].set(b);
        if (d == 0) r.zero[a].set(b);
      }
    return r;
  }();
  return data;
}

struct EmbedSearch {
  const E8Roots& e8;
  std::vector<std::vector<int>> adj;  // target graph, 0/1
  std::vector<std::size_t> placed;

  bool run(std::size_t k) {
    const std::size_t n = adj.size();
    if (k == n) return true;
    RootSet allowed;
    allowed.set();
    bool has_neighbor = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (adj[k][j]) {
        allowed &= e8.minus_one[placed[j]];
        has_neighbor = true;
      } else {
        allowed &= e8.zero[placed[j]];
      }
    }
    // W(E8) is transitive on roots, and the stabilizer of a root is transitive on
    // the roots with product -1 against it.
    const bool fix = k == 0 || (k == 1 && has_neighbor);
    for (std::size_t r = 0; r < 240; ++r) {
      if (!allowed.test(r)) continue;
      placed.push_back(r);
      if (run(k + 1)) return true;
      placed.pop_back();
      if (fix) return false;
    }
    return false;
  }
};

}  // namespace detail

inline bool embeds_in_E8(std::vector<DynkinType> types) {
  int total = 0;
  for (const auto& t : types) total += t.n;
  if (total > 8) return false;
  if (types.empty()) return true;
  std::sort(types.begin(), types.end());

  static std::mutex mu;
  static std::map<std::vector<DynkinType>, bool> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(types); it != memo.end()) return it->second;
  }

  // Block-diagonal target graph; each component in BFS order from canonical vertex 0.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total), std::vector<int>(static_cast<std::size_t>(total), 0));
  std::size_t offset = 0;
  for (const auto& t : types) {
    auto g = dynkin_graph(t);
    std::vector<std::size_t> order{0};
    std::vector<bool> seen(g.size(), false);
    seen[0] = true;
    for (std::size_t h = 0; h < order.size(); ++h)
      for (auto w : g.neighbors(order[h]))
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        if (a != b && g(order[a], order[b]) != 0) adj[offset + a][offset + b] = 1;
    offset += g.size();
  }
  detail::EmbedSearch s{detail::e8_roots(), std::move(adj), {}};
  const bool ok = s.run(0);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(types, ok);
  return ok;
}

inline bool fiber_count_bound(std::span<const FiberShape> fibers, int s) {
  std::size_t comps = 0;
  std::vector<DynkinType> roots;
  for (const auto& f : fibers) {
    comps += f.config.size();
    for (const auto& t : f.roots()) roots.push_back(t);
  }
  return static_cast<long long>(comps) <= 8 + s && embeds_in_E8(roots);
}

// ---------------------------------------------------------------- half-fiber predicate

enum class SurfaceKind { CharNot2, Classical2, Ordinary2, Supersingular2 };

inline SurfaceKind parse_surface_kind(const std::string& s) {
  if (s == "p!=2") return SurfaceKind::CharNot2;
  if (s == "p=2 classical") return SurfaceKind::Classical2;
  if (s == "p=2 ordinary") return SurfaceKind::Ordinary2;
  if (s == "p=2 supersingular") return SurfaceKind::Supersingular2;
  throw std::invalid_argument("unknown surface tag: " + s);
}

// Which fiber types may carry a half-fiber, by characteristic and Picard scheme type.
inline bool half_fiber_type_allowed(const KodairaType& k, SurfaceKind s) {
  const bool smooth = k.kind == KodairaType::Kind::Smooth;
  switch (s) {
    case SurfaceKind::CharNot2:
    case SurfaceKind::Ordinary2: return smooth || k.multiplicative();
    case SurfaceKind::Classical2:
    case SurfaceKind::Supersingular2: return smooth || k.additive();
  }
  return false;
}

}  // namespace enriques
