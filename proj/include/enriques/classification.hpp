#pragma once

#include "enriques/divisor.hpp"
#include "enriques/graph_canon.hpp"
#include "enriques/lattice.hpp"
#include "enriques/root_fibers.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace enriques {

// ---------------------------------------------------------------- fiber decompositions

using TypePair = std::pair<DynkinType, DynkinType>;

inline TypePair normalized_pair(DynkinType a, DynkinType b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

struct DecompositionRow {
  KodairaType G;
  std::set<TypePair> pairs;

  std::string str() const {
    std::string s = G.str() + ":";
    bool first = true;
    for (const auto& [a, b] : pairs) {
      s += (first ? " " : ", ") + std::string("(") + a.str() + "," + b.str() + ")";
      first = false;
    }
    return s;
  }
};

// G = first + second with both parts fundamental cycles of connected Dynkin supports.
struct Decomposition {
  KodairaType G;
  AffineShape shape;
  std::vector<int> first, second;
  DynkinType first_type, second_type;
};

inline std::vector<Decomposition> fiber_decompositions(const KodairaType& G) {
  using K = KodairaType::Kind;
  if (G.kind == K::Smooth || G.kind == K::II || (G.kind == K::I && G.n == 1)) return {};
  AffineShape sh = affine_graph(G);
  const std::size_t n = sh.config.size();
  std::vector<Decomposition> out;
  for_each_connected_subset(sh.config, [&](const std::vector<std::size_t>& verts) {
    auto sub = sh.config.induced(verts);
    DynkinType t1;
    try {
      t1 = classify_dynkin(sub);
    } catch (const NotDynkin&) {
      return;
    }
    auto z = fundamental_cycle_coeffs(sub);
    std::vector<int> first(n, 0), second(n, 0);
    for (std::size_t p = 0; p < verts.size(); ++p) first[verts[p]] = z[p];
    bool nonzero = false;
    for (std::size_t v = 0; v < n; ++v) {
      second[v] = sh.mult[v] - first[v];
      if (second[v] < 0) return;
      nonzero = nonzero || second[v] > 0;
    }
    if (!nonzero) return;
    std::vector<std::size_t> supp;
    for (std::size_t v = 0; v < n; ++v)
      if (second[v] > 0) supp.push_back(v);
    auto sub2 = sh.config.induced(supp);
    if (!sub2.connected()) return;
    DynkinType t2;
    try {
      t2 = classify_dynkin(sub2);
    } catch (const NotDynkin&) {
      return;
    }
    auto z2 = fundamental_cycle_coeffs(sub2);
    for (std::size_t p = 0; p < supp.size(); ++p)
      if (z2[p] != second[supp[p]]) return;
    out.push_back({G, sh, first, second, t1, t2});
  });
  return out;
}

// Reducible fiber types admitting a decomposition G = S_j + S_k.
inline std::vector<KodairaType> decomposition_fiber_types() {
  using K = KodairaType::Kind;
  std::vector<KodairaType> out{KodairaType(K::IIstar), KodairaType(K::IIIstar), KodairaType(K::IVstar),
                               KodairaType(K::IV), KodairaType(K::III)};
  for (int n = 0; n <= 4; ++n) out.push_back(KodairaType::Istar(n));
  for (int n = 1; n <= 9; ++n) out.push_back(KodairaType::I(n));
  return out;
}

inline DecompositionRow decompose_fiber(const KodairaType& G) {
  DecompositionRow row{G, {}};
  for (const auto& d : fiber_decompositions(G)) row.pairs.insert(normalized_pair(d.first_type, d.second_type));
  return row;
}

// ---------------------------------------------------------------- census

struct Verdict {
  enum class Kind { Pending, Excluded, Survivor, Inconclusive };
  Kind kind = Kind::Pending;
  std::string reason;

  std::string str() const {
    switch (kind) {
      case Kind::Pending: return "pending";
      case Kind::Excluded: return "excluded: " + reason;
      case Kind::Survivor: return "survivor: " + reason;
      case Kind::Inconclusive: return "inconclusive: " + reason;
    }
    return "?";
  }
};

struct CensusEntry {
  std::array<DynkinType, 3> triple;
  int variant = 1;
  CurveConfig glued;
  std::array<std::vector<int>, 3> S;  // multiplicities on glued
  std::array<KodairaType, 3> G_types;
  std::size_t rank = 0;
  BigInt disc = 0;
  Verdict verdict;
  std::vector<int> key;  // canonical code of the colored graph

  std::string types_str() const {
    return "(" + triple[0].str() + "," + triple[1].str() + "," + triple[2].str() + ")";
  }
  std::string G_str() const {
    return "(" + G_types[0].str() + "," + G_types[1].str() + "," + G_types[2].str() + ")";
  }
  std::string label() const { return types_str() + "#" + std::to_string(variant); }

  TriangleGraph triangle() const {
    auto g = share(glued);
    return build_triangle_from_divisors({Divisor(g, S[0]), Divisor(g, S[1]), Divisor(g, S[2])}, glued.size());
  }
};

struct CensusOptions {
  std::size_t max_components = 11;
  // Every curve must meet G_i = 2F_i evenly.
  bool parity = true;
  unsigned threads = 0;  // 0: ENRIQUES_THREADS or 1
};

namespace detail {

inline unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* e = std::getenv("ENRIQUES_THREADS")) {
    int v = std::atoi(e);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

// Fiber types whose single fiber passes the count and E8 bounds.
inline std::vector<KodairaType> census_fiber_types() {
  using K = KodairaType::Kind;
  std::vector<KodairaType> cand;
  for (int n = 2; n <= 12; ++n) cand.push_back(KodairaType::I(n));
  for (int n = 0; n <= 6; ++n) cand.push_back(KodairaType::Istar(n));
  cand.push_back(KodairaType(K::IIstar));
  cand.push_back(KodairaType(K::IIIstar));
  cand.push_back(KodairaType(K::IVstar));
  std::vector<KodairaType> out;
  for (const auto& k : cand) {
    FiberShape f = FiberShape::kodaira(k);
    if (fiber_count_bound(std::span<const FiberShape>(&f, 1), 1)) out.push_back(k);
  }
  return out;
}

struct Part {
  Decomposition d;
  std::vector<std::size_t> first_order, second_order;  // canonical Dynkin orders
};

inline std::vector<std::size_t> dynkin_order(const CurveConfig& g, const std::vector<int>& coeffs) {
  std::vector<std::size_t> supp;
  for (std::size_t v = 0; v < coeffs.size(); ++v)
    if (coeffs[v] > 0) supp.push_back(v);
  auto rec = recognize_dynkin(g.induced(supp));
  std::vector<std::size_t> out;
  for (auto p : rec.order) out.push_back(supp[p]);
  return out;
}

// Decompositions of all candidate fibers, one per Aut(G)-orbit of the ordered pair.
inline std::vector<Part> census_parts() {
  std::vector<Part> parts;
  for (const auto& k : census_fiber_types()) {
    std::set<std::vector<int>> seen;
    for (auto& d : fiber_decompositions(k)) {
      std::vector<std::vector<int>> color;
      for (std::size_t v = 0; v < d.first.size(); ++v) color.push_back({d.first[v], d.second[v]});
      auto code = canonical_form(d.shape.config, color).code;
      if (!seen.insert(code).second) continue;
      Part p{d, dynkin_order(d.shape.config, d.first), dynkin_order(d.shape.config, d.second)};
      parts.push_back(std::move(p));
    }
  }
  return parts;
}

inline const std::vector<std::vector<std::size_t>>& dynkin_automorphisms(const DynkinType& t) {
  static std::mutex mu;
  static std::map<DynkinType, std::vector<std::vector<std::size_t>>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(t);
  if (it == memo.end()) it = memo.emplace(t, automorphisms(dynkin_graph(t))).first;
  return it->second;
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

// Glues G3 = S1 + S2 (a), G2 = S1 + S3 (b), G1 = S2 + S3 (c) along the given
// Dynkin isomorphisms. Returns the three S divisors on the glued graph.
inline std::optional<std::array<Divisor, 3>> glue(const Part& a, const Part& b, const Part& c,
                                                  const std::vector<std::size_t>& al1,
                                                  const std::vector<std::size_t>& al2,
                                                  const std::vector<std::size_t>& al3) {
  const std::size_t na = a.d.first.size(), nb = b.d.first.size(), nc = c.d.first.size();
  const std::size_t ob = na, oc = na + nb, total = na + nb + nc;
  UnionFind uf(total);
  for (std::size_t p = 0; p < al1.size(); ++p) uf.unite(a.first_order[p], ob + b.first_order[al1[p]]);
  for (std::size_t p = 0; p < al2.size(); ++p) uf.unite(a.second_order[p], oc + c.first_order[al2[p]]);
  for (std::size_t p = 0; p < al3.size(); ++p) uf.unite(ob + b.second_order[p], oc + c.second_order[al3[p]]);

  std::map<std::size_t, std::size_t> cls;
  std::vector<std::array<long, 3>> member;  // per class: vertex in a, b, c or -1
  for (std::size_t v = 0; v < total; ++v) {
    auto r = uf.find(v);
    auto [it, fresh] = cls.emplace(r, member.size());
    if (fresh) member.push_back({-1, -1, -1});
    const std::size_t g = v < ob ? 0 : v < oc ? 1 : 2;
    const long local = static_cast<long>(v - (g == 0 ? 0 : g == 1 ? ob : oc));
    auto& slot = member[it->second][g];
    if (slot != -1) return std::nullopt;
    slot = local;
  }
  const std::size_t n = member.size();
  std::array<std::vector<int>, 3> s{std::vector<int>(n, 0), std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (std::size_t x = 0; x < n; ++x) {
    const auto& m = member[x];
    auto ua = [&](long i) { return static_cast<std::size_t>(i); };
    // S1 seen by a.first and b.first, S2 by a.second and c.first, S3 by b.second and c.second.
    std::optional<int> v1, v2, v3;
    auto merge = [](std::optional<int>& slot, int val) {
      if (slot && *slot != val) return false;
      slot = val;
      return true;
    };
    if (m[0] != -1 && (!merge(v1, a.d.first[ua(m[0])]) || !merge(v2, a.d.second[ua(m[0])]))) return std::nullopt;
    if (m[1] != -1 && (!merge(v1, b.d.first[ua(m[1])]) || !merge(v3, b.d.second[ua(m[1])]))) return std::nullopt;
    if (m[2] != -1 && (!merge(v2, c.d.first[ua(m[2])]) || !merge(v3, c.d.second[ua(m[2])]))) return std::nullopt;
    s[0][x] = v1.value_or(0);
    s[1][x] = v2.value_or(0);
    s[2][x] = v3.value_or(0);
  }
  std::vector<std::vector<int>> inter(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    inter[x][x] = -2;
    for (std::size_t y = x + 1; y < n; ++y) {
      std::optional<int> w;
      const std::array<const CurveConfig*, 3> gs{&a.d.shape.config, &b.d.shape.config, &c.d.shape.config};
      for (std::size_t g = 0; g < 3; ++g) {
        if (member[x][g] == -1 || member[y][g] == -1) continue;
        int val = (*gs[g])(static_cast<std::size_t>(member[x][g]), static_cast<std::size_t>(member[y][g]));
        if (w && *w != val) return std::nullopt;
        w = val;
      }
      if (!w) return std::nullopt;
      inter[x][y] = inter[y][x] = *w;
    }
  }
  auto g = share(CurveConfig(std::move(inter)));
  return std::array<Divisor, 3>{Divisor(g, s[0]), Divisor(g, s[1]), Divisor(g, s[2])};
}

}  // namespace detail

// Curves of the triangle graph orthogonal to G_i and outside its support, grouped by
// connected component.
inline std::vector<std::vector<std::size_t>> vertical_components(const TriangleGraph& t, std::size_t i) {
  Divisor g = t.G(i);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < t.glued->size(); ++v)
    if (g.coeffs[v] == 0 && intersect(g, Divisor::curve(t.glued, v)) == 0) out.push_back(v);
  return t.glued->components(out);
}

// Necessary conditions from the fibration |2F_i| on the curves of the triangle graph.
inline bool fibration_constraints_hold(const TriangleGraph& t, bool parity, std::string* why = nullptr) {
  auto fail = [&](std::string w) {
    if (why) *why = std::move(w);
    return false;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    Divisor g = t.G(i);
    if (parity)
      for (std::size_t v = 0; v < t.glued->size(); ++v)
        if (intersect(g, Divisor::curve(t.glued, v)) % 2 != 0) return fail("odd intersection with G_" + std::to_string(i + 1));
    std::vector<DynkinType> roots = root_type(t.G_types[i]);
    for (const auto& comp : vertical_components(t, i)) {
      auto sub = t.glued->induced(comp);
      if (negative_definite(sub)) {
        roots.push_back(classify_dynkin(sub));
        continue;
      }
      AffineRecognition rec;
      try {
        rec = recognize_affine(sub);
      } catch (const NotAffine&) {
        return fail("vertical curves of G_" + std::to_string(i + 1) + " are not semi-definite");
      }
      Divisor nv(t.glued);
      for (std::size_t p = 0; p < comp.size(); ++p) nv.coeffs[comp[p]] = rec.mult[p];
      for (std::size_t y = 0; y < t.glued->size(); ++y)
        for (std::size_t z = 0; z < t.glued->size(); ++z) {
          auto cy = Divisor::curve(t.glued, y), cz = Divisor::curve(t.glued, z);
          if (intersect(nv, cy) * intersect(g, cz) != intersect(nv, cz) * intersect(g, cy))
            return fail("isotropic vertical configuration not parallel to G_" + std::to_string(i + 1));
        }
      for (const auto& r : root_type(rec.type)) roots.push_back(r);
    }
    if (!embeds_in_E8(roots)) return fail("vertical root lattice of G_" + std::to_string(i + 1) + " does not embed in E8");
  }
  return true;
}

namespace detail {

struct Keyed {
  std::vector<int> key;
  std::array<std::size_t, 3> perm;  // new label k takes old label perm[k]
};

// Canonical key over the 6 relabelings of (S1,S2,S3); the chosen labeling sorts the
// types (largest first) and is minimal among those.
inline Keyed canonical_key(const TriangleGraph& t) {
  std::array<std::size_t, 3> perm{0, 1, 2};
  std::optional<Keyed> best_any, best_sorted;
  do {
    std::vector<std::vector<int>> color(t.glued->size());
    for (std::size_t v = 0; v < t.glued->size(); ++v)
      for (std::size_t k = 0; k < 3; ++k) color[v].push_back(t.S[perm[k]].coeffs[v]);
    auto code = canonical_form(*t.glued, color).code;
    if (!best_any || code < best_any->key) best_any = Keyed{code, perm};
    const bool sorted = !(t.types[perm[1]] < t.types[perm[0]]) && !(t.types[perm[2]] < t.types[perm[1]]);
    if (sorted && (!best_sorted || code < best_sorted->key)) best_sorted = Keyed{code, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best_any->key, best_sorted->perm};
}

}  // namespace detail

inline std::vector<CensusEntry> enumerate_triangles(const CensusOptions& opt) {
  const auto parts = detail::census_parts();
  std::map<std::vector<int>, CensusEntry> found;
  std::mutex mu;

  auto work = [&](std::size_t ia) {
    const auto& a = parts[ia];
    const DynkinType t1 = a.d.first_type, t2 = a.d.second_type;
    if (t2 < t1) return;
    std::vector<std::pair<std::vector<int>, CensusEntry>> local;
    for (const auto& b : parts) {
      if (!(b.d.first_type == t1)) continue;
      const DynkinType t3 = b.d.second_type;
      if (t3 < t2) continue;
      for (const auto& c : parts) {
        if (!(c.d.first_type == t2) || !(c.d.second_type == t3)) continue;
        for (const auto& al1 : detail::dynkin_automorphisms(t1))
          for (const auto& al2 : detail::dynkin_automorphisms(t2))
            for (const auto& al3 : detail::dynkin_automorphisms(t3)) {
              auto s = detail::glue(a, b, c, al1, al2, al3);
              if (!s) continue;
              if ((*s)[0].ambient->size() > opt.max_components) continue;
              TriangleGraph t;
              try {
                t = build_triangle_from_divisors(*s, opt.max_components);
              } catch (const InvariantViolation&) {
                continue;
              }
              if (!fibration_constraints_hold(t, opt.parity)) continue;
              auto keyed = detail::canonical_key(t);
              CensusEntry e;
              for (std::size_t k = 0; k < 3; ++k) {
                e.triple[k] = t.types[keyed.perm[k]];
                e.S[k] = t.S[keyed.perm[k]].coeffs;
                e.G_types[k] = t.G_types[keyed.perm[k]];
              }
              e.glued = *t.glued;
              e.key = keyed.key;
              local.emplace_back(keyed.key, std::move(e));
            }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& [k, e] : local) found.emplace(k, std::move(e));
  };

  const unsigned nt = detail::thread_count(opt.threads);
  if (nt <= 1) {
    for (std::size_t i = 0; i < parts.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex qmu;
    for (unsigned w = 0; w < nt; ++w)
      pool.emplace_back([&] {
        while (true) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(qmu);
            if (next >= parts.size()) return;
            i = next++;
          }
          work(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  std::vector<CensusEntry> out;
  for (auto& [k, e] : found) {
    auto rd = rank_and_discriminant(e.glued.gram());
    e.rank = rd.rank;
    e.disc = rd.disc;
    out.push_back(std::move(e));
  }
  // Deterministic order: types, then component count, then canonical key.
  std::stable_sort(out.begin(), out.end(), [](const CensusEntry& x, const CensusEntry& y) {
    if (x.triple != y.triple) return x.triple < y.triple;
    if (x.glued.size() != y.glued.size()) return x.glued.size() > y.glued.size();
    return x.key < y.key;
  });
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].variant = (i > 0 && out[i - 1].triple == out[i].triple) ? out[i - 1].variant + 1 : 1;
  return out;
}

inline std::vector<CensusEntry> enumerate_triangles(std::size_t max_components = 11) {
  CensusOptions o;
  o.max_components = max_components;
  return enumerate_triangles(o);
}

// ---------------------------------------------------------------- gluing variants

// Which of two gluings an entry is, for the families that come in two ways.
// (D4,D4,D4): First when one curve lies in all three S_i.
// A-type triples: S_3 (the part opposite the I_k* fiber, else the smallest) has two end
// curves, each meeting one simple curve of S_1 and one of S_2 inside G_3. First when each
// end meets a pair that sits at one junction of G_3, i.e. the two pairs are closer to each
// other crosswise than straight; Second when crossed; Single when only one way exists.
enum class GluingVariant { None, Single, First, Second };

inline std::string to_string(GluingVariant v) {
  switch (v) {
    case GluingVariant::None: return "none";
    case GluingVariant::Single: return "single";
    case GluingVariant::First: return "first";
    case GluingVariant::Second: return "second";
  }
  return "?";
}

namespace detail {

inline std::vector<int> distances_from(const CurveConfig& g, std::size_t src, const std::vector<bool>& allowed) {
  std::vector<int> d(g.size(), -1);
  std::vector<std::size_t> queue{src};
  d[src] = 0;
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (auto w : g.neighbors(queue[q]))
      if (allowed[w] && d[w] < 0) {
        d[w] = d[queue[q]] + 1;
        queue.push_back(w);
      }
  return d;
}

}  // namespace detail

inline GluingVariant gluing_variant(const CensusEntry& e) {
  const auto& g = e.glued;
  const std::size_t n = g.size();
  if (std::all_of(e.triple.begin(), e.triple.end(), [](const DynkinType& t) { return t.family == 'D' && t.n == 4; })) {
    for (std::size_t v = 0; v < n; ++v)
      if (e.S[0][v] > 0 && e.S[1][v] > 0 && e.S[2][v] > 0) return GluingVariant::First;
    return GluingVariant::Second;
  }
  if (!std::all_of(e.triple.begin(), e.triple.end(), [](const DynkinType& t) { return t.family == 'A'; }))
    return GluingVariant::None;
  std::vector<std::size_t> star;
  for (std::size_t i = 0; i < 3; ++i)
    if (e.G_types[i].kind == KodairaType::Kind::Istar) star.push_back(i);
  if (star.size() > 1) return GluingVariant::None;
  // k: index of S_3 in the entry's labeling; G_k = S_i + S_j.
  std::size_t k = star.empty() ? 2 : star.front();
  if (star.empty())
    for (std::size_t i = 0; i < 3; ++i)
      if (e.triple[i].n < e.triple[k].n) k = i;
  if (e.triple[k].n == 1) return GluingVariant::Single;
  const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
  std::vector<bool> in_g(n, false);
  for (std::size_t v = 0; v < n; ++v) in_g[v] = (e.S[i][v] + e.S[j][v]) > 0;
  std::vector<std::size_t> ends;
  for (std::size_t v = 0; v < n; ++v) {
    if (e.S[k][v] == 0 || in_g[v]) continue;
    int deg = 0;
    for (auto w : g.neighbors(v)) deg += e.S[k][w] > 0 ? 1 : 0;
    if (deg <= 1) ends.push_back(v);
  }
  if (ends.size() != 2) return GluingVariant::None;
  std::array<std::array<std::size_t, 2>, 2> att{};
  for (std::size_t a = 0; a < 2; ++a) {
    std::vector<std::size_t> in_i, in_j;
    for (auto w : g.neighbors(ends[a])) {
      if (!in_g[w]) continue;
      if (e.S[i][w] > 0 && e.S[j][w] == 0) in_i.push_back(w);
      if (e.S[j][w] > 0 && e.S[i][w] == 0) in_j.push_back(w);
    }
    if (in_i.size() != 1 || in_j.size() != 1) return GluingVariant::None;
    att[a] = {in_i[0], in_j[0]};
  }
  auto d0 = detail::distances_from(g, att[0][0], in_g);
  auto d1 = detail::distances_from(g, att[1][0], in_g);
  const int straight = d0[att[0][1]] + d1[att[1][1]];
  const int crossed = d0[att[1][1]] + d1[att[0][1]];
  if (straight < crossed) return GluingVariant::First;
  if (straight > crossed) return GluingVariant::Second;
  return GluingVariant::Single;
}

// ---------------------------------------------------------------- discriminant filter

inline bool discriminant_allowed(const BigInt& d) { return d == 1 || d == 4 || d == 16; }

struct FilterResult {
  std::vector<CensusEntry> kept;
  std::vector<CensusEntry> excluded;
};

inline FilterResult discriminant_filter(std::vector<CensusEntry> census) {
  FilterResult r;
  for (auto& e : census) {
    if (e.glued.size() < 10) {
      e.verdict = {Verdict::Kind::Excluded, std::to_string(e.glued.size()) + " curves"};
      r.excluded.push_back(std::move(e));
    } else if (e.rank != 10 || !discriminant_allowed(e.disc)) {
      e.verdict = {Verdict::Kind::Excluded, "rank " + std::to_string(e.rank) + ", disc " + e.disc.str()};
      r.excluded.push_back(std::move(e));
    } else {
      r.kept.push_back(std::move(e));
    }
  }
  return r;
}

// ---------------------------------------------------------------- survivors

struct ReferenceGraph {
  std::string name;
  CurveConfig config;
};

struct Completion {
  std::size_t fibration = 0;  // index i of G_i
  bool half = false;          // the completed fiber is a half-fiber of |2F_i|
  CurveConfig graph;          // triangle graph plus the new curve, appended last
  KodairaType fiber;
};

// For a fibration whose vertical root lattice already has rank 8, each Dynkin component
// K of vertical curves is a fiber minus one curve. Adds that curve in every numerically
// consistent way, once as part of a simple fiber (class G_i) and once as a half-fiber (G_i/2).
inline std::vector<Completion> forced_completions(const TriangleGraph& t) {
  std::vector<Completion> out;
  std::set<std::vector<int>> seen;
  const auto& gl = *t.glued;
  const std::size_t n = gl.size();
  for (std::size_t i = 0; i < 3; ++i) {
    Divisor g = t.G(i);
    auto comps = vertical_components(t, i);
    int rank = 0;
    for (const auto& r : root_type(t.G_types[i])) rank += r.n;
    std::vector<std::vector<std::size_t>> dynkin;
    for (const auto& comp : comps) {
      auto sub = gl.induced(comp);
      if (negative_definite(sub)) {
        rank += static_cast<int>(comp.size());
        dynkin.push_back(comp);
      } else {
        rank += static_cast<int>(comp.size()) - 1;
      }
    }
    if (rank != 8) continue;
    for (const auto& kc : dynkin) {
      const std::size_t m = kc.size();
      std::vector<int> att(m, 0);
      while (true) {
        std::size_t p = 0;
        while (p < m && att[p] == 2) att[p++] = 0;
        if (p == m) break;
        ++att[p];
        std::vector<std::vector<int>> sub(m + 1, std::vector<int>(m + 1, 0));
        for (std::size_t x = 0; x < m; ++x)
          for (std::size_t y = 0; y < m; ++y) sub[x][y] = gl(kc[x], kc[y]);
        for (std::size_t x = 0; x < m; ++x) sub[x][m] = sub[m][x] = att[x];
        sub[m][m] = -2;
        AffineRecognition rec;
        try {
          rec = recognize_affine(CurveConfig(sub));
        } catch (const std::invalid_argument&) {
          continue;
        }
        const int mr = rec.mult[m];
        for (bool half : {false, true}) {
          std::vector<int> row(n, 0);
          bool ok = true;
          for (std::size_t y = 0; y < n && ok; ++y) {
            if (std::find(kc.begin(), kc.end(), y) != kc.end()) continue;
            if (g.coeffs[y] != 0) continue;
            const int gy = intersect(g, Divisor::curve(t.glued, y));
            if (gy == 0) continue;
            long sum = 0;
            for (std::size_t x = 0; x < m; ++x) sum += static_cast<long>(rec.mult[x]) * gl(kc[x], y);
            // 2 mr R'.y = (2c) G.y - 2 sum, with c = 1 for a simple fiber and 1/2 for a half-fiber
            const long num = (half ? gy : 2L * gy) - 2L * sum;
            if (num < 0 || num % (2L * mr) != 0) {
              ok = false;
              break;
            }
            row[y] = static_cast<int>(num / (2L * mr));
          }
          if (!ok) continue;
          for (std::size_t x = 0; x < m; ++x) row[kc[x]] = att[static_cast<std::size_t>(x)];
          std::vector<std::vector<int>> big(n + 1, std::vector<int>(n + 1, 0));
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) big[x][y] = gl(x, y);
          for (std::size_t x = 0; x < n; ++x) big[x][n] = big[n][x] = row[x];
          big[n][n] = -2;
          std::vector<std::string> names = gl.names();
          names.push_back("R'");
          CurveConfig cfg(names, big);
          auto code = canonical_form(cfg).code;
          code.push_back(half ? 1 : 0);
          if (!seen.insert(code).second) continue;
          out.push_back({i, half, std::move(cfg), rec.type});
        }
      }
    }
  }
  return out;
}

struct SurvivorOutcome {
  std::string entry;  // label of the census entry
  std::array<DynkinType, 3> triple;
  std::string completion;  // "none", "simple" or "half"
  CurveConfig graph;
  std::string surface_type;  // matched reference name or "unidentified"
  std::size_t rank = 0;      // of the triangle graph lattice
  BigInt disc = 0;
};

struct SurvivorAnalysis {
  std::vector<CensusEntry> entries;  // with verdicts
  std::vector<SurvivorOutcome> outcomes;
};

inline std::string identify(const CurveConfig& g, const std::vector<ReferenceGraph>& refs) {
  for (const auto& r : refs)
    if (isomorphic(g, r.config)) return r.name;
  return "unidentified";
}

inline SurvivorAnalysis derive_survivors(std::vector<CensusEntry> filtered, const std::vector<ReferenceGraph>& refs) {
  SurvivorAnalysis out;
  for (auto& e : filtered) {
    TriangleGraph t = e.triangle();
    if (auto ext = internal_extender(t)) {
      e.verdict = {Verdict::Kind::Excluded, "extends: " + ext->type.str()};
      out.entries.push_back(std::move(e));
      continue;
    }
    Obstruction ob = extension_obstruction(t);
    if (!ob.non_extendable) {
      e.verdict = {Verdict::Kind::Inconclusive, "no extender and no obstruction"};
      out.entries.push_back(std::move(e));
      continue;
    }
    std::vector<std::string> names;
    const std::string direct = identify(e.glued, refs);
    if (direct != "unidentified") {
      out.outcomes.push_back({e.label(), e.triple, "none", e.glued, direct, e.rank, e.disc});
      names.push_back(direct);
    } else {
      auto comps = forced_completions(t);
      for (const auto& c : comps) {
        const std::string name = identify(c.graph, refs);
        out.outcomes.push_back({e.label(), e.triple, c.half ? "half" : "simple", c.graph, name, e.rank, e.disc});
        names.push_back(name);
      }
      if (comps.empty()) {
        out.outcomes.push_back({e.label(), e.triple, "none", e.glued, "unidentified", e.rank, e.disc});
        names.push_back("unidentified");
      }
    }
    std::string joined;
    for (const auto& n : names) joined += (joined.empty() ? "" : " | ") + n;
    e.verdict = {Verdict::Kind::Survivor, joined + " (" + ob.reason + ")"};
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace enriques
