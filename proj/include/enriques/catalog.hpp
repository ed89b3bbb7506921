#pragma once

#include "enriques/classification.hpp"
#include "enriques/curves.hpp"
#include "enriques/divisor.hpp"
#include "enriques/errors.hpp"
#include "enriques/root_fibers.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef ENRIQUES_CATALOG_DIR
#define ENRIQUES_CATALOG_DIR "data/catalog"
#endif

namespace enriques {

enum class FiberMultiplicity { Simple, Half };

inline std::string to_string(FiberMultiplicity m) { return m == FiberMultiplicity::Half ? "half" : "simple"; }

struct AnnotatedFiber {
  std::string label;
  KodairaType type;
  FiberMultiplicity multiplicity = FiberMultiplicity::Simple;
  Divisor divisor;  // the fiber configuration with its multiplicities
  std::string note;

  // Half-fiber class of the fibration: G/2 for a simple fiber, G itself for a half-fiber.
  NumClass half_class() const {
    NumClass c = NumClass::from(divisor, multiplicity == FiberMultiplicity::Half ? Rational(1) : Rational(1, 2));
    c.half_fiber = true;
    c.primitive = true;
    return c;
  }
};

struct SurfaceModel {
  std::string name;
  std::string description;
  std::vector<std::string> char_tags;
  std::vector<SurfaceKind> kinds;
  bool complete = false;
  ConfigPtr config;
  std::vector<AnnotatedFiber> fibers;
  nlohmann::json claims;

  const AnnotatedFiber& fiber(const std::string& label) const {
    for (const auto& f : fibers)
      if (f.label == label) return f;
    throw std::invalid_argument(name + ": no fiber labelled " + label);
  }
  // Additive Kodaira symbols (III, IV) for the double edge and triangle in characteristic 2
  // classical or supersingular surfaces.
  bool additive_small_fibers() const {
    return !kinds.empty() && std::all_of(kinds.begin(), kinds.end(), [](SurfaceKind k) {
      return k == SurfaceKind::Classical2 || k == SurfaceKind::Supersingular2;
    });
  }
};

// ---------------------------------------------------------------- loading

inline std::filesystem::path catalog_dir(const std::string& override_dir = {}) {
  if (!override_dir.empty()) return override_dir;
  if (const char* e = std::getenv("ENRIQUES_CATALOG_DIR")) return e;
  return ENRIQUES_CATALOG_DIR;
}

namespace detail {

// "R1-R2=R3" adds edges R1R2 (weight 1) and R2R3 (weight 2).
inline void parse_edge_chain(const std::string& s, const CurveConfig& names, std::vector<std::vector<int>>& m) {
  std::vector<std::string> tokens;
  std::vector<int> weights;
  std::string cur;
  for (char ch : s) {
    if (ch == '-' || ch == '=') {
      tokens.push_back(cur);
      weights.push_back(ch == '-' ? 1 : 2);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  tokens.push_back(cur);
  if (tokens.size() < 2) throw std::invalid_argument("edge chain needs two curves: " + s);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    auto a = names.index_of(tokens[i]), b = names.index_of(tokens[i + 1]);
    if (a == b) throw std::invalid_argument("self edge in " + s);
    m[a][b] = m[b][a] = weights[i];
  }
}

inline FiberMultiplicity parse_multiplicity(const std::string& s) {
  if (s == "half") return FiberMultiplicity::Half;
  if (s == "simple") return FiberMultiplicity::Simple;
  throw std::invalid_argument("fiber multiplicity must be 'half' or 'simple', got " + s);
}

}  // namespace detail

inline SurfaceModel parse_surface(const nlohmann::json& j) {
  SurfaceModel s;
  s.name = j.at("name").get<std::string>();
  s.description = j.value("description", "");
  s.complete = j.value("complete", false);
  for (const auto& t : j.at("surface_kinds")) {
    s.char_tags.push_back(t.get<std::string>());
    s.kinds.push_back(parse_surface_kind(s.char_tags.back()));
  }
  std::vector<std::string> names = j.at("curves").get<std::vector<std::string>>();
  const std::size_t n = names.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = -2;
  CurveConfig lookup(names, m);
  for (const auto& e : j.at("edges")) detail::parse_edge_chain(e.get<std::string>(), lookup, m);
  s.config = share(CurveConfig(names, m));

  for (const auto& f : j.at("fibers")) {
    AnnotatedFiber af;
    af.label = f.at("label").get<std::string>();
    af.multiplicity = detail::parse_multiplicity(f.at("multiplicity").get<std::string>());
    af.note = f.value("note", "");
    std::vector<std::size_t> supp;
    for (const auto& c : f.at("support")) supp.push_back(s.config->index_of(c.get<std::string>()));
    std::sort(supp.begin(), supp.end());
    auto rec = recognize_affine(s.config->induced(supp), s.additive_small_fibers());
    const KodairaType stated = KodairaType::parse(f.at("type").get<std::string>());
    if (!(rec.type == stated))
      throw InvariantViolation(s.name + " " + af.label + ": support has type " + rec.type.str() + ", stated " +
                               stated.str());
    af.type = rec.type;
    af.divisor = Divisor(s.config);
    for (std::size_t p = 0; p < supp.size(); ++p) af.divisor.coeffs[supp[p]] = rec.mult[p];
    s.fibers.push_back(std::move(af));
  }
  s.claims = j.value("claims", nlohmann::json::object());
  return s;
}

inline std::vector<SurfaceModel> load_catalog(const std::string& dir = {}) {
  const auto root = catalog_dir(dir);
  if (!std::filesystem::is_directory(root)) throw std::runtime_error("catalog directory not found: " + root.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(root))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<SurfaceModel> out;
  for (const auto& p : files) {
    std::ifstream in(p);
    try {
      out.push_back(parse_surface(nlohmann::json::parse(in)));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(p.string() + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<std::string> catalog_names(const std::string& dir = {}) {
  std::vector<std::string> out;
  for (const auto& s : load_catalog(dir)) out.push_back(s.name);
  return out;
}

inline SurfaceModel load_surface(const std::string& name, const std::string& dir = {}) {
  for (auto& s : load_catalog(dir))
    if (s.name == name) return s;
  throw std::invalid_argument("not in catalog: " + name);
}

// Dual graphs of all catalog surfaces, for identifying survivor graphs.
inline std::vector<ReferenceGraph> reference_graphs(const std::string& dir = {}) {
  std::vector<ReferenceGraph> refs;
  for (const auto& s : load_catalog(dir)) refs.push_back({s.name, *s.config});
  return refs;
}

// ---------------------------------------------------------------- fibration classes

// True when d/k lies in the lattice spanned by the curves (modulo numerically trivial
// combinations).
inline bool divisible_in_span(const Divisor& d, int k) {
  const auto& cfg = *d.ambient;
  const std::size_t n = cfg.size();
  RowEchelon e = row_echelon(cfg.gram().entries());
  const std::size_t r = e.pivot_cols.size();
  // Coordinates c with c * transform = d; the first r of them describe d in the span.
  RatMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(e.transform[j][i]);
  std::vector<Rational> b(n), x;
  for (std::size_t i = 0; i < n; ++i) b[i] = d.coeffs[i];
  RatMatrix ker;
  if (!solve_rational(a, b, x, ker)) throw std::logic_error("unimodular transform is singular");
  for (std::size_t i = 0; i < r; ++i)
    if (!is_integral(x[i] / k)) return false;
  return true;
}

struct FibrationClass {
  NumClass F;                         // half-fiber class
  std::vector<std::string> configs;   // fiber configurations in this fibration
  std::vector<KodairaType> types;
  std::vector<FiberMultiplicity> mult;
  std::string label;                  // annotated label when one exists, else the first config
};

namespace detail {

inline std::string config_name(const CurveConfig& c, const std::vector<std::size_t>& verts) {
  std::string s;
  for (auto v : verts) s += (s.empty() ? "" : "+") + c.name(v);
  return s;
}

// Multiplicity forced by the lattice: an odd pairing rules out G = 2F, divisibility by 2 in
// the curve span forces it.
inline std::optional<FiberMultiplicity> forced_multiplicity(const Divisor& g) {
  for (std::size_t y = 0; y < g.ambient->size(); ++y)
    if (intersect(g, Divisor::curve(g.ambient, y)) % 2 != 0) return FiberMultiplicity::Half;
  if (divisible_in_span(g, 2)) return FiberMultiplicity::Simple;
  return std::nullopt;
}

}  // namespace detail

// All connected fiber configurations, grouped into fibrations and mapped to half-fiber
// classes. Multiplicity comes from the annotation, else from the lattice, else from a
// parallel configuration whose multiplicity is known, else defaults to simple.
inline std::vector<FibrationClass> enumerate_fibration_classes(const SurfaceModel& s) {
  struct Config {
    std::vector<std::size_t> verts;
    Divisor g;
    KodairaType type;
    std::optional<FiberMultiplicity> mult;
    std::string label;
  };
  std::vector<Config> configs;
  const bool additive = s.additive_small_fibers();
  for_each_connected_subset(*s.config, [&](const std::vector<std::size_t>& verts) {
    if (verts.size() < 2) return;
    AffineRecognition rec;
    try {
      rec = recognize_affine(s.config->induced(verts), additive);
    } catch (const NotAffine&) {
      return;
    }
    Config c{verts, Divisor(s.config), rec.type, std::nullopt, detail::config_name(*s.config, verts)};
    for (std::size_t p = 0; p < verts.size(); ++p) c.g.coeffs[verts[p]] = rec.mult[p];
    auto forced = detail::forced_multiplicity(c.g);
    for (const auto& f : s.fibers)
      if (f.divisor == c.g) {
        if (forced && *forced != f.multiplicity)
          throw InvariantViolation(s.name + " " + f.label + " is annotated " + to_string(f.multiplicity) +
                                   " but the lattice forces " + to_string(*forced));
        c.mult = f.multiplicity;
        c.label = f.label;
      }
    if (!c.mult) c.mult = forced;
    configs.push_back(std::move(c));
  });

  auto parallel_factor = [](const Divisor& a, const Divisor& b) -> std::optional<Rational> {
    // b = t a numerically, t > 0
    std::optional<Rational> t;
    for (std::size_t y = 0; y < a.ambient->size(); ++y) {
      auto cy = Divisor::curve(a.ambient, y);
      const int pa = intersect(a, cy), pb = intersect(b, cy);
      if (pa == 0 && pb == 0) continue;
      if (pa == 0 || pb == 0) return std::nullopt;
      Rational q(pb, pa);
      if (t && *t != q) return std::nullopt;
      t = q;
    }
    if (!t || *t <= 0) return std::nullopt;
    return t;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& c : configs) {
      if (c.mult) continue;
      for (const auto& o : configs) {
        if (!o.mult) continue;
        auto t = parallel_factor(o.g, c.g);
        if (!t) continue;
        // o has class F (half) or 2F (simple); c = t o.
        const Rational c_over_f = *t * (*o.mult == FiberMultiplicity::Half ? 1 : 2);
        if (c_over_f == 1) c.mult = FiberMultiplicity::Half;
        else if (c_over_f == 2) c.mult = FiberMultiplicity::Simple;
        else throw InvariantViolation(s.name + ": " + c.label + " is not a fiber next to " + o.label);
        changed = true;
        break;
      }
    }
  }

  std::vector<FibrationClass> out;
  for (auto& c : configs) {
    const FiberMultiplicity m = c.mult.value_or(FiberMultiplicity::Simple);
    NumClass f = NumClass::from(c.g, m == FiberMultiplicity::Half ? Rational(1) : Rational(1, 2));
    f.half_fiber = f.primitive = true;
    auto it = std::find_if(out.begin(), out.end(), [&](const FibrationClass& fc) { return numerically_equal(fc.F, f); });
    if (it == out.end()) {
      out.push_back({f, {}, {}, {}, c.label});
      it = std::prev(out.end());
    } else if (!c.label.empty() && c.label.find('+') == std::string::npos && it->label.find('+') != std::string::npos) {
      it->label = c.label;
    }
    it->configs.push_back(c.label);
    it->types.push_back(c.type);
    it->mult.push_back(m);
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i; j < out.size(); ++j) {
      const Rational p = intersect(out[i].F, out[j].F);
      if (!is_integral(p))
        throw InvariantViolation(s.name + ": half-fiber classes " + out[i].label + " and " + out[j].label +
                                 " meet in " + to_string(p));
    }
  return out;
}

// ---------------------------------------------------------------- non-degeneracy

namespace detail {

// Largest clique containing `must` (or any clique when must is empty), exact.
inline std::size_t max_clique(const std::vector<std::vector<bool>>& adj, std::optional<std::size_t> must) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  std::vector<std::size_t> cand;
  for (std::size_t v = 0; v < n; ++v)
    if (!must || (v != *must && adj[*must][v])) cand.push_back(v);
  std::function<void(std::vector<std::size_t>, std::size_t)> rec = [&](std::vector<std::size_t> c, std::size_t size) {
    if (c.empty()) {
      best = std::max(best, size);
      return;
    }
    if (size + c.size() <= best) return;
    const std::size_t v = c.front();
    std::vector<std::size_t> with;
    for (std::size_t i = 1; i < c.size(); ++i)
      if (adj[v][c[i]]) with.push_back(c[i]);
    rec(with, size + 1);
    c.erase(c.begin());
    rec(c, size);
  };
  rec(cand, must ? 1 : 0);
  return best;
}

inline std::vector<std::vector<bool>> compatibility(const std::vector<FibrationClass>& cls) {
  std::vector<std::vector<bool>> adj(cls.size(), std::vector<bool>(cls.size(), false));
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j)
      adj[i][j] = i != j && intersect(cls[i].F, cls[j].F) == 1;
  return adj;
}

}  // namespace detail

struct NdBounds {
  std::size_t min_nd = 0, max_nd = 0;
  friend bool operator==(const NdBounds&, const NdBounds&) = default;
};

inline NdBounds nd_bounds(const SurfaceModel& s) {
  if (!s.complete) throw IncompleteCatalog(s.name);
  auto cls = enumerate_fibration_classes(s);
  auto adj = detail::compatibility(cls);
  NdBounds b;
  b.max_nd = detail::max_clique(adj, std::nullopt);
  b.min_nd = b.max_nd;
  for (std::size_t v = 0; v < cls.size(); ++v) b.min_nd = std::min(b.min_nd, detail::max_clique(adj, v));
  return b;
}

// ---------------------------------------------------------------- claim verification

struct ClaimResult {
  std::string claim;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SurfaceReport {
  std::string surface;
  std::vector<ClaimResult> results;
  bool all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
  }
};

namespace detail {

inline std::string divisor_str(const Divisor& d) {
  std::string s;
  for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
    if (d.coeffs[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (d.coeffs[i] != 1) s += std::to_string(d.coeffs[i]);
    s += d.ambient->name(i);
  }
  return s.empty() ? "0" : s;
}

inline std::string types_str(const std::array<DynkinType, 3>& t) {
  return "(" + t[0].str() + "," + t[1].str() + "," + t[2].str() + ")";
}

// Class by label: an annotated fiber, or an enumerated fibration class.
inline NumClass class_of(const SurfaceModel& s, const std::vector<FibrationClass>& cls, const std::string& label) {
  for (const auto& f : s.fibers)
    if (f.label == label) return f.half_class();
  for (const auto& c : cls)
    if (c.label == label) return c.F;
  throw std::invalid_argument(s.name + ": unknown class " + label);
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep = ",") {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

}  // namespace detail

inline SurfaceReport verify_surface(const SurfaceModel& s) {
  SurfaceReport rep{s.name, {}};
  auto add = [&](std::string claim, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    rep.results.push_back({std::move(claim), std::move(expected), std::move(actual), pass});
  };
  const auto& c = s.claims;

  // Annotated half-fibers must be of a type that can be a half-fiber on the surface.
  for (const auto& f : s.fibers) {
    if (f.multiplicity != FiberMultiplicity::Half) continue;
    bool ok = true;
    for (auto k : s.kinds) ok = ok && half_fiber_type_allowed(f.type, k);
    add("half-fiber type " + f.label, "allowed", ok ? "allowed" : f.type.str() + " not allowed");
  }

  std::vector<FibrationClass> cls;
  std::string cls_error;
  try {
    cls = enumerate_fibration_classes(s);
  } catch (const InvariantViolation& e) {
    cls_error = e.what();
  }
  add("fibration classes consistent", "ok", cls_error.empty() ? "ok" : cls_error);

  if (c.contains("triple")) {
    auto labels = c.at("triple").get<std::vector<std::string>>();
    std::array<NumClass, 3> F;
    for (std::size_t i = 0; i < 3; ++i) F[i] = detail::class_of(s, cls, labels[i]);
    add("3-sequence " + detail::join(labels), "yes", is_c_sequence(F) ? "yes" : "no");

    if (c.contains("witness")) {
      const auto& w = c.at("witness");
      Divisor expect(s.config);
      for (const auto& [k, v] : w.at("divisor").items()) expect.coeffs[s.config->index_of(k)] = v.get<int>();
      const std::size_t idx = w.at("index").get<std::size_t>();
      auto got = specialness_witness(F, s.config);
      add("specialness witness", "S_" + std::to_string(idx) + " = " + detail::divisor_str(expect),
          got ? "S_" + std::to_string(got->k + 1) + " = " + detail::divisor_str(got->S) : "none");
    }
    std::array<std::optional<Divisor>, 3> ws;
    bool all = true;
    for (std::size_t k = 0; k < 3; ++k) {
      ws[k] = find_witness(F, s.config, k);
      all = all && ws[k].has_value();
    }
    if (c.contains("triangle_types")) {
      auto want = c.at("triangle_types").get<std::vector<std::string>>();
      std::string actual = "not special";
      if (all) {
        try {
          auto t = build_triangle(F, {*ws[0], *ws[1], *ws[2]});
          actual = detail::types_str(t.types);
        } catch (const InvariantViolation& e) {
          actual = e.what();
        }
      }
      add("triangle graph type", "(" + detail::join(want) + ")", actual);
    }
    if (c.contains("obstruction") && all) {
      auto t = build_triangle(F, {*ws[0], *ws[1], *ws[2]});
      auto ob = extension_obstruction(t);
      const auto want = c.at("obstruction").get<std::string>();
      add("non-extendable (" + want + ")", "non-extendable",
          !ob.non_extendable                          ? "inconclusive"
          : ob.reason.find(want) == std::string::npos ? "non-extendable via other reason: " + ob.reason
                                                      : "non-extendable");
      auto ext = internal_extender(t);
      add("no internal extender", "none", ext ? ext->type.str() : "none");
    }
  }

  if (c.contains("sequences"))
    for (const auto& seq : c.at("sequences")) {
      auto labels = seq.get<std::vector<std::string>>();
      std::vector<NumClass> F;
      for (const auto& l : labels) F.push_back(detail::class_of(s, cls, l));
      add(std::to_string(labels.size()) + "-sequence " + detail::join(labels), "yes", is_c_sequence(F) ? "yes" : "no");
    }

  if (c.contains("fibration_count"))
    add("fibration count", std::to_string(c.at("fibration_count").get<int>()), std::to_string(cls.size()));

  if (c.contains("unique_sequences") && cls_error.empty()) {
    auto adj = detail::compatibility(cls);
    for (const auto& u : c.at("unique_sequences")) {
      const std::string through = u.at("through").get<std::string>();
      const NumClass f = detail::class_of(s, cls, through);
      std::size_t v = cls.size();
      for (std::size_t i = 0; i < cls.size(); ++i)
        if (numerically_equal(cls[i].F, f)) v = i;
      std::vector<std::pair<std::size_t, std::size_t>> tri;
      for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b)
          if (adj[v][a] && adj[v][b] && adj[a][b]) tri.emplace_back(a, b);
      add("3-sequences through " + through, "1", std::to_string(tri.size()));
      if (tri.size() != 1) continue;
      const auto [a, b] = tri.front();
      if (u.contains("partners")) {
        auto want = u.at("partners").get<std::vector<std::string>>();
        std::sort(want.begin(), want.end());
        std::vector<std::string> got{cls[a].label, cls[b].label};
        std::sort(got.begin(), got.end());
        add("partners of " + through, detail::join(want), detail::join(got));
      }
      std::array<NumClass, 3> F{cls[a].F, cls[b].F, cls[v].F};
      add("(" + cls[a].label + "," + cls[b].label + "," + through + ") special", "no",
          specialness_witness(F, s.config) ? "yes" : "no");
      bool extends = false;
      for (std::size_t x = 0; x < cls.size(); ++x)
        extends = extends || (adj[x][a] && adj[x][b] && adj[x][v]);
      add("(" + cls[a].label + "," + cls[b].label + "," + through + ") extendable", "no", extends ? "yes" : "no");
    }
  }

  if (c.contains("products"))
    for (const auto& p : c.at("products")) {
      NumClass sum(s.config, std::vector<Rational>(s.config->size(), Rational(0)));
      std::string name;
      for (const auto& [k, v] : p.at("combination").items()) {
        NumClass x = detail::class_of(s, cls, k);
        const int coef = v.get<int>();
        for (auto& q : x.vec) q *= coef;
        sum += x;
        name += (coef < 0 ? "-" : name.empty() ? "" : "+") + k;
      }
      const std::string with = p.at("with").get<std::string>();
      add("(" + name + ")." + with, std::to_string(p.at("value").get<int>()),
          to_string(intersect(sum, detail::class_of(s, cls, with))));
    }

  if (c.contains("lower_bounds"))
    for (const auto& lb : c.at("lower_bounds")) {
      const std::string of = lb.at("class").get<std::string>();
      auto except = lb.at("except").get<std::vector<std::string>>();
      const NumClass f = detail::class_of(s, cls, of);
      Rational lowest = 1000;
      for (const auto& x : cls) {
        bool skip = false;
        for (const auto& e : except) skip = skip || numerically_equal(detail::class_of(s, cls, e), x.F);
        if (!skip) lowest = std::min(lowest, intersect(f, x.F));
      }
      const int want = lb.at("at_least").get<int>();
      add(of + ".F >= " + std::to_string(want) + " off " + detail::join(except), "yes", lowest >= want ? "yes" : "no");
    }

  if (c.contains("nd")) {
    auto want = c.at("nd").get<std::vector<int>>();
    std::string actual;
    try {
      auto b = nd_bounds(s);
      actual = "(" + std::to_string(b.min_nd) + "," + std::to_string(b.max_nd) + ")";
    } catch (const std::exception& e) {
      actual = e.what();
    }
    add("(min nd, max nd)", "(" + std::to_string(want[0]) + "," + std::to_string(want[1]) + ")", actual);
  }
  return rep;
}

}  // namespace enriques
