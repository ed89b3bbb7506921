#pragma once

#include "enriques/curves.hpp"
#include "enriques/errors.hpp"
#include "enriques/root_fibers.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace enriques {

// Calls fn(vertices) for every non-empty connected induced subgraph, in increasing mask order.
inline void for_each_connected_subset(const CurveConfig& c,
                                      const std::function<void(const std::vector<std::size_t>&)>& fn) {
  const std::size_t n = c.size();
  if (n > 24) throw std::invalid_argument("configuration too large for subset enumeration");
  std::vector<std::uint32_t> nb(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : c.neighbors(i)) nb[i] |= 1u << j;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    std::uint32_t reach = low, frontier = low;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nb[static_cast<std::size_t>(__builtin_ctz(f))];
      next &= mask & ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach != mask) continue;
    std::vector<std::size_t> verts;
    for (std::uint32_t f = mask; f; f &= f - 1) verts.push_back(static_cast<std::size_t>(__builtin_ctz(f)));
    fn(verts);
  }
}

// Equal pairings against every curve of the ambient.
inline bool numerically_equal(const NumClass& a, const NumClass& b) {
  if (!Divisor::same_ambient(a.ambient, b.ambient)) throw std::invalid_argument("numerically_equal: ambient mismatch");
  for (std::size_t i = 0; i < a.ambient->size(); ++i)
    if (pair_with_curve(a, i) != pair_with_curve(b, i)) return false;
  return true;
}

inline bool is_c_sequence(std::span<const NumClass> classes) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i; j < classes.size(); ++j)
      if (intersect(classes[i], classes[j]) != (i == j ? 0 : 1)) return false;
  return true;
}

// ---------------------------------------------------------------- degenerate sequences

struct SequenceBlock {
  NumClass half_fiber;
  std::vector<std::size_t> chain;  // curves R_{i,1..r_i} of the ambient
};

struct DegenerateSequence {
  std::vector<SequenceBlock> blocks;
};

struct SequenceCheck {
  bool ok = true;
  int condition = 0;  // first violated defining condition, 1..4
  std::string detail;
};

inline SequenceCheck validate_degenerate_sequence(const DegenerateSequence& seq) {
  const auto& b = seq.blocks;
  auto fail = [](int c, std::string d) { return SequenceCheck{false, c, std::move(d)}; };
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      if (intersect(b[i].half_fiber, b[j].half_fiber) != (i == j ? 0 : 1))
        return fail(1, "F" + std::to_string(i + 1) + ".F" + std::to_string(j + 1));
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& amb = *b[i].half_fiber.ambient;
    for (std::size_t j = 0; j + 1 < b[i].chain.size(); ++j)
      if (amb(b[i].chain[j], b[i].chain[j + 1]) != 1)
        return fail(2, "R" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  }
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].chain.size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[k].chain.size(); ++l) {
          if (k == i && (l == j || l + 1 == j || l == j + 1)) continue;
          const auto& amb = *b[i].half_fiber.ambient;
          if (amb(b[i].chain[j], b[k].chain[l]) != 0)
            return fail(3, "R" + std::to_string(i + 1) + "," + std::to_string(j + 1) + " meets R" +
                               std::to_string(k + 1) + "," + std::to_string(l + 1));
        }
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t l = 0; l < b[k].chain.size(); ++l) {
        const Rational want = (k == i && l == 0) ? 1 : 0;
        if (pair_with_curve(b[i].half_fiber, b[k].chain[l]) != want)
          return fail(4, "F" + std::to_string(i + 1) + ".R" + std::to_string(k + 1) + "," + std::to_string(l + 1));
      }
  return {};
}

// ---------------------------------------------------------------- specialness

struct Witness {
  Divisor S;
  std::size_t k = 0;  // S is numerically F_i + F_j - F_k
};

inline NumClass special_target(const std::array<NumClass, 3>& F, std::size_t k) {
  const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
  return F[i] + F[j] - F[k];
}

// Fundamental cycle of a connected negative-definite subconfiguration in the class of
// F_i + F_j - F_k, if any.
inline std::optional<Divisor> find_witness(const std::array<NumClass, 3>& F, const ConfigPtr& ambient,
                                           std::size_t k) {
  const NumClass target = special_target(F, k);
  std::optional<Divisor> found;
  for_each_connected_subset(*ambient, [&](const std::vector<std::size_t>& verts) {
    if (found) return;
    auto sub = ambient->induced(verts);
    if (!negative_definite(sub)) return;
    Divisor z = fundamental_cycle(ambient, verts);
    if (numerically_equal(NumClass::from(z), target)) found = z;
  });
  return found;
}

// Tries (F1,F2;F3) first, then (F2,F3;F1), then (F3,F1;F2).
inline std::optional<Witness> specialness_witness(const std::array<NumClass, 3>& F, const ConfigPtr& ambient) {
  for (std::size_t k : {std::size_t{2}, std::size_t{0}, std::size_t{1}})
    if (auto s = find_witness(F, ambient, k)) return Witness{*s, k};
  return std::nullopt;
}

// ---------------------------------------------------------------- triangle graphs

struct TriangleGraph {
  std::array<Divisor, 3> S;  // on glued
  std::array<DynkinType, 3> types;
  std::array<KodairaType, 3> G_types;
  ConfigPtr glued;
  std::vector<std::size_t> ambient_vertices;  // glued vertex -> source vertex
  std::array<NumClass, 3> F;                  // (S_j + S_k) / 2 on glued

  Divisor G(std::size_t i) const { return S[(i + 1) % 3] + S[(i + 2) % 3]; }
};

inline TriangleGraph build_triangle_from_divisors(const std::array<Divisor, 3>& src, std::size_t max_components = 11) {
  const ConfigPtr& amb = src[0].ambient;
  for (const auto& s : src)
    if (!Divisor::same_ambient(s.ambient, amb)) throw InvariantViolation("S_k on different ambients");
  std::vector<std::size_t> verts;
  for (const auto& s : src)
    for (auto v : s.support()) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() > max_components)
    throw InvariantViolation("triangle graph has " + std::to_string(verts.size()) + " components");

  TriangleGraph t;
  t.glued = share(amb->induced(verts));
  t.ambient_vertices = verts;
  for (std::size_t k = 0; k < 3; ++k) {
    Divisor d(t.glued);
    for (std::size_t v = 0; v < verts.size(); ++v) d.coeffs[v] = src[k].coeffs[verts[v]];
    t.S[k] = d;
  }
  const std::string idx[3] = {"1", "2", "3"};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& s = t.S[k];
    if (!s.effective() || s.is_zero()) throw InvariantViolation("S_" + idx[k] + " is not effective");
    if (intersect(s, s) != -2) throw InvariantViolation("S_" + idx[k] + "^2 = " + std::to_string(intersect(s, s)));
    for (std::size_t l = k + 1; l < 3; ++l)
      if (intersect(s, t.S[l]) != 2)
        throw InvariantViolation("S_" + idx[k] + ".S_" + idx[l] + " = " + std::to_string(intersect(s, t.S[l])));
    auto supp = s.support();
    auto sub = t.glued->induced(supp);
    DynkinRecognition rec;
    try {
      rec = recognize_dynkin(sub);
    } catch (const NotDynkin& e) {
      throw InvariantViolation("S_" + idx[k] + " support: " + e.what());
    }
    auto h = highest_root(rec.type);
    for (std::size_t p = 0; p < h.size(); ++p)
      if (s.coeffs[supp[rec.order[p]]] != h[p])
        throw InvariantViolation("S_" + idx[k] + " is not the fundamental cycle of its support");
    t.types[k] = rec.type;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    Divisor g = t.G(i);
    auto supp = g.support();
    AffineRecognition rec;
    try {
      rec = recognize_affine(t.glued->induced(supp));
    } catch (const NotAffine& e) {
      throw InvariantViolation("G_" + idx[i] + " support: " + e.what());
    }
    for (std::size_t p = 0; p < supp.size(); ++p)
      if (g.coeffs[supp[p]] != rec.mult[p]) throw InvariantViolation("G_" + idx[i] + " is not a simple fiber");
    t.G_types[i] = rec.type;
    t.F[i] = NumClass::from(g, Rational(1, 2));
    t.F[i].half_fiber = true;
  }
  return t;
}

inline TriangleGraph build_triangle(const std::array<NumClass, 3>& F, const std::array<Divisor, 3>& witnesses) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (!Divisor::same_ambient(F[k].ambient, witnesses[k].ambient))
      throw InvariantViolation("witness and half-fiber ambients differ");
    if (!numerically_equal(NumClass::from(witnesses[k]), special_target(F, k)))
      throw InvariantViolation("S_" + std::to_string(k + 1) + " is not F_i + F_j - F_k");
  }
  return build_triangle_from_divisors(witnesses);
}

// ---------------------------------------------------------------- extension certificates

struct Obstruction {
  bool non_extendable = false;
  std::string reason;  // empty when inconclusive
};

inline std::string curve_label(const TriangleGraph& t, std::size_t v) { return t.glued->name(v); }

// Sound sufficient criterion: an extender F meets each S_k in exactly one simple
// component, which must not have multiplicity >= 2 in another S_l.
inline Obstruction extension_obstruction(const TriangleGraph& t) {
  for (std::size_t k = 0; k < 3; ++k) {
    bool any = false;
    for (int c : t.S[k].coeffs) any = any || c == 1;
    if (!any) return {true, "no simple component in S_" + std::to_string(k + 1)};
  }
  for (std::size_t k = 0; k < 3; ++k) {
    bool all_blocked = true;
    std::string witness;
    for (std::size_t v = 0; v < t.S[k].coeffs.size() && all_blocked; ++v) {
      if (t.S[k].coeffs[v] != 1) continue;
      bool blocked = false;
      for (std::size_t l = 0; l < 3 && !blocked; ++l)
        if (l != k && t.S[l].coeffs[v] >= 2) {
          blocked = true;
          if (witness.empty())
            witness = "simple component " + curve_label(t, v) + " of S_" + std::to_string(k + 1) +
                      " has multiplicity " + std::to_string(t.S[l].coeffs[v]) + " in S_" + std::to_string(l + 1);
        }
      all_blocked = blocked;
    }
    if (all_blocked) return {true, witness};
  }
  return {};
}

struct Extender {
  NumClass cls;
  KodairaType type;
  std::vector<std::size_t> support;  // glued vertices
  std::vector<int> mult;
};

// Connected affine subconfigurations D whose class N meets every F_i once. Such a D
// cannot be a simple fiber (N.F_i would be even), so N is a half-fiber extending the triple.
inline std::vector<Extender> all_internal_extenders(const TriangleGraph& t) {
  std::vector<Extender> out;
  for_each_connected_subset(*t.glued, [&](const std::vector<std::size_t>& verts) {
    if (verts.size() < 2) return;
    AffineRecognition rec;
    try {
      rec = recognize_affine(t.glued->induced(verts));
    } catch (const NotAffine&) {
      return;
    }
    Divisor n(t.glued);
    for (std::size_t p = 0; p < verts.size(); ++p) n.coeffs[verts[p]] = rec.mult[p];
    NumClass cls = NumClass::from(n);
    for (const auto& f : t.F)
      if (intersect(cls, f) != 1) return;
    cls.half_fiber = true;
    cls.primitive = true;
    out.push_back({cls, rec.type, verts, rec.mult});
  });
  // Largest fibers first, then by support.
  std::stable_sort(out.begin(), out.end(), [](const Extender& a, const Extender& b) {
    if (a.support.size() != b.support.size()) return a.support.size() > b.support.size();
    return a.support < b.support;
  });
  return out;
}

inline std::optional<Extender> internal_extender(const TriangleGraph& t) {
  auto all = all_internal_extenders(t);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace enriques
