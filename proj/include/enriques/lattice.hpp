#pragma once

#include "enriques/arith.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace enriques {

struct IntVec {
  std::vector<BigInt> coords;

  IntVec() = default;
  explicit IntVec(std::vector<BigInt> c) : coords(std::move(c)) {}
  IntVec(std::initializer_list<long long> c) {
    for (long long v : c) coords.emplace_back(v);
  }

  std::size_t dim() const { return coords.size(); }
  const BigInt& operator[](std::size_t i) const { return coords[i]; }
  BigInt& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const IntVec&, const IntVec&) = default;

  IntVec& operator+=(const IntVec& o) {
    check_same(o);
    for (std::size_t i = 0; i < dim(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  IntVec& operator-=(const IntVec& o) {
    check_same(o);
    for (std::size_t i = 0; i < dim(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
  friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
  friend IntVec operator*(const BigInt& k, IntVec a) {
    for (auto& c : a.coords) c *= k;
    return a;
  }

 private:
  void check_same(const IntVec& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("IntVec dimension mismatch");
  }
};

class GramForm {
 public:
  GramForm() = default;
  explicit GramForm(IntMatrix entries) : entries_(std::move(entries)) { validate(); }

  static GramForm from_ints(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m;
    for (const auto& r : rows) {
      std::vector<BigInt> row;
      for (long long v : r) row.emplace_back(v);
      m.push_back(std::move(row));
    }
    return GramForm(std::move(m));
  }

  std::size_t dim() const { return entries_.size(); }
  const IntMatrix& entries() const { return entries_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  friend bool operator==(const GramForm&, const GramForm&) = default;

 private:
  void validate() const {
    const std::size_t n = entries_.size();
    if (n == 0) throw std::invalid_argument("GramForm must have positive dimension");
    for (std::size_t i = 0; i < n; ++i) {
      if (entries_[i].size() != n) throw std::invalid_argument("GramForm must be square");
      for (std::size_t j = 0; j < i; ++j)
        if (entries_[i][j] != entries_[j][i])
          throw std::invalid_argument("GramForm must be symmetric");
    }
  }

  IntMatrix entries_;
};

inline BigInt gram_product(const IntVec& a, const IntVec& b, const GramForm& g) {
  const std::size_t n = g.dim();
  if (a.dim() != n || b.dim() != n) throw std::invalid_argument("gram_product: dimension mismatch");
  BigInt total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    BigInt row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0) row += g(i, j) * b[j];
    total += a[i] * row;
  }
  return total;
}

// Gram matrix of the given vectors under g.
inline GramForm restrict_form(std::span<const IntVec> vs, const GramForm& g) {
  IntMatrix m(vs.size(), std::vector<BigInt>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) m[i][j] = m[j][i] = gram_product(vs[i], vs[j], g);
  return GramForm(std::move(m));
}

struct RankDisc {
  std::size_t rank = 0;
  BigInt disc = 0;
  friend bool operator==(const RankDisc&, const RankDisc&) = default;
};

// disc is |det| of the form induced on L / rad(L).
inline RankDisc rank_and_discriminant(const GramForm& g) {
  // g is symmetric, so a unimodular V with V g = [H; 0] has kernel rows at the bottom,
  // and V g V^T is block diagonal with the nondegenerate part in the top-left corner.
  RowEchelon e = row_echelon(g.entries());
  const std::size_t r = e.pivot_cols.size();
  IntMatrix top(e.transform.begin(), e.transform.begin() + static_cast<std::ptrdiff_t>(r));
  IntMatrix a = multiply(multiply(top, g.entries()), transpose(top));
  return {r, abs_big(determinant(std::move(a)))};
}

// [ambient : span(sub)] for a unimodular ambient basis; nullopt means infinite index.
inline std::optional<BigInt> sublattice_index(std::span<const IntVec> sub, const GramForm& g) {
  const std::size_t n = g.dim();
  if (sub.size() < n) return std::nullopt;
  IntMatrix m;
  for (const auto& v : sub) {
    if (v.dim() != n) throw std::invalid_argument("sublattice_index: dimension mismatch");
    m.push_back(v.coords);
  }
  RowEchelon e = row_echelon(std::move(m));
  if (e.pivot_cols.size() < n) return std::nullopt;
  BigInt idx = 1;
  for (std::size_t i = 0; i < n; ++i) idx *= e.form[i][i];
  return abs_big(idx);
}

struct IsotropicTuple {
  std::vector<IntVec> vectors;
  GramForm ambient;

  IntVec sum() const {
    IntVec s(std::vector<BigInt>(ambient.dim(), 0));
    for (const auto& v : vectors) s += v;
    return s;
  }

  // true iff v_i.v_j == 1 - delta_ij
  bool valid() const {
    if (vectors.size() > 10) return false;
    for (std::size_t i = 0; i < vectors.size(); ++i)
      for (std::size_t j = i; j < vectors.size(); ++j)
        if (gram_product(vectors[i], vectors[j], ambient) != (i == j ? 0 : 1)) return false;
    return true;
  }
};

// E10 = U + E8(-1). Basis order: u1, u2 (hyperbolic plane), then the E8 simple roots
// in the canonical E8 order used by highest_root: short-arm leaf, short-arm inner,
// center, long arm outward (4), branch.
inline GramForm e10_gram() {
  IntMatrix m(10, std::vector<BigInt>(10, 0));
  m[0][1] = m[1][0] = 1;
  for (std::size_t i = 2; i < 10; ++i) m[i][i] = -2;
  const std::array<std::pair<int, int>, 7> edges{{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}}};
  for (auto [a, b] : edges) m[2 + a][2 + b] = m[2 + b][2 + a] = 1;
  return GramForm(std::move(m));
}

namespace detail {

// Coordinates in I_{1,10} = <h, e1..e10>, form diag(1, -1, ..., -1).
inline std::vector<long long> i110(long long h, std::initializer_list<std::pair<int, long long>> es) {
  std::vector<long long> v(11, 0);
  v[0] = h;
  for (auto [i, c] : es) v[static_cast<std::size_t>(i)] += c;
  return v;
}

inline long long i110_product(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long s = a[0] * b[0];
  for (std::size_t i = 1; i < 11; ++i) s -= a[i] * b[i];
  return s;
}

}  // namespace detail

// The classical tuple f_i = 3h - sum_{j != i} e_j in K^perp of I_{1,10}, written in the
// E10 basis above.
inline IsotropicTuple e10_isotropic_basis() {
  using detail::i110;
  std::vector<std::vector<long long>> basis{
      i110(3, {{2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}, {7, -1}, {8, -1}, {9, -1}, {10, -1}}),
      i110(4, {{1, -1}, {2, -2}, {3, -2}, {4, -1}, {5, -1}, {6, -1}, {7, -1}, {8, -1}, {9, -1}, {10, -1}}),
      i110(0, {{2, 1}, {3, -1}}),
      i110(1, {{2, -1}, {4, -1}, {5, -1}}),
      i110(0, {{5, 1}, {6, -1}}),
      i110(0, {{6, 1}, {7, -1}}),
      i110(0, {{7, 1}, {8, -1}}),
      i110(0, {{8, 1}, {9, -1}}),
      i110(0, {{9, 1}, {10, -1}}),
      i110(0, {{4, 1}, {5, -1}}),
  };
  GramForm g = e10_gram();
  RatMatrix gram(10, std::vector<Rational>(10));
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      long long p = detail::i110_product(basis[i], basis[j]);
      if (BigInt(p) != g(i, j)) throw std::logic_error("E10 basis does not realize U + E8(-1)");
      gram[i][j] = p;
    }
  IsotropicTuple t{{}, g};
  for (int k = 1; k <= 10; ++k) {
    std::vector<long long> f(11, -1);
    f[0] = 3;
    f[static_cast<std::size_t>(k)] = 0;
    std::vector<Rational> rhs(10);
    for (std::size_t i = 0; i < 10; ++i) rhs[i] = detail::i110_product(basis[i], f);
    std::vector<Rational> x;
    RatMatrix ker;
    if (!solve_rational(gram, rhs, x, ker) || !ker.empty())
      throw std::logic_error("E10 basis is degenerate");
    IntVec v;
    for (const auto& c : x) v.coords.push_back(to_int(c));
    t.vectors.push_back(std::move(v));
  }
  if (!t.valid()) throw std::logic_error("constructed tuple is not isotropic with products 1");
  return t;
}

// Isotropic e with e.f_i = e.f_j = 2 and e.f_k = 1 otherwise (i, j zero-based).
inline IntVec solve_cossec_vector(const IsotropicTuple& t, std::size_t i, std::size_t j,
                                  long long height = 16) {
  const std::size_t n = t.ambient.dim();
  if (t.vectors.size() != 10) throw std::invalid_argument("solve_cossec_vector needs a 10-tuple");
  if (i == j || i >= 10 || j >= 10) throw std::invalid_argument("solve_cossec_vector: bad indices");
  RatMatrix a(10, std::vector<Rational>(n));
  std::vector<Rational> b(10);
  for (std::size_t k = 0; k < 10; ++k) {
    for (std::size_t c = 0; c < n; ++c) {
      BigInt s = 0;
      for (std::size_t l = 0; l < n; ++l) s += t.vectors[k][l] * t.ambient(l, c);
      a[k][c] = Rational(s);
    }
    b[k] = (k == i || k == j) ? 2 : 1;
  }
  std::vector<Rational> x;
  RatMatrix ker;
  if (!solve_rational(a, b, x, ker))
    throw std::runtime_error("solve_cossec_vector: inconsistent linear constraints");

  auto accept = [&](const std::vector<Rational>& cand) -> std::optional<IntVec> {
    IntVec v;
    for (const auto& c : cand) {
      if (!is_integral(c)) return std::nullopt;
      BigInt z = to_int(c);
      if (abs_big(z) > height) return std::nullopt;
      v.coords.push_back(std::move(z));
    }
    if (gram_product(v, v, t.ambient) != 0) return std::nullopt;
    return v;
  };

  if (ker.empty()) {
    if (auto v = accept(x)) return *v;
    throw std::runtime_error("solve_cossec_vector: no isotropic integral solution within height bound");
  }
  if (ker.size() > 2) throw std::runtime_error("solve_cossec_vector: solution space too large to search");
  // Search rational multiples of kernel directions with integer steps in [-height, height].
  std::vector<long long> step(ker.size(), -height);
  while (true) {
    std::vector<Rational> cand = x;
    for (std::size_t k = 0; k < ker.size(); ++k)
      for (std::size_t c = 0; c < n; ++c) cand[c] += Rational(step[k]) * ker[k][c];
    if (auto v = accept(cand)) return *v;
    std::size_t k = 0;
    while (k < step.size() && step[k] == height) step[k++] = -height;
    if (k == step.size()) break;
    ++step[k];
  }
  throw std::runtime_error("solve_cossec_vector: no isotropic integral solution within height bound");
}

struct Divisibility {
  bool div3 = false;
  bool in_span = false;
  bool div9 = false;
  friend bool operator==(const Divisibility&, const Divisibility&) = default;
};

inline bool in_integer_span(const IntVec& v, std::span<const IntVec> gens) {
  if (gens.empty()) {
    for (const auto& c : v.coords)
      if (c != 0) return false;
    return true;
  }
  const std::size_t n = v.dim();
  RatMatrix a(n, std::vector<Rational>(gens.size()));
  std::vector<Rational> b(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < gens.size(); ++c) a[r][c] = Rational(gens[c][r]);
    b[r] = Rational(v[r]);
  }
  std::vector<Rational> x;
  RatMatrix ker;
  if (!solve_rational(a, b, x, ker)) return false;
  if (ker.empty()) {
    for (const auto& c : x)
      if (!is_integral(c)) return false;
    return true;
  }
  // Dependent generators: compare index of span(gens) and span(gens, v).
  IntMatrix m;
  for (const auto& g : gens) m.push_back(g.coords);
  auto lattice_volume = [](IntMatrix rows) {
    RowEchelon e = row_echelon(std::move(rows));
    IntMatrix basis(e.form.begin(), e.form.begin() + static_cast<std::ptrdiff_t>(e.pivot_cols.size()));
    IntMatrix gram = multiply(basis, transpose(basis));
    return determinant(std::move(gram));
  };
  BigInt before = lattice_volume(m);
  m.push_back(v.coords);
  return lattice_volume(std::move(m)) == before;
}

inline Divisibility divisibility_check(const IntVec& v, const IsotropicTuple& t) {
  if (v.dim() != t.ambient.dim()) throw std::invalid_argument("divisibility_check: dimension mismatch");
  BigInt p = gram_product(v, t.sum(), t.ambient);
  return {p % 3 == 0, in_integer_span(v, t.vectors), p % 9 == 0};
}

}  // namespace enriques
