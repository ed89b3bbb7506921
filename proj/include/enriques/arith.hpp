#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace enriques {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatMatrix = std::vector<std::vector<Rational>>;

inline BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline BigInt to_int(const Rational& r) {
  if (!is_integral(r)) throw std::domain_error("rational value is not an integer");
  return boost::multiprecision::numerator(r);
}

inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// returns g = gcd(a, b) >= 0 together with x, y such that a*x + b*y = g
inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<BigInt>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  if (a[0].size() != k) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

// Fraction-free Gaussian elimination (Bareiss). Exact for square integer matrices.
inline BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct RowEchelon {
  IntMatrix form;       // upper echelon, pivots positive
  IntMatrix transform;  // unimodular, transform * input == form
  std::vector<std::size_t> pivot_cols;
};

// Integer row echelon form by unimodular row operations (gcd elimination).
inline RowEchelon row_echelon(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  IntMatrix u = identity_matrix(rows);
  std::vector<std::size_t> pivots;
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols && p < rows; ++c) {
    for (std::size_t i = p + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      BigInt x, y;
      BigInt a = m[p][c], b = m[i][c];
      BigInt g = ext_gcd(a, b, x, y);
      BigInt ag = a / g, bg = b / g;
      for (std::size_t j = 0; j < cols; ++j) {
        BigInt top = x * m[p][j] + y * m[i][j];
        BigInt bot = -bg * m[p][j] + ag * m[i][j];
        m[p][j] = std::move(top);
        m[i][j] = std::move(bot);
      }
      for (std::size_t j = 0; j < rows; ++j) {
        BigInt top = x * u[p][j] + y * u[i][j];
        BigInt bot = -bg * u[p][j] + ag * u[i][j];
        u[p][j] = std::move(top);
        u[i][j] = std::move(bot);
      }
    }
    if (m[p][c] == 0) continue;
    if (m[p][c] < 0) {
      for (auto& v : m[p]) v = -v;
      for (auto& v : u[p]) v = -v;
    }
    pivots.push_back(c);
    ++p;
  }
  return {std::move(m), std::move(u), std::move(pivots)};
}

inline std::size_t rank_of(const IntMatrix& m) { return row_echelon(m).pivot_cols.size(); }

// Solves A x = b over the rationals. Returns false when inconsistent.
// On success x is one solution and kernel holds a basis of the null space.
inline bool solve_rational(const RatMatrix& a, const std::vector<Rational>& b,
                           std::vector<Rational>& x, RatMatrix& kernel) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  RatMatrix m = a;
  std::vector<Rational> rhs = b;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return false;
  x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = rhs[i];
  kernel.clear();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> k(cols, Rational(0));
    k[f] = 1;
    for (std::size_t i = 0; i < r; ++i) k[pivot_cols[i]] = -m[i][f];
    kernel.push_back(std::move(k));
  }
  return true;
}

}  // namespace enriques
