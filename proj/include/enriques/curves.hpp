#pragma once

#include "enriques/arith.hpp"
#include "enriques/lattice.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace enriques {

// Weighted dual graph of (-2)-curves.
class CurveConfig {
 public:
  CurveConfig() = default;

  CurveConfig(std::vector<std::string> names, std::vector<std::vector<int>> inter)
      : names_(std::move(names)), inter_(std::move(inter)) {
    validate();
  }

  // Unnamed configuration with curves R1..Rn.
  explicit CurveConfig(std::vector<std::vector<int>> inter) : inter_(std::move(inter)) {
    for (std::size_t i = 0; i < inter_.size(); ++i) names_.push_back("R" + std::to_string(i + 1));
    validate();
  }

  static CurveConfig from_edges(std::size_t n, std::span<const std::array<int, 3>> edges) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = -2;
    for (const auto& e : edges) {
      auto a = static_cast<std::size_t>(e[0]), b = static_cast<std::size_t>(e[1]);
      m[a][b] = m[b][a] = e[2];
    }
    return CurveConfig(std::move(m));
  }

  std::size_t size() const { return inter_.size(); }
  bool empty() const { return inter_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int operator()(std::size_t i, std::size_t j) const { return inter_[i][j]; }
  const std::vector<std::vector<int>>& matrix() const { return inter_; }

  std::size_t index_of(const std::string& n) const {
    auto it = std::find(names_.begin(), names_.end(), n);
    if (it == names_.end()) throw std::invalid_argument("unknown curve: " + n);
    return static_cast<std::size_t>(it - names_.begin());
  }

  CurveConfig induced(std::span<const std::size_t> verts) const {
    std::vector<std::string> ns;
    std::vector<std::vector<int>> m(verts.size(), std::vector<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) {
      ns.push_back(names_.at(verts[i]));
      for (std::size_t j = 0; j < verts.size(); ++j) m[i][j] = inter_.at(verts[i]).at(verts[j]);
    }
    return CurveConfig(std::move(ns), std::move(m));
  }

  GramForm gram() const {
    IntMatrix m(size(), std::vector<BigInt>(size()));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) m[i][j] = inter_[i][j];
    return GramForm(std::move(m));
  }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
      if (j != v && inter_[v][j] != 0) out.push_back(j);
    return out;
  }

  bool connected() const {
    if (empty()) return false;
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    return count == size();
  }

  // Connected components of the subgraph induced on verts (vertex ids of this config).
  std::vector<std::vector<std::size_t>> components(std::span<const std::size_t> verts) const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<int> state(size(), -1);
    for (auto v : verts) state[v] = 0;
    for (auto v : verts) {
      if (state[v] != 0) continue;
      std::vector<std::size_t> comp{v}, stack{v};
      state[v] = 1;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto w : neighbors(x))
          if (state[w] == 0) {
            state[w] = 1;
            comp.push_back(w);
            stack.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;

 private:
  void validate() const {
    const std::size_t n = inter_.size();
    if (names_.size() != n) throw std::invalid_argument("CurveConfig: names and matrix size differ");
    for (std::size_t i = 0; i < n; ++i) {
      if (inter_[i].size() != n) throw std::invalid_argument("CurveConfig: matrix must be square");
      if (inter_[i][i] != -2) throw std::invalid_argument("CurveConfig: diagonal must be -2");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (inter_[i][j] < 0) throw std::invalid_argument("CurveConfig: negative intersection");
        if (inter_[i][j] != inter_[j][i]) throw std::invalid_argument("CurveConfig: not symmetric");
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<std::vector<int>> inter_;
};

using ConfigPtr = std::shared_ptr<const CurveConfig>;

inline ConfigPtr share(CurveConfig c) { return std::make_shared<const CurveConfig>(std::move(c)); }

// Integral combination of curves of an ambient configuration.
struct Divisor {
  std::vector<int> coeffs;
  ConfigPtr ambient;

  Divisor() = default;
  explicit Divisor(ConfigPtr amb) : coeffs(amb ? amb->size() : 0, 0), ambient(std::move(amb)) {}
  Divisor(ConfigPtr amb, std::vector<int> c) : coeffs(std::move(c)), ambient(std::move(amb)) {
    if (!ambient || coeffs.size() != ambient->size())
      throw std::invalid_argument("Divisor: coefficient vector does not match ambient");
  }

  static Divisor curve(ConfigPtr amb, std::size_t i) {
    Divisor d(std::move(amb));
    d.coeffs.at(i) = 1;
    return d;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) s.push_back(i);
    return s;
  }
  bool effective() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
  }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
  }

  Divisor& operator+=(const Divisor& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  Divisor& operator-=(const Divisor& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(int k, Divisor a) {
    for (auto& c : a.coeffs) c *= k;
    return a;
  }
  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.coeffs == b.coeffs && same_ambient(a.ambient, b.ambient);
  }

  static bool same_ambient(const ConfigPtr& a, const ConfigPtr& b) {
    return a == b || (a && b && *a == *b);
  }

 private:
  void check(const Divisor& o) const {
    if (!same_ambient(ambient, o.ambient)) throw std::invalid_argument("Divisor: ambient mismatch");
  }
};

inline int intersect(const Divisor& a, const Divisor& b) {
  if (!Divisor::same_ambient(a.ambient, b.ambient)) throw std::invalid_argument("intersect: ambient mismatch");
  const auto& m = a.ambient->matrix();
  long long s = 0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      if (b.coeffs[j] != 0) s += static_cast<long long>(a.coeffs[i]) * m[i][j] * b.coeffs[j];
  }
  return static_cast<int>(s);
}

// Rational combination of curves; used for half-fiber classes G/2.
struct NumClass {
  std::vector<Rational> vec;
  ConfigPtr ambient;
  bool primitive = false;
  bool half_fiber = false;

  NumClass() = default;
  NumClass(ConfigPtr amb, std::vector<Rational> v) : vec(std::move(v)), ambient(std::move(amb)) {
    if (!ambient || vec.size() != ambient->size())
      throw std::invalid_argument("NumClass: vector does not match ambient");
  }

  static NumClass from(const Divisor& d, Rational scale = 1) {
    std::vector<Rational> v;
    for (int c : d.coeffs) v.push_back(Rational(c) * scale);
    return NumClass(d.ambient, std::move(v));
  }

  NumClass& operator+=(const NumClass& o) {
    check(o);
    for (std::size_t i = 0; i < vec.size(); ++i) vec[i] += o.vec[i];
    return *this;
  }
  NumClass& operator-=(const NumClass& o) {
    check(o);
    for (std::size_t i = 0; i < vec.size(); ++i) vec[i] -= o.vec[i];
    return *this;
  }
  friend NumClass operator+(NumClass a, const NumClass& b) {
    a += b;
    a.primitive = a.half_fiber = false;
    return a;
  }
  friend NumClass operator-(NumClass a, const NumClass& b) {
    a -= b;
    a.primitive = a.half_fiber = false;
    return a;
  }

 private:
  void check(const NumClass& o) const {
    if (!Divisor::same_ambient(ambient, o.ambient)) throw std::invalid_argument("NumClass: ambient mismatch");
  }
};

inline Rational intersect(const NumClass& a, const NumClass& b) {
  if (!Divisor::same_ambient(a.ambient, b.ambient)) throw std::invalid_argument("intersect: ambient mismatch");
  const auto& m = a.ambient->matrix();
  Rational s = 0;
  for (std::size_t i = 0; i < a.vec.size(); ++i) {
    if (a.vec[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < b.vec.size(); ++j)
      if (b.vec[j] != 0) row += Rational(m[i][j]) * b.vec[j];
    s += a.vec[i] * row;
  }
  return s;
}
inline Rational intersect(const NumClass& a, const Divisor& b) { return intersect(a, NumClass::from(b)); }
inline Rational intersect(const Divisor& a, const NumClass& b) { return intersect(NumClass::from(a), b); }

// Pairing of a class with curve i of its ambient.
inline Rational pair_with_curve(const NumClass& a, std::size_t i) {
  const auto& m = a.ambient->matrix();
  Rational s = 0;
  for (std::size_t j = 0; j < a.vec.size(); ++j)
    if (a.vec[j] != 0) s += a.vec[j] * m[i][j];
  return s;
}

}  // namespace enriques
