#pragma once

#include "enriques/arith.hpp"
#include "enriques/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace enriques {

// Variables 0..3 are the projective coordinates x0..x3. Variables 4, 5, ... are formal
// coefficients c0, c1, ... of degree 0 for homogeneity purposes.
inline constexpr std::size_t kCoordVars = 4;

using Exponent = std::vector<int>;  // trailing zeros trimmed

namespace detail {

inline int exp_at(const Exponent& e, std::size_t i) { return i < e.size() ? e[i] : 0; }

inline int coord_degree(const Exponent& e) {
  int d = 0;
  for (std::size_t i = 0; i < kCoordVars && i < e.size(); ++i) d += e[i];
  return d;
}

inline void trim(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace detail

// Degree in x0..x3 first, then lexicographic over all variables. Larger sorts first.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = detail::coord_degree(a), db = detail::coord_degree(b);
    if (da != db) return da > db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      const int x = detail::exp_at(a, i), y = detail::exp_at(b, i);
      if (x != y) return x > y;
    }
    return false;
  }
};

class MultiPoly {
 public:
  using Terms = std::map<Exponent, BigInt, GradedLex>;

  MultiPoly() = default;
  MultiPoly(long long c) { add_term({}, BigInt(c)); }  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigInt& c) { add_term({}, c); }      // NOLINT(google-explicit-constructor)

  static MultiPoly var(std::size_t i, int power = 1) {
    Exponent e(i + 1, 0);
    e[i] = power;
    MultiPoly p;
    p.add_term(std::move(e), 1);
    return p;
  }
  static MultiPoly x(std::size_t i) { return var(i); }
  static MultiPoly coeff(std::size_t k) { return var(kCoordVars + k); }
  static MultiPoly monomial(Exponent e, const BigInt& c = 1) {
    MultiPoly p;
    p.add_term(std::move(e), c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Exponent e, const BigInt& c) {
    if (c == 0) return;
    for (int v : e)
      if (v < 0) throw std::invalid_argument("negative exponent");
    detail::trim(e);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Largest variable index in use plus one.
  std::size_t num_vars() const {
    std::size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return n;
  }

  // Degree in x0..x3; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, detail::coord_degree(e));
    return d;
  }

  bool homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
      if (detail::coord_degree(e) != d) return false;
    return true;
  }

  int degree_in(std::size_t v) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, detail::exp_at(e, v));
    return d;
  }

  // Coefficient of var^k, as a polynomial in the remaining variables.
  MultiPoly coefficient_of(std::size_t v, int k) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
      if (detail::exp_at(e, v) != k) continue;
      Exponent f = e;
      if (v < f.size()) f[v] = 0;
      out.add_term(std::move(f), c);
    }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::exp_at(ea, i) + detail::exp_at(eb, i);
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    MultiPoly out(1), base = *this;
    while (k > 0) {
      if (k & 1) out *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  // Replaces variable i by images[i] for i < images.size(); other variables are kept.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    MultiPoly out;
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power_of = [&](std::size_t i, int k) -> const MultiPoly& {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MultiPoly(1));
      while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
      return pw[static_cast<std::size_t>(k)];
    };
    for (const auto& [e, c] : terms_) {
      Exponent rest = e;
      MultiPoly t(c);
      for (std::size_t i = 0; i < images.size() && i < e.size(); ++i) {
        if (e[i] == 0) continue;
        t *= power_of(i, e[i]);
        rest[i] = 0;
      }
      out += t * monomial(std::move(rest));
    }
    return out;
  }

  MultiPoly divide_by_monomial(const Exponent& m) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
      Exponent f(std::max(e.size(), m.size()), 0);
      for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = detail::exp_at(e, i) - detail::exp_at(m, i);
        if (f[i] < 0) throw NotDivisible("term not divisible by monomial");
      }
      out.add_term(std::move(f), c);
    }
    return out;
  }

  // Exact quotient a / b; throws NotDivisible if b does not divide a over the integers.
  friend MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw NotDivisible("division by zero polynomial");
    const auto& [lb, cb] = *b.terms_.begin();
    MultiPoly rem = a, q;
    while (!rem.is_zero()) {
      const auto& [lr, cr] = *rem.terms_.begin();
      Exponent f(std::max(lr.size(), lb.size()), 0);
      for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = detail::exp_at(lr, i) - detail::exp_at(lb, i);
        if (f[i] < 0) throw NotDivisible("leading term not divisible");
      }
      if (cr % cb != 0) throw NotDivisible("coefficient not divisible");
      MultiPoly t = monomial(std::move(f), cr / cb);
      rem -= t * b;
      q += t;
    }
    return q;
  }

  static std::string var_name(std::size_t i) {
    return i < kCoordVars ? "x" + std::to_string(i) : "c" + std::to_string(i - kCoordVars);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool neg = c < 0;
      const BigInt a = neg ? BigInt(-c) : c;
      if (first) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var_name(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        s += a.str();
      } else {
        if (a != 1) s += a.str() + "*";
        s += mono;
      }
    }
    return s;
  }

 private:
  Terms terms_;
};

// ---------------------------------------------------------------- parsing

namespace detail {

// expr := term (('+'|'-') term)*; term := unary ('*' unary)*; unary := '-' unary | power;
// power := atom ('^' integer)?; atom := integer | x0..x3 | c<k> | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string s) : s_(std::move(s)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return s_.substr(start, pos_ - start);
  }
  MultiPoly expr() {
    MultiPoly p = term();
    while (true) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }
  MultiPoly term() {
    MultiPoly p = unary();
    while (eat('*')) p *= unary();
    return p;
  }
  MultiPoly unary() {
    if (eat('-')) return -unary();
    return power();
  }
  MultiPoly power() {
    MultiPoly p = atom();
    if (eat('^')) {
      const std::string d = digits();
      if (d.size() > 4) fail("exponent too large");
      p = p.pow(std::stoi(d));
    }
    return p;
  }
  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return MultiPoly(BigInt(digits()));
    if (ch == 'x' || ch == 'c') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected variable index");
      const std::string d = digits();
      if (d.size() > 4) fail("variable index too large");
      const std::size_t k = std::stoul(d);
      if (ch == 'x') {
        if (k >= kCoordVars) fail("only x0..x3 are coordinates");
        return MultiPoly::x(k);
      }
      return MultiPoly::coeff(k);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }
};

}  // namespace detail

inline MultiPoly parse_poly(const std::string& s) { return detail::PolyParser(s).parse(); }

// ---------------------------------------------------------------- generic forms

// Sum over all monomials of degree d in the given coordinates, each with its own formal
// coefficient c_{first}, c_{first+1}, ... in graded lexicographic order.
inline MultiPoly generic_form(int d, const std::vector<std::size_t>& coords, std::size_t first_coeff,
                              std::size_t* next_coeff = nullptr) {
  MultiPoly out;
  std::size_t k = first_coeff;
  std::vector<int> e(coords.size(), 0);
  std::vector<Exponent> monos;
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == coords.size()) {
      e[i] = left;
      Exponent m(kCoordVars, 0);
      for (std::size_t j = 0; j < coords.size(); ++j) m[coords[j]] = e[j];
      monos.push_back(m);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (!coords.empty()) rec(rec, 0, d);
  for (auto& m : monos) out += MultiPoly::monomial(m) * MultiPoly::coeff(k++);
  if (next_coeff) *next_coeff = k;
  return out;
}

// ---------------------------------------------------------------- identities

inline void require_form(const MultiPoly& p, int d, const std::string& what) {
  if (!p.homogeneous(d)) throw std::invalid_argument(what + " must be homogeneous of degree " + std::to_string(d));
}

inline MultiPoly enriques_sextic(const MultiPoly& Q) {
  require_form(Q, 2, "Q");
  using P = MultiPoly;
  const P x0 = P::x(0), x1 = P::x(1), x2 = P::x(2), x3 = P::x(3);
  return (x0 * x1 * x2).pow(2) + (x0 * x1 * x3).pow(2) + (x0 * x2 * x3).pow(2) + (x1 * x2 * x3).pow(2) +
         x0 * x1 * x2 * x3 * Q;
}

// [x0:x1:x2:x3] -> [x2x3 : x0x1 : x0x2 : x0x3]
inline std::vector<MultiPoly> cremona_images() {
  using P = MultiPoly;
  return {P::x(2) * P::x(3), P::x(0) * P::x(1), P::x(0) * P::x(2), P::x(0) * P::x(3)};
}

struct CastelnuovoResult {
  MultiPoly Q_prime;
  MultiPoly quintic;   // computed
  MultiPoly expected;  // x0(x1²x2² + x1²x3² + x2²x3² + x0²x1²) + x1 Q'
  bool certificate = false;
};

inline CastelnuovoResult castelnuovo_transform(const MultiPoly& Q) {
  using P = MultiPoly;
  const auto images = cremona_images();
  CastelnuovoResult r;
  r.Q_prime = Q.substitute(images);
  const P pulled = enriques_sextic(Q).substitute(images);
  r.quintic = exact_divide(pulled, P::monomial({3, 0, 2, 2}));
  const P x0 = P::x(0), x1 = P::x(1), x2 = P::x(2), x3 = P::x(3);
  r.expected = x0 * ((x1 * x2).pow(2) + (x1 * x3).pow(2) + (x2 * x3).pow(2) + (x0 * x1).pow(2)) + x1 * r.Q_prime;
  r.certificate = r.quintic == r.expected;
  return r;
}

struct OcticResult {
  MultiPoly quintic;       // x3²C1 + x0x1x3Q'' + x0x1C2
  MultiPoly discriminant;  // of the quintic as a quadratic in x3
  MultiPoly expected;      // x0x1(x0x1Q''² − 4C1C2)
  bool certificate = false;
};

inline OcticResult double_plane_octic(const MultiPoly& C1, const MultiPoly& C2, const MultiPoly& Qpp) {
  require_form(C1, 3, "C1");
  require_form(C2, 3, "C2");
  require_form(Qpp, 2, "Q''");
  for (const auto* p : {&C1, &C2, &Qpp})
    if (p->degree_in(3) > 0) throw std::invalid_argument("C1, C2 and Q'' must not involve x3");
  using P = MultiPoly;
  const P x0 = P::x(0), x1 = P::x(1), x3 = P::x(3);
  OcticResult r;
  r.quintic = x3.pow(2) * C1 + x0 * x1 * x3 * Qpp + x0 * x1 * C2;
  const P a = r.quintic.coefficient_of(3, 2), b = r.quintic.coefficient_of(3, 1), c = r.quintic.coefficient_of(3, 0);
  r.discriminant = b * b - P(4) * a * c;
  r.expected = x0 * x1 * (x0 * x1 * Qpp.pow(2) - P(4) * C1 * C2);
  r.certificate = r.discriminant == r.expected;
  return r;
}

}  // namespace enriques
