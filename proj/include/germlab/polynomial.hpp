#pragma once

// Sparse multivariate polynomials over exact rationals. Terms live in a map
// ordered by descending grevlex, so iteration starts at the (global) leading
// term and to_string is canonical.

#include <cassert>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/monomial.hpp"
#include "germlab/rational.hpp"
#include "germlab/ring.hpp"

namespace germlab {

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  // Zero polynomial.
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  Polynomial(Ring ring, const Rational& constant) : ring_(std::move(ring)) {
    if (constant != 0) terms_.emplace(Monomial(ring_.dimension()), constant);
  }

  static Polynomial variable(const Ring& ring, std::size_t i) {
    if (i >= ring.dimension()) throw IndexOutOfRangeError();
    Polynomial p(ring);
    p.terms_.emplace(Monomial::variable(ring.dimension(), i), Rational(1));
    return p;
  }

  static Polynomial term(const Ring& ring, const Monomial& m, const Rational& c) {
    if (m.arity() != ring.dimension()) throw ArityMismatchError();
    Polynomial p(ring);
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.begin()->first.is_one(); }

  Rational constant_term() const {
    auto it = terms_.find(Monomial(ring_.dimension()));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Grevlex is graded, so the first term carries the total degree.
  unsigned degree() const {
    assert(!is_zero());
    return terms_.begin()->first.degree();
  }

  // Smallest total degree of a term; nullopt (order +inf) for the zero polynomial.
  std::optional<unsigned> order_at_origin() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }

  const Monomial& leading_monomial() const {
    assert(!is_zero());
    return terms_.begin()->first;
  }
  const Rational& leading_coefficient() const {
    assert(!is_zero());
    return terms_.begin()->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  // In-place scalar multiple; keeps the term map nodes.
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ring_);
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
  }
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  friend Polynomial operator/(const Polynomial& p, const Rational& c) {
    if (c == 0) throw DivisionByZeroError();
    Polynomial r(p.ring_);
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, pc / c);
    return r;
  }

  // Product by a single term, used heavily by the reduction loops.
  Polynomial times_term(const Monomial& m, const Rational& c) const {
    assert(m.arity() == ring_.dimension());
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [pm, pc] : terms_) r.terms_.emplace(pm * m, pc * c);
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r(ring_, Rational(1));
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  Polynomial partial_derivative(std::size_t i) const {
    if (i >= ring_.dimension()) throw IndexOutOfRangeError();
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
      unsigned e = m.exponent(i);
      if (e == 0) continue;
      std::vector<unsigned> exps = m.exponents();
      exps[i] = e - 1;
      r.terms_.emplace(Monomial(std::move(exps)), c * Rational(e));
    }
    return r;
  }

  // Image under x_i -> images[i]; the images fix the target ring.
  Polynomial substitute(std::span<const Polynomial> images) const {
    if (images.size() != ring_.dimension()) throw ArityMismatchError();
    const Ring& target = images[0].ring();
    for (const Polynomial& g : images)
      if (g.ring() != target) throw RingMismatchError();
    std::vector<std::vector<Polynomial>> pows(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      pows[i].push_back(Polynomial(target, Rational(1)));
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
      while (pows[i].size() <= e) pows[i].push_back(pows[i].back() * images[i]);
      return pows[i][e];
    };
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
      Polynomial t(target, c);
      for (std::size_t i = 0; i < images.size(); ++i)
        if (unsigned e = m.exponent(i); e > 0) t *= power(i, e);
      r += t;
    }
    return r;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_.dimension()) throw ArityMismatchError();
    Rational total(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (unsigned e = 0; e < m.exponent(i); ++e) t *= point[i];
      total += t;
    }
    return total;
  }

  // Grevlex-monic scalar multiple; pre: nonzero.
  Polynomial normalized() const {
    assert(!is_zero());
    return *this / leading_coefficient();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt)
      if (it->first != jt->first || ::cmp(it->second, jt->second) != 0) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a < 0) {
          out << "-";
          a = -a;
        }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool coeff_shown = !(a == 1) || m.is_one();
      if (coeff_shown) out << rational_to_string(a);
      bool need_star = coeff_shown;
      for (std::size_t i = 0; i < ring_.dimension(); ++i) {
        unsigned e = m.exponent(i);
        if (e == 0) continue;
        if (need_star) out << "*";
        out << ring_.name(i);
        if (e > 1) out << "^" << e;
        need_star = true;
      }
    }
    return out.str();
  }

 private:
  void require_same_ring(const Polynomial& o) const {
    if (ring_ != o.ring_) throw RingMismatchError();
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Ring ring_;
  TermMap terms_;
};

// True when a = c*b for some nonzero rational c (zero matches only zero).
inline bool is_constant_multiple(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.normalized() == b.normalized();
}

// Constant c such that c*p is the canonical representative of the
// constant-multiple class with integer coefficients: content 1 and positive
// grevlex leading coefficient. 1 for p already canonical (and for p = 0).
inline Rational integer_primitive_scale(const Polynomial& p) {
  if (p.is_zero()) return Rational(1);
  Integer den_lcm(1);
  for (const auto& [m, c] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Integer content(0);
  for (const auto& [m, c] : p.terms()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    if (content == 1 && den_lcm == 1) break;  // scale is already +-1
  }
  bool flip = p.leading_coefficient() < 0;
  Rational scale = Rational(den_lcm) / Rational(content);
  if (flip) scale = -scale;
  return scale;
}

// Canonical representative of the constant-multiple class with integer
// coefficients: content 1 and positive grevlex leading coefficient.
inline Polynomial integer_primitive(const Polynomial& p) {
  Rational scale = integer_primitive_scale(p);
  return scale == 1 ? p : p * scale;
}

// Exact quotient p/q, driven by grevlex leading terms. Each step divides the
// current leading monomial by LM(q); when that fails the division cannot
// succeed for any term order reason and NotDivisible is thrown.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  if (p.ring() != q.ring()) throw RingMismatchError();
  if (q.is_zero()) throw DivisionByZeroError();
  Polynomial quotient(p.ring());
  Polynomial rem = p;
  while (!rem.is_zero()) {
    if (!q.leading_monomial().divides(rem.leading_monomial())) throw NotDivisibleError();
    Monomial m = q.leading_monomial().quotient_of(rem.leading_monomial());
    Rational c = rem.leading_coefficient() / q.leading_coefficient();
    quotient += Polynomial::term(p.ring(), m, c);
    rem -= q.times_term(m, c);
  }
  return quotient;
}

}  // namespace germlab
