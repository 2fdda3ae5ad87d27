#pragma once

// Multivariate gcd over the rationals via subresultant pseudo-remainder
// sequences in the top active variable, with content/primitive-part recursion
// into the coefficient ring. Inputs are scaled to integer coefficients at the
// boundary so the whole inner computation stays in Z[x]; results are returned
// scaled so the grevlex leading coefficient is 1. A cheap specialization
// certificate settles the common coprime case before any remainder sequence
// runs.

#include <cstddef>
#include <optional>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/local_order.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {
namespace detail {

inline unsigned degree_in(const Polynomial& p, std::size_t k) {
  unsigned d = 0;
  for (const auto& [m, c] : p.terms())
    if (m.exponent(k) > d) d = m.exponent(k);
  return d;
}

// Coefficient of x_k^e, as a polynomial with the x_k exponent zeroed out.
inline Polynomial coeff_of_power(const Polynomial& p, std::size_t k, unsigned e) {
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(k) != e) continue;
    std::vector<unsigned> exps = m.exponents();
    exps[k] = 0;
    r += Polynomial::term(p.ring(), Monomial(std::move(exps)), c);
  }
  return r;
}

inline Polynomial leading_coeff_in(const Polynomial& p, std::size_t k) {
  return coeff_of_power(p, k, degree_in(p, k));
}

inline std::optional<std::size_t> top_variable(const Polynomial& p) {
  std::optional<std::size_t> top;
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = m.arity(); i-- > 0;) {
      if (m.exponent(i) == 0) continue;
      if (!top || i > *top) top = i;
      break;
    }
  return top;
}

// Pseudo-remainder of F by G w.r.t. x_k, scaled by lc_k(G)^(deg F - deg G + 1).
inline Polynomial pseudo_remainder(const Polynomial& F, const Polynomial& G, std::size_t k) {
  const std::size_t n = F.ring().dimension();
  unsigned dG = degree_in(G, k);
  Polynomial d = leading_coeff_in(G, k);
  Polynomial R = F;
  long e = static_cast<long>(degree_in(F, k)) - static_cast<long>(dG) + 1;
  while (!R.is_zero() && degree_in(R, k) >= dG) {
    unsigned dR = degree_in(R, k);
    Polynomial lcR = coeff_of_power(R, k, dR);
    R = d * R - (lcR * G).times_term(Monomial::variable(n, k, dR - dG), Rational(1));
    --e;
  }
  for (; e > 0; --e) R = d * R;
  return R;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

// Dense univariate gcd degree via monic Euclid; coefficient vectors are
// little-endian in the degree.
inline std::size_t euclid_gcd_degree(std::vector<Rational> f, std::vector<Rational> g) {
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(f);
  trim(g);
  while (!g.empty()) {
    // f mod g with g made monic.
    Rational lead = g.back();
    for (Rational& c : g) c /= lead;
    while (f.size() >= g.size()) {
      Rational q = f.back();
      std::size_t off = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) f[off + i] -= q * g[i];
      trim(f);
      if (f.size() < g.size()) break;
    }
    std::swap(f, g);
    trim(g);
  }
  return f.empty() ? 0 : f.size() - 1;
}

// p with every variable except x_k evaluated at vals (vals[k] ignored),
// collected as a dense univariate coefficient vector in x_k.
inline std::vector<Rational> specialize_to_variable(const Polynomial& p, std::size_t k,
                                                    const std::vector<Rational>& vals) {
  std::vector<Rational> coeffs(degree_in(p, k) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (i == k) continue;
      for (unsigned e = 0; e < m.exponent(i); ++e) v *= vals[i];
    }
    coeffs[m.exponent(k)] += v;
  }
  return coeffs;
}

// True when gcd(a, b) provably has degree 0 in every variable, hence is
// constant. Per variable, the other variables are specialized at small
// integer points; when both leading coefficients survive the evaluation,
// deg_k gcd(a, b) <= deg gcd of the specialized univariates, so a coprime
// specialization certifies deg_k = 0. Degenerate points are skipped; an
// exhausted point budget leaves the variable unsettled and the certificate
// fails closed.
inline bool certified_coprime(const Polynomial& a, const Polynomial& b) {
  static constexpr long kPoints[] = {1, -1, 2, -2, 3, -3, 5, -5};
  constexpr std::size_t kTries = 12;
  std::size_t n = a.ring().dimension();
  for (std::size_t k = 0; k < n; ++k) {
    unsigned da = degree_in(a, k), db = degree_in(b, k);
    if (da == 0 || db == 0) continue;
    bool settled = false;
    for (std::size_t t = 0; t < kTries && !settled; ++t) {
      std::vector<Rational> vals(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i)
        vals[i] = Rational(kPoints[(t + i) % std::size(kPoints)]);
      std::vector<Rational> fa = specialize_to_variable(a, k, vals);
      std::vector<Rational> fb = specialize_to_variable(b, k, vals);
      if (fa.size() != da + 1 || fa.back() == 0) continue;
      if (fb.size() != db + 1 || fb.back() == 0) continue;
      if (euclid_gcd_degree(std::move(fa), std::move(fb)) != 0) return false;
      settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

// gcd of the nonzero coefficient polynomials of p w.r.t. x_k.
inline Polynomial content_in(const Polynomial& p, std::size_t k) {
  Polynomial c(p.ring());
  for (unsigned e = 0; e <= degree_in(p, k); ++e) {
    Polynomial q = coeff_of_power(p, k, e);
    if (q.is_zero()) continue;
    c = c.is_zero() ? integer_primitive(q) : gcd_impl(c, q);
    if (c.is_constant()) return Polynomial(p.ring(), Rational(1));
  }
  return c;
}

inline Polynomial primitive_part_in(const Polynomial& p, std::size_t k) {
  Polynomial c = content_in(p, k);
  if (c.is_constant()) return integer_primitive(p);
  return integer_primitive(divide_exact(p, c));
}

// Subresultant PRS; pre: F, G integer-primitive w.r.t. x_k, deg_k F >= deg_k G >= 1.
inline Polynomial prs_gcd(Polynomial F, Polynomial G, std::size_t k) {
  Polynomial g(F.ring(), Rational(1));
  Polynomial h = g;
  for (;;) {
    unsigned delta = degree_in(F, k) - degree_in(G, k);
    Polynomial R = pseudo_remainder(F, G, k);
    if (R.is_zero()) return primitive_part_in(G, k);
    F = G;
    G = divide_exact(R, g * h.pow(delta));
    g = leading_coeff_in(F, k);
    if (delta >= 1) h = delta == 1 ? g : divide_exact(g.pow(delta), h.pow(delta - 1));
  }
}

// pre: a, b nonzero with integer coefficients. Result is a constant multiple
// of the gcd, integer-primitive.
inline Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(a.ring(), Rational(1));
  if (certified_coprime(a, b)) return Polynomial(a.ring(), Rational(1));
  std::size_t ka = *top_variable(a);
  std::size_t kb = *top_variable(b);
  // A common divisor cannot involve a variable absent from one operand.
  if (ka > kb) return gcd_impl(content_in(a, ka), b);
  if (kb > ka) return gcd_impl(a, content_in(b, kb));
  std::size_t k = ka;
  Polynomial ca = content_in(a, k);
  Polynomial cb = content_in(b, k);
  Polynomial pa = integer_primitive(ca.is_constant() ? a : divide_exact(a, ca));
  Polynomial pb = integer_primitive(cb.is_constant() ? b : divide_exact(b, cb));
  Polynomial c = gcd_impl(ca, cb);
  Polynomial g = degree_in(pa, k) >= degree_in(pb, k) ? prs_gcd(pa, pb, k) : prs_gcd(pb, pa, k);
  return integer_primitive(c * g);
}

}  // namespace detail

// Greatest common divisor, normalized so the grevlex leading coefficient
// is 1. gcd(p, 0) = normalized p; gcd(0, 0) = 0. The machinery above works
// on integer-primitive representatives; only this boundary rescales.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw RingMismatchError();
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  return detail::gcd_impl(integer_primitive(a), integer_primitive(b)).normalized();
}

// Product of the distinct irreducible factors, normalized like gcd so the
// grevlex leading coefficient is 1. In characteristic zero one division by
// gcd(p, dp/dx_1, ..., dp/dx_n) already lands on the squarefree part; the
// loop re-checks until that gcd is constant.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_constant()) throw ConstantInputError();
  Polynomial s = p;
  for (;;) {
    Polynomial r = s;
    for (std::size_t i = 0; i < s.ring().dimension(); ++i) {
      Polynomial d = s.partial_derivative(i);
      if (!d.is_zero()) r = gcd(r, d);
      if (r.is_constant()) break;
    }
    if (r.is_constant()) return s.normalized();
    s = divide_exact(s, r);
  }
}

}  // namespace germlab
