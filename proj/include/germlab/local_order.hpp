#pragma once

// Negative degree-reverse-lexicographic order ("ds"): lower total degree is
// larger, ties broken reverse-lexicographically. 1 is the largest monomial,
// and the order is multiplicative, which is what local computations need.

#include <cassert>
#include <compare>
#include <iterator>

#include "germlab/errors.hpp"
#include "germlab/monomial.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

struct LocalOrder {
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    assert(a.arity() == b.arity());
    if (a.degree() != b.degree())
      return a.degree() < b.degree() ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    for (std::size_t i = a.arity(); i-- > 0;) {
      unsigned ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
};

struct DsGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return LocalOrder{}.greater(a, b);
  }
};

// Term of p that leads w.r.t. the local order; pre: p nonzero.
// Terms are stored grevlex-descending, so equal degrees sit in contiguous
// blocks with the minimal-degree block at the tail, and within one degree
// block map order coincides with ds order. The ds-leading term is therefore
// the first element of the tail block.
inline const std::pair<const Monomial, Rational>& local_leading_term(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  auto it = std::prev(p.terms().end());
  unsigned d0 = it->first.degree();
  while (it != p.terms().begin() && std::prev(it)->first.degree() == d0) --it;
  return *it;
}

inline const Monomial& local_leading_monomial(const Polynomial& p) {
  return local_leading_term(p).first;
}

// Scale so the local leading coefficient becomes 1; pre: p nonzero.
inline Polynomial ds_monic(const Polynomial& p) {
  return p / local_leading_term(p).second;
}

// deg(p) - deg(LM_ds(p)): how far p is from being its own tangent cone.
inline unsigned ecart(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  return p.degree() - local_leading_monomial(p).degree();
}

}  // namespace germlab
