#pragma once

// Independent engine for the Milnor number: dimension counting in Macaulay
// truncations. For rising D it computes dim Q[x]/(J + m^D) by exact linear
// algebra and stops at the first D with dim(D) = dim(D+1); by Nakayama that
// forces m^D inside J, so the stable value is the colength of J itself.
//
// Deliberately built only on the polynomial layer (no standard bases), so it
// cross-checks the Mora engine without sharing its code path.

#include <cstddef>
#include <map>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/monomial.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/rational.hpp"

namespace germlab {

inline constexpr unsigned kDefaultOracleDegreeCap = 24;

namespace detail {

// All monomials of degree < bound in n variables, with their column index.
inline std::map<Monomial, std::size_t, GrevlexGreater> monomial_columns(std::size_t n,
                                                                        unsigned bound) {
  std::map<Monomial, std::size_t, GrevlexGreater> cols;
  std::vector<unsigned> exps(n, 0);
  for (;;) {
    unsigned deg = 0;
    for (unsigned e : exps) deg += e;
    if (deg < bound) cols.emplace(Monomial(exps), 0);
    std::size_t i = 0;
    while (i < n && exps[i] + 1 >= bound) exps[i++] = 0;
    if (i == n) break;
    ++exps[i];
  }
  std::size_t idx = 0;
  for (auto& [m, c] : cols) c = idx++;
  return cols;
}

using SparseRow = std::map<std::size_t, Rational>;

// Rank over Q by incremental elimination against a pivot table.
class RowEchelon {
 public:
  // Reduces the row against current pivots; keeps it if independent.
  void insert(SparseRow row) {
    for (;;) {
      if (row.empty()) return;
      auto lead = row.begin()->first;
      auto piv = pivots_.find(lead);
      if (piv == pivots_.end()) {
        Rational lc = row.begin()->second;
        for (auto& [c, v] : row) v /= lc;
        pivots_.emplace(lead, std::move(row));
        return;
      }
      Rational factor = row.begin()->second;
      for (const auto& [c, v] : piv->second) {
        auto it = row.find(c);
        if (it == row.end()) {
          row.emplace(c, -factor * v);
        } else {
          it->second -= factor * v;
          if (it->second == 0) row.erase(it);
        }
      }
    }
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

// dim Q[x]/(J + m^D) where J is spanned by the given polynomials.
inline long long truncation_dimension(const std::vector<Polynomial>& gens, std::size_t n,
                                      unsigned D) {
  auto cols = monomial_columns(n, D);
  RowEchelon echelon;
  std::vector<unsigned> exps(n, 0);
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    unsigned ord = *g.order_at_origin();
    if (ord >= D) continue;
    // Rows m*g for all monomials m of degree < D - ord; higher m only
    // contribute inside m^D.
    unsigned mbound = D - ord;
    std::vector<unsigned> mexps(n, 0);
    for (;;) {
      unsigned mdeg = 0;
      for (unsigned e : mexps) mdeg += e;
      if (mdeg < mbound) {
        Monomial m(mexps);
        SparseRow row;
        for (const auto& [gm, gc] : g.terms()) {
          Monomial prod = m * gm;
          if (prod.degree() >= D) continue;
          auto it = cols.find(prod);
          row.emplace(it->second, gc);
        }
        echelon.insert(std::move(row));
      }
      std::size_t i = 0;
      while (i < n && mexps[i] + 1 >= mbound) mexps[i++] = 0;
      if (i == n) break;
      ++mexps[i];
    }
  }
  return static_cast<long long>(cols.size()) - static_cast<long long>(echelon.rank());
}

}  // namespace detail

// Milnor number by stabilized truncation dimensions. pre: f nonzero, f(0) = 0,
// and the singularity is isolated; if the dimensions never stabilize below the
// cap this throws CapExceededWithoutStabilizationError (which says nothing
// about isolatedness, only that the cap was too small to tell).
inline long long milnor_oracle(const Polynomial& f, unsigned degree_cap = kDefaultOracleDegreeCap) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (f.constant_term() != 0) throw NotThroughOriginError();
  std::size_t n = f.ring().dimension();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(f.partial_derivative(i));
  long long prev = detail::truncation_dimension(gens, n, 1);
  for (unsigned D = 2; D <= degree_cap; ++D) {
    long long cur = detail::truncation_dimension(gens, n, D);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw CapExceededWithoutStabilizationError(degree_cap);
}

}  // namespace germlab
