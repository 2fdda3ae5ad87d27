#pragma once

// Milnor number of a hypersurface germ at the origin: the colength of the
// Jacobian ideal, computed through a local standard basis of the partials.

#include <cstddef>
#include <optional>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/standard_basis.hpp"

namespace germlab {

struct MilnorResult {
  enum class Kind { NotThroughOrigin, SmoothPoint, Finite, NonIsolated };

  Kind kind;
  long long mu;  // 0 for SmoothPoint, >= 1 for Finite, 0 otherwise (no meaning)

  static MilnorResult not_through_origin() { return {Kind::NotThroughOrigin, 0}; }
  static MilnorResult smooth_point() { return {Kind::SmoothPoint, 0}; }
  static MilnorResult finite(long long mu) { return {Kind::Finite, mu}; }
  static MilnorResult non_isolated() { return {Kind::NonIsolated, 0}; }

  // True when mu carries the Milnor number (smooth germs have mu = 0).
  bool has_mu() const { return kind == Kind::SmoothPoint || kind == Kind::Finite; }

  friend bool operator==(const MilnorResult&, const MilnorResult&) = default;
};

// The n partial derivatives of f, in variable order.
inline std::vector<Polynomial> jacobian_ideal(const Polynomial& f) {
  if (f.is_constant()) throw ConstantInputError();
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < f.ring().dimension(); ++i)
    partials.push_back(f.partial_derivative(i));
  return partials;
}

// Classify the germ of {f = 0} at the origin. Non-reduced f is not detected
// here (its singular locus is fat, so it simply comes out NonIsolated); pass
// squarefree_part(f) when reducedness is not known.
inline MilnorResult milnor_number(const Polynomial& f, unsigned degree_cap = kDefaultDegreeCap) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (f.constant_term() != 0) return MilnorResult::not_through_origin();
  std::vector<Polynomial> partials = jacobian_ideal(f);
  for (const Polynomial& d : partials)
    if (d.constant_term() != 0) return MilnorResult::smooth_point();
  StandardBasis sb = standard_basis(partials, degree_cap);
  std::optional<long long> c = colength(leading_ideal(sb));
  if (!c) return MilnorResult::non_isolated();
  return MilnorResult::finite(*c);
}

}  // namespace germlab
