#pragma once

// Finite map germs F: (C^n,0) -> (C^n,0) given by polynomial components,
// pullback of hypersurface germs through them, and machine verification of
// the inequality mu(F^{-1}(V)) >= mu(V) together with its smoothness
// corollary on each instance.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/gcd.hpp"
#include "germlab/milnor.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/standard_basis.hpp"

namespace germlab {

class MapGerm {
 public:
  explicit MapGerm(std::vector<Polynomial> components) : components_(std::move(components)) {
    if (components_.empty()) throw ArityMismatchError("map germ needs at least one component");
    const Ring& r = components_.front().ring();
    for (const Polynomial& c : components_)
      if (c.ring() != r) throw RingMismatchError();
    if (components_.size() != r.dimension()) throw ArityMismatchError();
    for (const Polynomial& c : components_)
      if (c.constant_term() != 0)
        throw NotThroughOriginError("map component does not vanish at the origin");
  }

  static MapGerm identity(const Ring& ring) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < ring.dimension(); ++i)
      comps.push_back(Polynomial::variable(ring, i));
    return MapGerm(std::move(comps));
  }

  const Ring& ring() const { return components_.front().ring(); }
  std::span<const Polynomial> components() const { return components_; }

  // (*this) after inner: components of *this evaluated on inner's components.
  MapGerm compose(const MapGerm& inner) const {
    if (ring().dimension() != inner.ring().dimension()) throw ArityMismatchError();
    std::vector<Polynomial> comps;
    for (const Polynomial& c : components_) comps.push_back(c.substitute(inner.components()));
    return MapGerm(std::move(comps));
  }

  friend bool operator==(const MapGerm& a, const MapGerm& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Polynomial> components_;
};

// Colength of the ideal generated by the components; nullopt when infinite
// (the map germ is not finite).
inline std::optional<long long> local_multiplicity(const MapGerm& F,
                                                   unsigned degree_cap = kDefaultDegreeCap) {
  bool any_nonzero = false;
  for (const Polynomial& c : F.components()) any_nonzero = any_nonzero || !c.is_zero();
  if (!any_nonzero) return std::nullopt;
  StandardBasis sb = standard_basis(F.components(), degree_cap);
  return colength(leading_ideal(sb));
}

// g written in the target coordinates, composed with F. pre: g(0) = 0 and the
// arities match.
inline Polynomial pullback(const Polynomial& g, const MapGerm& F) {
  if (g.ring().dimension() != F.ring().dimension()) throw ArityMismatchError();
  if (g.constant_term() != 0) throw NotThroughOriginError();
  return g.substitute(F.components());
}

// Reduced structure of the preimage hypersurface. h is the squarefree part of
// g compose F; when the pullback is h^r up to a constant ("pure"), r is that
// exponent, otherwise r = 1 and h is simply the reduced equation.
struct ReducedPreimage {
  Polynomial pullback;
  Polynomial h;
  long long r;
  bool pure;
};

// pre: g squarefree (not checked; reduce first when unsure), g(0) = 0.
inline ReducedPreimage reduced_preimage(const Polynomial& g, const MapGerm& F) {
  Polynomial pull = pullback(g, F);
  if (pull.is_zero()) throw ZeroPullbackError();
  Polynomial h = squarefree_part(pull);
  long long r = 0;
  Polynomial q = pull;
  for (;;) {
    if (q.is_constant()) break;
    try {
      q = divide_exact(q, h);
    } catch (const NotDivisibleError&) {
      break;
    }
    ++r;
  }
  bool pure = q.is_constant();
  return ReducedPreimage{std::move(pull), std::move(h), pure ? r : 1, pure};
}

enum class Verdict { Holds, Violated, Skipped };

enum class SkipReason {
  None,
  MapNotFinite,
  MuVNonIsolated,
  MuWNonIsolated,
  DegreeCapExceeded,
  ZeroPullback,
  GenerationExhausted,  // only produced at suite level
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

inline const char* to_string(SkipReason r) {
  switch (r) {
    case SkipReason::None: return "none";
    case SkipReason::MapNotFinite: return "map_not_finite";
    case SkipReason::MuVNonIsolated: return "mu_v_non_isolated";
    case SkipReason::MuWNonIsolated: return "mu_w_non_isolated";
    case SkipReason::DegreeCapExceeded: return "degree_cap_exceeded";
    case SkipReason::ZeroPullback: return "zero_pullback";
    case SkipReason::GenerationExhausted: return "generation_exhausted";
  }
  return "?";
}

// Everything one instance of the statement produces. The verdicts are Holds
// or Violated only when both Milnor numbers exist; otherwise both verdicts
// are Skipped and skip_reason says why.
struct VerificationReport {
  Polynomial g_reduced;
  std::optional<MilnorResult> mu_v;
  std::optional<MilnorResult> mu_w;
  std::optional<long long> multiplicity;  // of F, present iff finite and computed
  std::optional<ReducedPreimage> preimage;
  Verdict inequality = Verdict::Skipped;
  Verdict corollary = Verdict::Skipped;
  SkipReason skip_reason = SkipReason::None;
};

// Checks mu(W) >= mu(V) for V = {g = 0}, W = F^{-1}(V) at the origin, and the
// corollary "W smooth at 0 implies V smooth at 0". pre: g nonzero, g(0) = 0.
inline VerificationReport verify_theorem(const Polynomial& g, const MapGerm& F,
                                         unsigned degree_cap = kDefaultDegreeCap) {
  if (g.is_zero()) throw ZeroPolynomialError();
  if (g.constant_term() != 0) throw NotThroughOriginError();
  if (g.ring().dimension() != F.ring().dimension()) throw ArityMismatchError();

  VerificationReport rep{squarefree_part(g)};
  auto skipped = [&](SkipReason why) {
    rep.inequality = Verdict::Skipped;
    rep.corollary = Verdict::Skipped;
    rep.skip_reason = why;
    return rep;
  };

  try {
    rep.mu_v = milnor_number(rep.g_reduced, degree_cap);
    rep.multiplicity = local_multiplicity(F, degree_cap);
    if (!rep.multiplicity) return skipped(SkipReason::MapNotFinite);
    if (rep.mu_v->kind == MilnorResult::Kind::NonIsolated)
      return skipped(SkipReason::MuVNonIsolated);
    try {
      rep.preimage = reduced_preimage(rep.g_reduced, F);
    } catch (const ZeroPullbackError&) {
      return skipped(SkipReason::ZeroPullback);
    }
    rep.mu_w = milnor_number(rep.preimage->h, degree_cap);
    if (rep.mu_w->kind == MilnorResult::Kind::NonIsolated)
      return skipped(SkipReason::MuWNonIsolated);
  } catch (const DegreeCapExceededError&) {
    return skipped(SkipReason::DegreeCapExceeded);
  }

  long long mu_v = rep.mu_v->mu;
  long long mu_w = rep.mu_w->mu;
  rep.inequality = mu_w >= mu_v ? Verdict::Holds : Verdict::Violated;
  rep.corollary = (mu_w == 0 && mu_v != 0) ? Verdict::Violated : Verdict::Holds;
  return rep;
}

}  // namespace germlab
