#pragma once

// Local standard bases via Mora's tangent-cone algorithm: Buchberger's pair
// loop where every reduction is a Mora weak normal form w.r.t. the ds order.
// All computations carry a hard degree cap; walking past it raises
// DegreeCapExceededError instead of looping forever, which keeps the strictly
// ds-decreasing leading monomial argument inside a finite monomial set.
//
// Every intermediate polynomial is kept integer-primitive. A weak normal
// form is only determined up to a unit, and constants are units in the local
// ring, so rescaling after each step is free; it keeps coefficients small
// where reduction chains would otherwise blow up rational numerators.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/local_order.hpp"
#include "germlab/monomial.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

inline constexpr unsigned kDefaultDegreeCap = 60;

struct StandardBasis {
  std::vector<Polynomial> generators;       // integer-primitive
  std::vector<Monomial> leading_monomials;  // ds-leading monomial of each generator
};

namespace detail {

// Highest-corner degree bound. Once the leading monomials hold a pure power
// x_i^(e_i) of every variable, every standard monomial divides
// prod x_i^(e_i - 1), so any monomial of degree above the largest standard
// monomial degree is ds-below the smallest standard monomial and hence lies
// in the ideal. Terms with such monomials may be cut from any intermediate:
// that only subtracts ideal elements, which weak normal forms ignore.
// The exact bound comes from enumerating the finite box under the pure
// powers; oversized boxes fall back to the sum bound.
inline std::optional<unsigned> corner_degree(std::span<const Monomial> lms) {
  if (lms.empty()) return std::nullopt;
  std::size_t n = lms.front().arity();
  std::vector<unsigned> pure(n, 0);
  for (const Monomial& lm : lms) {
    if (lm.is_one()) return 0;
    auto v = lm.sole_variable();
    if (!v) continue;
    unsigned e = lm.exponent(*v);
    if (pure[*v] == 0 || e < pure[*v]) pure[*v] = e;
  }
  unsigned long long volume = 1;
  unsigned sum_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pure[i] == 0) return std::nullopt;
    volume *= pure[i];
    sum_bound += pure[i] - 1;
  }
  if (volume > 200000) return sum_bound;
  unsigned best = 0;
  std::vector<unsigned> exps(n, 0);
  for (;;) {
    Monomial m(exps);
    bool contained = false;
    for (const Monomial& lm : lms)
      if (lm.divides(m)) {
        contained = true;
        break;
      }
    if (!contained && m.degree() > best) best = m.degree();
    std::size_t i = 0;
    while (i < n && exps[i] + 1 >= pure[i]) exps[i++] = 0;
    if (i == n) break;
    ++exps[i];
  }
  return best;
}

// Copy of p with every term of degree above bound dropped. Grevlex is
// graded, so those terms form a prefix of the term map.
inline Polynomial truncate_above(const Polynomial& p, unsigned bound) {
  Polynomial r = p;
  while (!r.is_zero() && r.degree() > bound) {
    const auto& [m, c] = *r.terms().begin();
    r -= Polynomial::term(r.ring(), m, c);
  }
  return r;
}

// Shrink an ideal element using the corner bound. A monomial of degree above
// the bound lies in the ideal by itself, so when the leading monomial sits
// above the bound the bare monomial replaces the whole polynomial; otherwise
// only the tail above the bound is cut. Either way the leading monomial and
// ideal membership survive.
inline Polynomial compact_to_corner(const Polynomial& p, unsigned corner) {
  Monomial lm = local_leading_monomial(p);
  if (lm.degree() > corner) return Polynomial::term(p.ring(), lm, Rational(1));
  return integer_primitive(truncate_above(p, corner));
}


// Reducer with cached local leading data.
struct Reducer {
  Polynomial poly;
  Monomial lm;
  Rational lc;
  unsigned ecart;

  explicit Reducer(Polynomial p)
      : poly(std::move(p)), lm(local_leading_monomial(poly)), lc(poly.coefficient(lm)),
        ecart(poly.degree() - lm.degree()) {}
};

// gcd of the integer coefficients; pre: every denominator is 1.
inline Rational integer_content(const Polynomial& p) {
  Integer content(0);
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
    if (content == 1) break;
  }
  return Rational(content);
}

// Rewrites every tail monomial some reducer leading monomial divides, so the
// tail ends up supported on standard monomials only; the leading term and
// ideal membership survive (each step subtracts a polynomial multiple of a
// reducer). Requires a corner bound: inside the finite monomial box below
// the bound the scan position is a strictly ds-decreasing monomial, so plain
// division terminates. Steps are fraction-free on the working remainder;
// scale records the constant they have multiplied in, so a term moves to the
// output with a single exact division.
inline Polynomial tail_reduce(const Polynomial& g, std::span<const Reducer> reducers,
                              unsigned corner) {
  if (g.term_count() <= 1) return g;
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  auto [glm, glc] = local_leading_term(g);
  Polynomial done = Polynomial::term(g.ring(), glm, glc);
  Polynomial rest = g;
  rest -= done;
  Rational scale(1);
  while (!rest.is_zero()) {
    if (rest.degree() > corner) {
      rest = truncate_above(rest, corner);
      if (rest.is_zero()) break;
    }
    auto [m, c] = local_leading_term(rest);
    std::size_t chosen = npos;
    for (std::size_t i = 0; i < reducers.size(); ++i)
      if (reducers[i].lm.divides(m) && (chosen == npos || reducers[i].ecart < reducers[chosen].ecart))
        chosen = i;
    if (chosen == npos) {
      done += Polynomial::term(g.ring(), m, c / scale);
      rest -= Polynomial::term(g.ring(), m, c);
      continue;
    }
    scale *= reducers[chosen].lc;
    rest *= reducers[chosen].lc;
    rest -= reducers[chosen].poly.times_term(reducers[chosen].lm.quotient_of(m), c);
    if (rest.is_zero()) break;
    Rational content = integer_content(rest);
    if (content != 1) {
      Rational inv = Rational(1) / content;
      rest *= inv;
      scale *= inv;
    }
  }
  return integer_primitive(done);
}

inline Polynomial mora_normal_form_impl(const Polynomial& p, std::vector<Reducer>& reducers,
                                        unsigned degree_cap, std::optional<unsigned> corner) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const std::size_t base = reducers.size();
  Polynomial h = integer_primitive(p);
  for (;;) {
    if (corner && !h.is_zero() && h.degree() > *corner) {
      h = truncate_above(h, *corner);
      if (Rational s = integer_primitive_scale(h); s != 1) h *= s;
    }
    if (h.is_zero()) return h;
    if (h.degree() > degree_cap) throw DegreeCapExceededError(degree_cap);
    Monomial hm = local_leading_monomial(h);
    Rational hc = h.coefficient(hm);
    unsigned h_ecart = h.degree() - hm.degree();
    std::size_t chosen = npos;
    for (std::size_t i = 0; i < reducers.size(); ++i)
      if (reducers[i].lm.divides(hm) && (chosen == npos || reducers[i].ecart < reducers[chosen].ecart))
        chosen = i;
    if (chosen == npos) return h;
    // Mora's twist: remembering the current h keeps later ecarts in check and
    // is what makes the loop terminate for local orders. Under a corner bound
    // the walk is already confined to the finite set of monomials below the
    // bound, where plain division terminates on its own; skipping the
    // insertion there keeps the reducer set small. A remembered remainder
    // whose leading monomial is a multiple of an earlier remembered one is
    // skipped as well: the earlier one already reaches every monomial the new
    // one would, and it carries smaller coefficients (each remembered
    // remainder inherits the bits of the ones used to build it, so keeping
    // only the divisibility-minimal remainders stops the sizes compounding).
    // The degree cap keeps the division confined to a finite monomial set, so
    // the walk still terminates with the thinned reducer list.
    if (!corner && reducers[chosen].ecart > h_ecart) {
      bool covered = false;
      for (std::size_t i = base; i < reducers.size() && !covered; ++i)
        covered = reducers[i].lm.divides(hm);
      if (!covered) reducers.emplace_back(h);
    }
    // Fraction-free step h := lc(g)*h - lc(h)*(m*g); the leading terms cancel.
    h *= reducers[chosen].lc;
    h -= reducers[chosen].poly.times_term(reducers[chosen].lm.quotient_of(hm), hc);
    if (h.is_zero()) return h;
    if (Rational s = integer_primitive_scale(h); s != 1) h *= s;
  }
}

}  // namespace detail

// Weak normal form of p modulo the (not necessarily complete) family gens,
// returned integer-primitive (a unit multiple of any other weak normal form).
// The result is either 0 or has a ds-leading monomial not divisible by any
// LM(gens[i]); when gens is a standard basis this decides ideal membership.
inline Polynomial mora_normal_form(const Polynomial& p, std::span<const Polynomial> gens,
                                   unsigned degree_cap = kDefaultDegreeCap) {
  std::vector<detail::Reducer> reducers;
  reducers.reserve(gens.size());
  std::vector<Monomial> lms;
  for (const Polynomial& g : gens) {
    if (g.ring() != p.ring()) throw RingMismatchError();
    if (g.is_zero()) throw ZeroPolynomialError();
    reducers.emplace_back(integer_primitive(g));
    lms.push_back(reducers.back().lm);
  }
  return detail::mora_normal_form_impl(p, reducers, degree_cap, detail::corner_degree(lms));
}

inline StandardBasis standard_basis(std::span<const Polynomial> gens,
                                    unsigned degree_cap = kDefaultDegreeCap) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (!gens.empty() && g.ring() != gens.front().ring()) throw RingMismatchError();
    if (!g.is_zero()) basis.push_back(integer_primitive(g));
  }
  if (basis.empty()) throw EmptyIdealError();

  std::vector<Monomial> lms;
  std::vector<Rational> lcs;
  for (const Polynomial& g : basis) {
    lms.push_back(local_leading_monomial(g));
    lcs.push_back(g.coefficient(lms.back()));
  }

  // Pair order is free, and the corner bound is what tames everything, so
  // pairs are keyed first by the lcm degree in variables that already carry a
  // pure power: pairs pushing toward the missing pure powers run first and
  // activate the corner sooner. With every variable covered the key is the
  // plain lcm degree; keys are fixed at queue time, which keeps the order
  // deterministic.
  std::size_t n = basis.front().ring().dimension();
  std::vector<bool> has_pure(n, false);
  auto note_pure = [&](const Monomial& lm) {
    if (auto v = lm.sole_variable()) has_pure[*v] = true;
  };
  for (const Monomial& lm : lms) note_pure(lm);
  auto covered_degree = [&](const Monomial& l) {
    unsigned k = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (has_pure[v]) k += l.exponent(v);
    return k;
  };

  // (covered deg, deg lcm, i, j) with i < j, processed in ascending order.
  std::set<std::tuple<unsigned, unsigned, std::size_t, std::size_t>> pairs;
  auto queue_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(lms[i], lms[j]);
      pairs.emplace(covered_degree(l), l.degree(), i, j);
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) queue_pairs_for(j);

  // Pair order is free, so before the staircase closes reductions run under
  // a working cap that starts low and doubles only when no pair succeeds.
  // A pair whose reduction expands past the working cap is deferred and
  // retried after the basis grows: new leading monomials are what close the
  // staircase and tame exactly the chains that blow up. Once a corner bound
  // at or under the full cap exists, truncation bounds every chain and the
  // full cap applies directly. Only pairs that still exceed the full cap
  // once it is reached surface the error.
  unsigned max_gen_degree = 0;
  for (const Polynomial& g : basis) max_gen_degree = std::max(max_gen_degree, g.degree());
  unsigned working_cap = std::min(degree_cap, max_gen_degree + 8);
  std::vector<std::tuple<unsigned, unsigned, std::size_t, std::size_t>> deferred;
  std::optional<unsigned> corner = detail::corner_degree(lms);

  // With a corner in hand the basis itself gets compacted, so reducers and
  // their tails stay inside the finite box the corner bounds.
  auto compact_basis = [&]() {
    if (!corner) return;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].degree() <= *corner) continue;
      basis[k] = detail::compact_to_corner(basis[k], *corner);
      lcs[k] = basis[k].coefficient(lms[k]);
    }
  };
  compact_basis();

  auto make_reducers = [&]() {
    std::vector<detail::Reducer> reducers;
    reducers.reserve(basis.size());
    for (const Polynomial& g : basis) reducers.emplace_back(g);
    return reducers;
  };

  // Small tails keep every later reduction step cheap: once the corner is in
  // hand each element's tail is rewritten onto standard monomials, and each
  // appended element gets the same treatment on arrival.
  auto tail_reduce_at = [&](std::size_t k) {
    auto reducers = make_reducers();
    basis[k] = detail::tail_reduce(basis[k], reducers, *corner);
    lcs[k] = basis[k].coefficient(lms[k]);
  };
  // Deep elements first: their rewrites land in ds-late territory, so once
  // they are small every later walk only meets small reducers.
  auto tail_reduce_all = [&]() {
    if (!corner) return;
    for (std::size_t k = basis.size(); k-- > 0;) tail_reduce_at(k);
  };
  tail_reduce_all();

  while (!pairs.empty() || !deferred.empty()) {
    if (pairs.empty()) {
      if (working_cap >= degree_cap) throw DegreeCapExceededError(degree_cap);
      working_cap = std::min(working_cap * 2, degree_cap);
      pairs.insert(deferred.begin(), deferred.end());
      deferred.clear();
      continue;
    }
    auto [key, d, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    Monomial l = Monomial::lcm(lms[i], lms[j]);
    // Product criterion: coprime leading monomials give an S-polynomial that
    // always reduces to zero.
    if (l.degree() == lms[i].degree() + lms[j].degree()) continue;
    // Fraction-free S-polynomial lc_j*(m_i*g_i) - lc_i*(m_j*g_j).
    Polynomial s = basis[i].times_term(lms[i].quotient_of(l), lcs[j]) -
                   basis[j].times_term(lms[j].quotient_of(l), lcs[i]);
    if (s.is_zero()) continue;
    unsigned eff_cap = corner && *corner <= degree_cap ? degree_cap : working_cap;
    Polynomial nf(s.ring());
    try {
      auto reducers = make_reducers();
      nf = detail::mora_normal_form_impl(s, reducers, eff_cap, corner);
    } catch (const DegreeCapExceededError&) {
      deferred.emplace_back(key, d, i, j);
      continue;
    }
    if (nf.is_zero()) continue;
    basis.push_back(nf);
    lms.push_back(local_leading_monomial(basis.back()));
    lcs.push_back(basis.back().coefficient(lms.back()));
    note_pure(lms.back());
    queue_pairs_for(basis.size() - 1);
    bool had_corner = corner.has_value();
    corner = detail::corner_degree(lms);
    compact_basis();
    if (corner && !had_corner)
      tail_reduce_all();
    else if (corner)
      tail_reduce_at(basis.size() - 1);
    pairs.insert(deferred.begin(), deferred.end());
    deferred.clear();
  }

  // Drop generators whose leading monomial another one already covers; the
  // remaining family still has the same leading ideal, hence stays standard.
  StandardBasis out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !lms[j].divides(lms[i])) continue;
      if (lms[j] == lms[i] && j > i) continue;  // among equal LMs keep the first
      redundant = true;
    }
    if (!redundant) {
      out.generators.push_back(basis[i]);
      out.leading_monomials.push_back(lms[i]);
    }
  }
  return out;
}

// Re-checks Buchberger's criterion on a finished basis. Test hook.
inline bool is_complete(const StandardBasis& sb, unsigned degree_cap = kDefaultDegreeCap) {
  const auto& b = sb.generators;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Monomial l = Monomial::lcm(sb.leading_monomials[i], sb.leading_monomials[j]);
      Rational ci = b[i].coefficient(sb.leading_monomials[i]);
      Rational cj = b[j].coefficient(sb.leading_monomials[j]);
      Polynomial s = b[i].times_term(sb.leading_monomials[i].quotient_of(l), cj) -
                     b[j].times_term(sb.leading_monomials[j].quotient_of(l), ci);
      if (s.is_zero()) continue;
      if (!mora_normal_form(s, b, degree_cap).is_zero()) return false;
    }
  return true;
}

// Monomial ideal held by its minimal generating set.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::vector<Monomial> gens) {
    // Minimal generators are the ones no other generator divides.
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
        if (i == j) continue;
        if (gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i)) redundant = true;
      }
      if (!redundant) gens_.push_back(gens[i]);
    }
  }

  const std::vector<Monomial>& generators() const { return gens_; }

  bool contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

 private:
  std::vector<Monomial> gens_;
};

inline MonomialIdeal leading_ideal(const StandardBasis& sb) {
  return MonomialIdeal(sb.leading_monomials);
}

// Number of standard monomials (those outside the ideal); nullopt means
// infinitely many. Finite iff every variable has a pure power among the
// generators; in that case the standard monomials live in the box below
// those pure powers.
inline std::optional<long long> colength(const MonomialIdeal& ideal) {
  if (ideal.generators().empty()) return std::nullopt;
  std::size_t n = ideal.generators().front().arity();
  for (const Monomial& g : ideal.generators())
    if (g.is_one()) return 0;
  std::vector<unsigned> box(n, 0);
  std::vector<bool> have(n, false);
  for (const Monomial& g : ideal.generators()) {
    auto v = g.sole_variable();
    if (!v) continue;
    unsigned e = g.exponent(*v);
    if (!have[*v] || e < box[*v]) box[*v] = e;
    have[*v] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!have[i]) return std::nullopt;

  long long count = 0;
  std::vector<unsigned> exps(n, 0);
  for (;;) {
    if (!ideal.contains(Monomial(exps))) ++count;
    std::size_t i = 0;
    while (i < n && exps[i] + 1 >= box[i]) exps[i++] = 0;
    if (i == n) break;
    ++exps[i];
  }
  return count;
}

}  // namespace germlab
