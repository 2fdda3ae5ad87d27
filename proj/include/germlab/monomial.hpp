#pragma once

// Power products as exponent vectors, plus the global graded reverse-lex
// order used for canonical term storage and printing.

#include <cassert>
#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace germlab {

class Monomial {
 public:
  // The monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0), degree_(0) {}

  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)), degree_(0) {
    for (unsigned e : exps_) degree_ += e;
  }

  // x_i^e in n variables.
  static Monomial variable(std::size_t n, std::size_t i, unsigned e = 1) {
    assert(i < n);
    Monomial m(n);
    m.exps_[i] = e;
    m.degree_ = e;
    return m;
  }

  std::size_t arity() const { return exps_.size(); }
  unsigned exponent(std::size_t i) const {
    assert(i < exps_.size());
    return exps_[i];
  }
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const {
    assert(arity() == o.arity());
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    assert(arity() == o.arity());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  // Quotient o / this; pre: this->divides(o).
  Monomial quotient_of(const Monomial& o) const {
    assert(divides(o));
    Monomial r(arity());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = o.exps_[i] - exps_[i];
    r.degree_ = o.degree_ - degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    assert(a.arity() == b.arity());
    Monomial r(a.arity());
    for (std::size_t i = 0; i < r.exps_.size(); ++i) {
      r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  // Disjoint supports.
  bool coprime_with(const Monomial& o) const {
    assert(arity() == o.arity());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
  }

  // Index of the single supporting variable, if the support has size <= 1.
  // For the monomial 1 the support is empty and any box bound works, so the
  // caller treats it separately; here 1 yields nullopt.
  std::optional<std::size_t> sole_variable() const {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (found) return std::nullopt;
      found = i;
    }
    return found;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
  unsigned degree_;
};

// Graded reverse-lexicographic: higher total degree wins; on equal degree the
// monomial whose trailing exponent difference is negative wins. 1 is minimal.
inline std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  assert(a.arity() == b.arity());
  if (a.degree() != b.degree())
    return a.degree() < b.degree() ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = a.arity(); i-- > 0;) {
    unsigned ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// Descending grevlex; map iteration then visits the leading term first.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) == std::strong_ordering::greater;
  }
};

}  // namespace germlab
