#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fodlab/rational.hpp"

namespace fodlab {

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic comparison: higher total degree first, then
/// lexicographically larger exponent vector first.
bool grlex_before(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exponents;
  Rational coefficient;

  bool operator==(const Term&) const = default;
};

/// Multivariate polynomial over the rationals in canonical form.
///
/// Terms are kept sorted in descending graded-lex order with distinct
/// exponent vectors and nonzero coefficients, so two polynomials are equal
/// as values exactly when they compare equal here.
class Poly {
 public:
  explicit Poly(std::size_t arity = 0) : arity_(arity) {}

  /// Merges duplicate monomials, drops zero coefficients and sorts.
  /// Throws ArityError if an exponent vector has the wrong length.
  static Poly normalize(std::vector<Term> raw, std::size_t arity);

  static Poly zero(std::size_t arity) { return Poly(arity); }
  static Poly constant(std::size_t arity, const Rational& c);
  static Poly variable(std::size_t arity, std::size_t index);
  static Poly monomial(Exponents exponents, const Rational& c);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Maximum over terms of the summed exponents of variables [first, first+count).
  int degree_in(std::size_t first, std::size_t count) const;

  /// If this is exactly x_i (coefficient 1), returns i; otherwise -1.
  long as_variable() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  Poly pow(std::uint32_t k) const;

  /// Power-rule derivative with respect to variable `index`.
  Poly partial(std::size_t index) const;

  /// Substitutes images[j] for x_j. All images must share one arity.
  Poly substitute(std::span<const Poly> images, std::size_t result_arity) const;

  /// Evaluates over any commutative ring R; `lift` maps coefficients into R.
  template <class R, class Lift>
  R evaluate(std::span<const R> point, Lift lift, const R& zero, const R& one) const;

  Rational evaluate(std::span<const Rational> point) const;

  bool operator==(const Poly&) const = default;

 private:
  std::size_t arity_;
  std::vector<Term> terms_;
};

/// Renders with variables x0, x1, ...; parseable by parse_poly.
std::string to_string(const Poly& p);

template <class R, class Lift>
R Poly::evaluate(std::span<const R> point, Lift lift, const R& zero, const R& one) const {
  R acc = zero;
  for (const Term& t : terms_) {
    R m = lift(t.coefficient);
    for (std::size_t j = 0; j < t.exponents.size(); ++j) {
      R power = one;
      for (std::uint32_t k = 0; k < t.exponents[j]; ++k) power = power * point[j];
      m = m * power;
    }
    acc = acc + m;
  }
  return acc;
}

}  // namespace fodlab
