#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isolab/rational.hpp"

namespace isolab {

/// One-variable polynomial with exact rational coefficients.
///
/// Coefficients are stored by ascending power with no trailing zeros, so the
/// degree is always coefficients().size() - 1. The zero polynomial has an
/// empty coefficient list and degree() reports -1 for it.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(Rational value);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient of t^power; zero when power exceeds the degree.
  Rational coefficient(std::size_t power) const;

  /// Exact Horner evaluation.
  Rational operator()(const Rational& t) const;

  /// Argument scaling: returns s with s(t) = q(factor * t). Same degree as q.
  Polynomial scale_arg(const Int& factor) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Deterministic human-readable form by ascending power, e.g.
  /// "1 + 3*n + 2*n^2 - n^3". The zero polynomial prints as "0".
  std::string str(std::string_view var = "n") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& scalar);

/// Binomial coefficient C(n, k); zero when k > n.
Int binomial(unsigned n, unsigned k);

/// Alternating binomial sum of a prefix at shift r:
///   sum_{k=0}^{m} C(m,k) (-1)^k a[r+k].
/// This vanishes for every r exactly when the data is interpolated by a
/// polynomial of degree at most m-1. (It differs from the classical forward
/// difference by the factor (-1)^m; the vanishing locus is identical.)
///
/// Throws InsufficientData when the prefix has fewer than r+m+1 entries.
Rational alt_sum(std::span<const Rational> prefix, unsigned m, std::size_t r);

/// Exact interpolation through the given (node, value) pairs. Returns the
/// unique polynomial of degree <= points.size() - 1 hitting every pair.
/// Throws DuplicateNode if two nodes coincide.
Polynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

/// Smallest d such that every computable (d+1)-th alternating difference of
/// the prefix vanishes. An N-point prefix can never certify a degree above
/// N-2, so N-1 is returned as "no compression" when no smaller d works.
std::size_t min_interp_degree(std::span<const Rational> prefix);

}  // namespace isolab
