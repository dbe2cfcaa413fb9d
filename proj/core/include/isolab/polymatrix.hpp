#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "isolab/polynomial.hpp"
#include "isolab/rational.hpp"
#include "isolab/sequences.hpp"

namespace isolab {

/// Finite window of a matrix whose rows must be degree-<= row_bound
/// sequences and whose columns must be degree-<= col_bound sequences.
///
/// Indices start at 1 in both coordinates: the row index i is the
/// y-coordinate and the column index j the x-coordinate. Nontrivial
/// verification requires rows >= col_bound + 2 and cols >= row_bound + 2
/// (enough points to falsify either degree bound).
class Grid {
 public:
  Grid(std::size_t rows, std::size_t cols, unsigned row_bound, unsigned col_bound,
       std::vector<Rational> entries_row_major);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned row_bound() const { return row_bound_; }
  unsigned col_bound() const { return col_bound_; }

  /// 1-based access: at(i, j) with 1 <= i <= rows, 1 <= j <= cols.
  const Rational& at(std::size_t i, std::size_t j) const;

  SequencePrefix row(std::size_t i) const;
  SequencePrefix column(std::size_t j) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  unsigned row_bound_;
  unsigned col_bound_;
  std::vector<Rational> entries_;
};

/// Result of a grid check; on failure the offending row or column is named
/// together with the sequence-level verdict inside it.
struct GridVerdict {
  enum class Axis { row, column };

  bool holds = true;
  std::optional<Axis> axis;
  std::optional<std::size_t> index;  // 1-based row/column number
  MVerdict inner;
};

/// Verifies every row against the row degree bound and every column against
/// the column degree bound. Throws InsufficientData when the window is too
/// small to falsify the bounds.
GridVerdict check_grid(const Grid& grid);

/// Two-variable polynomial r(y, x); coefficient(i, j) multiplies y^i x^j.
class TwoVarPoly {
 public:
  TwoVarPoly() = default;
  /// coeffs[i][j] multiplies y^i x^j; rows are trimmed like Polynomial.
  explicit TwoVarPoly(std::vector<std::vector<Rational>> coeffs);

  int degree_y() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree_x() const;
  const std::vector<std::vector<Rational>>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i, std::size_t j) const;

  Rational operator()(const Rational& y, const Rational& x) const;

  /// Restriction to the diagonal: q(s) = r(s, s), degree <= deg_y + deg_x.
  Polynomial diagonal() const;

  friend bool operator==(const TwoVarPoly& a, const TwoVarPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Deterministic form such as "1 + 2*x + x^2 + y + x*y - x^2*y".
  std::string str() const;

 private:
  void trim();

  std::vector<std::vector<Rational>> coeffs_;
};

/// Reconstructs the unique r with degree_y <= col_bound and
/// degree_x <= row_bound interpolating the whole grid. The construction
/// interpolates the first col_bound+1 rows only and then verifies every
/// remaining entry, so a window whose columns break the degree bound is
/// rejected with VerificationFailed rather than silently misinterpolated.
TwoVarPoly interpolate_two_var(const Grid& grid);

}  // namespace isolab
