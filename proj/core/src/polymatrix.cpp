#include "isolab/polymatrix.hpp"

#include <string>
#include <utility>

#include "isolab/errors.hpp"

namespace isolab {

Grid::Grid(std::size_t rows, std::size_t cols, unsigned row_bound, unsigned col_bound,
           std::vector<Rational> entries_row_major)
    : rows_(rows), cols_(cols), row_bound_(row_bound), col_bound_(col_bound),
      entries_(std::move(entries_row_major)) {
  if (rows_ == 0 || cols_ == 0) {
    throw InsufficientData("grid must have at least one row and one column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("grid of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " needs " + std::to_string(rows_ * cols_) + " entries, got " +
                            std::to_string(entries_.size()));
  }
}

const Rational& Grid::at(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw DimensionMismatch("grid index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return entries_[(i - 1) * cols_ + (j - 1)];
}

SequencePrefix Grid::row(std::size_t i) const {
  SequencePrefix out;
  out.reserve(cols_);
  for (std::size_t j = 1; j <= cols_; ++j) {
    out.push_back(at(i, j));
  }
  return out;
}

SequencePrefix Grid::column(std::size_t j) const {
  SequencePrefix out;
  out.reserve(rows_);
  for (std::size_t i = 1; i <= rows_; ++i) {
    out.push_back(at(i, j));
  }
  return out;
}

GridVerdict check_grid(const Grid& grid) {
  if (grid.rows() < grid.col_bound() + 2 || grid.cols() < grid.row_bound() + 2) {
    throw InsufficientData("grid too small to verify degree bounds (" +
                           std::to_string(grid.row_bound()) + "," +
                           std::to_string(grid.col_bound()) + "): need at least " +
                           std::to_string(grid.col_bound() + 2) + " rows and " +
                           std::to_string(grid.row_bound() + 2) + " columns");
  }
  for (std::size_t i = 1; i <= grid.rows(); ++i) {
    MVerdict v = is_m_sequence(grid.row(i), grid.row_bound() + 1);
    if (!v.holds) {
      return GridVerdict{false, GridVerdict::Axis::row, i, std::move(v)};
    }
  }
  for (std::size_t j = 1; j <= grid.cols(); ++j) {
    MVerdict v = is_m_sequence(grid.column(j), grid.col_bound() + 1);
    if (!v.holds) {
      return GridVerdict{false, GridVerdict::Axis::column, j, std::move(v)};
    }
  }
  return GridVerdict{};
}

TwoVarPoly::TwoVarPoly(std::vector<std::vector<Rational>> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void TwoVarPoly::trim() {
  std::size_t width = 0;
  for (auto& row : coeffs_) {
    while (!row.empty() && row.back().is_zero()) {
      row.pop_back();
    }
    width = std::max(width, row.size());
  }
  while (!coeffs_.empty() && coeffs_.back().empty()) {
    coeffs_.pop_back();
  }
  for (auto& row : coeffs_) {
    row.resize(width);
  }
}

int TwoVarPoly::degree_x() const {
  int deg = -1;
  for (const auto& row : coeffs_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) {
        deg = std::max(deg, static_cast<int>(j));
      }
    }
  }
  return deg;
}

Rational TwoVarPoly::coefficient(std::size_t i, std::size_t j) const {
  if (i >= coeffs_.size() || j >= coeffs_[i].size()) {
    return Rational(0);
  }
  return coeffs_[i][j];
}

Rational TwoVarPoly::operator()(const Rational& y, const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Rational row_value(0);
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) {
      row_value = row_value * x + *jt;
    }
    acc = acc * y + row_value;
  }
  return acc;
}

Polynomial TwoVarPoly::diagonal() const {
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
      if (i + j >= diag.size()) {
        diag.resize(i + j + 1);
      }
      diag[i + j] += coeffs_[i][j];
    }
  }
  return Polynomial(std::move(diag));
}

std::string TwoVarPoly::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
      const Rational& c = coeffs_[i][j];
      if (c.is_zero()) {
        continue;
      }
      const Rational mag = c.abs();
      if (out.empty()) {
        if (c.is_negative()) {
          out += '-';
        }
      } else {
        out += c.is_negative() ? " - " : " + ";
      }
      const bool unit = mag == Rational(1);
      std::string vars;
      if (j > 0) {
        vars += 'x';
        if (j > 1) {
          vars += '^' + std::to_string(j);
        }
      }
      if (i > 0) {
        if (!vars.empty()) {
          vars += '*';
        }
        vars += 'y';
        if (i > 1) {
          vars += '^' + std::to_string(i);
        }
      }
      if (vars.empty()) {
        out += mag.str();
      } else {
        if (!unit) {
          out += mag.str();
          out += '*';
        }
        out += vars;
      }
    }
  }
  return out.empty() ? "0" : out;
}

TwoVarPoly interpolate_two_var(const Grid& grid) {
  const unsigned m = grid.col_bound();
  const unsigned n = grid.row_bound();
  if (grid.rows() < m + 2 || grid.cols() < n + 2) {
    throw InsufficientData("grid too small for two-variable interpolation");
  }

  // Row polynomials p_k for the first m+1 rows, each fitted on the first
  // n+1 columns and verified against the rest of its row.
  std::vector<Polynomial> row_polys;
  row_polys.reserve(m + 1);
  for (std::size_t k = 1; k <= m + 1; ++k) {
    std::vector<std::pair<Rational, Rational>> points;
    for (std::size_t j = 1; j <= n + 1; ++j) {
      points.emplace_back(Rational(Int(j)), grid.at(k, j));
    }
    Polynomial p = lagrange_interpolate(points);
    for (std::size_t j = n + 2; j <= grid.cols(); ++j) {
      if (p(Rational(Int(j))) != grid.at(k, j)) {
        throw VerificationFailed("row " + std::to_string(k) +
                                 " breaks the degree bound at column " + std::to_string(j));
      }
    }
    row_polys.push_back(std::move(p));
  }

  // Lagrange basis in y on the nodes 1..m+1, assembled into coefficients of
  // y^i x^j.
  std::vector<std::vector<Rational>> coeffs(m + 1, std::vector<Rational>(n + 1));
  for (std::size_t k = 1; k <= m + 1; ++k) {
    Polynomial basis({Rational(1)});
    Rational denom(1);
    for (std::size_t l = 1; l <= m + 1; ++l) {
      if (l == k) {
        continue;
      }
      basis *= Polynomial({Rational(-Int(l)), Rational(1)});
      denom *= Rational(Int(k)) - Rational(Int(l));
    }
    basis *= Rational(1) / denom;
    const Polynomial& p = row_polys[k - 1];
    for (std::size_t i = 0; i <= static_cast<std::size_t>(basis.degree()); ++i) {
      for (std::size_t j = 0; j < p.coefficients().size(); ++j) {
        coeffs[i][j] += basis.coefficients()[i] * p.coefficients()[j];
      }
    }
  }
  TwoVarPoly r(std::move(coeffs));

  // The first m+1 rows interpolate by construction; all later rows must be
  // checked, since a two-variable polynomial is not pinned down by finitely
  // many rows alone.
  for (std::size_t i = m + 2; i <= grid.rows(); ++i) {
    for (std::size_t j = 1; j <= grid.cols(); ++j) {
      if (r(Rational(Int(i)), Rational(Int(j))) != grid.at(i, j)) {
        throw VerificationFailed("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") is not matched: the window is not a polynomial matrix");
      }
    }
  }
  return r;
}

}  // namespace isolab
