#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "isolab/polymatrix.hpp"
#include "isolab/rational.hpp"
#include "isolab/sequences.hpp"

namespace isolab {

/// Dense square matrix over the rationals.
class Matrix {
 public:
  Matrix(std::size_t dim, std::vector<Rational> entries_row_major);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  std::vector<Rational> apply(std::span<const Rational> x) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix pow(unsigned exponent) const;

  /// Exact Gauss-Jordan inverse; throws DimensionMismatch on singular input.
  Matrix inverse() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

/// p-norm gauge: orbit values are sums of |coordinate|^p, i.e. the p-th
/// power of the norm, which keeps everything rational.
struct PNorm {
  unsigned p;
  friend bool operator==(const PNorm&, const PNorm&) = default;
};

/// Weighted maximum norm max_i w_i |x_i| with positive rational weights.
struct WeightedMax {
  std::vector<Rational> weights;
  friend bool operator==(const WeightedMax&, const WeightedMax&) = default;
};

using NormSpec = std::variant<PNorm, WeightedMax>;

/// Whether gauge values are p-th powers of the norm or the norm itself.
enum class GaugeMode { power_p, plain };

/// Scalar orbit sequence attached to an operator and a start vector.
struct Gauge {
  SequencePrefix values;
  GaugeMode mode = GaugeMode::power_p;
};

/// Square rational matrix together with the norm its orbits are measured in.
class Operator {
 public:
  Operator(Matrix matrix, NormSpec norm);

  std::size_t dim() const { return matrix_.dim(); }
  const Matrix& matrix() const { return matrix_; }
  const NormSpec& norm() const { return norm_; }

  bool has_p_norm() const { return std::holds_alternative<PNorm>(norm_); }
  unsigned p() const;

  /// Norm gauge of a single vector under this operator's norm.
  Rational gauge_value(std::span<const Rational> x) const;

  Operator power(unsigned exponent) const { return Operator(matrix_.pow(exponent), norm_); }
  Operator inverse() const { return Operator(matrix_.inverse(), norm_); }

 private:
  Matrix matrix_;
  NormSpec norm_;
};

/// Orbit gauge (g_n)_{n=0..horizon} with g_n the gauge of T^{stride*n} x.
/// p-norm operators produce p-th powers (mode power_p); weighted max norms
/// produce the norm itself (mode plain).
Gauge orbit_gauge(const Operator& op, std::span<const Rational> x, std::size_t horizon,
                  std::size_t stride = 1);

/// Verdict of an operator-level check over a witness list. Verdicts are
/// always "holds on the samples" / "falsified by a witness", never a proof
/// over the whole space. Witnesses are scanned in their given order and the
/// first falsifying one is reported.
struct OpVerdict {
  bool holds = true;
  std::optional<std::size_t> witness_index;
  std::vector<Rational> witness;              // empty when the check holds
  std::optional<std::size_t> shift;           // failing shift / window start
  std::optional<Rational> residual;           // alternating sum, or even-odd gap
  std::optional<std::pair<Rational, Rational>> window_maxima;  // (even, odd)
};

/// (m,p)-isometry check: the gauge of every witness must be an m-sequence.
/// A stride of k checks the k-th power of the operator through its strided
/// gauge. Requires a p-norm (InvalidNorm) and horizon >= m.
OpVerdict check_mp_isometry(const Operator& op, unsigned m,
                            std::span<const std::vector<Rational>> witnesses,
                            std::size_t horizon, std::size_t stride = 1);

/// (m,infinity)-isometry check: within every window [r, r+m] of the gauge,
/// the maximum over even indices must equal the maximum over odd indices.
/// Works for any norm; p-norm gauges compare p-th powers, which is order
/// isomorphic. A stride of k checks the k-th power of the operator.
OpVerdict check_minf_isometry(const Operator& op, unsigned m,
                              std::span<const std::vector<Rational>> witnesses,
                              std::size_t horizon, std::size_t stride = 1);

/// Upper bidiagonal matrix of ones with the Euclidean (p=2) gauge. Its
/// orbit gauges are polynomials of even degree up to 2*(size-1), giving a
/// genuine ((2*size-1), 2)-isometry witness at desk scale.
Operator jordan_unipotent(std::size_t size);

/// The swap-and-scale map (x, y) -> (2y, x/2) with the p=2 gauge. Its square
/// is the identity, yet the operator itself has a bounded non-constant gauge
/// and so fails every (m,p) check.
Operator example_root_fail();

/// Cyclic coordinate shift on four coordinates with the weighted maximum
/// norm max(2|x1|, 2|x2|, |x3|, |x4|). Passes every (3,infinity) window
/// check while its square does not.
Operator example_power_fail_3inf();

/// Verdict of the commuting-product audit.
struct ProductVerdict {
  enum class Stage { grid_rows, grid_columns, diagonal };

  bool holds = true;
  std::optional<std::size_t> witness_index;
  std::vector<Rational> witness;
  std::optional<Stage> stage;
  std::optional<std::size_t> axis_index;  // failing grid row/column (1-based)
  MVerdict inner;
};

/// Product audit: for each witness builds the grid a_{ij} = gauge of
/// S^i T^j x (i, j = 1..horizon), checks it is a polynomial window with row
/// bound n-1 and column bound m-1, then checks the diagonal (the gauge of
/// (ST)^k x) is an (m+n-1)-sequence. S and T must commute exactly
/// (CommutatorNonzero), share dimension and norm, and carry a p-norm.
ProductVerdict product_check(const Operator& s, const Operator& t, unsigned m, unsigned n,
                             std::span<const std::vector<Rational>> witnesses,
                             std::size_t horizon);

/// Per-stride outcome inside a root audit.
struct StrideAudit {
  std::size_t stride = 1;
  bool holds = true;
  std::optional<std::size_t> witness_index;
  std::optional<std::size_t> offset;
  MVerdict inner;
};

/// Verdict of the greatest-common-divisor root audit.
struct RootGcdVerdict {
  bool premise_holds = true;     // T^r and T^s pass at every available offset
  bool conclusion_holds = true;  // T^gcd(r,s) passes at every available offset
  bool contradiction = false;    // premise holds on samples but conclusion fails
  StrideAudit audit_r;
  StrideAudit audit_s;
  StrideAudit audit_gcd;
};

/// Audits the root-extraction statement: if the stride-r and stride-s gauges
/// are m-sequences at every shift offset, then so is the stride-gcd(r,s)
/// gauge. A contradiction would falsify the statement and must never occur.
RootGcdVerdict root_gcd_check(const Operator& op, unsigned r, unsigned s, unsigned m,
                              std::span<const std::vector<Rational>> witnesses,
                              std::size_t horizon);

/// Default seed for witness generation, published so runs are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 271828;

/// Default verification horizon for a given m.
inline constexpr std::size_t default_horizon(unsigned m) { return 4 * (std::size_t{m} + 1); }

/// Deterministic witness vectors: the standard basis first, then pseudo
/// random small rationals from the seeded generator. Witness order is the
/// canonical falsification order of all checks above.
std::vector<std::vector<Rational>> make_witnesses(std::size_t dim, std::size_t count,
                                                  std::uint64_t seed = kDefaultSeed);

}  // namespace isolab
