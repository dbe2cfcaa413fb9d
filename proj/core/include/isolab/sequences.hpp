#pragma once

#include <optional>
#include <span>
#include <vector>

#include "isolab/polynomial.hpp"
#include "isolab/rational.hpp"

namespace isolab {

/// Finite prefix (a_0, ..., a_N) of a rational sequence, indexed from 0.
using SequencePrefix = std::vector<Rational>;

/// Outcome of a sequence-level check. On failure the first falsifying shift
/// (or window start) and the nonzero residual are reported, so a verdict can
/// be replayed from the command line.
struct MVerdict {
  bool holds = true;
  std::optional<std::size_t> witness_shift;
  std::optional<Rational> residual;
};

/// Checks that every available m-th alternating difference of the prefix
/// vanishes. Shifts are scanned in ascending order and the first failure is
/// reported. Throws InsufficientData when the prefix has fewer than m+1
/// entries.
MVerdict is_m_sequence(std::span<const Rational> prefix, unsigned m);

/// Interpolating polynomial of an m-sequence: fits the first m points
/// exactly, then verifies the remaining entries. The result has degree at
/// most m-1 and reproduces the whole prefix. Throws NotMSequence when a
/// later entry disagrees with the fit.
Polynomial interpolating_poly(std::span<const Rational> prefix, unsigned m);

/// Regular subsample (a_{offset + stride*n})_n over all representable n.
SequencePrefix subsample(std::span<const Rational> prefix, std::size_t stride,
                         std::size_t offset = 0);

/// Evaluation at a negative index: q(-d). For gauges of invertible operators
/// this is the gauge of the d-th inverse power; a negative value signals that
/// no norm gauge is compatible with the polynomial.
Rational extend_negative(const Polynomial& q, unsigned d);

}  // namespace isolab
