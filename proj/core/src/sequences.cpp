#include "isolab/sequences.hpp"

#include <string>
#include <utility>

#include "isolab/errors.hpp"

namespace isolab {

MVerdict is_m_sequence(std::span<const Rational> prefix, unsigned m) {
  if (m == 0) {
    throw InsufficientData("m must be positive");
  }
  if (prefix.size() < static_cast<std::size_t>(m) + 1) {
    throw InsufficientData("m-sequence check with m=" + std::to_string(m) + " needs at least " +
                           std::to_string(m + 1) + " entries, got " +
                           std::to_string(prefix.size()));
  }
  for (std::size_t r = 0; r + m < prefix.size(); ++r) {
    Rational residual = alt_sum(prefix, m, r);
    if (!residual.is_zero()) {
      return MVerdict{false, r, std::move(residual)};
    }
  }
  return MVerdict{};
}

Polynomial interpolating_poly(std::span<const Rational> prefix, unsigned m) {
  if (m == 0) {
    throw InsufficientData("m must be positive");
  }
  if (prefix.size() < static_cast<std::size_t>(m) + 1) {
    throw InsufficientData("interpolation with m=" + std::to_string(m) + " needs at least " +
                           std::to_string(m + 1) + " entries");
  }
  // Fit on the first m points, then verify the rest; with exact arithmetic
  // this is canonical and mirrors how subsequence arguments are run.
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(m);
  for (unsigned k = 0; k < m; ++k) {
    points.emplace_back(Rational(static_cast<int>(k)), prefix[k]);
  }
  Polynomial q = lagrange_interpolate(points);
  for (std::size_t n = m; n < prefix.size(); ++n) {
    if (q(Rational(Int(n))) != prefix[n]) {
      throw NotMSequence("prefix is not a " + std::to_string(m) +
                         "-sequence: entry " + std::to_string(n) +
                         " deviates from the degree-" + std::to_string(m - 1) + " fit");
    }
  }
  return q;
}

SequencePrefix subsample(std::span<const Rational> prefix, std::size_t stride,
                         std::size_t offset) {
  if (stride == 0) {
    throw InsufficientData("subsample stride must be positive");
  }
  if (offset >= prefix.size()) {
    throw InsufficientData("subsample offset " + std::to_string(offset) +
                           " outside prefix of length " + std::to_string(prefix.size()));
  }
  SequencePrefix out;
  for (std::size_t i = offset; i < prefix.size(); i += stride) {
    out.push_back(prefix[i]);
  }
  return out;
}

Rational extend_negative(const Polynomial& q, unsigned d) {
  return q(Rational(-static_cast<long long>(d)));
}

}  // namespace isolab
