#include "isolab/polynomial.hpp"

#include <algorithm>
#include <set>

#include "isolab/errors.hpp"

namespace isolab {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(Rational value) {
  if (value.is_zero()) {
    return Polynomial();
  }
  return Polynomial({std::move(value)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

Polynomial Polynomial::scale_arg(const Int& factor) const {
  std::vector<Rational> scaled(coeffs_);
  Rational power(1);
  const Rational f{factor};
  for (auto& c : scaled) {
    c *= power;
    power *= f;
  }
  return Polynomial(std::move(scaled));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> negated(coeffs_);
  for (auto& c : negated) {
    c = -c;
  }
  return Polynomial(std::move(negated));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> product(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      product[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) {
    c *= scalar;
  }
  trim();
  return *this;
}

std::string Polynomial::str(std::string_view var) const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::string out;
  for (std::size_t power = 0; power < coeffs_.size(); ++power) {
    const Rational& c = coeffs_[power];
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
    if (power == 0) {
      out += mag.str();
    } else {
      if (!unit) {
        out += mag.str();
        out += '*';
      }
      out += var;
      if (power > 1) {
        out += '^';
        out += std::to_string(power);
      }
    }
  }
  return out.empty() ? "0" : out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
Polynomial operator*(Polynomial a, const Rational& scalar) { return a *= scalar; }

Int binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  Int result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: result is always an integer here
  }
  return result;
}

Rational alt_sum(std::span<const Rational> prefix, unsigned m, std::size_t r) {
  if (prefix.size() < r + m + 1) {
    throw InsufficientData("alternating sum needs " + std::to_string(r + m + 1) +
                           " entries, prefix has " + std::to_string(prefix.size()));
  }
  Rational sum(0);
  Int coeff = 1;  // running C(m,k)
  for (unsigned k = 0; k <= m; ++k) {
    const Rational term = prefix[r + k] * Rational(coeff);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    if (k < m) {
      coeff *= m - k;
      coeff /= k + 1;
    }
  }
  return sum;
}

Polynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  if (points.empty()) {
    throw InsufficientData("interpolation needs at least one point");
  }
  std::set<Rational> nodes;
  for (const auto& [node, value] : points) {
    if (!nodes.insert(node).second) {
      throw DuplicateNode("duplicate interpolation node " + node.str());
    }
  }

  // Newton form: divided differences, then expansion to the monomial basis.
  const std::size_t n = points.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) {
    dd[i] = points[i].second;
  }
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }

  Polynomial result;
  Polynomial basis({Rational(1)});
  for (std::size_t i = 0; i < n; ++i) {
    result += basis * dd[i];
    basis *= Polynomial({-points[i].first, Rational(1)});
  }
  return result;
}

std::size_t min_interp_degree(std::span<const Rational> prefix) {
  if (prefix.empty()) {
    throw InsufficientData("minimal interpolation degree of an empty prefix");
  }
  // Iterated first differences; level l holds the l-th alternating sums at
  // every shift (equal to alt_sum(prefix, l, r) by the Pascal identity).
  std::vector<Rational> level(prefix.begin(), prefix.end());
  for (std::size_t d = 0; d + 2 <= prefix.size(); ++d) {
    for (std::size_t i = 0; i + 1 < level.size(); ++i) {
      level[i] -= level[i + 1];
    }
    level.pop_back();
    const bool all_zero = std::all_of(level.begin(), level.end(),
                                      [](const Rational& v) { return v.is_zero(); });
    if (all_zero) {
      return d;
    }
  }
  return prefix.size() - 1;
}

}  // namespace isolab
