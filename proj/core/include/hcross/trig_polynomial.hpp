#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hcross/types.hpp"

namespace hcross {

/// Sparse trigonometric polynomial t(x) = sum_k c_k e^{i(k,x)} on the d-torus.
///
/// Frequencies are kept in lexicographic order with duplicates merged and
/// exact zero coefficients dropped, so two polynomials with the same
/// coefficients compare equal term by term.
class TrigPolynomial {
 public:
  explicit TrigPolynomial(int dim = 1);

  /// Builds from (k, c) terms; repeated k are summed.
  static TrigPolynomial from_terms(int dim, std::vector<std::pair<Frequency, Complex>> terms);
  static TrigPolynomial monomial(const Frequency& k, Complex c = 1.0);

  int dim() const { return dim_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  std::span<const int> frequency(std::size_t i) const {
    return {keys_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  Complex coefficient(std::size_t i) const { return coeffs_[i]; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }

  /// c_k, or 0 when k is not in the spectrum.
  Complex coefficient_at(std::span<const int> k) const;

  /// max |k_j| over the spectrum, per coordinate (zeros for the empty polynomial).
  std::vector<int> max_degree() const;

  /// Direct evaluation at one point.
  Complex operator()(std::span<const double> x) const;

  /// sum |c_k|^2, which is ||t||_2^2 under the normalized measure.
  double l2_norm_squared() const;

  /// First frequency with a zero coordinate, if any.
  std::optional<Frequency> zero_coordinate_frequency() const;

  TrigPolynomial& operator+=(const TrigPolynomial& other);
  TrigPolynomial& operator-=(const TrigPolynomial& other);
  TrigPolynomial& operator*=(Complex c);

  /// Coefficients c_k e^{i(k,y)}, i.e. x -> t(x + y).
  TrigPolynomial translate(std::span<const double> y) const;

  /// Keeps the terms whose frequency satisfies `keep`.
  template <class Pred>
  TrigPolynomial filter(Pred keep) const {
    TrigPolynomial out(dim_);
    for (std::size_t i = 0; i < size(); ++i) {
      if (keep(frequency(i))) out.append_sorted(frequency(i), coeffs_[i]);
    }
    return out;
  }

  /// Multiplies c_k by m(k); terms that become exactly zero are dropped.
  template <class Multiplier>
  TrigPolynomial multiply(Multiplier m) const {
    TrigPolynomial out(dim_);
    for (std::size_t i = 0; i < size(); ++i) {
      const Complex c = coeffs_[i] * m(frequency(i));
      if (c != Complex(0.0)) out.append_sorted(frequency(i), c);
    }
    return out;
  }

  friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;

 private:
  // Callers guarantee k is strictly greater than the last stored key.
  void append_sorted(std::span<const int> k, Complex c);
  TrigPolynomial combine(const TrigPolynomial& other, double sign) const;

  int dim_;
  std::vector<int> keys_;  // size() * dim_ entries, row-major
  std::vector<Complex> coeffs_;
};

TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b);
TrigPolynomial operator-(TrigPolynomial a, const TrigPolynomial& b);
TrigPolynomial operator*(Complex c, TrigPolynomial a);

/// delta_s(f): the part of the spectrum inside rho(s).
TrigPolynomial block_extract(const TrigPolynomial& f, const DyadicIndex& s);

/// All nonempty delta_s(f), ordered by s. Frequencies with a zero coordinate
/// belong to no block and are skipped.
std::vector<std::pair<DyadicIndex, TrigPolynomial>> split_blocks(const TrigPolynomial& f);

}  // namespace hcross
