#include "hcross/trig_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "hcross/errors.hpp"
#include "hcross/index_sets.hpp"

namespace hcross {

namespace {

int compare_keys(std::span<const int> a, std::span<const int> b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
  }
  return 0;
}

void check_same_dim(int a, int b) {
  if (a != b) throw DomainError(fmt::format("dimension mismatch: {} vs {}", a, b));
}

}  // namespace

TrigPolynomial::TrigPolynomial(int dim) : dim_(dim) {
  if (dim < 1) throw DomainError("TrigPolynomial: dimension must be >= 1");
}

TrigPolynomial TrigPolynomial::from_terms(int dim, std::vector<std::pair<Frequency, Complex>> terms) {
  TrigPolynomial out(dim);
  for (const auto& [k, c] : terms) {
    if (static_cast<int>(k.size()) != dim) {
      throw DomainError(fmt::format("frequency of length {} in a {}-dimensional polynomial", k.size(), dim));
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t i = 0;
  while (i < terms.size()) {
    Complex sum = terms[i].second;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].first == terms[i].first) sum += terms[j++].second;
    if (sum != Complex(0.0)) out.append_sorted(terms[i].first, sum);
    i = j;
  }
  return out;
}

TrigPolynomial TrigPolynomial::monomial(const Frequency& k, Complex c) {
  return from_terms(static_cast<int>(k.size()), {{k, c}});
}

void TrigPolynomial::append_sorted(std::span<const int> k, Complex c) {
  keys_.insert(keys_.end(), k.begin(), k.end());
  coeffs_.push_back(c);
}

Complex TrigPolynomial::coefficient_at(std::span<const int> k) const {
  if (static_cast<int>(k.size()) != dim_) return 0.0;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int c = compare_keys(frequency(mid), k);
    if (c == 0) return coeffs_[mid];
    if (c < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return 0.0;
}

std::vector<int> TrigPolynomial::max_degree() const {
  std::vector<int> deg(static_cast<std::size_t>(dim_), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    auto k = frequency(i);
    for (std::size_t j = 0; j < k.size(); ++j) deg[j] = std::max(deg[j], std::abs(k[j]));
  }
  return deg;
}

Complex TrigPolynomial::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw DomainError("evaluation point has the wrong dimension");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    auto k = frequency(i);
    double phase = 0.0;
    for (std::size_t j = 0; j < k.size(); ++j) phase += k[j] * x[j];
    sum += coeffs_[i] * std::polar(1.0, phase);
  }
  return sum;
}

double TrigPolynomial::l2_norm_squared() const {
  double sum = 0.0;
  for (const Complex& c : coeffs_) sum += std::norm(c);
  return sum;
}

std::optional<Frequency> TrigPolynomial::zero_coordinate_frequency() const {
  for (std::size_t i = 0; i < size(); ++i) {
    auto k = frequency(i);
    if (std::find(k.begin(), k.end(), 0) != k.end()) return Frequency(k.begin(), k.end());
  }
  return std::nullopt;
}

TrigPolynomial TrigPolynomial::combine(const TrigPolynomial& other, double sign) const {
  check_same_dim(dim_, other.dim_);
  TrigPolynomial out(dim_);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < size() || j < other.size()) {
    int c;
    if (i == size()) {
      c = 1;
    } else if (j == other.size()) {
      c = -1;
    } else {
      c = compare_keys(frequency(i), other.frequency(j));
    }
    if (c < 0) {
      out.append_sorted(frequency(i), coeffs_[i]);
      ++i;
    } else if (c > 0) {
      out.append_sorted(other.frequency(j), sign * other.coeffs_[j]);
      ++j;
    } else {
      const Complex sum = coeffs_[i] + sign * other.coeffs_[j];
      if (sum != Complex(0.0)) out.append_sorted(frequency(i), sum);
      ++i;
      ++j;
    }
  }
  return out;
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& other) {
  *this = combine(other, 1.0);
  return *this;
}

TrigPolynomial& TrigPolynomial::operator-=(const TrigPolynomial& other) {
  *this = combine(other, -1.0);
  return *this;
}

TrigPolynomial& TrigPolynomial::operator*=(Complex c) {
  *this = multiply([c](std::span<const int>) { return c; });
  return *this;
}

TrigPolynomial TrigPolynomial::translate(std::span<const double> y) const {
  if (static_cast<int>(y.size()) != dim_) throw DomainError("translation vector has the wrong dimension");
  return multiply([&](std::span<const int> k) {
    double phase = 0.0;
    for (std::size_t j = 0; j < k.size(); ++j) phase += k[j] * y[j];
    return std::polar(1.0, phase);
  });
}

TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b) { return a += b; }
TrigPolynomial operator-(TrigPolynomial a, const TrigPolynomial& b) { return a -= b; }
TrigPolynomial operator*(Complex c, TrigPolynomial a) { return a *= c; }

TrigPolynomial block_extract(const TrigPolynomial& f, const DyadicIndex& s) {
  check_same_dim(f.dim(), static_cast<int>(s.size()));
  return f.filter([&](std::span<const int> k) {
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0 || block_coordinate(k[j]) != s[j]) return false;
    }
    return true;
  });
}

std::vector<std::pair<DyadicIndex, TrigPolynomial>> split_blocks(const TrigPolynomial& f) {
  std::map<DyadicIndex, std::vector<std::pair<Frequency, Complex>>> groups;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto k = f.frequency(i);
    if (std::find(k.begin(), k.end(), 0) != k.end()) continue;
    groups[block_of(k)].emplace_back(Frequency(k.begin(), k.end()), f.coefficient(i));
  }
  std::vector<std::pair<DyadicIndex, TrigPolynomial>> out;
  out.reserve(groups.size());
  for (auto& [s, terms] : groups) out.emplace_back(s, TrigPolynomial::from_terms(f.dim(), std::move(terms)));
  return out;
}

}  // namespace hcross
