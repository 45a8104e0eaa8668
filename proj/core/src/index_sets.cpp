#include "hcross/index_sets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "hcross/errors.hpp"

namespace hcross {

void validate_dyadic(std::span<const int> s) {
  if (s.empty()) throw DomainError("dyadic index must have at least one coordinate");
  for (int sj : s) {
    if (sj < 1) throw DomainError(fmt::format("dyadic index ({}) has a coordinate < 1", fmt::join(s, ",")));
  }
}

int block_coordinate(int k) {
  const unsigned magnitude = static_cast<unsigned>(std::abs(k));
  return static_cast<int>(std::bit_width(magnitude));
}

DyadicIndex block_of(std::span<const int> k) {
  DyadicIndex s(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) {
      throw DomainError(fmt::format("frequency ({}) has a zero coordinate", fmt::join(k, ",")));
    }
    s[j] = block_coordinate(k[j]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// SpectrumSet

SpectrumSet::SpectrumSet(int dim, std::vector<DyadicIndex> blocks) : dim_(dim), blocks_(std::move(blocks)) {
  if (dim < 1) throw DomainError("SpectrumSet: dimension must be >= 1");
  for (const auto& s : blocks_) {
    if (static_cast<int>(s.size()) != dim) throw DomainError("SpectrumSet: block dimension mismatch");
    validate_dyadic(s);
  }
  std::sort(blocks_.begin(), blocks_.end());
  blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
}

SpectrumSet SpectrumSet::from_frequencies(int dim, std::vector<Frequency> frequencies) {
  if (dim < 1) throw DomainError("SpectrumSet: dimension must be >= 1");
  for (const auto& k : frequencies) {
    if (static_cast<int>(k.size()) != dim) throw DomainError("SpectrumSet: frequency dimension mismatch");
    block_of(k);  // rejects zero coordinates
  }
  std::sort(frequencies.begin(), frequencies.end());
  frequencies.erase(std::unique(frequencies.begin(), frequencies.end()), frequencies.end());
  SpectrumSet set;
  set.dim_ = dim;
  set.explicit_mode_ = true;
  set.explicit_ = std::move(frequencies);
  return set;
}

namespace {

std::uint64_t block_size(const DyadicIndex& s) {
  long long total = 0;
  for (int sj : s) total += sj;
  if (total >= 63) throw CapacityError(fmt::format("block ({}) is too large to count", fmt::join(s, ",")));
  return std::uint64_t{1} << total;
}

}  // namespace

std::uint64_t SpectrumSet::size() const {
  if (explicit_mode_) return explicit_.size();
  std::uint64_t total = 0;
  for (const auto& s : blocks_) total += block_size(s);
  return total;
}

bool SpectrumSet::contains(std::span<const int> k) const {
  if (static_cast<int>(k.size()) != dim_) return false;
  if (std::any_of(k.begin(), k.end(), [](int kj) { return kj == 0; })) return false;
  if (explicit_mode_) {
    return std::binary_search(explicit_.begin(), explicit_.end(), k,
                              [](const auto& a, const auto& b) {
                                return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                              });
  }
  const DyadicIndex s = block_of(k);
  return std::binary_search(blocks_.begin(), blocks_.end(), s);
}

std::vector<Frequency> SpectrumSet::materialize(std::uint64_t cap) const {
  const std::uint64_t n = size();
  if (n > cap) {
    throw CapacityError(fmt::format("spectrum set holds {} frequencies, above the cap of {}", n, cap));
  }
  if (explicit_mode_) return explicit_;

  std::vector<Frequency> out;
  out.reserve(static_cast<std::size_t>(n));
  Frequency k(static_cast<std::size_t>(dim_));
  for (const auto& s : blocks_) {
    std::function<void(int)> fill = [&](int j) {
      if (j == dim_) {
        out.push_back(k);
        return;
      }
      const int lo = 1 << (s[static_cast<std::size_t>(j)] - 1);
      const int hi = 1 << s[static_cast<std::size_t>(j)];
      for (int m = lo; m < hi; ++m) {
        k[static_cast<std::size_t>(j)] = m;
        fill(j + 1);
        k[static_cast<std::size_t>(j)] = -m;
        fill(j + 1);
      }
    };
    fill(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Index families

bool IndexFamily::contains(std::span<const int> s) const {
  return std::binary_search(members.begin(), members.end(), s, [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
}

SpectrumSet rho(const DyadicIndex& s) {
  validate_dyadic(s);
  return SpectrumSet(static_cast<int>(s.size()), {s});
}

std::vector<DyadicIndex> enumerate_weight_below(const MajorantParams& params, double budget) {
  params.validate();
  const int d = params.d;
  std::vector<double> turning(static_cast<std::size_t>(d));
  std::vector<double> suffix_min(static_cast<std::size_t>(d) + 1, 0.0);
  for (int j = d - 1; j >= 0; --j) {
    const double t = -params.b[static_cast<std::size_t>(j)] / (params.r * std::log(2.0));
    turning[static_cast<std::size_t>(j)] = t;
    double best = params.coordinate_log_weight(j, 1);
    const int last = std::max(1, static_cast<int>(std::ceil(t)) + 1);
    for (int s = 2; s <= last; ++s) best = std::min(best, params.coordinate_log_weight(j, s));
    suffix_min[static_cast<std::size_t>(j)] = suffix_min[static_cast<std::size_t>(j) + 1] + best;
  }

  std::vector<DyadicIndex> out;
  if (!std::isfinite(budget)) throw DomainError("enumerate_weight_below: budget must be finite");
  const double slack = 1e-9 * (1.0 + std::abs(budget));
  DyadicIndex s(static_cast<std::size_t>(d), 1);

  std::function<void(int, double)> walk = [&](int j, double acc) {
    const auto ju = static_cast<std::size_t>(j);
    for (int sigma = 1;; ++sigma) {
      const double next = acc + params.coordinate_log_weight(j, sigma);
      if (next + suffix_min[ju + 1] > budget + slack) {
        if (sigma > turning[ju]) break;
        continue;
      }
      s[ju] = sigma;
      if (j == d - 1) {
        if (next <= budget) out.push_back(s);
      } else {
        walk(j + 1, next);
      }
    }
  };
  walk(0, 0.0);
  // The walk visits coordinates in increasing order, so `out` is already
  // lexicographically sorted.
  return out;
}

bool in_chi(const MajorantParams& params, std::span<const int> s, double N) {
  return params.log_weight(s) <= std::log2(N);
}

bool in_theta(const MajorantParams& params, std::span<const int> s, double N) {
  const double w = params.log_weight(s);
  const double log_n = std::log2(N);
  return w > log_n && w <= log_n + params.l;
}

namespace {

void check_threshold(double N, const char* where) {
  if (!(N > 0.0) || !std::isfinite(N)) throw DomainError(fmt::format("{}: N must be positive and finite", where));
}

}  // namespace

IndexFamily chi(const MajorantParams& params, double N) {
  check_threshold(N, "chi");
  IndexFamily family{FamilyKind::chi, N, {}};
  family.members = enumerate_weight_below(params, std::log2(N));
  return family;
}

IndexFamily theta(const MajorantParams& params, double N) {
  check_threshold(N, "theta");
  const double log_n = std::log2(N);
  IndexFamily family{FamilyKind::theta, N, {}};
  for (auto& s : enumerate_weight_below(params, log_n + params.l)) {
    if (params.log_weight(s) > log_n) family.members.push_back(std::move(s));
  }
  return family;
}

int theta_prime_floor(const MajorantParams& params, double N) {
  const int L = static_cast<int>(std::floor(std::log2(N)));
  const double rd = params.r * params.d;
  return std::max(1, static_cast<int>(std::ceil(L / (2.0 * rd))));
}

IndexFamily theta_prime(const MajorantParams& params, double N) {
  check_threshold(N, "theta_prime");
  IndexFamily band = theta(params, N);
  const int L = static_cast<int>(std::floor(std::log2(N)));
  const int lo = theta_prime_floor(params, N);
  const int hi = static_cast<int>(std::floor(L / (params.r * params.d)));
  const int d = params.d;

  IndexFamily family{FamilyKind::theta_prime, N, {}};
  for (auto& s : band.members) {
    bool keep = s[static_cast<std::size_t>(d) - 1] >= lo;
    for (int j = 0; keep && j + 1 < d; ++j) {
      keep = s[static_cast<std::size_t>(j)] >= lo && s[static_cast<std::size_t>(j)] <= hi;
    }
    if (keep) family.members.push_back(std::move(s));
  }
  return family;
}

SpectrumSet q_set(const MajorantParams& params, double N) {
  return SpectrumSet(params.d, chi(params, N).members);
}

std::uint64_t q_size(const MajorantParams& params, double N) {
  std::uint64_t total = 0;
  for (const auto& s : chi(params, N).members) total += block_size(s);
  return total;
}

namespace {

double weighted_term(const MajorantParams& params, std::span<const int> s, double p, double beta) {
  long long norm1 = 0;
  for (int sj : s) norm1 += sj;
  return std::exp2(-p * (params.log_weight(s) - beta * static_cast<double>(norm1)));
}

void check_lemma_args(const MajorantParams& params, double p, double beta) {
  params.validate();
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("tail_sum: p must satisfy 0 < p < inf");
  if (!(beta >= 0.0)) throw DomainError("tail_sum: beta must be >= 0");
  if (!(beta < params.r)) {
    throw DomainError(fmt::format("tail_sum: beta = {} must be < r = {} for a geometric tail", beta, params.r));
  }
}

}  // namespace

double theta_sum(const MajorantParams& params, double N, double p, double beta) {
  check_lemma_args(params, p, beta);
  double total = 0.0;
  for (const auto& s : theta(params, N).members) total += weighted_term(params, s, p, beta);
  return total;
}

TailSum tail_sum(const MajorantParams& params, double N, double p, double beta) {
  check_lemma_args(params, p, beta);
  check_threshold(N, "tail_sum");
  const int d = params.d;
  const double log_n = std::log2(N);
  const double decay = (params.r - beta) * p;  // per-coordinate geometric rate
  const double half_ratio = std::exp2(-decay / 2.0);

  // Beyond start[j], s^{-b_j p} <= 2^{decay s / 2}.
  int start = 1;
  for (int j = 0; j < d; ++j) {
    const double bj = params.b[static_cast<std::size_t>(j)];
    if (bj >= 0.0) continue;
    const double turn = -2.0 * bj * p / (decay * std::log(2.0));
    int sigma = std::max(1, static_cast<int>(std::ceil(turn)));
    while (decay * sigma / 2.0 + bj * p * std::log2(static_cast<double>(sigma)) < 0.0) ++sigma;
    start = std::max(start, sigma);
  }
  for (const auto& s : theta(params, N).members) {
    start = std::max(start, *std::max_element(s.begin(), s.end()) + 1);
  }

  auto coordinate_term = [&](int j, int sigma) {
    return std::exp2(-p * (params.coordinate_log_weight(j, sigma) - beta * sigma));
  };
  auto tail_bound_at = [&](int cutoff) {
    const double tail_one = std::exp2(-decay * (cutoff + 1) / 2.0) / (1.0 - half_ratio);
    std::vector<double> full(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      double partial = 0.0;
      for (int sigma = 1; sigma <= cutoff; ++sigma) partial += coordinate_term(j, sigma);
      full[static_cast<std::size_t>(j)] = partial + tail_one;
    }
    double bound = 0.0;
    for (int j = 0; j < d; ++j) {
      double term = tail_one;
      for (int i = 0; i < d; ++i) {
        if (i != j) term *= full[static_cast<std::size_t>(i)];
      }
      bound += term;
    }
    return bound;
  };
  auto box_value = [&](int cutoff) {
    double total = 0.0;
    DyadicIndex s(static_cast<std::size_t>(d), 1);
    std::function<void(int, double, long long)> walk = [&](int j, double acc, long long norm1) {
      for (int sigma = 1; sigma <= cutoff; ++sigma) {
        s[static_cast<std::size_t>(j)] = sigma;
        const double next = acc + params.coordinate_log_weight(j, sigma);
        if (j == d - 1) {
          if (next > log_n) total += std::exp2(-p * (next - beta * static_cast<double>(norm1 + sigma)));
        } else {
          walk(j + 1, next, norm1 + sigma);
        }
      }
    };
    walk(0, 0.0, 0);
    return total;
  };

  constexpr double kRelTarget = 1e-6;
  int cutoff = std::max(start, 8);
  double value = box_value(cutoff);
  double bound = tail_bound_at(cutoff);
  while (!(bound <= kRelTarget * value)) {
    // Solve the geometric bound for the cutoff, then grow by at least 25%.
    const double needed = kRelTarget * value / std::max(bound, 1e-300);
    const int jump = static_cast<int>(std::ceil(-2.0 * std::log2(needed) / decay)) + 1;
    cutoff = std::max(cutoff + std::max(jump, cutoff / 4), cutoff + 1);
    if (cutoff > 100000) throw CapacityError("tail_sum: cutoff exceeded 1e5 without certifying the tail");
    value = box_value(cutoff);
    bound = tail_bound_at(cutoff);
  }
  return {value, bound, cutoff};
}

}  // namespace hcross
