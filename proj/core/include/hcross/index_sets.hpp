#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hcross/majorant.hpp"
#include "hcross/types.hpp"

namespace hcross {

/// Throws DomainError unless every s_j >= 1.
void validate_dyadic(std::span<const int> s);

/// The block coordinate sigma with 2^{sigma-1} <= |k| < 2^sigma; 0 for k = 0.
int block_coordinate(int k);

/// The s with k in rho(s). Throws DomainError if some k_j = 0.
DyadicIndex block_of(std::span<const int> k);

/// Upper bound on materialized frequency sets.
inline constexpr std::uint64_t kDefaultFrequencyCap = std::uint64_t{1} << 24;

/// A finite set of zero-free frequency vectors, held either as a union of
/// dyadic boxes rho(s) or as an explicit sorted list.
class SpectrumSet {
 public:
  /// Union of rho(s) over the given blocks (deduplicated, sorted).
  SpectrumSet(int dim, std::vector<DyadicIndex> blocks);

  /// Explicit set; throws DomainError on a zero coordinate.
  static SpectrumSet from_frequencies(int dim, std::vector<Frequency> frequencies);

  int dim() const { return dim_; }
  bool is_block_union() const { return !explicit_mode_; }
  const std::vector<DyadicIndex>& blocks() const { return blocks_; }

  std::uint64_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(std::span<const int> k) const;

  /// All frequencies in lexicographic order. Throws CapacityError when the
  /// set holds more than `cap` frequencies.
  std::vector<Frequency> materialize(std::uint64_t cap = kDefaultFrequencyCap) const;

 private:
  SpectrumSet() = default;

  int dim_ = 0;
  bool explicit_mode_ = false;
  std::vector<DyadicIndex> blocks_;
  std::vector<Frequency> explicit_;
};

enum class FamilyKind { chi, theta, theta_prime, custom };

struct IndexFamily {
  FamilyKind kind = FamilyKind::custom;
  double N = 1.0;
  std::vector<DyadicIndex> members;  // lexicographically sorted

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(std::span<const int> s) const;
};

/// rho(s): the box 2^{s_j-1} <= |k_j| < 2^{s_j}; |rho(s)| = 2^{||s||_1}.
SpectrumSet rho(const DyadicIndex& s);

/// Every s in N^d with log_weight(s) <= budget (i.e. prod 2^{r s_j} s_j^{b_j} <= 2^budget),
/// enumerated exactly for any sign of b_j.
std::vector<DyadicIndex> enumerate_weight_below(const MajorantParams& params, double budget);

/// s in chi(N), i.e. Omega(2^{-s}) >= 1/N.
bool in_chi(const MajorantParams& params, std::span<const int> s, double N);

/// 1/(2^l N) <= Omega(2^{-s}) < 1/N.
bool in_theta(const MajorantParams& params, std::span<const int> s, double N);

IndexFamily chi(const MajorantParams& params, double N);
IndexFamily theta(const MajorantParams& params, double N);

/// Constructive subset of Theta(N) whose coordinates are all of order log N:
/// with L = floor(log2 N), the first d-1 coordinates range over
/// [ceil(L/(2rd)), floor(L/(rd))], the last is >= ceil(L/(2rd)), and every
/// in-band completion is kept. For d = 1 this is Theta(N).
IndexFamily theta_prime(const MajorantParams& params, double N);

/// Lower coordinate bound max(1, ceil(L/(2rd))) used by theta_prime.
int theta_prime_floor(const MajorantParams& params, double N);

/// Q(N) = union of rho(s) over s in chi(N), as a block union.
SpectrumSet q_set(const MajorantParams& params, double N);

/// |Q(N)| = sum over chi(N) of 2^{||s||_1}, without materializing.
std::uint64_t q_size(const MajorantParams& params, double N);

/// Tail sum over the complement of chi of (Omega(2^{-s}) 2^{beta ||s||_1})^p.
struct TailSum {
  double value = 0.0;       // exact sum over chi^perp(N) inside [1, cutoff]^d
  double tail_bound = 0.0;  // certified bound on the omitted part
  int cutoff = 0;
};

/// Requires 0 < p < inf and 0 <= beta < r (DomainError otherwise). The cutoff
/// grows until tail_bound <= 1e-6 * value.
TailSum tail_sum(const MajorantParams& params, double N, double p, double beta);

/// Exact sum over Theta(N) of (Omega(2^{-s}) 2^{beta ||s||_1})^p.
double theta_sum(const MajorantParams& params, double N, double p, double beta);

}  // namespace hcross
