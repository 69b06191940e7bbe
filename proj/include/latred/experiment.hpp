#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latred/bounds.hpp"
#include "latred/exactlin.hpp"

namespace latred {

// xoshiro256** (Blackman & Vigna), seeded through splitmix64 from a single
// 64-bit seed. Chosen over std distributions so that experiment output is
// byte-identical across platforms and standard libraries.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [0, bound), bound >= 1, unbiased via rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t s_[4];
};

/// Entries uniform in [-2^bits, 2^bits]; resampled until full column rank.
IntMatrix random_full_rank_matrix(std::size_t rows, std::size_t cols, unsigned bits,
                                  Xoshiro256& rng);

struct ExperimentConfig {
  std::size_t n = 0, k = 0;
  unsigned entry_bits = 8;
  std::uint64_t seed = 0;
  std::size_t sweep = 4;  // runs at K0 * 2^i for i < sweep
  std::optional<IntMatrix> fixed_a;  // overrides random generation
};

struct ExperimentRow {
  std::size_t n = 0, k = 0;
  unsigned entry_bits = 0;
  std::size_t sweep_i = 0;
  std::size_t k_bits = 0;  // bit length of K
  std::size_t swaps = 0;
  HiReal bound_thm2;
  HiReal bound_classical;
  HiReal bound_potential;  // Theorem-1 min over k for this run
};

/// K-sweep over one instance: K0 = general threshold, then doublings. The
/// independent runs may execute concurrently; rows come back in sweep order.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

/// Header "n,k,entry_bits,sweep_i,K_bits,swaps,bound_thm2,bound_classical,
/// bound_potential" plus one line per row; reals in fixed 6-decimal form.
std::string experiment_csv(const std::vector<ExperimentRow>& rows);

}  // namespace latred
