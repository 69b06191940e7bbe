#include "latred/experiment.hpp"

#include <cstdio>
#include <future>
#include <sstream>

#include "latred/gso.hpp"
#include "latred/ortho.hpp"
#include "latred/potential.hpp"

namespace latred {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t u;
  do {
    u = next();
  } while (u >= limit);
  return u % bound;
}

IntMatrix random_full_rank_matrix(std::size_t rows, std::size_t cols, unsigned bits,
                                  Xoshiro256& rng) {
  if (rows < cols) throw InputError("cannot be full column rank with rows < cols");
  if (bits > 62) throw InputError("entry_bits too large");
  const std::uint64_t half = 1ull << bits;
  const std::uint64_t span = 2 * half + 1;  // [-2^bits, 2^bits]
  for (;;) {
    IntMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) {
        std::int64_t v = static_cast<std::int64_t>(rng.below(span)) -
                         static_cast<std::int64_t>(half);
        m.at(r, c) = static_cast<long>(v);
      }
    if (rank(m) == cols) return m;
  }
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  if (config.sweep < 1) throw InputError("sweep count must be >= 1");

  IntMatrix a = [&] {
    if (config.fixed_a) return *config.fixed_a;
    if (config.n <= config.k || config.k < 1) throw InputError("need n > k >= 1");
    Xoshiro256 rng(config.seed);
    return random_full_rank_matrix(config.n, config.k, config.entry_bits, rng);
  }();
  const std::size_t n = a.rows(), k = a.cols();
  if (n <= k) throw InputError("need n > k >= 1");

  const BigInt k0 = threshold_K_general(a);
  const HiReal log_norm_a = log_norm(a);
  const HiReal bound_thm2 = swap_bound_theorem2(n, k, log_norm_a);

  auto run_one = [&](std::size_t i) {
    BigInt scale = k0;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), i);
    KernelOptions opts;
    opts.mode = KMode::Explicit;
    opts.explicit_K = scale;
    KernelResult res = orthogonal_lattice_basis(a, opts);

    ExperimentRow row;
    row.n = n;
    row.k = k;
    row.entry_bits = config.fixed_a ? 0 : config.entry_bits;
    row.sweep_i = i;
    row.k_bits = mpz_sizeinbase(scale.get_mpz_t(), 2);
    row.swaps = res.swap_count;
    row.bound_thm2 = bound_thm2;
    row.bound_classical =
        swap_bound_classical(n, k, HiReal::log2(BigRat(scale)), log_norm_a);
    row.bound_potential =
        swap_bound_min_over_k(build_extended(a, scale).basis, res.reduced_extended);
    return row;
  };

  // Sweep points are independent; order of completion does not matter.
  std::vector<std::future<ExperimentRow>> futures;
  for (std::size_t i = 0; i < config.sweep; ++i)
    futures.push_back(std::async(std::launch::async, run_one, i));
  std::vector<ExperimentRow> rows;
  for (auto& f : futures) rows.push_back(f.get());
  return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "n,k,entry_bits,sweep_i,K_bits,swaps,bound_thm2,bound_classical,bound_potential\n";
  char buf[64];
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << r.entry_bits << ',' << r.sweep_i << ','
        << r.k_bits << ',' << r.swaps << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.bound_thm2.to_double());
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.bound_classical.to_double());
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.bound_potential.to_double());
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace latred
