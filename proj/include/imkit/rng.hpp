#pragma once

#include <cstdint>
#include <random>

namespace imkit {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seeds(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

// One pseudo-random stream. Replication sub-streams are derived by a
// counter-based mix of (master_seed, replication index), so results do not
// depend on which worker runs which replication.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline RandomStream replication_stream(std::uint64_t master_seed,
                                       std::uint64_t replication) {
  return RandomStream(mix_seeds(master_seed, replication));
}

}  // namespace imkit
