#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

namespace stop {

// Error taxonomy. The CLI maps these onto process exit codes; library users
// catch whichever layer they care about.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HashMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic RNG. std::mt19937_64 seeds plus hand-rolled draw functions so
// the byte-for-byte reproducibility guarantees do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next_u64() {
    // splitmix64
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  int uniform_int(int n) {
    return static_cast<int>(uniform() * static_cast<double>(n));
  }

  // Standard normal, Box-Muller with a cached spare.
  double normal();

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// FNV-1a 64-bit. Used for frozen-weight hashes and config hashes; the only
// requirement is determinism, not cryptographic strength.
class Fnv1a {
 public:
  void update(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      hash_ ^= p[i];
      hash_ *= 0x100000001b3ull;
    }
  }
  void update(const std::string& s) { update(s.data(), s.size()); }
  uint64_t digest() const { return hash_; }

 private:
  uint64_t hash_ = 0xcbf29ce484222325ull;
};

std::string hex64(uint64_t v);

}  // namespace stop
