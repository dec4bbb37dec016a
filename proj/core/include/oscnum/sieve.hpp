#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace oscnum {

// Multiplicative-function table for 1..limit: smallest prime factor, Möbius
// value and Mertens prefix sums. Immutable after construction and safe to
// share between threads.
class SieveTable {
 public:
  // Builds the table. `segment_size >= limit` selects the single-pass linear
  // sieve; smaller segments use the segmented sieve (segments processed on
  // `threads` workers, 0 = hardware concurrency). The result does not depend
  // on segment_size or threads.
  static SieveTable build(std::uint64_t limit, std::uint64_t segment_size,
                          unsigned threads = 0);
  // Convenience: monolithic build.
  static SieveTable build(std::uint64_t limit) { return build(limit, limit); }

  std::uint64_t limit() const noexcept { return limit_; }

  // Smallest prime factor of n, 2 <= n <= limit.
  std::uint64_t spf(std::uint64_t n) const;
  // Möbius value, 1 <= n <= limit.
  int mu(std::uint64_t n) const;
  // M(n) = mu(1) + ... + mu(n), 0 <= n <= limit (M(0) = 0).
  std::int64_t mertens_prefix(std::uint64_t n) const;
  // log p when n = p^a, else 0.
  double von_mangoldt(std::uint64_t n) const;
  // Base prime when n = p^a (a >= 1), else 0.
  std::uint64_t prime_power_base(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const;

  // Raw Möbius values; index 0 is unused and holds 0.
  std::span<const std::int8_t> mu_values() const noexcept { return mu_; }

  // Width in bytes of the stored smallest-prime-factor entries.
  unsigned spf_width() const noexcept { return spf_width_; }

  friend bool operator==(const SieveTable& a, const SieveTable& b);

 private:
  SieveTable() = default;
  void allocate(std::uint64_t limit);
  void set_spf(std::uint64_t n, std::uint64_t p);
  std::uint64_t raw_spf(std::uint64_t n) const;
  void check_index(std::uint64_t n, std::uint64_t lo) const;
  void build_linear();
  void build_segmented(std::uint64_t segment_size, unsigned threads);
  void finish_prefix();

  std::uint64_t limit_ = 0;
  unsigned spf_width_ = 0;
  std::vector<std::uint16_t> spf16_;
  std::vector<std::uint32_t> spf32_;
  std::vector<std::uint64_t> spf64_;
  std::vector<std::int8_t> mu_;
  std::vector<std::int64_t> mertens_;
};

// Free-function spellings of the table queries.
int moebius(std::uint64_t n, const SieveTable& table);
double von_mangoldt(std::uint64_t n, const SieveTable& table);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, const SieveTable& table);

// Möbius cache file: magic "MLAB1", limit as little-endian uint64, then
// mu(1..limit) as signed bytes.
struct MobiusDump {
  std::uint64_t limit = 0;
  std::vector<std::int8_t> mu;  // mu[0] is mu(1)
};

void write_mobius_dump(const SieveTable& table, std::ostream& out);
MobiusDump read_mobius_dump(std::istream& in);

}  // namespace oscnum
