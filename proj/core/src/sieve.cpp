#include "oscnum/sieve.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <new>
#include <ostream>
#include <string>
#include <thread>

#include "oscnum/errors.hpp"
#include "oscnum/int_math.hpp"

namespace oscnum {

std::uint64_t floor_arg(double x) {
  if (!(x >= 1.0)) return 0;
  if (x >= 1.8e19) throw RangeError("argument too large for 64-bit floor");
  return static_cast<std::uint64_t>(std::floor(x));
}

namespace {

constexpr std::array<char, 5> kDumpMagic{'M', 'L', 'A', 'B', '1'};

std::vector<std::uint64_t> small_primes(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

void SieveTable::allocate(std::uint64_t limit) {
  limit_ = limit;
  try {
    if (limit <= std::numeric_limits<std::uint16_t>::max()) {
      spf_width_ = 2;
      spf16_.assign(limit + 1, 0);
    } else if (limit <= std::numeric_limits<std::uint32_t>::max()) {
      spf_width_ = 4;
      spf32_.assign(limit + 1, 0);
    } else {
      spf_width_ = 8;
      spf64_.assign(limit + 1, 0);
    }
    mu_.assign(limit + 1, 0);
    mertens_.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate sieve table for limit " + std::to_string(limit));
  } catch (const std::length_error&) {
    throw ResourceError("cannot allocate sieve table for limit " + std::to_string(limit));
  }
}

void SieveTable::set_spf(std::uint64_t n, std::uint64_t p) {
  switch (spf_width_) {
    case 2: spf16_[n] = static_cast<std::uint16_t>(p); break;
    case 4: spf32_[n] = static_cast<std::uint32_t>(p); break;
    default: spf64_[n] = p; break;
  }
}

std::uint64_t SieveTable::raw_spf(std::uint64_t n) const {
  switch (spf_width_) {
    case 2: return spf16_[n];
    case 4: return spf32_[n];
    default: return spf64_[n];
  }
}

SieveTable SieveTable::build(std::uint64_t limit, std::uint64_t segment_size, unsigned threads) {
  if (limit < 1) throw DomainError("sieve limit must be at least 1");
  if (segment_size < 1) throw DomainError("segment size must be at least 1");
  SieveTable table;
  table.allocate(limit);
  if (segment_size >= limit) {
    table.build_linear();
  } else {
    table.build_segmented(segment_size, threads);
  }
  table.finish_prefix();
  return table;
}

void SieveTable::build_linear() {
  std::vector<std::uint64_t> primes;
  mu_[1] = 1;
  for (std::uint64_t i = 2; i <= limit_; ++i) {
    if (raw_spf(i) == 0) {
      set_spf(i, i);
      mu_[i] = -1;
      primes.push_back(i);
    }
    const std::uint64_t si = raw_spf(i);
    for (const std::uint64_t p : primes) {
      if (p > si || i > limit_ / p) break;
      const std::uint64_t m = i * p;
      set_spf(m, p);
      mu_[m] = (p == si) ? 0 : static_cast<std::int8_t>(-mu_[i]);
    }
  }
}

void SieveTable::build_segmented(std::uint64_t segment_size, unsigned threads) {
  const std::vector<std::uint64_t> base = small_primes(isqrt(limit_));
  const std::uint64_t segments = (limit_ + segment_size - 1) / segment_size;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, segments));

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::vector<std::uint64_t> rem;
    for (std::uint64_t seg = next++; seg < segments; seg = next++) {
      const std::uint64_t lo = 1 + seg * segment_size;
      const std::uint64_t hi = std::min(limit_, lo + segment_size - 1);
      rem.resize(hi - lo + 1);
      for (std::uint64_t n = lo; n <= hi; ++n) {
        rem[n - lo] = n;
        mu_[n] = 1;
      }
      for (const std::uint64_t p : base) {
        if (p > hi / p) break;
        std::uint64_t m = std::max(p, (lo + p - 1) / p * p);
        for (; m <= hi; m += p) {
          const std::uint64_t i = m - lo;
          if (raw_spf(m) == 0) set_spf(m, p);
          if ((m / p) % p == 0) {
            mu_[m] = 0;
          } else {
            mu_[m] = static_cast<std::int8_t>(-mu_[m]);
            rem[i] /= p;
          }
        }
      }
      for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
        // Whatever survives division by the small primes is one large prime.
        if (rem[n - lo] > 1 && mu_[n] != 0) mu_[n] = static_cast<std::int8_t>(-mu_[n]);
        if (raw_spf(n) == 0) set_spf(n, n);
      }
    }
  };

  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

void SieveTable::finish_prefix() {
  std::int64_t running = 0;
  for (std::uint64_t n = 1; n <= limit_; ++n) {
    running += mu_[n];
    mertens_[n] = running;
  }
}

void SieveTable::check_index(std::uint64_t n, std::uint64_t lo) const {
  if (n < lo || n > limit_) {
    throw RangeError("argument " + std::to_string(n) + " outside sieve table range [" +
                     std::to_string(lo) + ", " + std::to_string(limit_) + "]");
  }
}

std::uint64_t SieveTable::spf(std::uint64_t n) const {
  check_index(n, 2);
  return raw_spf(n);
}

int SieveTable::mu(std::uint64_t n) const {
  check_index(n, 1);
  return mu_[n];
}

std::int64_t SieveTable::mertens_prefix(std::uint64_t n) const {
  check_index(n, 0);
  return mertens_[n];
}

std::uint64_t SieveTable::prime_power_base(std::uint64_t n) const {
  check_index(n, 1);
  if (n == 1) return 0;
  const std::uint64_t p = raw_spf(n);
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? p : 0;
}

double SieveTable::von_mangoldt(std::uint64_t n) const {
  const std::uint64_t p = prime_power_base(n);
  return p == 0 ? 0.0 : std::log(static_cast<double>(p));
}

bool SieveTable::is_prime(std::uint64_t n) const {
  check_index(n, 1);
  return n >= 2 && raw_spf(n) == n;
}

bool operator==(const SieveTable& a, const SieveTable& b) {
  if (a.limit_ != b.limit_ || a.spf_width_ != b.spf_width_) return false;
  return a.spf16_ == b.spf16_ && a.spf32_ == b.spf32_ && a.spf64_ == b.spf64_ &&
         a.mu_ == b.mu_ && a.mertens_ == b.mertens_;
}

int moebius(std::uint64_t n, const SieveTable& table) { return table.mu(n); }

double von_mangoldt(std::uint64_t n, const SieveTable& table) { return table.von_mangoldt(n); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, const SieveTable& table) {
  if (limit > table.limit()) {
    throw RangeError("prime bound " + std::to_string(limit) + " exceeds table limit " +
                     std::to_string(table.limit()));
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (table.is_prime(n)) out.push_back(n);
  }
  return out;
}

void write_mobius_dump(const SieveTable& table, std::ostream& out) {
  out.write(kDumpMagic.data(), kDumpMagic.size());
  std::array<unsigned char, 8> le{};
  std::uint64_t limit = table.limit();
  for (auto& byte : le) {
    byte = static_cast<unsigned char>(limit & 0xff);
    limit >>= 8;
  }
  out.write(reinterpret_cast<const char*>(le.data()), le.size());
  const auto mu = table.mu_values().subspan(1);
  out.write(reinterpret_cast<const char*>(mu.data()), static_cast<std::streamsize>(mu.size()));
  if (!out) throw Error("failed to write Möbius dump");
}

MobiusDump read_mobius_dump(std::istream& in) {
  std::array<char, 5> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kDumpMagic) throw ParseError("not a Möbius dump (bad magic)");
  std::array<unsigned char, 8> le{};
  in.read(reinterpret_cast<char*>(le.data()), le.size());
  if (!in) throw ParseError("truncated Möbius dump header");
  MobiusDump dump;
  for (int i = 7; i >= 0; --i) dump.limit = (dump.limit << 8) | le[static_cast<std::size_t>(i)];
  if (dump.limit == 0) throw ParseError("Möbius dump has zero limit");
  try {
    dump.mu.resize(dump.limit);
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate Möbius dump for limit " + std::to_string(dump.limit));
  }
  in.read(reinterpret_cast<char*>(dump.mu.data()), static_cast<std::streamsize>(dump.limit));
  if (static_cast<std::uint64_t>(in.gcount()) != dump.limit) {
    throw ParseError("truncated Möbius dump: expected " + std::to_string(dump.limit) + " entries");
  }
  for (std::uint64_t i = 0; i < dump.limit; ++i) {
    if (dump.mu[i] < -1 || dump.mu[i] > 1) {
      throw ParseError("Möbius dump entry " + std::to_string(i + 1) + " out of range");
    }
  }
  return dump;
}

}  // namespace oscnum
