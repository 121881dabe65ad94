#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace instanton::la {

// All arithmetic in this library is exact. Map matrices have entries in
// {-1,0,1} (a few in {-2,2}); elimination intermediates are minors of those
// matrices and need arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BlockLeakageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reduce an exact integer into [0, p).
inline std::uint64_t mod_reduce(const Int& v, std::uint64_t p) {
  Int r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return r.convert_to<std::uint64_t>();
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime
  return pow_mod(a % p, p - 2, p);
}

}  // namespace instanton::la
