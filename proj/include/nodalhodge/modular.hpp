#pragma once

// Word-size prime fields used to accelerate exact linear algebra. Primes are
// 62-bit and congruent to 1 mod 4, so Z[i] maps onto F_p through either
// square root of -1.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>

namespace nodalhodge::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimeField {
  u64 p = 0;
  u64 sqrt_minus_one = 0;

  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 pow(u64 base, u64 exp) const;
  /// Requires a != 0 mod p.
  u64 inv(u64 a) const;

  /// Image of an integer.
  u64 reduce(const mpz_class& x) const;
  /// Image of re + im*i under i -> sign*sqrt(-1).
  u64 reduce_gauss(const mpz_class& re, const mpz_class& im, int sign) const;
};

/// Multiplication by a fixed residue (Shoup's trick); valid for p < 2^63.
struct FixedMul {
  u64 w = 0;
  u64 w_shoup = 0;

  FixedMul() = default;
  FixedMul(u64 w_, u64 p) : w(w_), w_shoup(static_cast<u64>((static_cast<u128>(w_) << 64) / p)) {}

  u64 operator()(u64 a, u64 p) const {
    const u64 q = static_cast<u64>((static_cast<u128>(a) * w_shoup) >> 64);
    u64 r = a * w - q * p;
    return r >= p ? r - p : r;
  }
};

bool is_prime_u64(u64 n);

/// The index-th prime of the fixed descending sequence below 2^62 with
/// p = 1 mod 4. Deterministic across runs.
const PrimeField& prime_field(std::size_t index);

/// Finds num/den with |num|, den <= sqrt(modulus/2) and num = x*den mod modulus.
/// Returns false when no such fraction exists.
bool rational_reconstruct(const mpz_class& x, const mpz_class& modulus, mpz_class& num,
                          mpz_class& den);

}  // namespace nodalhodge::modular
