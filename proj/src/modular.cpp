#include "nodalhodge/modular.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace nodalhodge::modular {

u64 PrimeField::pow(u64 base, u64 exp) const {
  u64 result = 1;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1U;
  }
  return result;
}

u64 PrimeField::inv(u64 a) const {
  if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
  return pow(a, p - 2);
}

u64 PrimeField::reduce(const mpz_class& x) const {
  // mpz_fdiv_ui returns the non-negative remainder.
  return static_cast<u64>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

u64 PrimeField::reduce_gauss(const mpz_class& re, const mpz_class& im, int sign) const {
  const u64 r = reduce(re);
  if (sgn(im) == 0) return r;
  const u64 t = mul(reduce(im), sqrt_minus_one);
  return sign > 0 ? add(r, t) : sub(r, t);
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const PrimeField& prime_field(std::size_t index) {
  static std::mutex mutex;
  static std::vector<PrimeField> primes;
  std::lock_guard<std::mutex> lock(mutex);
  while (primes.size() <= index) {
    u64 candidate = primes.empty() ? (u64{1} << 62) - 3 : primes.back().p - 4;
    // Stay on the residue class 1 mod 4.
    while (candidate % 4 != 1) --candidate;
    while (!is_prime_u64(candidate)) candidate -= 4;
    PrimeField field;
    field.p = candidate;
    for (u64 a = 2;; ++a) {
      const u64 s = powmod(a, (candidate - 1) / 4, candidate);
      if (mulmod(s, s, candidate) == candidate - 1) {
        field.sqrt_minus_one = s;
        break;
      }
    }
    primes.push_back(field);
  }
  return primes[index];
}

bool rational_reconstruct(const mpz_class& x, const mpz_class& modulus, mpz_class& num,
                          mpz_class& den) {
  mpz_class bound;
  mpz_class half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());

  mpz_class r0 = modulus;
  mpz_class r1 = x % modulus;
  if (r1 < 0) r1 += modulus;
  mpz_class t0 = 0;
  mpz_class t1 = 1;
  mpz_class q;
  mpz_class tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0) return false;
  if (abs(t1) > bound) return false;
  num = r1;
  den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return g == 1;
}

}  // namespace nodalhodge::modular
