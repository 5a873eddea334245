#pragma once

#include <cstdint>
#include <vector>

namespace fqmir {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Largest accepted modulus.  Keeps a*b inside the 128-bit double-width
// product and lets p^2 act as a modulus for primes up to 2^31.
inline constexpr u64 kModulusCap = u64{1} << 62;

// (a*b) mod m with a double-width intermediate.  Inputs are normalized
// into [0, m) first; rejects m < 2 and m > kModulusCap.
u64 mul_mod(u64 a, u64 b, u64 m);

// base^exp mod m by square-and-multiply.
u64 pow_mod(u64 base, u64 exp, u64 m);

// Inverse of a mod m via the extended Euclidean algorithm.
// Throws std::domain_error when gcd(a, m) != 1 and
// std::invalid_argument for a bad modulus.
u64 inv_mod(u64 a, u64 m);

// Exact floor(sqrt(n)).
u64 isqrt(u64 n);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(u64 n);

// All primes <= n, ascending.
std::vector<u64> primes_up_to(u64 n);

// An odd prime p with the derived constants everything downstream
// keeps reaching for.
struct PrimeContext {
    u64 p;
    u64 p_squared;
    u64 sqrt_floor;     // floor(sqrt(p))
    u64 bound_half;     // (p+1)/2
    u64 bound_quarter;  // floor((p+5)/4)

    // Validates oddness, the p^2 <= 2^62 cap and primality.
    explicit PrimeContext(u64 prime);

    // For primes that already came out of a sieve: same range checks,
    // no primality test.
    static PrimeContext from_sieved(u64 prime);

private:
    struct sieved_tag {};
    PrimeContext(u64 prime, sieved_tag);
};

}  // namespace fqmir
