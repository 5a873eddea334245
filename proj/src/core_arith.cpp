#include "fqmir/core_arith.hpp"

#include <stdexcept>
#include <string>

namespace fqmir {

namespace {

void check_modulus(u64 m) {
    if (m < 2)
        throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(m));
    if (m > kModulusCap)
        throw std::invalid_argument("modulus exceeds the 2^62 cap");
}

// Internal mulmod/powmod without the cap check; used by the primality
// test, which must accept any 64-bit candidate.
u64 mr_mul(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128(a) * b) % m);
}

u64 mr_pow(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    u64 b = base % m;
    while (exp) {
        if (exp & 1) r = mr_mul(r, b, m);
        b = mr_mul(b, b, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

u64 mul_mod(u64 a, u64 b, u64 m) {
    check_modulus(m);
    if (a >= m) a %= m;
    if (b >= m) b %= m;
    return static_cast<u64>((u128(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    check_modulus(m);
    u64 r = 1 % m;
    u64 b = base % m;
    while (exp) {
        if (exp & 1) r = static_cast<u64>((u128(r) * b) % m);
        b = static_cast<u64>((u128(b) * b) % m);
        exp >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 m) {
    check_modulus(m);
    a %= m;
    // Extended Euclid, tracking only the coefficient of a.  The
    // coefficients stay below m <= 2^62, so i64 never overflows.
    i64 x0 = 1, x1 = 0;
    u64 r0 = a, r1 = m;
    while (r1 != 0) {
        u64 q = r0 / r1;
        u64 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        i64 x2 = x0 - static_cast<i64>(q) * x1;
        x0 = x1;
        x1 = x2;
    }
    if (r0 != 1)
        throw std::domain_error("inv_mod: argument is not a unit (gcd != 1)");
    i64 x = x0 % static_cast<i64>(m);
    if (x < 0) x += static_cast<i64>(m);
    return static_cast<u64>(x);
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(__builtin_sqrt(static_cast<double>(n)));
    // Correct the float seed; squares go through 128 bits so inputs
    // near 2^64 cannot wrap.
    while (r > 0 && u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all 64-bit inputs.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = mr_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mr_mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<std::uint8_t> composite(n + 1, 0);
    for (u64 i = 2; i * i <= n; ++i) {
        if (composite[i]) continue;
        for (u64 j = i * i; j <= n; j += i) composite[j] = 1;
    }
    for (u64 i = 2; i <= n; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

PrimeContext::PrimeContext(u64 prime, sieved_tag) {
    if (prime < 3 || prime % 2 == 0)
        throw std::invalid_argument("PrimeContext: p must be an odd prime >= 3, got " +
                                    std::to_string(prime));
    if (prime > (u64{1} << 31))
        throw std::invalid_argument("PrimeContext: p^2 would exceed the 2^62 modulus cap");
    p = prime;
    p_squared = p * p;
    sqrt_floor = isqrt(p);
    bound_half = (p + 1) / 2;
    bound_quarter = (p + 5) / 4;
}

PrimeContext::PrimeContext(u64 prime) : PrimeContext(prime, sieved_tag{}) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimeContext: " + std::to_string(p) + " is not prime");
}

PrimeContext PrimeContext::from_sieved(u64 prime) {
    return PrimeContext(prime, sieved_tag{});
}

}  // namespace fqmir
