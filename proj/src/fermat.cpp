#include "fqmir/fermat.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fqmir/parallel.hpp"

namespace fqmir {

u64 QuotientTable::at(u64 k) const {
    if (k < 1 || k >= ctx.p)
        throw std::invalid_argument("QuotientTable: k must lie in [1, p-1]");
    return q[k];
}

u64 fermat_quotient(const PrimeContext& ctx, u64 k) {
    u64 kk = k % ctx.p_squared;
    if (kk % ctx.p == 0)
        throw std::domain_error("fermat_quotient: p divides k, quotient undefined");
    u64 r = pow_mod(kk, ctx.p - 1, ctx.p_squared);
    u64 d = r - 1;  // r = 1 mod p by Fermat, so r >= 1
    if (d % ctx.p != 0)
        throw std::logic_error("fermat_quotient: k^(p-1) - 1 not divisible by p (arithmetic bug)");
    return d / ctx.p;
}

QuotientTable quotient_table(const PrimeContext& ctx) {
    const u64 p = ctx.p;
    // Smallest prime factor for every k < p.
    std::vector<std::uint32_t> spf(p, 0);
    for (u64 i = 2; i < p; ++i) {
        if (spf[i] != 0) continue;
        for (u64 j = i; j < p; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    QuotientTable table{ctx, std::vector<u64>(p, 0)};
    for (u64 k = 2; k < p; ++k) {
        if (spf[k] == k) {
            table.q[k] = fermat_quotient(ctx, k);
        } else {
            u64 f = spf[k];
            u64 s = table.q[f] + table.q[k / f];
            table.q[k] = s >= p ? s - p : s;
        }
    }
    return table;
}

namespace {

u64 kappa_bounds_checked(const PrimeContext& ctx, u64 n) {
    if (n > ctx.bound_quarter)
        throw std::logic_error("kappa: result " + std::to_string(n) +
                               " exceeds floor((p+5)/4) for p = " + std::to_string(ctx.p));
    return n;
}

[[noreturn]] void kappa_exhausted(const PrimeContext& ctx) {
    throw std::logic_error("kappa: no nonzero quotient up to (p+1)/2 for p = " +
                           std::to_string(ctx.p) + " (invariant violation)");
}

}  // namespace

u64 kappa(const PrimeContext& ctx) {
    for (u64 n = 2; n <= ctx.bound_half; ++n) {
        if (!is_prime(n)) continue;
        if (fermat_quotient(ctx, n) != 0) return kappa_bounds_checked(ctx, n);
    }
    kappa_exhausted(ctx);
}

u64 kappa(const QuotientTable& table) {
    const auto& ctx = table.ctx;
    for (u64 n = 2; n <= ctx.bound_half; ++n) {
        if (!is_prime(n)) continue;
        if (table.q[n] != 0) return kappa_bounds_checked(ctx, n);
    }
    kappa_exhausted(ctx);
}

std::vector<u64> wieferich_scan(u64 base, u64 limit, std::optional<CongruenceFilter> filter,
                                unsigned jobs) {
    if (base < 2) throw std::invalid_argument("wieferich_scan: base must be >= 2");
    if (limit < 3) throw std::invalid_argument("wieferich_scan: limit must be >= 3");
    if (limit > (u64{1} << 31))
        throw std::invalid_argument("wieferich_scan: limit exceeds the p^2 <= 2^62 cap");
    if (filter && filter->modulus == 0)
        throw std::invalid_argument("wieferich_scan: filter modulus must be nonzero");

    std::vector<u64> candidates;
    for (u64 p : primes_up_to(limit)) {
        if (p == 2) continue;           // q_p lives at odd primes
        if (base % p == 0) continue;    // quotient undefined when p | base
        if (filter && p % filter->modulus != filter->residue % filter->modulus) continue;
        candidates.push_back(p);
    }

    std::vector<char> hit(candidates.size(), 0);
    parallel_for_indexed(candidates.size(), jobs, [&](std::size_t i) {
        auto ctx = PrimeContext::from_sieved(candidates[i]);
        hit[i] = fermat_quotient(ctx, base) == 0 ? 1 : 0;
    });

    std::vector<u64> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (hit[i]) out.push_back(candidates[i]);
    return out;
}

}  // namespace fqmir
