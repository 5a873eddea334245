#pragma once

#include <optional>
#include <vector>

#include "fqmir/core_arith.hpp"

namespace fqmir {

// q_p(k) for k = 1..p-1.  Built through the logarithm law
// q_p(ab) = q_p(a) + q_p(b), so the modular exponentiation only runs
// at prime k; entries are identical to evaluating the definition at
// every k.
struct QuotientTable {
    PrimeContext ctx;
    std::vector<u64> q;  // q[k] valid for 1 <= k <= p-1; q[0] unused

    u64 at(u64 k) const;  // bounds-checked q_p(k)
};

// The residue r in [0, p) with k^(p-1) = 1 + r*p mod p^2.  k is
// reduced mod p^2 first; k = 0 mod p is rejected.
u64 fermat_quotient(const PrimeContext& ctx, u64 k);

QuotientTable quotient_table(const PrimeContext& ctx);

// Least n > 0 with q_p(n) != 0.  Only primes are probed (the minimum
// is attained at a prime); the search aborts loudly past (p+1)/2 and
// checks the floor((p+5)/4) bound on the way out.
u64 kappa(const PrimeContext& ctx);
u64 kappa(const QuotientTable& table);

// Restricts a scan to primes with p % modulus == residue.
struct CongruenceFilter {
    u64 modulus;
    u64 residue;
};

// All odd primes p <= limit with p not dividing base and
// q_p(base) == 0, ascending.  Parallel across primes; the output is
// byte-identical for any job count.
std::vector<u64> wieferich_scan(u64 base, u64 limit,
                                std::optional<CongruenceFilter> filter = std::nullopt,
                                unsigned jobs = 0);

}  // namespace fqmir
