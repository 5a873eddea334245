#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fqmir/fermat.hpp"

using namespace fqmir;

TEST_CASE("fermat_quotient frozen values") {
    const PrimeContext p5(5);
    CHECK(fermat_quotient(p5, 1) == 0);
    CHECK(fermat_quotient(p5, 2) == 3);
    CHECK(fermat_quotient(p5, 3) == 1);
    CHECK(fermat_quotient(p5, 4) == 1);

    CHECK(fermat_quotient(PrimeContext(7), 2) == 2);

    const PrimeContext p1093(1093);
    CHECK(fermat_quotient(p1093, 2) == 0);
    CHECK(fermat_quotient(p1093, 3) == 312);
    CHECK(fermat_quotient(PrimeContext(3511), 2) == 0);
}

TEST_CASE("fermat_quotient domain: residues mod p^2, never multiples of p") {
    const PrimeContext ctx(13);
    CHECK_THROWS_AS(fermat_quotient(ctx, 0), std::domain_error);
    CHECK_THROWS_AS(fermat_quotient(ctx, 13), std::domain_error);
    CHECK_THROWS_AS(fermat_quotient(ctx, 13 * 12), std::domain_error);
    CHECK_THROWS_AS(fermat_quotient(ctx, 169), std::domain_error);  // reduces to 0

    for (u64 k = 1; k < 13; ++k)
        CHECK(fermat_quotient(ctx, k + ctx.p_squared) == fermat_quotient(ctx, k));

    // q_p(-1) = 0 for odd p since (-1)^(p-1) = 1 exactly.
    CHECK(fermat_quotient(ctx, ctx.p_squared - 1) == 0);
    CHECK(fermat_quotient(PrimeContext(101), u64{101} * 101 - 1) == 0);
}

TEST_CASE("quotient_table equals the definition at every index") {
    for (u64 p : {3, 5, 7, 11, 13, 101, 499, 1093}) {
        const PrimeContext ctx(p);
        const QuotientTable table = quotient_table(ctx);
        REQUIRE(table.q.size() == p);
        for (u64 k = 1; k < p; ++k) CHECK(table.at(k) == fermat_quotient(ctx, k));
        CHECK_THROWS_AS(table.at(0), std::invalid_argument);
        CHECK_THROWS_AS(table.at(p), std::invalid_argument);
    }
}

TEST_CASE("logarithm law q(ab) = q(a) + q(b) mod p") {
    const PrimeContext ctx(613);
    const QuotientTable table = quotient_table(ctx);
    for (u64 a = 1; a < 613; ++a) {
        for (u64 b = a; b < 613; b += 17) {
            const u64 expected = (table.at(a) + table.at(b)) % 613;
            CHECK(fermat_quotient(ctx, a * b) == expected);
        }
    }
}

TEST_CASE("kappa frozen values and invariants") {
    CHECK(kappa(PrimeContext(3)) == 2);
    CHECK(kappa(PrimeContext(5)) == 2);
    CHECK(kappa(PrimeContext(7)) == 2);
    CHECK(kappa(PrimeContext(1093)) == 3);
    CHECK(kappa(PrimeContext(3511)) == 3);

    for (u64 p : primes_up_to(500)) {
        if (p == 2) continue;
        const PrimeContext ctx(p);
        const u64 k1 = kappa(ctx);
        const u64 k2 = kappa(quotient_table(ctx));
        CHECK(k1 == k2);
        CHECK(is_prime(k1));
        CHECK(k1 <= ctx.bound_quarter);
        CHECK(k1 <= ctx.bound_half);
        // every n below kappa has vanishing quotient, kappa itself does not
        for (u64 n = 2; n < k1; ++n) CHECK(fermat_quotient(ctx, n) == 0);
        CHECK(fermat_quotient(ctx, k1) != 0);
    }
}

TEST_CASE("wieferich_scan frozen results") {
    CHECK(wieferich_scan(2, 4000) == std::vector<u64>{1093, 3511});
    CHECK(wieferich_scan(2, 1000).empty());
    CHECK(wieferich_scan(2, 1093) == std::vector<u64>{1093});
    CHECK(wieferich_scan(3, 1000) == std::vector<u64>{11});  // 3^10 = 1 mod 121
}

TEST_CASE("wieferich_scan equals a serial rescan for several bases") {
    for (u64 base : {2, 3, 5, 6, 10}) {
        std::vector<u64> expect;
        for (u64 p : primes_up_to(2000)) {
            if (p == 2 || base % p == 0) continue;
            if (fermat_quotient(PrimeContext(p), base) == 0) expect.push_back(p);
        }
        CHECK(wieferich_scan(base, 2000) == expect);
    }
}

TEST_CASE("wieferich_scan congruence filter and base divisibility") {
    using Hits = std::vector<u64>;
    // 1093 = 1 mod 4 while 3511 = 3 mod 4
    CHECK(wieferich_scan(2, 4000, CongruenceFilter{4, 1}) == Hits{1093});
    CHECK(wieferich_scan(2, 4000, CongruenceFilter{4, 3}) == Hits{3511});
    CHECK(wieferich_scan(2, 4000, CongruenceFilter{4, 0}).empty());

    // p = 3 divides base 6, so it is never a candidate
    for (u64 p : wieferich_scan(6, 5000)) CHECK(p != 3);
}

TEST_CASE("wieferich_scan is deterministic across job counts") {
    const std::vector<u64> serial = wieferich_scan(2, 100000, std::nullopt, 1);
    CHECK(serial == std::vector<u64>{1093, 3511});
    for (unsigned jobs : {0u, 2u, 3u, 7u, 16u})
        CHECK(wieferich_scan(2, 100000, std::nullopt, jobs) == serial);
}

TEST_CASE("wieferich_scan input validation") {
    CHECK_THROWS_AS(wieferich_scan(1, 4000), std::invalid_argument);
    CHECK_THROWS_AS(wieferich_scan(0, 4000), std::invalid_argument);
    CHECK_THROWS_AS(wieferich_scan(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(wieferich_scan(2, (u64{1} << 31) + 1), std::invalid_argument);
    CHECK_THROWS_AS(wieferich_scan(2, 4000, CongruenceFilter{0, 1}), std::invalid_argument);
}
