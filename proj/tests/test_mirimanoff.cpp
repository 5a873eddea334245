#include <stdexcept>
#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "fqmir/mirimanoff.hpp"

using namespace fqmir;

TEST_CASE("inverse_table is a table of inverses") {
    CHECK(inverse_table(PrimeContext(7)) == std::vector<u64>{0, 1, 4, 5, 2, 3, 6});
    for (u64 p : {3, 5, 13, 101, 997, 99991}) {
        const PrimeContext ctx(p);
        const std::vector<u64> inv = inverse_table(ctx);
        REQUIRE(inv.size() == p);
        for (u64 j = 1; j < p; ++j) {
            CHECK(inv[j] >= 1);
            CHECK(inv[j] < p);
            CHECK(j * inv[j] % p == 1);
        }
    }
}

TEST_CASE("gamma frozen value tables") {
    CHECK(zero_profile(PrimeContext(5)).values == std::vector<u64>{0, 0, 4, 3, 4});
    CHECK(zero_profile(PrimeContext(7)).values == std::vector<u64>{0, 0, 3, 0, 2, 0, 3});
    CHECK(zero_profile(PrimeContext(13)).values ==
          std::vector<u64>{0, 0, 7, 8, 0, 6, 4, 3, 4, 6, 0, 8, 7});

    CHECK(gamma_eval(PrimeContext(3), 2) == 1);
    CHECK(gamma_eval(PrimeContext(5), 2) == 4);
    CHECK(gamma_eval(PrimeContext(5), 3) == 3);
}

TEST_CASE("gamma_eval equals the quotient-table route everywhere") {
    for (u64 p : {3, 7, 11, 101, 499}) {
        const PrimeContext ctx(p);
        const QuotientTable table = quotient_table(ctx);
        for (u64 t = 2; t < p; ++t) CHECK(gamma_eval(ctx, t) == gamma_via_quotients(table, t));
    }
}

TEST_CASE("gamma_eval reduces its argument, gamma_via_quotients does not") {
    const PrimeContext ctx(11);
    const QuotientTable table = quotient_table(ctx);
    CHECK(gamma_eval(ctx, 13) == gamma_eval(ctx, 2));
    CHECK(gamma_eval(ctx, 0) == 0);
    CHECK(gamma_eval(ctx, 1) == 0);
    CHECK_THROWS_AS(gamma_via_quotients(table, 0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_via_quotients(table, 1), std::invalid_argument);
    CHECK_THROWS_AS(gamma_via_quotients(table, 11), std::invalid_argument);
}

TEST_CASE("zero_profile structure") {
    const ZeroProfile p5 = zero_profile(PrimeContext(5));
    CHECK(p5.zeros == std::vector<u64>{0, 1});
    CHECK(p5.histogram[0] == 2);
    CHECK(p5.kappa_from_gamma == 2);

    const ZeroProfile p7 = zero_profile(PrimeContext(7));
    CHECK(p7.zeros == std::vector<u64>{0, 1, 3, 5});
    CHECK(p7.histogram[0] == 4);

    for (u64 p : {5, 7, 13, 101, 1093}) {
        const PrimeContext ctx(p);
        const ZeroProfile profile = zero_profile(ctx);
        REQUIRE(profile.values.size() == p);
        REQUIRE(profile.histogram.size() == p);
        // the histogram counts every t exactly once
        CHECK(std::accumulate(profile.histogram.begin(), profile.histogram.end(), u64{0}) == p);
        // zeros lists exactly the vanishing points, ascending
        CHECK(std::is_sorted(profile.zeros.begin(), profile.zeros.end()));
        CHECK(profile.zeros.size() == profile.histogram[0]);
        for (u64 z : profile.zeros) CHECK(profile.values[z] == 0);
        // both profile constructions agree
        const ZeroProfile via_table = zero_profile(quotient_table(ctx));
        CHECK(via_table.values == profile.values);
        CHECK(via_table.kappa_from_gamma == profile.kappa_from_gamma);
    }
}

TEST_CASE("eta_0 frozen counts") {
    CHECK(zero_profile(PrimeContext(59)).histogram[0] == 14);
    CHECK(zero_profile(PrimeContext(1093)).histogram[0] == 19);
}

TEST_CASE("derivative collapses to the geometric sum") {
    for (u64 p : {3, 11, 101, 499}) {
        const VerificationReport r = derivative_check(PrimeContext(p));
        CHECK(r.pass());
        CHECK(r.cases_checked == p);
        CHECK(r.prime == p);
        CHECK(r.relation == RelationKind::derivative);
    }
}

TEST_CASE("reflection and inversion symmetries") {
    for (u64 p : {5, 103, 499}) {
        const VerificationReport r = symmetry_check(PrimeContext(p));
        CHECK(r.pass());
        CHECK(r.cases_checked == 2 * p - 1);
        CHECK(r.relation == RelationKind::symmetry);
    }
}

TEST_CASE("sixth_roots exist exactly for p = 1 mod 3") {
    using Pair = std::pair<u64, u64>;
    CHECK(sixth_roots(PrimeContext(7)) == Pair{3, 5});
    CHECK(sixth_roots(PrimeContext(13)) == Pair{4, 10});
    CHECK(sixth_roots(PrimeContext(19)) == Pair{8, 12});
    CHECK(sixth_roots(PrimeContext(31)) == Pair{6, 26});
    CHECK_FALSE(sixth_roots(PrimeContext(3)).has_value());
    CHECK_FALSE(sixth_roots(PrimeContext(5)).has_value());
    CHECK_FALSE(sixth_roots(PrimeContext(11)).has_value());

    for (u64 p : primes_up_to(1000)) {
        if (p < 5) continue;
        const auto roots = sixth_roots(PrimeContext(p));
        CHECK(roots.has_value() == (p % 3 == 1));
        if (!roots) continue;
        for (u64 r : {roots->first, roots->second})
            CHECK((r * r % p + p + 1 - r) % p == 0);  // r^2 - r + 1 = 0
        CHECK(roots->first < roots->second);
    }
}

TEST_CASE("orbit decomposition of small zero sets") {
    const std::vector<Orbit> p5 = orbit_decompose(zero_profile(PrimeContext(5)));
    REQUIRE(p5.size() == 1);
    CHECK(p5[0].label == OrbitLabel::trivial);
    CHECK(p5[0].members == std::vector<u64>{0, 1});

    const std::vector<Orbit> p7 = orbit_decompose(zero_profile(PrimeContext(7)));
    REQUIRE(p7.size() == 2);
    CHECK(p7[0].label == OrbitLabel::trivial);
    CHECK(p7[1].label == OrbitLabel::sixth_root);
    CHECK(p7[1].members == std::vector<u64>{3, 5});

    const std::vector<Orbit> p13 = orbit_decompose(zero_profile(PrimeContext(13)));
    REQUIRE(p13.size() == 2);
    CHECK(p13[1].label == OrbitLabel::sixth_root);
    CHECK(p13[1].members == std::vector<u64>{4, 10});
}

TEST_CASE("orbit decomposition frozen for p = 59 and p = 1093") {
    const std::vector<Orbit> p59 = orbit_decompose(zero_profile(PrimeContext(59)));
    REQUIRE(p59.size() == 3);
    CHECK(p59[0].label == OrbitLabel::trivial);
    CHECK(p59[1].label == OrbitLabel::generic);
    CHECK(p59[2].label == OrbitLabel::generic);
    CHECK(p59[1].members.size() == 6);
    CHECK(p59[2].members.size() == 6);

    const std::vector<Orbit> p1093 = orbit_decompose(zero_profile(PrimeContext(1093)));
    REQUIRE(p1093.size() == 5);  // 19 zeros = 2 + 3 + 6 + 2 + 6
    CHECK(p1093[0].members == std::vector<u64>{0, 1});
    CHECK(p1093[0].label == OrbitLabel::trivial);
    CHECK(p1093[1].members == std::vector<u64>{2, 547, 1092});
    CHECK(p1093[1].label == OrbitLabel::half_orbit);
    CHECK(p1093[3].members == std::vector<u64>{152, 942});
    CHECK(p1093[3].label == OrbitLabel::sixth_root);
    CHECK(p1093[2].label == OrbitLabel::generic);
    CHECK(p1093[4].label == OrbitLabel::generic);
}

TEST_CASE("orbit invariants across many primes") {
    for (u64 p : primes_up_to(700)) {
        if (p == 2) continue;
        const ZeroProfile profile = zero_profile(PrimeContext(p));
        const std::vector<Orbit> orbits = orbit_decompose(profile);

        std::set<u64> seen;
        for (const Orbit& o : orbits) {
            CHECK((o.members.size() == 2 || o.members.size() == 3 || o.members.size() == 6));
            CHECK(std::is_sorted(o.members.begin(), o.members.end()));
            for (u64 m : o.members) {
                CHECK(profile.values[m] == 0);
                CHECK(seen.insert(m).second);  // orbits partition the zero set
            }
            switch (o.label) {
                case OrbitLabel::trivial:
                    CHECK(o.members == std::vector<u64>{0, 1});
                    break;
                case OrbitLabel::half_orbit:
                    CHECK(o.members == std::vector<u64>{2, (p + 1) / 2, p - 1});
                    break;
                case OrbitLabel::sixth_root:
                    CHECK(o.members.size() == 2);
                    CHECK(p % 3 == 1);
                    break;
                case OrbitLabel::generic:
                    CHECK(o.members.size() == 6);
                    break;
            }
        }
        CHECK(seen.size() == profile.zeros.size());
    }
}

TEST_CASE("orbit label names") {
    CHECK(orbit_label_name(OrbitLabel::trivial) == "trivial");
    CHECK(orbit_label_name(OrbitLabel::half_orbit) == "half_orbit");
    CHECK(orbit_label_name(OrbitLabel::sixth_root) == "sixth_root");
    CHECK(orbit_label_name(OrbitLabel::generic) == "generic");
}
