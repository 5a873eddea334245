#include "fqmir/relations.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fqmir/parallel.hpp"

namespace fqmir {

namespace {

using clock_type = std::chrono::steady_clock;

// Shared cores so the exhaustive sweeps can reuse one inverse table.
// All operands are already reduced mod p; p <= 2^31 keeps every
// product below 2^62, so plain u64 arithmetic suffices.

bool prop2_holds(const ZeroProfile& profile, const std::vector<u64>& inv, u64 a, u64 b) {
    const u64 p = profile.ctx.p;
    const auto& g = profile.values;
    const u64 ab = a * b % p;
    const u64 m_ab = p + 1 - ab;  // 1 - ab, in [2, p-1]
    const u64 m_a = p + 1 - a;
    const u64 m_b = p + 1 - b;
    const u64 inv_m_ab = inv[m_ab];
    const u64 lhs = (m_ab * g[m_b * inv_m_ab % p] % p + m_b * g[a] % p) % p;
    const u64 rhs = (m_ab * g[m_a * inv_m_ab % p] % p + m_a * g[b] % p) % p;
    return lhs == rhs;
}

bool three_term_holds(const ZeroProfile& profile, const std::vector<u64>& inv, u64 k, u64 l,
                      u64 j) {
    const u64 p = profile.ctx.p;
    const auto& g = profile.values;
    const u64 kl = (k + l) % p;
    const u64 lj = (l + j) % p;
    const u64 klj = (kl + j) % p;
    const u64 inv_klj = inv[klj];
    const u64 lhs = (klj * g[k * inv_klj % p] % p + lj * g[l * inv[lj] % p] % p) % p;
    const u64 rhs = (klj * g[kl * inv_klj % p] % p + kl * g[k * inv[kl] % p] % p) % p;
    return lhs == rhs;
}

bool ed_form_holds(const ZeroProfile& profile, const std::vector<u64>& inv, u64 e, u64 d) {
    const u64 p = profile.ctx.p;
    const auto& g = profile.values;
    const u64 s = (e + d + p - 1) % p;  // e + d - 1, nonzero by hypothesis
    const u64 inv_s = inv[s];
    const u64 diff = (g[(d + p - 1) % p * inv_s % p] + p - g[d * inv_s % p]) % p;
    const u64 lhs = s * diff % p;
    const u64 rhs = (g[e] + p - g[d]) % p;
    return lhs == rhs;
}

}  // namespace

bool verify_prop2(const ZeroProfile& profile, u64 a, u64 b) {
    const u64 p = profile.ctx.p;
    a %= p;
    b %= p;
    if (a <= 1) throw std::invalid_argument("verify_prop2: a is 0 or 1 mod p");
    if (b <= 1) throw std::invalid_argument("verify_prop2: b is 0 or 1 mod p");
    if (a * b % p <= 1) throw std::invalid_argument("verify_prop2: ab is 0 or 1 mod p");
    return prop2_holds(profile, inverse_table(profile.ctx), a, b);
}

bool verify_three_term(const ZeroProfile& profile, u64 k, u64 l, u64 j) {
    const u64 p = profile.ctx.p;
    k %= p;
    l %= p;
    j %= p;
    if (k == 0) throw std::invalid_argument("verify_three_term: k is 0 mod p");
    if (l == 0) throw std::invalid_argument("verify_three_term: l is 0 mod p");
    if (j == 0) throw std::invalid_argument("verify_three_term: j is 0 mod p");
    if ((k + l) % p == 0) throw std::invalid_argument("verify_three_term: k+l is 0 mod p");
    if ((l + j) % p == 0) throw std::invalid_argument("verify_three_term: l+j is 0 mod p");
    if ((k + l + j) % p == 0) throw std::invalid_argument("verify_three_term: k+l+j is 0 mod p");
    return three_term_holds(profile, inverse_table(profile.ctx), k, l, j);
}

bool verify_ed_form(const ZeroProfile& profile, u64 e, u64 d) {
    const u64 p = profile.ctx.p;
    e %= p;
    d %= p;
    if (e <= 1) throw std::invalid_argument("verify_ed_form: e is 0 or 1 mod p");
    if (d <= 1) throw std::invalid_argument("verify_ed_form: d is 0 or 1 mod p");
    if ((e + d) % p == 1) throw std::invalid_argument("verify_ed_form: e+d is 1 mod p");
    return ed_form_holds(profile, inverse_table(profile.ctx), e, d);
}

VerificationReport verify_prop2_exhaustive(const ZeroProfile& profile) {
    const auto start = clock_type::now();
    const u64 p = profile.ctx.p;
    const std::vector<u64> inv = inverse_table(profile.ctx);

    VerificationReport report;
    report.prime = p;
    report.relation = RelationKind::prop2;
    for (u64 a = 2; a < p; ++a) {
        for (u64 b = 2; b < p; ++b) {
            if (b == inv[a]) continue;  // ab = 1; a, b >= 2 already rule out ab = 0
            ++report.cases_checked;
            if (!prop2_holds(profile, inv, a, b)) report.violations.push_back({a, b});
        }
    }
    if (report.cases_checked != (p - 2) * (p - 3))
        throw std::logic_error("verify_prop2_exhaustive: case count mismatch");
    report.elapsed = clock_type::now() - start;
    return report;
}

VerificationReport verify_three_term_exhaustive(const ZeroProfile& profile) {
    const auto start = clock_type::now();
    const u64 p = profile.ctx.p;
    const std::vector<u64> inv = inverse_table(profile.ctx);

    VerificationReport report;
    report.prime = p;
    report.relation = RelationKind::three_term;
    for (u64 k = 1; k < p; ++k) {
        for (u64 l = 1; l < p; ++l) {
            if ((k + l) % p == 0) continue;
            for (u64 j = 1; j < p; ++j) {
                if ((l + j) % p == 0 || (k + l + j) % p == 0) continue;
                ++report.cases_checked;
                if (!three_term_holds(profile, inv, k, l, j))
                    report.violations.push_back({k, l, j});
            }
        }
    }
    if (report.cases_checked != (p - 1) * (p - 2) * (p - 3))
        throw std::logic_error("verify_three_term_exhaustive: case count mismatch");
    report.elapsed = clock_type::now() - start;
    return report;
}

VerificationReport verify_ed_form_exhaustive(const ZeroProfile& profile) {
    const auto start = clock_type::now();
    const u64 p = profile.ctx.p;
    const std::vector<u64> inv = inverse_table(profile.ctx);

    VerificationReport report;
    report.prime = p;
    report.relation = RelationKind::ed_form;
    for (u64 e = 2; e < p; ++e) {
        for (u64 d = 2; d < p; ++d) {
            if ((e + d) % p == 1) continue;
            ++report.cases_checked;
            if (!ed_form_holds(profile, inv, e, d)) report.violations.push_back({e, d});
        }
    }
    if (report.cases_checked != (p - 2) * (p - 3))
        throw std::logic_error("verify_ed_form_exhaustive: case count mismatch");
    report.elapsed = clock_type::now() - start;
    return report;
}

VerificationReport verify_square_implication(const ZeroProfile& profile) {
    const auto start = clock_type::now();
    const u64 p = profile.ctx.p;
    const auto& g = profile.values;

    VerificationReport report;
    report.prime = p;
    report.relation = RelationKind::square_implication;
    for (u64 z : profile.zeros) {
        if (z <= 1) continue;
        if (g[(z + 1) % p] != 0) continue;  // z = p-1 qualifies via gamma(0) = 0
        ++report.cases_checked;
        const u64 z2 = z * z % p;
        if (g[z2] != 0) report.violations.push_back({z, z2});
    }
    report.elapsed = clock_type::now() - start;
    return report;
}

VerificationReport verify_prop4(const QuotientTable& table, const ZeroProfile& profile) {
    const auto start = clock_type::now();
    const u64 p = profile.ctx.p;
    if (table.ctx.p != p) throw std::invalid_argument("verify_prop4: mismatched primes");
    const u64 kap = kappa(table);
    if (kap != profile.kappa_from_gamma)
        throw std::logic_error("verify_prop4: kappa derivations disagree");
    const std::vector<u64> inv = inverse_table(profile.ctx);

    VerificationReport report;
    report.prime = p;
    report.relation = RelationKind::prop4;
    for (u64 u = 1; u < kap; ++u) {
        for (u64 v = 1; v < kap; ++v) {
            ++report.cases_checked;
            if (profile.values[u * inv[v] % p] != 0) report.violations.push_back({u, v});
        }
    }
    if (report.cases_checked != (kap - 1) * (kap - 1))
        throw std::logic_error("verify_prop4: case count mismatch");
    report.elapsed = clock_type::now() - start;
    return report;
}

VerificationReport verify_lemma(const PrimeContext& ctx) {
    const auto start = clock_type::now();
    const u64 p = ctx.p;
    const u64 s = ctx.sqrt_floor;
    const std::vector<u64> inv = inverse_table(ctx);

    std::vector<char> reachable(p, 0);  // residues c/d with 1 <= c, d <= s
    for (u64 c = 1; c <= s; ++c)
        for (u64 d = 1; d <= s; ++d) reachable[c * inv[d] % p] = 1;

    VerificationReport report;
    report.prime = p;
    report.relation = RelationKind::lemma;
    for (u64 a = 2; a <= s; ++a) {
        for (u64 b = 1; b < a; ++b) {
            report.cases_checked += s * s;
            const u64 x = (p + 1 - a * inv[b] % p) % p;  // 1 - a/b, nonzero since a != b
            if (!reachable[x]) continue;
            for (u64 c = 1; c <= s; ++c)
                for (u64 d = 1; d <= s; ++d)
                    if (c * inv[d] % p == x) report.violations.push_back({a, b, c, d});
        }
    }
    report.elapsed = clock_type::now() - start;
    return report;
}

u64 coprime_pairs(u64 q) {
    if (q == 0) return 0;
    // 2 * sum_{k<=q} phi(k) - 1 counts both orders, (1,1) once.
    std::vector<u64> phi(q + 1);
    for (u64 i = 0; i <= q; ++i) phi[i] = i;
    for (u64 i = 2; i <= q; ++i) {
        if (phi[i] != i) continue;
        for (u64 j = i; j <= q; j += i) phi[j] -= phi[j] / i;
    }
    u64 total = 0;
    for (u64 k = 1; k <= q; ++k) total += phi[k];
    return 2 * total - 1;
}

VerificationReport verify_coprime_bound(u64 max_q) {
    const auto start = clock_type::now();
    if (max_q == 0) throw std::invalid_argument("verify_coprime_bound: max_q must be positive");

    std::vector<u64> phi(max_q + 1);
    for (u64 i = 0; i <= max_q; ++i) phi[i] = i;
    for (u64 i = 2; i <= max_q; ++i) {
        if (phi[i] != i) continue;
        for (u64 j = i; j <= max_q; j += i) phi[j] -= phi[j] / i;
    }

    constexpr long double pi = std::numbers::pi_v<long double>;
    constexpr long double factor = 2.0L - pi * pi / 6.0L;

    VerificationReport report;
    report.relation = RelationKind::coprime_bound;
    u64 s_q = 0;  // running coprime_pairs(q)
    for (u64 q = 1; q <= max_q; ++q) {
        s_q += 2 * phi[q] - (q == 1 ? 1 : 0);
        ++report.cases_checked;
        const long double bound = factor * static_cast<long double>(q) * static_cast<long double>(q);
        if (static_cast<long double>(s_q) < bound) report.violations.push_back({q, s_q});
    }
    report.elapsed = clock_type::now() - start;
    return report;
}

std::vector<SurveyRecord> sqrt_claim_survey(u64 max_p, unsigned jobs) {
    std::vector<u64> primes = primes_up_to(max_p);
    if (!primes.empty() && primes.front() == 2) primes.erase(primes.begin());

    std::vector<SurveyRecord> records(primes.size());
    parallel_for_indexed(primes.size(), jobs, [&](std::size_t i) {
        const PrimeContext ctx = PrimeContext::from_sieved(primes[i]);
        const QuotientTable table = quotient_table(ctx);
        const ZeroProfile profile = zero_profile(table);
        const u64 kap = kappa(table);
        if (kap != profile.kappa_from_gamma)
            throw std::logic_error("sqrt_claim_survey: kappa derivations disagree");
        SurveyRecord& r = records[i];
        r.p = ctx.p;
        r.kappa = kap;
        r.eta0 = profile.histogram[0];
        r.sqrt_floor = ctx.sqrt_floor;
        r.bound_quarter = ctx.bound_quarter;
        r.exceeds_sqrt = kap > ctx.sqrt_floor;
        r.wieferich_base2 = table.at(2) == 0;
        r.ratio = static_cast<double>(kap) / std::sqrt(static_cast<double>(r.eta0));
    });
    return records;
}

}  // namespace fqmir
