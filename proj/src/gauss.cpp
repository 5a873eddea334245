#include "fqmir/gauss.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "fqmir/fermat.hpp"
#include "fqmir/mirimanoff.hpp"

namespace fqmir {

namespace {

using clock_type = std::chrono::steady_clock;

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic coefficient overflow in addition");
    return r;
}

i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic coefficient overflow in subtraction");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("cyclotomic coefficient overflow in multiplication");
    return r;
}

void require_cap(const PrimeContext& ctx) {
    if (ctx.p > kGaussPrimeCap)
        throw std::invalid_argument("cyclotomic arithmetic is capped at p <= 13");
}

void require_same_ring(const CycloElement& a, const CycloElement& b) {
    if (a.ctx.p != b.ctx.p) throw std::invalid_argument("mismatched cyclotomic rings");
}

// Folds an exponent-indexed accumulator into the canonical basis:
// x^(p^2) = 1, then x^(p(p-1)+r) = -(x^r + x^(p+r) + ... + x^((p-2)p+r)).
CycloElement reduce_raw(const PrimeContext& ctx, const std::vector<i64>& raw) {
    const u64 p = ctx.p;
    const u64 psq = ctx.p_squared;
    const u64 n = psq - p;

    std::vector<i64> folded(psq, 0);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == 0) continue;
        u64 e = i % psq;
        folded[e] = checked_add(folded[e], raw[i]);
    }
    CycloElement out(ctx);
    for (u64 e = n; e < psq; ++e) {
        const i64 c = folded[e];
        if (c == 0) continue;
        const u64 r = e - n;
        for (u64 j = 0; j + 1 < p; ++j)
            folded[j * p + r] = checked_sub(folded[j * p + r], c);
    }
    out.coeffs.assign(folded.begin(), folded.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

}  // namespace

CycloElement::CycloElement(const PrimeContext& c) : ctx(c) {
    require_cap(c);
    coeffs.assign(c.p_squared - c.p, 0);
}

CycloElement CycloElement::from_integer(const PrimeContext& c, i64 value) {
    CycloElement out(c);
    out.coeffs[0] = value;
    return out;
}

CycloElement CycloElement::zeta_pow(const PrimeContext& c, u64 e) {
    return scaled_zeta_pow(c, 1, e);
}

CycloElement CycloElement::scaled_zeta_pow(const PrimeContext& c, i64 scale, u64 e) {
    require_cap(c);
    std::vector<i64> raw(c.p_squared, 0);
    raw[e % c.p_squared] = scale;
    return reduce_raw(c, raw);
}

CycloElement cyclo_add(const CycloElement& a, const CycloElement& b) {
    require_same_ring(a, b);
    CycloElement out(a.ctx);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = checked_add(a.coeffs[i], b.coeffs[i]);
    return out;
}

CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b) {
    require_same_ring(a, b);
    const std::size_t n = a.coeffs.size();
    std::vector<i64> raw(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs[j] == 0) continue;
            raw[i + j] = checked_add(raw[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return reduce_raw(a.ctx, raw);
}

CycloElement galois_apply(const CycloElement& a, u64 k) {
    const u64 psq = a.ctx.p_squared;
    k %= psq;
    if (k % a.ctx.p == 0)
        throw std::domain_error("galois_apply: exponent is not a unit mod p^2");
    std::vector<i64> raw(psq, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        const u64 e = static_cast<u64>(i) * k % psq;
        raw[e] = checked_add(raw[e], a.coeffs[i]);
    }
    return reduce_raw(a.ctx, raw);
}

CharacterPower::CharacterPower(const PrimeContext& c, u64 exponent)
    : ctx(c), k(exponent % c.p) {}

u64 CharacterPower::value_exponent(u64 a) const {
    return k * fermat_quotient(ctx, a) % ctx.p;
}

CycloElement gauss_sum(const CharacterPower& chi) {
    const u64 p = chi.ctx.p;
    const u64 psq = chi.ctx.p_squared;
    require_cap(chi.ctx);
    std::vector<i64> raw(psq, 0);
    for (u64 a = 1; a < psq; ++a) {
        if (a % p == 0) continue;
        raw[(p * chi.value_exponent(a) + a) % psq] += 1;
    }
    return reduce_raw(chi.ctx, raw);
}

CycloElement omega_element(const PrimeContext& ctx, u64 k, u64 l) {
    const u64 p = ctx.p;
    k %= p;
    l %= p;
    if (k == 0) throw std::invalid_argument("omega_element: k is 0 mod p");
    if (l == 0) throw std::invalid_argument("omega_element: l is 0 mod p");
    const u64 kl = (k + l) % p;
    if (kl == 0) throw std::invalid_argument("omega_element: k+l is 0 mod p");
    const u64 g = gamma_eval(ctx, k * inv_mod(kl, p) % p);
    const u64 e = (p - kl * g % p) % p;
    return CycloElement::scaled_zeta_pow(ctx, static_cast<i64>(p), e * p);
}

bool factor_system_check(const PrimeContext& ctx, u64 k, u64 l) {
    k %= ctx.p;
    l %= ctx.p;
    const CycloElement w = omega_element(ctx, k, l);  // validates the hypotheses
    const CycloElement tk = gauss_sum(CharacterPower(ctx, k));
    const CycloElement tl = gauss_sum(CharacterPower(ctx, l));
    const CycloElement tkl = gauss_sum(CharacterPower(ctx, k + l));
    return cyclo_mul(tk, tl) == cyclo_mul(w, tkl);
}

bool cocycle_identity_check(const PrimeContext& ctx, u64 k, u64 l, u64 j) {
    const u64 p = ctx.p;
    k %= p;
    l %= p;
    j %= p;
    if (k == 0) throw std::invalid_argument("cocycle_identity_check: k is 0 mod p");
    if (l == 0) throw std::invalid_argument("cocycle_identity_check: l is 0 mod p");
    if (j == 0) throw std::invalid_argument("cocycle_identity_check: j is 0 mod p");
    if ((k + l) % p == 0)
        throw std::invalid_argument("cocycle_identity_check: k+l is 0 mod p");
    if ((l + j) % p == 0)
        throw std::invalid_argument("cocycle_identity_check: l+j is 0 mod p");
    if ((k + l + j) % p == 0)
        throw std::invalid_argument("cocycle_identity_check: k+l+j is 0 mod p");
    const CycloElement lhs = cyclo_mul(omega_element(ctx, k, l), omega_element(ctx, k + l, j));
    const CycloElement rhs = cyclo_mul(omega_element(ctx, l, j), omega_element(ctx, k, l + j));
    return lhs == rhs;
}

bool galois_action_check(const PrimeContext& ctx, u64 k) {
    const u64 p = ctx.p;
    k %= ctx.p_squared;
    const CycloElement tau = gauss_sum(CharacterPower(ctx, 1));
    const CycloElement lhs = galois_apply(tau, k);  // rejects non-units
    const u64 e = (p - k % p * fermat_quotient(ctx, k) % p) % p;
    const CycloElement rhs =
        cyclo_mul(CycloElement::zeta_pow(ctx, e * p), gauss_sum(CharacterPower(ctx, k)));
    return lhs == rhs;
}

VerificationReport verify_gauss_sums(const PrimeContext& ctx) {
    const auto start = clock_type::now();
    const u64 p = ctx.p;
    const u64 psq = ctx.p_squared;

    VerificationReport report;
    report.prime = p;
    report.relation = RelationKind::gauss_sums;

    std::vector<CycloElement> tau;  // tau[k] for k = 0..p-1
    tau.reserve(p);
    for (u64 k = 0; k < p; ++k) tau.push_back(gauss_sum(CharacterPower(ctx, k)));

    ++report.cases_checked;
    if (tau[0] != CycloElement(ctx)) report.violations.push_back({0, 0, 0});

    ++report.cases_checked;
    if (tau[1] != CycloElement::scaled_zeta_pow(ctx, static_cast<i64>(p), 1))
        report.violations.push_back({1, 1, 0});

    for (u64 k = 1; k < p; ++k) {
        ++report.cases_checked;
        const u64 e = (p * (k * fermat_quotient(ctx, k) % p) + k) % psq;
        if (tau[k] != CycloElement::scaled_zeta_pow(ctx, static_cast<i64>(p), e))
            report.violations.push_back({2, k, 0});
    }

    for (u64 k = 1; k < p; ++k) {
        for (u64 l = 1; l < p; ++l) {
            const u64 kl = (k + l) % p;
            if (kl == 0) continue;
            ++report.cases_checked;
            const CycloElement w = omega_element(ctx, k, l);
            if (cyclo_mul(tau[k], tau[l]) != cyclo_mul(w, tau[kl]))
                report.violations.push_back({3, k, l});
        }
    }

    for (u64 k = 1; k < psq; ++k) {
        if (k % p == 0) continue;
        ++report.cases_checked;
        const u64 e = (p - k % p * fermat_quotient(ctx, k) % p) % p;
        const CycloElement rhs =
            cyclo_mul(CycloElement::zeta_pow(ctx, e * p), tau[k % p]);
        if (galois_apply(tau[1], k) != rhs) report.violations.push_back({4, k, 0});
    }

    const CycloElement p_squared_element = CycloElement::from_integer(ctx, static_cast<i64>(psq));
    for (u64 k = 1; k < p; ++k) {
        ++report.cases_checked;
        if (cyclo_mul(tau[k], galois_apply(tau[k], psq - 1)) != p_squared_element)
            report.violations.push_back({5, k, 0});
    }

    const u64 expected = 2 + (p - 1) + (p - 1) * (p - 2) + (psq - p) + (p - 1);
    if (report.cases_checked != expected)
        throw std::logic_error("verify_gauss_sums: case count mismatch");
    report.elapsed = clock_type::now() - start;
    return report;
}

VerificationReport verify_cocycle(const PrimeContext& ctx) {
    const auto start = clock_type::now();
    const u64 p = ctx.p;

    VerificationReport report;
    report.prime = p;
    report.relation = RelationKind::cocycle;
    for (u64 k = 1; k < p; ++k) {
        for (u64 l = 1; l < p; ++l) {
            if ((k + l) % p == 0) continue;
            for (u64 j = 1; j < p; ++j) {
                if ((l + j) % p == 0 || (k + l + j) % p == 0) continue;
                ++report.cases_checked;
                if (!cocycle_identity_check(ctx, k, l, j)) report.violations.push_back({k, l, j});
            }
        }
    }
    if (report.cases_checked != (p - 1) * (p - 2) * (p - 3))
        throw std::logic_error("verify_cocycle: case count mismatch");
    report.elapsed = clock_type::now() - start;
    return report;
}

}  // namespace fqmir
