#pragma once

#include <vector>

#include "fqmir/core_arith.hpp"
#include "fqmir/report.hpp"

namespace fqmir {

// Exact arithmetic in Z[zeta] for zeta a primitive p^2-th root of
// unity.  Elements live on the power basis 1, x, ..., x^(p(p-1)-1)
// modulo the cyclotomic polynomial 1 + x^p + x^(2p) + ... + x^((p-1)p).
// Everything is integer-only; coefficient overflow throws instead of
// wrapping.  Degrees grow quadratically in p, hence the hard cap.
inline constexpr u64 kGaussPrimeCap = 13;

struct CycloElement {
    PrimeContext ctx;
    std::vector<i64> coeffs;  // length p(p-1)

    explicit CycloElement(const PrimeContext& c);  // zero

    static CycloElement from_integer(const PrimeContext& c, i64 value);
    static CycloElement zeta_pow(const PrimeContext& c, u64 e);  // zeta^e
    static CycloElement scaled_zeta_pow(const PrimeContext& c, i64 scale, u64 e);

    bool operator==(const CycloElement& other) const {
        return ctx.p == other.ctx.p && coeffs == other.coeffs;
    }
    bool operator!=(const CycloElement& other) const { return !(*this == other); }
};

CycloElement cyclo_add(const CycloElement& a, const CycloElement& b);
CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b);

// The ring map zeta -> zeta^k; k must be a unit mod p^2.
CycloElement galois_apply(const CycloElement& a, u64 k);

// chi^k where chi(a) = zeta_p^(q_p(a)) on units mod p^2.
struct CharacterPower {
    PrimeContext ctx;
    u64 k;  // reduced mod p; k = 0 is the principal character

    CharacterPower(const PrimeContext& c, u64 exponent);

    // e in [0, p) with chi^k(a) = zeta_p^e.  Rejects p | a.
    u64 value_exponent(u64 a) const;
};

// tau(chi^k) = sum over units a mod p^2 of chi^k(a) zeta^a.
CycloElement gauss_sum(const CharacterPower& chi);

// omega(chi^k, chi^l) = p zeta_p^(-(k+l) gamma_p(k/(k+l))),
// for k, l, k+l nonzero mod p.
CycloElement omega_element(const PrimeContext& ctx, u64 k, u64 l);

// tau(chi^k) tau(chi^l) == omega(chi^k, chi^l) tau(chi^(k+l)),
// stated multiplicatively so no division ever happens.
bool factor_system_check(const PrimeContext& ctx, u64 k, u64 l);

// omega(k, l) omega(k+l, j) == omega(l, j) omega(k, l+j),
// for k, l, j, k+l, l+j, k+l+j nonzero mod p.
bool cocycle_identity_check(const PrimeContext& ctx, u64 k, u64 l, u64 j);

// galois_apply(tau(chi), k) == zeta_p^(-k q_p(k)) tau(chi^k),
// for k a unit mod p^2.
bool galois_action_check(const PrimeContext& ctx, u64 k);

// Everything above for one prime.  Violation rows are {step, k, l}
// with step 0: tau(chi^0) = 0, 1: tau(chi) = p zeta, 2: the closed
// form for tau(chi^k), 3: factor system, 4: Galois action over all
// units mod p^2, 5: tau(chi^k) sigma_(-1)(tau(chi^k)) = p^2.
VerificationReport verify_gauss_sums(const PrimeContext& ctx);

// Exhaustive cocycle identity over all valid (k, l, j);
// (p-1)(p-2)(p-3) cases.
VerificationReport verify_cocycle(const PrimeContext& ctx);

}  // namespace fqmir
