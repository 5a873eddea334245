#include "fqmir/mirimanoff.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>

namespace fqmir {

std::string_view orbit_label_name(OrbitLabel label) {
    switch (label) {
        case OrbitLabel::trivial: return "trivial";
        case OrbitLabel::half_orbit: return "half_orbit";
        case OrbitLabel::sixth_root: return "sixth_root";
        case OrbitLabel::generic: return "generic";
    }
    return "?";
}

std::vector<u64> inverse_table(const PrimeContext& ctx) {
    const u64 p = ctx.p;
    std::vector<u64> inv(p, 0);
    if (p > 1) inv[1] = 1;
    for (u64 j = 2; j < p; ++j)
        inv[j] = p - (p / j) * inv[p % j] % p;
    return inv;
}

u64 gamma_eval(const PrimeContext& ctx, u64 t) {
    const u64 p = ctx.p;
    t %= p;
    auto inv = inverse_table(ctx);
    // p <= 2^31, so plain 64-bit products never overflow here.
    u64 acc = 0, pw = 1;
    for (u64 j = 1; j < p; ++j) {
        pw = pw * t % p;
        acc = (acc + pw * inv[j]) % p;
    }
    return acc;
}

u64 gamma_via_quotients(const QuotientTable& table, u64 t) {
    const u64 p = table.ctx.p;
    if (t < 2 || t >= p)
        throw std::invalid_argument("gamma_via_quotients: t must lie in [2, p-1]");
    u64 a = (t - 1) * table.q[t - 1] % p;
    u64 b = t * table.q[t] % p;
    return (a + p - b) % p;
}

ZeroProfile zero_profile(const QuotientTable& table) {
    const auto& ctx = table.ctx;
    const u64 p = ctx.p;
    ZeroProfile profile{ctx, std::vector<u64>(p, 0), std::vector<u64>(p, 0), {}, 0};
    for (u64 t = 2; t < p; ++t)
        profile.values[t] = gamma_via_quotients(table, t);
    for (u64 t = 0; t < p; ++t) {
        ++profile.histogram[profile.values[t]];
        if (profile.values[t] == 0) profile.zeros.push_back(t);
    }
    for (u64 n = 1; n <= ctx.bound_half; ++n) {
        if (profile.values[n] != 0) {
            profile.kappa_from_gamma = n;
            break;
        }
    }
    if (profile.kappa_from_gamma == 0)
        throw std::logic_error("zero_profile: gamma_p vanishes up to (p+1)/2 for p = " +
                               std::to_string(p) + " (invariant violation)");
    return profile;
}

ZeroProfile zero_profile(const PrimeContext& ctx) {
    return zero_profile(quotient_table(ctx));
}

VerificationReport derivative_check(const PrimeContext& ctx) {
    auto start = std::chrono::steady_clock::now();
    const u64 p = ctx.p;
    VerificationReport rep;
    rep.prime = p;
    rep.relation = RelationKind::derivative;
    for (u64 t = 0; t < p; ++t) {
        u64 sum = 0, pw = 1;  // 1 + t + ... + t^(p-2)
        for (u64 i = 0; i + 1 < p; ++i) {
            sum = (sum + pw) % p;
            pw = pw * t % p;
        }
        u64 expect = t == 0 ? 1 : (t == 1 ? p - 1 : 0);
        ++rep.cases_checked;
        if (sum != expect) rep.violations.push_back({t, sum});
    }
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
}

VerificationReport symmetry_check(const PrimeContext& ctx) {
    auto start = std::chrono::steady_clock::now();
    const u64 p = ctx.p;
    auto profile = zero_profile(ctx);
    auto inv = inverse_table(ctx);
    VerificationReport rep;
    rep.prime = p;
    rep.relation = RelationKind::symmetry;
    // Violation tuples carry the identity index first: 0 for the
    // reflection a -> 1-a, 1 for the inversion a -> 1/a.
    for (u64 a = 0; a < p; ++a) {
        ++rep.cases_checked;
        if (profile.values[a] != profile.values[(1 + p - a) % p])
            rep.violations.push_back({0, a});
    }
    for (u64 a = 1; a < p; ++a) {
        ++rep.cases_checked;
        u64 rhs = (p - a * profile.values[inv[a]] % p) % p;
        if (profile.values[a] != rhs) rep.violations.push_back({1, a});
    }
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
}

namespace {

// Tonelli-Shanks square root mod an odd prime; the caller guarantees
// a is a quadratic residue.
u64 sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p % 4 == 3) {
        u64 r = pow_mod(a, (p + 1) / 4, p);
        if (mul_mod(r, r, p) != a) throw std::logic_error("sqrt_mod: input is not a residue");
        return r;
    }
    u64 q = p - 1;
    u64 s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) == 1) ++z;  // any non-residue
    u64 m = s;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(a, q, p);
    u64 r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
            if (i == m) throw std::logic_error("sqrt_mod: input is not a residue");
        }
        u64 b = pow_mod(c, u64{1} << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    if (mul_mod(r, r, p) != a) throw std::logic_error("sqrt_mod: verification failed");
    return r;
}

}  // namespace

std::optional<std::pair<u64, u64>> sixth_roots(const PrimeContext& ctx) {
    if (ctx.p % 3 != 1) return std::nullopt;
    const u64 p = ctx.p;
    // t^2 - t + 1 = 0  <=>  t = (1 +- sqrt(-3)) / 2, and -3 is a
    // residue exactly when p = 1 mod 3.
    u64 root = sqrt_mod(p - 3, p);
    u64 inv2 = (p + 1) / 2;
    u64 r1 = mul_mod(1 + root, inv2, p);
    u64 r2 = mul_mod(1 + p - root, inv2, p);
    if (r1 > r2) std::swap(r1, r2);
    return std::make_pair(r1, r2);
}

std::vector<Orbit> orbit_decompose(const ZeroProfile& profile) {
    const u64 p = profile.ctx.p;
    std::vector<char> is_zero(p, 0), done(p, 0);
    for (u64 z : profile.zeros) is_zero[z] = 1;

    const std::set<u64> half = {2 % p, (p + 1) / 2, p - 1};
    std::set<u64> sixth;
    if (auto roots = sixth_roots(profile.ctx)) sixth = {roots->first, roots->second};

    std::vector<Orbit> out;
    for (u64 z : profile.zeros) {
        if (done[z]) continue;
        if (z == 0 || z == 1) {
            out.push_back({{0, 1}, OrbitLabel::trivial});
            done[0] = done[1] = 1;
            continue;
        }
        std::set<u64> members;
        std::vector<u64> stack{z};
        while (!stack.empty()) {
            u64 w = stack.back();
            stack.pop_back();
            if (!members.insert(w).second) continue;
            u64 images[2] = {(1 + p - w) % p, inv_mod(w, p)};
            for (u64 im : images) {
                if (!is_zero[im])
                    throw std::logic_error("orbit_decompose: image " + std::to_string(im) +
                                           " of zero " + std::to_string(w) +
                                           " is not a zero (symmetry invariant broken)");
                if (!members.count(im)) stack.push_back(im);
            }
        }
        Orbit orbit;
        orbit.members.assign(members.begin(), members.end());
        if (members == half) {
            orbit.label = OrbitLabel::half_orbit;
        } else if (!sixth.empty() && members == sixth) {
            orbit.label = OrbitLabel::sixth_root;
        } else {
            orbit.label = OrbitLabel::generic;
            if (orbit.members.size() != 6)
                throw std::logic_error("orbit_decompose: non-exceptional orbit of size " +
                                       std::to_string(orbit.members.size()) + " at p = " +
                                       std::to_string(p));
        }
        for (u64 w : orbit.members) done[w] = 1;
        out.push_back(std::move(orbit));
    }
    return out;
}

}  // namespace fqmir
