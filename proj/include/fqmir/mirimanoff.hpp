#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fqmir/core_arith.hpp"
#include "fqmir/fermat.hpp"
#include "fqmir/report.hpp"

namespace fqmir {

// gamma_p over all residues plus everything derived from its value
// distribution: the eta histogram, the zero set and the least nonzero
// point.
struct ZeroProfile {
    PrimeContext ctx;
    std::vector<u64> values;     // gamma_p(t) for t = 0..p-1
    std::vector<u64> histogram;  // eta_a for a = 0..p-1
    std::vector<u64> zeros;      // ascending t with gamma_p(t) == 0
    u64 kappa_from_gamma = 0;    // min n > 0 with gamma_p(n) != 0
};

enum class OrbitLabel { trivial, half_orbit, sixth_root, generic };

std::string_view orbit_label_name(OrbitLabel label);

// An equivalence class of zeros under z -> 1-z and z -> 1/z.
struct Orbit {
    std::vector<u64> members;  // ascending
    OrbitLabel label = OrbitLabel::generic;
};

// j^{-1} mod p for j = 1..p-1 (index 0 unused), by the linear
// recurrence inv[j] = -(p/j) * inv[p mod j].
std::vector<u64> inverse_table(const PrimeContext& ctx);

// Direct evaluation of sum_{j=1}^{p-1} t^j / j mod p.  O(p); kept as
// the independent route against the quotient-table formula.
u64 gamma_eval(const PrimeContext& ctx, u64 t);

// gamma_p(t) = (t-1) q_p(t-1) - t q_p(t) for t in [2, p-1];
// t in {0, 1} is rejected (those are the trivial zeros).
u64 gamma_via_quotients(const QuotientTable& table, u64 t);

ZeroProfile zero_profile(const PrimeContext& ctx);
ZeroProfile zero_profile(const QuotientTable& table);

// Confirms gamma_p'(t) = 1 + t + ... + t^(p-2) vanishes everywhere
// except gamma'(0) = 1 and gamma'(1) = -1.  cases_checked = p.
VerificationReport derivative_check(const PrimeContext& ctx);

// Confirms gamma(a) = gamma(1-a) for all a and
// gamma(a) = -a gamma(1/a) for a != 0.  cases_checked = 2p-1.
VerificationReport symmetry_check(const PrimeContext& ctx);

// Roots of t^2 - t + 1 mod p; present exactly when p = 1 mod 3.
std::optional<std::pair<u64, u64>> sixth_roots(const PrimeContext& ctx);

// Partitions the zero set into orbits of the group generated by the
// two symmetry maps.  Throws std::logic_error if any image of a zero
// fails to be a zero, or a non-exceptional orbit has size != 6.
std::vector<Orbit> orbit_decompose(const ZeroProfile& profile);

}  // namespace fqmir
