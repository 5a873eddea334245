#pragma once

#include <chrono>
#include <string_view>
#include <vector>

#include "fqmir/core_arith.hpp"

namespace fqmir {

enum class RelationKind {
    symmetry,
    derivative,
    prop2,
    three_term,
    ed_form,
    prop4,
    lemma,
    square_implication,
    gauss_sums,
    cocycle,
    coprime_bound,
};

std::string_view relation_name(RelationKind k);

// Outcome of one exhaustive check.  cases_checked always equals the
// cardinality of the relation's valid-input set (documented at each
// producer); an empty violation list means the relation held everywhere.
struct VerificationReport {
    u64 prime = 0;  // 0 for relations not indexed by a prime (coprime_bound)
    RelationKind relation = RelationKind::symmetry;
    u64 cases_checked = 0;
    std::vector<std::vector<u64>> violations;  // offending input tuples
    std::chrono::nanoseconds elapsed{0};

    bool pass() const { return violations.empty(); }
};

}  // namespace fqmir
