#pragma once

#include <string>
#include <vector>

#include "fqmir/fermat.hpp"
#include "fqmir/mirimanoff.hpp"
#include "fqmir/relations.hpp"
#include "fqmir/report.hpp"

namespace fqmir {

// Every writer emits LF line endings and a trailing newline, and is a
// pure function of its arguments, so equal inputs give equal bytes.

// Six decimal places, the precision every ratio is quoted at.
std::string format_fixed6(double v);

// Header "p,q_p(base)"; one row per hit (the quotient column is 0 by
// construction).
std::string scan_csv(const std::vector<u64>& hits);
std::string scan_json(u64 base, u64 limit, const std::vector<u64>& hits);

struct SurveySummary {
    u64 odd_primes = 0;
    double max_ratio = 0.0;
    u64 max_ratio_p = 0;              // least prime attaining max_ratio
    std::vector<u64> exceeds_sqrt;    // primes with kappa > floor(sqrt(p))
    std::vector<u64> wieferich_base2;
};

SurveySummary summarize_survey(const std::vector<SurveyRecord>& records);

std::string survey_csv(const std::vector<SurveyRecord>& records);
std::string survey_json(u64 max_p, const std::vector<SurveyRecord>& records);
std::string survey_summary_text(const SurveySummary& summary);

// One object covering a whole verification run; per-report timing is
// deliberately omitted so reruns are byte-identical.
std::string verify_json(const std::string& suite, u64 limit,
                        const std::vector<VerificationReport>& reports);

std::string profile_text(const QuotientTable& table, const ZeroProfile& profile,
                         const std::vector<Orbit>& orbits);
std::string profile_json(const QuotientTable& table, const ZeroProfile& profile,
                         const std::vector<Orbit>& orbits);

}  // namespace fqmir
