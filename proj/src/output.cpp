#include "fqmir/output.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace fqmir {

namespace {

using ordered_json = nlohmann::ordered_json;

// Ratios pass through the 6-decimal rendering before being stored as
// JSON numbers, so the number in a JSON file equals the CSV text.
double quantize6(double v) { return std::stod(format_fixed6(v)); }

u64 checked_kappa(const QuotientTable& table, const ZeroProfile& profile) {
    const u64 kap = kappa(table);
    if (kap != profile.kappa_from_gamma)
        throw std::logic_error("profile output: kappa derivations disagree");
    return kap;
}

ordered_json orbits_json(const std::vector<Orbit>& orbits) {
    ordered_json arr = ordered_json::array();
    for (const Orbit& orbit : orbits) {
        ordered_json o;
        o["label"] = std::string(orbit_label_name(orbit.label));
        o["members"] = orbit.members;
        arr.push_back(std::move(o));
    }
    return arr;
}

}  // namespace

std::string_view relation_name(RelationKind k) {
    switch (k) {
        case RelationKind::symmetry: return "symmetries";
        case RelationKind::derivative: return "derivative";
        case RelationKind::prop2: return "prop2";
        case RelationKind::three_term: return "three-term";
        case RelationKind::ed_form: return "ed-form";
        case RelationKind::prop4: return "prop4";
        case RelationKind::lemma: return "lemma";
        case RelationKind::square_implication: return "square";
        case RelationKind::gauss_sums: return "gauss";
        case RelationKind::cocycle: return "cocycle";
        case RelationKind::coprime_bound: return "sq-bound";
    }
    throw std::logic_error("relation_name: unknown relation kind");
}

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string scan_csv(const std::vector<u64>& hits) {
    std::string out = "p,q_p(base)\n";
    for (u64 p : hits) {
        out += std::to_string(p);
        out += ",0\n";
    }
    return out;
}

std::string scan_json(u64 base, u64 limit, const std::vector<u64>& hits) {
    ordered_json doc;
    doc["command"] = "scan";
    doc["base"] = base;
    doc["limit"] = limit;
    doc["hits"] = hits;
    return doc.dump(2) + "\n";
}

SurveySummary summarize_survey(const std::vector<SurveyRecord>& records) {
    SurveySummary s;
    s.odd_primes = records.size();
    for (const SurveyRecord& r : records) {
        if (s.max_ratio_p == 0 || r.ratio > s.max_ratio) {
            s.max_ratio = r.ratio;
            s.max_ratio_p = r.p;
        }
        if (r.exceeds_sqrt) s.exceeds_sqrt.push_back(r.p);
        if (r.wieferich_base2) s.wieferich_base2.push_back(r.p);
    }
    return s;
}

std::string survey_csv(const std::vector<SurveyRecord>& records) {
    std::string out = "p,kappa_p,eta_0,ratio,bound_quarter,sqrt_floor,exceeds_sqrt,wieferich_base2\n";
    for (const SurveyRecord& r : records) {
        out += std::to_string(r.p);
        out += ',';
        out += std::to_string(r.kappa);
        out += ',';
        out += std::to_string(r.eta0);
        out += ',';
        out += format_fixed6(r.ratio);
        out += ',';
        out += std::to_string(r.bound_quarter);
        out += ',';
        out += std::to_string(r.sqrt_floor);
        out += ',';
        out += r.exceeds_sqrt ? '1' : '0';
        out += ',';
        out += r.wieferich_base2 ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string survey_json(u64 max_p, const std::vector<SurveyRecord>& records) {
    const SurveySummary s = summarize_survey(records);
    ordered_json doc;
    doc["command"] = "survey";
    doc["max_p"] = max_p;
    ordered_json rows = ordered_json::array();
    for (const SurveyRecord& r : records) {
        ordered_json row;
        row["p"] = r.p;
        row["kappa_p"] = r.kappa;
        row["eta_0"] = r.eta0;
        row["ratio"] = quantize6(r.ratio);
        row["bound_quarter"] = r.bound_quarter;
        row["sqrt_floor"] = r.sqrt_floor;
        row["exceeds_sqrt"] = r.exceeds_sqrt;
        row["wieferich_base2"] = r.wieferich_base2;
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    ordered_json summary;
    summary["odd_primes"] = s.odd_primes;
    summary["max_ratio"] = quantize6(s.max_ratio);
    summary["max_ratio_p"] = s.max_ratio_p;
    summary["exceeds_sqrt"] = s.exceeds_sqrt;
    summary["wieferich_base2"] = s.wieferich_base2;
    doc["summary"] = std::move(summary);
    return doc.dump(2) + "\n";
}

std::string survey_summary_text(const SurveySummary& s) {
    std::ostringstream out;
    out << "odd primes surveyed: " << s.odd_primes << '\n';
    out << "max kappa/sqrt(eta_0) = " << format_fixed6(s.max_ratio) << " at p = " << s.max_ratio_p
        << '\n';
    out << "primes with kappa > floor(sqrt(p)):";
    if (s.exceeds_sqrt.empty()) out << " none";
    for (u64 p : s.exceeds_sqrt) out << ' ' << p;
    out << '\n';
    out << "wieferich base 2:";
    if (s.wieferich_base2.empty()) out << " none";
    for (u64 p : s.wieferich_base2) out << ' ' << p;
    out << '\n';
    return std::move(out).str();
}

std::string verify_json(const std::string& suite, u64 limit,
                        const std::vector<VerificationReport>& reports) {
    ordered_json doc;
    doc["command"] = "verify";
    doc["suite"] = suite;
    doc["limit"] = limit;
    ordered_json rows = ordered_json::array();
    u64 total_cases = 0;
    u64 total_violations = 0;
    for (const VerificationReport& r : reports) {
        ordered_json row;
        row["p"] = r.prime;
        row["relation"] = std::string(relation_name(r.relation));
        row["cases_checked"] = r.cases_checked;
        row["violations"] = r.violations;
        row["pass"] = r.pass();
        rows.push_back(std::move(row));
        total_cases += r.cases_checked;
        total_violations += r.violations.size();
    }
    doc["reports"] = std::move(rows);
    ordered_json summary;
    summary["reports"] = reports.size();
    summary["cases_checked"] = total_cases;
    summary["violations"] = total_violations;
    summary["pass"] = total_violations == 0;
    doc["summary"] = std::move(summary);
    return doc.dump(2) + "\n";
}

std::string profile_text(const QuotientTable& table, const ZeroProfile& profile,
                         const std::vector<Orbit>& orbits) {
    const PrimeContext& ctx = profile.ctx;
    const u64 kap = checked_kappa(table, profile);
    std::ostringstream out;
    out << "p = " << ctx.p << '\n';
    out << "kappa_p = " << kap << " (quotient and gamma routes agree)\n";
    out << "bounds: (p+1)/2 = " << ctx.bound_half << ", floor((p+5)/4) = " << ctx.bound_quarter
        << ", floor(sqrt(p)) = " << ctx.sqrt_floor << '\n';
    out << "q_p(2) = " << table.at(2) << (table.at(2) == 0 ? "  (wieferich base 2)" : "") << '\n';
    out << "eta_0 = " << profile.histogram[0] << '\n';
    out << "zeros:";
    for (u64 z : profile.zeros) out << ' ' << z;
    out << '\n';
    out << "orbits:\n";
    for (const Orbit& orbit : orbits) {
        out << "  " << orbit_label_name(orbit.label) << ':';
        for (u64 m : orbit.members) out << ' ' << m;
        out << '\n';
    }
    return std::move(out).str();
}

std::string profile_json(const QuotientTable& table, const ZeroProfile& profile,
                         const std::vector<Orbit>& orbits) {
    const PrimeContext& ctx = profile.ctx;
    const u64 kap = checked_kappa(table, profile);
    ordered_json doc;
    doc["command"] = "profile";
    doc["p"] = ctx.p;
    doc["kappa_p"] = kap;
    doc["bound_half"] = ctx.bound_half;
    doc["bound_quarter"] = ctx.bound_quarter;
    doc["sqrt_floor"] = ctx.sqrt_floor;
    doc["q_p_2"] = table.at(2);
    doc["wieferich_base2"] = table.at(2) == 0;
    doc["eta_0"] = profile.histogram[0];
    doc["zeros"] = profile.zeros;
    doc["orbits"] = orbits_json(orbits);
    return doc.dump(2) + "\n";
}

}  // namespace fqmir
