#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fqmir/fermat.hpp"
#include "fqmir/gauss.hpp"
#include "fqmir/mirimanoff.hpp"
#include "fqmir/output.hpp"
#include "fqmir/parallel.hpp"
#include "fqmir/relations.hpp"

namespace {

using namespace fqmir;

// 0: success.  1: a verified relation failed or an internal invariant
// broke.  2: unusable input or output.
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "cannot open output file: " << path << '\n';
        return kExitUsage;
    }
    file << text;
    file.close();
    if (!file) {
        std::cerr << "write failed: " << path << '\n';
        return kExitUsage;
    }
    return 0;
}

struct SuiteSpec {
    const char* name;
    u64 default_limit;
    u64 hard_cap;  // 0 = none; cyclotomic suites stop at 13
    std::function<VerificationReport(const PrimeContext&)> per_prime;  // null: not prime-indexed
};

const std::vector<SuiteSpec>& suites() {
    static const std::vector<SuiteSpec> table = {
        {"symmetries", 2000, 0, [](const PrimeContext& c) { return symmetry_check(c); }},
        {"derivative", 500, 0, [](const PrimeContext& c) { return derivative_check(c); }},
        {"prop2", 500, 0,
         [](const PrimeContext& c) { return verify_prop2_exhaustive(zero_profile(c)); }},
        {"three-term", 100, 0,
         [](const PrimeContext& c) { return verify_three_term_exhaustive(zero_profile(c)); }},
        {"ed-form", 100, 0,
         [](const PrimeContext& c) { return verify_ed_form_exhaustive(zero_profile(c)); }},
        {"prop4", 2000, 0,
         [](const PrimeContext& c) {
             const QuotientTable t = quotient_table(c);
             return verify_prop4(t, zero_profile(t));
         }},
        {"lemma", 1000, 0, [](const PrimeContext& c) { return verify_lemma(c); }},
        {"square", 2000, 0,
         [](const PrimeContext& c) { return verify_square_implication(zero_profile(c)); }},
        {"gauss", 13, 13, [](const PrimeContext& c) { return verify_gauss_sums(c); }},
        {"cocycle", 7, 13, [](const PrimeContext& c) { return verify_cocycle(c); }},
        {"sq-bound", 1000, 0, nullptr},
    };
    return table;
}

std::vector<VerificationReport> run_suite(const SuiteSpec& spec, u64 limit, unsigned jobs) {
    if (!spec.per_prime) return {verify_coprime_bound(limit)};

    std::vector<u64> primes = primes_up_to(limit);
    if (!primes.empty() && primes.front() == 2) primes.erase(primes.begin());
    std::vector<VerificationReport> reports(primes.size());
    parallel_for_indexed(primes.size(), jobs, [&](std::size_t i) {
        reports[i] = spec.per_prime(PrimeContext::from_sieved(primes[i]));
    });
    return reports;
}

int run_verify(const std::string& suite_arg, u64 limit_override, unsigned jobs,
               const std::string& out_path) {
    std::vector<VerificationReport> all_reports;
    for (const SuiteSpec& spec : suites()) {
        if (suite_arg != "all" && suite_arg != spec.name) continue;
        u64 limit = spec.default_limit;
        if (limit_override != 0)
            limit = suite_arg == "all" ? std::min(limit_override, spec.default_limit)
                                       : limit_override;
        if (spec.hard_cap != 0) limit = std::min(limit, spec.hard_cap);

        std::vector<VerificationReport> reports = run_suite(spec, limit, jobs);
        u64 cases = 0;
        u64 violations = 0;
        std::chrono::nanoseconds spent{0};
        for (const VerificationReport& r : reports) {
            cases += r.cases_checked;
            violations += r.violations.size();
            spent += r.elapsed;
        }
        std::cerr << "suite " << spec.name << " (limit " << limit << "): " << reports.size()
                  << " reports, " << cases << " cases, " << violations << " violations ["
                  << std::chrono::duration_cast<std::chrono::milliseconds>(spent).count()
                  << " ms]\n";
        all_reports.insert(all_reports.end(), std::make_move_iterator(reports.begin()),
                           std::make_move_iterator(reports.end()));
    }

    u64 limit_field = limit_override;
    if (suite_arg != "all" && limit_override == 0) {
        for (const SuiteSpec& spec : suites())
            if (suite_arg == spec.name) limit_field = spec.default_limit;
    }
    const std::string text = verify_json(suite_arg, limit_field, all_reports);
    const int io = write_output(text, out_path);
    if (io != 0) return io;
    for (const VerificationReport& r : all_reports)
        if (!r.pass()) return kExitViolation;
    return 0;
}

int run_profile(u64 p, const std::string& format, const std::string& out_path) {
    const PrimeContext ctx(p);
    const QuotientTable table = quotient_table(ctx);
    const ZeroProfile profile = zero_profile(table);
    const std::vector<Orbit> orbits = orbit_decompose(profile);
    const std::string text = format == "json" ? profile_json(table, profile, orbits)
                                              : profile_text(table, profile, orbits);
    return write_output(text, out_path);
}

int run_scan(u64 base, u64 limit, std::optional<CongruenceFilter> filter, unsigned jobs,
             const std::string& format, const std::string& out_path) {
    const std::vector<u64> hits = wieferich_scan(base, limit, filter, jobs);
    const std::string text = format == "json" ? scan_json(base, limit, hits) : scan_csv(hits);
    return write_output(text, out_path);
}

int run_survey(u64 max_p, unsigned jobs, const std::string& format,
               const std::string& out_path) {
    const std::vector<SurveyRecord> records = sqrt_claim_survey(max_p, jobs);
    const std::string text =
        format == "json" ? survey_json(max_p, records) : survey_csv(records);
    const int io = write_output(text, out_path);
    if (io != 0) return io;
    const std::string summary = survey_summary_text(summarize_survey(records));
    if (out_path.empty())
        std::cerr << summary;
    else
        std::cout << summary;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fermat quotient and Mirimanoff zero-profile toolkit"};
    app.require_subcommand(1);

    u64 profile_p = 0;
    std::string profile_format = "text";
    std::string profile_out;
    CLI::App* profile_cmd = app.add_subcommand("profile", "zero profile of one odd prime");
    profile_cmd->add_option("p", profile_p, "odd prime")->required();
    profile_cmd->add_option("--format", profile_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    profile_cmd->add_option("--out", profile_out, "write to a file instead of stdout");

    u64 scan_base = 0;
    u64 scan_limit = 0;
    u64 filter_mod = 0;
    u64 filter_res = 0;
    unsigned scan_jobs = 0;
    std::string scan_format = "csv";
    std::string scan_out;
    u64 scan_seed = 0;
    CLI::App* scan_cmd =
        app.add_subcommand("scan", "odd primes p <= limit with q_p(base) = 0");
    scan_cmd->add_option("base", scan_base, "quotient base, at least 2")->required();
    scan_cmd->add_option("limit", scan_limit, "inclusive upper bound on p")->required();
    CLI::Option* mod_opt =
        scan_cmd->add_option("--filter-mod", filter_mod, "restrict to p = r mod m: the m");
    scan_cmd->add_option("--filter-residue", filter_res, "restrict to p = r mod m: the r")
        ->needs(mod_opt);
    mod_opt->needs("--filter-residue");
    scan_cmd->add_option("--jobs", scan_jobs, "worker threads, 0 = all cores");
    scan_cmd->add_option("--format", scan_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--out", scan_out, "write to a file instead of stdout");
    scan_cmd->add_option("--seed", scan_seed, "accepted for interface stability; unused");

    std::string verify_suite;
    u64 verify_limit = 0;
    unsigned verify_jobs = 0;
    std::string verify_out;
    u64 verify_seed = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive identity checks");
    {
        std::vector<std::string> names{"all"};
        for (const SuiteSpec& spec : suites()) names.emplace_back(spec.name);
        verify_cmd->add_option("suite", verify_suite, "suite name or all")
            ->required()
            ->check(CLI::IsMember(names));
    }
    verify_cmd->add_option("--max-p", verify_limit,
                           "limit override (primes, or q for sq-bound); all: shrink only");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads, 0 = all cores");
    verify_cmd->add_option("--out", verify_out, "write the JSON report to a file");
    verify_cmd->add_option("--seed", verify_seed, "accepted for interface stability; unused");

    u64 survey_max_p = 0;
    unsigned survey_jobs = 0;
    std::string survey_format = "csv";
    std::string survey_out;
    u64 survey_seed = 0;
    CLI::App* survey_cmd =
        app.add_subcommand("survey", "kappa_p against sqrt(eta_0) for all odd p <= max-p");
    survey_cmd->add_option("--max-p", survey_max_p, "inclusive upper bound on p")->required();
    survey_cmd->add_option("--jobs", survey_jobs, "worker threads, 0 = all cores");
    survey_cmd->add_option("--format", survey_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    survey_cmd->add_option("--out", survey_out, "write to a file instead of stdout");
    survey_cmd->add_option("--seed", survey_seed, "accepted for interface stability; unused");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (profile_cmd->parsed()) return run_profile(profile_p, profile_format, profile_out);
        if (scan_cmd->parsed()) {
            std::optional<CongruenceFilter> filter;
            if (mod_opt->count() > 0) filter = CongruenceFilter{filter_mod, filter_res};
            return run_scan(scan_base, scan_limit, filter, scan_jobs, scan_format, scan_out);
        }
        if (verify_cmd->parsed())
            return run_verify(verify_suite, verify_limit, verify_jobs, verify_out);
        if (survey_cmd->parsed())
            return run_survey(survey_max_p, survey_jobs, survey_format, survey_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    }
    return 0;
}
