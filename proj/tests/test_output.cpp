#include <string>
#include <vector>

#include "doctest.h"
#include "fqmir/output.hpp"
#include "json.hpp"

using namespace fqmir;
using nlohmann::json;

TEST_CASE("fixed six-decimal rendering") {
    CHECK(format_fixed6(1.4142135623) == "1.414214");
    CHECK(format_fixed6(1.0) == "1.000000");
    CHECK(format_fixed6(0.5) == "0.500000");
    CHECK(format_fixed6(0.0) == "0.000000");
}

TEST_CASE("scan output shapes") {
    CHECK(scan_csv({1093, 3511}) == "p,q_p(base)\n1093,0\n3511,0\n");
    CHECK(scan_csv({}) == "p,q_p(base)\n");

    const json doc = json::parse(scan_json(2, 4000, {1093, 3511}));
    CHECK(doc["command"] == "scan");
    CHECK(doc["base"] == 2);
    CHECK(doc["limit"] == 4000);
    CHECK(doc["hits"] == json::array({1093, 3511}));
}

TEST_CASE("survey summary picks the first maximizer and collects flags") {
    std::vector<SurveyRecord> rows(3);
    rows[0] = {3, 2, 2, 1, 2, true, false, 1.4142135623};
    rows[1] = {5, 2, 2, 2, 2, false, true, 1.4142135623};
    rows[2] = {7, 2, 4, 2, 3, false, false, 1.0};

    const SurveySummary s = summarize_survey(rows);
    CHECK(s.odd_primes == 3);
    CHECK(s.max_ratio_p == 3);  // ties resolve to the least prime
    CHECK(s.max_ratio == 1.4142135623);
    CHECK(s.exceeds_sqrt == std::vector<u64>{3});
    CHECK(s.wieferich_base2 == std::vector<u64>{5});

    CHECK(summarize_survey({}).odd_primes == 0);
    CHECK(summarize_survey({}).max_ratio_p == 0);
}

TEST_CASE("survey csv lines") {
    const std::vector<SurveyRecord> rows = sqrt_claim_survey(10);
    const std::string csv = survey_csv(rows);
    CHECK(csv ==
          "p,kappa_p,eta_0,ratio,bound_quarter,sqrt_floor,exceeds_sqrt,wieferich_base2\n"
          "3,2,2,1.414214,2,1,1,0\n"
          "5,2,2,1.414214,2,2,0,0\n"
          "7,2,4,1.000000,3,2,0,0\n");
    CHECK(survey_csv({}) ==
          "p,kappa_p,eta_0,ratio,bound_quarter,sqrt_floor,exceeds_sqrt,wieferich_base2\n");
}

TEST_CASE("survey json agrees with the csv ratio text") {
    const std::vector<SurveyRecord> rows = sqrt_claim_survey(200);
    const json doc = json::parse(survey_json(200, rows));
    CHECK(doc["command"] == "survey");
    CHECK(doc["max_p"] == 200);
    REQUIRE(doc["rows"].size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& row = doc["rows"][i];
        CHECK(row["p"] == rows[i].p);
        CHECK(row["kappa_p"] == rows[i].kappa);
        CHECK(row["eta_0"] == rows[i].eta0);
        // the JSON number reproduces the 6-decimal CSV text exactly
        CHECK(format_fixed6(row["ratio"].get<double>()) == format_fixed6(rows[i].ratio));
    }
    CHECK(doc["summary"]["max_ratio_p"] == 3);
    CHECK(doc["summary"]["exceeds_sqrt"] == json::array({3}));
    CHECK(doc["summary"]["wieferich_base2"] == json::array());
}

TEST_CASE("survey summary text") {
    const SurveySummary s = summarize_survey(sqrt_claim_survey(10));
    CHECK(survey_summary_text(s) ==
          "odd primes surveyed: 3\n"
          "max kappa/sqrt(eta_0) = 1.414214 at p = 3\n"
          "primes with kappa > floor(sqrt(p)): 3\n"
          "wieferich base 2: none\n");
}

TEST_CASE("verification reports serialize with violations and totals") {
    VerificationReport ok = symmetry_check(PrimeContext(5));
    VerificationReport bad;
    bad.prime = 11;
    bad.relation = RelationKind::prop2;
    bad.cases_checked = 72;
    bad.violations = {{2, 3}, {4, 5}};

    const json doc = json::parse(verify_json("prop2", 11, {ok, bad}));
    CHECK(doc["command"] == "verify");
    CHECK(doc["suite"] == "prop2");
    CHECK(doc["limit"] == 11);
    REQUIRE(doc["reports"].size() == 2);
    CHECK(doc["reports"][0]["relation"] == "symmetries");
    CHECK(doc["reports"][0]["pass"] == true);
    CHECK(doc["reports"][1]["relation"] == "prop2");
    CHECK(doc["reports"][1]["pass"] == false);
    CHECK(doc["reports"][1]["violations"] == json::array({{2, 3}, {4, 5}}));
    CHECK(doc["summary"]["reports"] == 2);
    CHECK(doc["summary"]["cases_checked"] == 9 + 72);
    CHECK(doc["summary"]["violations"] == 2);
    CHECK(doc["summary"]["pass"] == false);

    // timing is kept out of the serialized form so reruns are byte-identical
    CHECK(verify_json("prop2", 11, {ok, bad}).find("elapsed") == std::string::npos);
}

TEST_CASE("relation names are stable") {
    CHECK(relation_name(RelationKind::symmetry) == "symmetries");
    CHECK(relation_name(RelationKind::derivative) == "derivative");
    CHECK(relation_name(RelationKind::prop2) == "prop2");
    CHECK(relation_name(RelationKind::three_term) == "three-term");
    CHECK(relation_name(RelationKind::ed_form) == "ed-form");
    CHECK(relation_name(RelationKind::prop4) == "prop4");
    CHECK(relation_name(RelationKind::lemma) == "lemma");
    CHECK(relation_name(RelationKind::square_implication) == "square");
    CHECK(relation_name(RelationKind::gauss_sums) == "gauss");
    CHECK(relation_name(RelationKind::cocycle) == "cocycle");
    CHECK(relation_name(RelationKind::coprime_bound) == "sq-bound");
}

TEST_CASE("profile renderings") {
    const PrimeContext ctx(5);
    const QuotientTable table = quotient_table(ctx);
    const ZeroProfile profile = zero_profile(table);
    const std::vector<Orbit> orbits = orbit_decompose(profile);

    CHECK(profile_text(table, profile, orbits) ==
          "p = 5\n"
          "kappa_p = 2 (quotient and gamma routes agree)\n"
          "bounds: (p+1)/2 = 3, floor((p+5)/4) = 2, floor(sqrt(p)) = 2\n"
          "q_p(2) = 3\n"
          "eta_0 = 2\n"
          "zeros: 0 1\n"
          "orbits:\n"
          "  trivial: 0 1\n");

    const json doc = json::parse(profile_json(table, profile, orbits));
    CHECK(doc["command"] == "profile");
    CHECK(doc["p"] == 5);
    CHECK(doc["kappa_p"] == 2);
    CHECK(doc["q_p_2"] == 3);
    CHECK(doc["wieferich_base2"] == false);
    CHECK(doc["eta_0"] == 2);
    CHECK(doc["zeros"] == json::array({0, 1}));
    REQUIRE(doc["orbits"].size() == 1);
    CHECK(doc["orbits"][0]["label"] == "trivial");
    CHECK(doc["orbits"][0]["members"] == json::array({0, 1}));
}

TEST_CASE("profile rendering of a wieferich prime mentions the flag") {
    const PrimeContext ctx(1093);
    const QuotientTable table = quotient_table(ctx);
    const ZeroProfile profile = zero_profile(table);
    const std::vector<Orbit> orbits = orbit_decompose(profile);
    const std::string text = profile_text(table, profile, orbits);
    CHECK(text.find("q_p(2) = 0  (wieferich base 2)") != std::string::npos);
    CHECK(text.find("half_orbit: 2 547 1092") != std::string::npos);

    const json doc = json::parse(profile_json(table, profile, orbits));
    CHECK(doc["wieferich_base2"] == true);
    CHECK(doc["kappa_p"] == 3);
}
