#include <doctest.h>

#include <vector>

#include "mcorr/scoring.hpp"
#include "mcorr/time.hpp"
#include "mcorr/validate.hpp"

using namespace mcorr;

namespace {

AssessmentRecord record(const char* id, const char* date) {
    AssessmentRecord r;
    r.participant_id = id;
    r.date = parse_date(date);
    return r;
}

}  // namespace

TEST_SUITE("scoring") {
    TEST_CASE("tug seconds map onto the 3-point scale with closed lower band") {
        CHECK(tug_points(5.0) == 1);
        CHECK(tug_points(10.0) == 1);   // boundary stays in the fast class
        CHECK(tug_points(10.1) == 2);
        CHECK(tug_points(19.9) == 2);
        CHECK(tug_points(20.0) == 3);   // boundary belongs to the slow class
        CHECK(tug_points(31.6) == 3);
        CHECK_THROWS_AS(tug_points(0.0), std::invalid_argument);
        CHECK_THROWS_AS(tug_points(-3.0), std::invalid_argument);
    }

    TEST_CASE("sppb categories split at 6/7 and 9/10") {
        CHECK(sppb_category(0) == SppbCategory::low);
        CHECK(sppb_category(6) == SppbCategory::low);
        CHECK(sppb_category(7) == SppbCategory::middle);
        CHECK(sppb_category(9) == SppbCategory::middle);
        CHECK(sppb_category(10) == SppbCategory::high);
        CHECK(sppb_category(12) == SppbCategory::high);
        CHECK_THROWS_AS(sppb_category(13), std::out_of_range);
        CHECK_THROWS_AS(sppb_category(-1), std::out_of_range);
    }

    TEST_CASE("tinetti fall risk splits at 18/19 and 23/24") {
        CHECK(tinetti_fall_risk(0) == FallRisk::high_risk);
        CHECK(tinetti_fall_risk(18) == FallRisk::high_risk);
        CHECK(tinetti_fall_risk(19) == FallRisk::moderate_risk);
        CHECK(tinetti_fall_risk(23) == FallRisk::moderate_risk);
        CHECK(tinetti_fall_risk(24) == FallRisk::low_risk);
        CHECK(tinetti_fall_risk(28) == FallRisk::low_risk);
        CHECK_THROWS_AS(tinetti_fall_risk(29), std::out_of_range);
    }

    TEST_CASE("cutoff crossing detects any class change") {
        std::vector<FallRisk> steady(5, FallRisk::moderate_risk);
        CHECK_FALSE(crossed_cutoff(std::span<const FallRisk>(steady)));
        steady.push_back(FallRisk::low_risk);
        CHECK(crossed_cutoff(std::span<const FallRisk>(steady)));
        std::vector<FallRisk> one{FallRisk::low_risk};
        CHECK_THROWS_AS(crossed_cutoff(std::span<const FallRisk>(one)), std::invalid_argument);
    }

    TEST_CASE("record validation accepts a complete plausible visit") {
        AssessmentRecord r = record("7", "2014-07-01");
        r.sppb_total = 9;
        r.sppb_balance = 4;
        r.sppb_gait4m = 3;
        r.sppb_5crt = 2;
        r.tinetti13 = 11;
        r.tinetti28 = 24;
        r.tug_seconds = 12.5;
        r.tug_points = 2;
        CHECK(validate_record(r).empty());
    }

    TEST_CASE("record validation is total on the all-missing record") {
        CHECK(validate_record(record("9", "2014-07-01")).empty());
    }

    TEST_CASE("range violations name the field and the observed value") {
        AssessmentRecord r = record("3", "2014-07-01");
        r.tinetti28 = 40;
        auto violations = validate_record(r);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].find("tinetti28") != std::string::npos);
        CHECK(violations[0].find("40") != std::string::npos);
    }

    TEST_CASE("gait subscale cannot exceed the full tinetti score") {
        AssessmentRecord r = record("3", "2014-07-01");
        r.tinetti13 = 12;
        r.tinetti28 = 11;
        auto violations = validate_record(r);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].find("tinetti28") != std::string::npos);
    }

    TEST_CASE("sppb items must sum to the total when all are present") {
        AssessmentRecord r = record("5", "2014-07-01");
        r.sppb_total = 9;
        r.sppb_balance = 4;
        r.sppb_gait4m = 3;
        r.sppb_5crt = 1;  // sums to 8
        CHECK(validate_record(r).size() == 1);
        r.sppb_5crt = 2;
        CHECK(validate_record(r).empty());
        r.sppb_5crt.reset();  // partial items: sum rule cannot fire
        CHECK(validate_record(r).empty());
    }

    TEST_CASE("multiple violations are all reported") {
        AssessmentRecord r = record("4", "2014-07-01");
        r.sppb_total = 15;
        r.tug_seconds = -2.0;
        r.tug_points = 5;
        CHECK(validate_record(r).size() == 3);
    }

    TEST_CASE("fidelity audit flags only disagreeing pairs") {
        std::vector<AssessmentRecord> records;
        AssessmentRecord a = record("6", "2014-10-02");
        a.tug_seconds = 19.0;
        a.tug_points = 3;  // printed as slow, scores as middle
        AssessmentRecord b = record("6", "2014-11-02");
        b.tug_seconds = 22.9;
        b.tug_points = 3;
        AssessmentRecord c = record("6", "2014-12-03");
        c.tug_seconds = 20.4;  // points missing: not a comparable pair
        records = {a, b, c};

        TugFidelity f = tug_fidelity(records);
        CHECK(f.pairs_available == 2);
        CHECK(f.pairs_matching == 1);
        REQUIRE(f.errata.size() == 1);
        CHECK(f.errata[0].participant_id == "6");
        CHECK(f.errata[0].tug_seconds == 19.0);
        CHECK(f.errata[0].points_printed == 3);
        CHECK(f.errata[0].points_computed == 2);
        CHECK(f.match_fraction() == 0.5);
    }
}
