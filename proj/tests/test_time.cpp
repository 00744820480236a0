#include <doctest.h>

#include "mcorr/time.hpp"

using namespace mcorr;

TEST_SUITE("time") {
    TEST_CASE("date round trip across month and leap boundaries") {
        for (const char* s : {"1970-01-01", "2014-07-01", "2014-12-31", "2015-01-01",
                              "2016-02-29", "2015-03-06", "2100-12-31"}) {
            CHECK(format_date(parse_date(s)) == s);
        }
        CHECK(parse_date("1970-01-01").days == 0);
        CHECK(parse_date("1970-01-02").days == 1);
        CHECK(parse_date("1969-12-31").days == -1);
    }

    TEST_CASE("date arithmetic matches calendar steps") {
        const Date start = parse_date("2014-07-01");
        CHECK(format_date(start + 31) == "2014-08-01");
        CHECK(format_date(start + 310) == "2015-05-07");
        CHECK((parse_date("2015-05-07") - start) == 310);
        CHECK(format_date(parse_date("2016-03-01") + (-1)) == "2016-02-29");
    }

    TEST_CASE("invalid dates are rejected") {
        CHECK_THROWS_AS(parse_date("2015-02-29"), std::invalid_argument);
        CHECK_THROWS_AS(parse_date("2015-13-01"), std::invalid_argument);
        CHECK_THROWS_AS(parse_date("2015-00-10"), std::invalid_argument);
        CHECK_THROWS_AS(parse_date("2015-04-31"), std::invalid_argument);
        CHECK_THROWS_AS(parse_date("20150401"), std::invalid_argument);
        CHECK_THROWS_AS(parse_date(""), std::invalid_argument);
    }

    TEST_CASE("timestamp parsing: bare, fractional, zoned") {
        const Timestamp base = parse_timestamp("2014-07-01T00:00:08");
        CHECK(base.seconds == timestamp_at(parse_date("2014-07-01"), 8).seconds);
        CHECK(parse_timestamp("2014-07-01 00:00:08").seconds == base.seconds);
        // fractional seconds truncate toward the containing second
        CHECK(parse_timestamp("2014-07-01T00:00:08.999").seconds == base.seconds);
        // offsets shift to UTC
        CHECK(parse_timestamp("2014-07-01T02:00:08+02:00").seconds == base.seconds);
        CHECK(parse_timestamp("2014-06-30T22:00:08-02:00").seconds == base.seconds);
        CHECK(parse_timestamp("2014-07-01T00:00:08Z").seconds == base.seconds);
        // leap second notation folds into :59
        CHECK(parse_timestamp("2015-06-30T23:59:60").seconds ==
              parse_timestamp("2015-06-30T23:59:59").seconds);
    }

    TEST_CASE("timestamp rejects malformed fields") {
        CHECK_THROWS_AS(parse_timestamp("2014-07-01T24:00:00"), std::invalid_argument);
        CHECK_THROWS_AS(parse_timestamp("2014-07-01T00:61:00"), std::invalid_argument);
        CHECK_THROWS_AS(parse_timestamp("2014-07-01"), std::invalid_argument);
        CHECK_THROWS_AS(parse_timestamp("not a time"), std::invalid_argument);
    }

    TEST_CASE("timestamp format round trip") {
        for (const char* s : {"2014-07-01T00:00:00", "2015-12-31T23:59:59", "1970-01-01T00:00:01"}) {
            CHECK(format_timestamp(parse_timestamp(s)) == s);
        }
    }

    TEST_CASE("local day boundaries respect the configured offset") {
        const Timestamp t = parse_timestamp("2014-07-01T23:30:00");
        CHECK(local_date(t, 0) == parse_date("2014-07-01"));
        CHECK(local_date(t, 60) == parse_date("2014-07-02"));    // +1h pushes past midnight
        CHECK(local_date(t, -24 * 60) == parse_date("2014-06-30"));
        CHECK(local_second_of_day(t, 0) == 23 * 3600 + 30 * 60);
        CHECK(local_second_of_day(t, 60) == 30 * 60);
    }

    TEST_CASE("every day has exactly 10800 windows") {
        CHECK(kWindowsPerDay == 86400 / kWindowSeconds);
        const Timestamp last = parse_timestamp("2014-07-01T23:59:59");
        CHECK(local_second_of_day(last, 0) / kWindowSeconds == 10799);
        const Timestamp first = parse_timestamp("2014-07-01T00:00:00");
        CHECK(local_second_of_day(first, 0) / kWindowSeconds == 0);
    }
}
