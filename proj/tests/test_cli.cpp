#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cantor/cantor_set.hpp"
#include "cantor/frequency.hpp"
#include "cantor/report.hpp"

using namespace cantor;

TEST_CASE("frequency parsing assigns tags from syntax") {
    auto half = parse_frequency("1/2");
    CHECK(half.is_rational());
    CHECK(half.rat == BigRat(1, 2));

    auto dec = parse_frequency("0.4142135623730951");
    CHECK_FALSE(dec.is_rational());
    CHECK(dec.real == doctest::Approx(0.4142135623730951));

    auto named = parse_frequency("sqrt2m1");
    CHECK_FALSE(named.is_rational());
    CHECK(named.real == doctest::Approx(std::sqrt(2.0) - 1.0));

    auto integer = parse_frequency("3");
    CHECK(integer.is_rational());
    CHECK(integer.rat == 0);  // reduced mod 1

    // negative and improper rationals reduce into [0,1)
    CHECK(parse_frequency("-1/3").rat == BigRat(2, 3));
    CHECK(parse_frequency("7/4").rat == BigRat(3, 4));

    CHECK_THROWS(parse_frequency(""));
    CHECK_THROWS(parse_frequency("abc"));
}

TEST_CASE("frequency arithmetic stays reduced") {
    auto x = Frequency::rational(BigInt(2), BigInt(3));
    auto y = x.scaled(3);
    CHECK(y.rat == 0);
    auto z = x.plus(Frequency::rational(BigInt(1), BigInt(2)));
    CHECK(z.rat == BigRat(1, 6));
    CHECK(x.str() == "2/3");

    auto r = Frequency::irrational(1.75);
    CHECK(r.real == doctest::Approx(0.75));

    // an exact 0.0 collapses to the rational zero
    CHECK(parse_frequency("0.0").is_rational());
    CHECK(Frequency::irrational(2.0).is_rational());
}

TEST_CASE("cantor spec round trip") {
    for (const std::string spec : {"b=3;D=0,2", "b=10;D=0,5", "b=7;D=0,1,3"}) {
        CHECK(CantorSet::parse(spec).format() == spec);
    }
}

TEST_CASE("csv writer") {
    std::ostringstream os;
    {
        ReportWriter w(os, {"a", "b"}, false);
        w.row({"1", "plain"});
        w.row({"2", "with,comma"});
        w.row({"3", "with\"quote"});
        CHECK_THROWS(w.row({"only-one"}));
    }
    CHECK(os.str() == "a,b\n1,plain\n2,\"with,comma\"\n3,\"with\"\"quote\"\n");
}

TEST_CASE("json writer") {
    std::ostringstream os;
    {
        ReportWriter w(os, {"x"}, true);
        w.row({"v1"});
        w.row({"v\"2"});
    }
    CHECK(os.str() == "[\n  {\"x\": \"v1\"},\n  {\"x\": \"v\\\"2\"}\n]\n");
}

TEST_CASE("doubles format deterministically and round-trip") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    for (double v : {1.0 / 3.0, 2.0 / 7.0, 1e-12, 123456.789, 0.1 + 0.2}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}
