#include <doctest.h>

#include "oracles.hpp"
#include "primestar/baseb.hpp"
#include "primestar/errors.hpp"

using namespace primestar;

TEST_CASE("to_base examples") {
    CHECK(to_base(0, 2).str() == "0");
    CHECK(to_base(11, 10).str() == "11");
    CHECK(to_base(7681, 2).str() == "1111000000001");
    CHECK(to_base(255, 16).str() == "ff");
    CHECK(to_base(35, 36).str() == "z");
    CHECK_THROWS_AS(to_base(5, 1), DomainError);
    CHECK_THROWS_AS(to_base(-5, 10), DomainError);
}

TEST_CASE("to_base supports bases without a text form") {
    const auto numeral = to_base(4005, 100);
    CHECK(numeral.digits() == DigitString{40, 5});
    CHECK(numeral.value() == 4005);
    CHECK_THROWS_AS(numeral.str(), DomainError);
}

TEST_CASE("from_base examples") {
    CHECK(from_base("1111000000001", 2) == 7681);
    CHECK(from_base("0", 10) == 0);
    CHECK(from_base("zz", 36) == 35 * 36 + 35);
}

TEST_CASE("from_base rejects non-canonical text with the offending position") {
    auto position_of = [](std::string_view text, unsigned b) -> std::size_t {
        try {
            (void)from_base(text, b);
        } catch (const ValidationError& e) {
            return e.position();
        }
        FAIL("expected a validation error for '" << text << "'");
        return 0;
    };
    CHECK(position_of("01", 10) == 0);
    CHECK(position_of("", 10) == 0);
    CHECK(position_of("1012", 2) == 3);
    CHECK(position_of("12a", 10) == 2);
    CHECK(position_of("1A", 16) == 1);  // upper case is not a digit
}

TEST_CASE("CanonicalNumeral enforces its invariants") {
    CHECK_NOTHROW(CanonicalNumeral({0}, 2));
    CHECK_THROWS_AS(CanonicalNumeral({}, 2), ValidationError);
    CHECK_THROWS_AS(CanonicalNumeral({0, 1}, 2), ValidationError);
    CHECK_THROWS_AS(CanonicalNumeral({1, 2}, 2), ValidationError);
    CHECK_THROWS_AS(CanonicalNumeral({1}, 1), DomainError);
}

TEST_CASE("round trip through text for every small value") {
    for (unsigned b : {2u, 3u, 8u, 10u, 16u}) {
        for (std::uint64_t n = 0; n <= 100'000; ++n) {
            const auto numeral = to_base(to_natural(n), b);
            REQUIRE(numeral.str() == oracle::naive_to_base(n, b));
            REQUIRE(from_base(numeral.str(), b) == to_natural(n));
        }
    }
}

TEST_CASE("witness_numeral examples") {
    CHECK(witness_numeral(2, 5, 1).str() == "100001");
    CHECK(witness_numeral(10, 1, 2).str() == "21");
    CHECK(witness_numeral(2, 9, 15).str() == "1111000000001");
    CHECK_THROWS_AS(witness_numeral(2, 0, 1), DomainError);
    CHECK_THROWS_AS(witness_numeral(2, 3, 0), DomainError);
    CHECK_THROWS_AS(witness_numeral(1, 3, 1), DomainError);
}

TEST_CASE("witness_numeral is the numeral of k * b^n + 1") {
    for (unsigned b : {2u, 10u}) {
        for (std::uint64_t n = 1; n <= 10; ++n) {
            for (unsigned k = 1; k <= 50; ++k) {
                Natural power;
                mpz_ui_pow_ui(power.get_mpz_t(), b, n);
                const auto w = witness_numeral(b, n, k);
                REQUIRE(w == to_base(k * power + 1, b));
                REQUIRE(w.size() == to_base(k, b).size() + n);
            }
        }
    }
}

TEST_CASE("parse_digits accepts leading zeros but not foreign characters") {
    CHECK(parse_digits("007", 8) == DigitString{0, 0, 7});
    CHECK(parse_digits("", 2).empty());
    CHECK_THROWS_AS(parse_digits("08", 8), ValidationError);
    CHECK_THROWS_AS(parse_digits("1 0", 2), ValidationError);
}
