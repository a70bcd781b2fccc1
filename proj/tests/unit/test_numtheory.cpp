#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "primestar/errors.hpp"
#include "primestar/numtheory.hpp"

using namespace primestar;

TEST_CASE("is_prime: small examples") {
    CHECK_FALSE(is_prime(0).is_prime);
    CHECK_FALSE(is_prime(1).is_prime);
    CHECK(is_prime(2).is_prime);
    CHECK(is_prime(7681).is_prime);
    CHECK_FALSE(is_prime(1537).is_prime);  // 29 * 53
    CHECK(is_prime(1537).certainty == Certainty::deterministic);
    CHECK(is_prime(1537).rounds == 0);
}

TEST_CASE("is_prime agrees with a sieve below 10^6") {
    const std::size_t limit = 1'000'000;
    const auto sieve = oracle::sieve(limit);
    std::size_t mismatches = 0;
    for (std::size_t n = 0; n < limit; ++n) {
        const auto verdict = is_prime(to_natural(n));
        if (verdict.is_prime != sieve[n]) ++mismatches;
        if (verdict.certainty != Certainty::deterministic) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("is_prime_u64 rejects strong pseudoprimes to the small bases") {
    // strong pseudoprime to every prime base up to 23
    CHECK_FALSE(is_prime_u64(3825123056546413051ULL));
    CHECK_FALSE(is_prime_u64(3215031751ULL));  // spsp(2,3,5,7)
    CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(18446744073709551615ULL));
}

TEST_CASE("strong Lucas pseudoprimes below 10^5 are exactly the known list") {
    const std::set<unsigned> expected = {5459,  5777,  10877, 16109, 18971, 22499,
                                         24569, 25199, 40309, 58519, 75077, 97439};
    const auto sieve = oracle::sieve(100'000);
    std::set<unsigned> found;
    for (unsigned n = 3; n < 100'000; n += 2) {
        const bool lucas = detail::strong_lucas_probable_prime(n);
        if (sieve[n]) {
            REQUIRE_MESSAGE(lucas, "prime rejected by Lucas test: " << n);
        } else if (lucas) {
            found.insert(n);
        }
    }
    CHECK(found == expected);
}

TEST_CASE("is_prime above 2^64 uses Baillie-PSW and reports probable") {
    const Natural m89 = (Natural(1) << 89) - 1;
    const Natural m127 = (Natural(1) << 127) - 1;
    auto v = is_prime(m127);
    CHECK(v.is_prime);
    CHECK(v.certainty == Certainty::probable);
    CHECK(v.rounds == 16);
    CHECK(is_prime(m89).is_prime);

    CHECK(is_prime(m89, {4, 7}).rounds == 4);

    // composite verdicts above 2^64 are proofs
    auto c = is_prime(m89 * m127);
    CHECK_FALSE(c.is_prime);
    CHECK(c.certainty == Certainty::deterministic);

    // strong pseudoprime to all prime bases up to 37
    CHECK_FALSE(is_prime(Natural("318665857834031151167461")).is_prime);
    CHECK_FALSE(is_prime((Natural(1) << 101) - 1).is_prime);  // 7432339208719 * 341117531003194129

    // the Lucas stage must also be exercised on squares of primes
    const Natural p = Natural("18446744073709551557");
    CHECK_FALSE(is_prime(p * p).is_prime);
}

TEST_CASE("is_prime cross-checks GMP on random 80..200 bit integers") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(12345);
    int primes = 0;
    for (int i = 0; i < 3000; ++i) {
        Natural n = rng.get_z_bits(80 + i % 120) | 1;
        n |= Natural(1) << 79;
        const bool ours = is_prime(n).is_prime;
        const bool gmp = mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
        REQUIRE(ours == gmp);
        primes += ours;
    }
    CHECK(primes > 10);
}

TEST_CASE("mod_pow examples and errors") {
    CHECK(mod_pow(2, 3, 5) == 3);
    CHECK(mod_pow(2, 24, 5) == 1);
    CHECK(mod_pow(7, 0, 13) == 1);
    CHECK(mod_pow(7, 0, 1) == 0);
    CHECK_THROWS_AS(mod_pow(2, 3, 0), DomainError);
    CHECK_THROWS_AS(mod_pow(2, -1, 7), DomainError);
}

TEST_CASE("mod_pow agrees with repeated multiplication") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t b = rng() % 100'000;
        const std::uint64_t e = rng() % 1001;
        const std::uint64_t m = 1 + rng() % 100'000;
        REQUIRE(mod_pow(to_natural(b), to_natural(e), to_natural(m)) ==
                to_natural(oracle::naive_pow_mod(b, e, m)));
    }
}

TEST_CASE("multiplicative_order examples") {
    CHECK(multiplicative_order(2, 3) == 2);
    CHECK(multiplicative_order(2, 5) == 4);
    for (unsigned m = 2; m < 30; ++m) CHECK(multiplicative_order(1, m) == 1);
    CHECK(multiplicative_order(10, 11) == 2);
}

TEST_CASE("multiplicative_order errors") {
    CHECK_THROWS_AS(multiplicative_order(2, 4), DomainError);
    CHECK_THROWS_AS(multiplicative_order(6, 9), DomainError);
    CHECK_THROWS_AS(multiplicative_order(2, 1), DomainError);
    CHECK_THROWS_AS(multiplicative_order(2, 1'000'003, 1'000), BudgetError);
}

TEST_CASE("multiplicative_order is the least exponent reaching 1") {
    for (std::uint64_t m = 2; m < 400; ++m) {
        for (std::uint64_t b = 1; b < 40; ++b) {
            if (std::gcd(b, m) != 1) continue;
            const Natural d = multiplicative_order(to_natural(b), to_natural(m));
            REQUIRE(d == to_natural(oracle::brute_order(b, m)));
            REQUIRE(mod_pow(to_natural(b), d, to_natural(m)) == 1);
            REQUIRE(d <= to_natural(m - 1));
        }
    }
}

TEST_CASE("factorial examples and budget") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(200) == oracle::naive_factorial(200));
    CHECK_THROWS_AS(factorial(100'001), BudgetError);
    CHECK_THROWS_AS(factorial(50, 49), BudgetError);
}

TEST_CASE("factorial_mod examples") {
    CHECK(factorial_mod(6, 7) == 6);
    CHECK(factorial_mod(24, 4) == 0);
    for (unsigned n = 0; n < 20; ++n) CHECK(factorial_mod(n, 1) == 0);
    CHECK_THROWS_AS(factorial_mod(5, 0), DomainError);
    // residue-only path for an argument far beyond the factorial budget
    CHECK(factorial_mod(Natural("1000000000000"), 999'983) == 0);
}

TEST_CASE("factorial_mod agrees with the materialized factorial") {
    for (unsigned n = 0; n <= 60; ++n) {
        const Natural full = oracle::naive_factorial(n);
        for (unsigned m = 1; m <= 130; ++m) {
            REQUIRE(factorial_mod(n, m) == full % m);
        }
    }
    const Natural big_m("340282366920938463463374607431768211507");  // > 2^64
    CHECK(factorial_mod(30, big_m) == oracle::naive_factorial(30) % big_m);
}
