#pragma once

/**
 * @file numtheory.hpp
 * @brief Arbitrary-precision number theory used by every membership and
 * certificate computation: primality, modular powers, multiplicative order
 * and factorials.
 *
 * Primality has two regimes. Values below 2^64 are decided exactly by
 * Miller-Rabin over the first twelve prime bases, which has no strong
 * pseudoprimes below 3.3 * 10^24. Larger values run Baillie-PSW (strong base-2
 * test plus strong Lucas test with Selfridge parameters) followed by a
 * configurable number of Miller-Rabin rounds with seeded random bases; the
 * verdict is then reported as probable. A composite is never reported prime
 * by a deterministic verdict, and a prime is never reported composite.
 */

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace primestar {

/// Non-negative arbitrary-precision integer.
using Natural = mpz_class;

enum class Certainty { deterministic, probable };

struct PrimalityVerdict {
    bool is_prime = false;
    Certainty certainty = Certainty::deterministic;
    /// Random Miller-Rabin rounds run on top of Baillie-PSW; 0 when deterministic.
    unsigned rounds = 0;
};

struct PrimalityOptions {
    unsigned extra_rounds = 16;
    std::uint64_t seed = 0x5eed'0f'b1u;
};

inline Natural to_natural(std::uint64_t v) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 platform required");
    return Natural(static_cast<unsigned long>(v));
}

/// Value as a machine word, or nullopt when negative or wider than 64 bits.
std::optional<std::uint64_t> to_u64(const Natural& n);

inline constexpr std::uint64_t kDefaultOrderBound = 100'000'000;
inline constexpr std::uint64_t kDefaultFactorialBound = 100'000;

PrimalityVerdict is_prime(const Natural& n, const PrimalityOptions& options = {});

/// Exact primality for machine words.
bool is_prime_u64(std::uint64_t n);

/// base^exp mod m, result in [0, m). Throws DomainError when m = 0 or any
/// argument is negative.
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& m);

/// Smallest d >= 1 with b^d = 1 (mod m), by incremental multiplication.
/// Throws DomainError when m < 2 or gcd(b, m) != 1, BudgetError when m exceeds
/// `bound`.
Natural multiplicative_order(const Natural& b, const Natural& m,
                             std::uint64_t bound = kDefaultOrderBound);

/// n! materialized. Throws BudgetError when n > bound.
Natural factorial(const Natural& n, std::uint64_t bound = kDefaultFactorialBound);

/// n! mod m computed in the residue ring; works for any n.
Natural factorial_mod(const Natural& n, const Natural& m);

namespace detail {

bool strong_probable_prime(const Natural& n, const Natural& base);

/// Strong Lucas probable-prime test, Selfridge method A parameters.
bool strong_lucas_probable_prime(const Natural& n);

bool baillie_psw(const Natural& n);

}  // namespace detail

}  // namespace primestar
