#include "primestar/numtheory.hpp"

#include <array>
#include <string>

#include "primestar/errors.hpp"

namespace primestar {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::array<std::uint64_t, 12> kDeterministicBases = {2, 3, 5, 7, 11, 13,
                                                               17, 19, 23, 29, 31, 37};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool fits_u64(const Natural& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t word(const Natural& n) { return mpz_get_ui(n.get_mpz_t()); }

Natural from_u64(std::uint64_t v) { return to_natural(v); }

void require_non_negative(const Natural& n, const char* what) {
    if (sgn(n) < 0) throw DomainError(std::string(what) + " must be non-negative");
}

// (x / 2) mod n for odd n
void halve_mod(Natural& x, const Natural& n) {
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    x %= n;
}

}  // namespace

std::optional<std::uint64_t> to_u64(const Natural& n) {
    if (!fits_u64(n)) return std::nullopt;
    return word(n);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kDeterministicBases) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;

    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kDeterministicBases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

bool strong_probable_prime(const Natural& n, const Natural& base) {
    Natural d = n - 1;
    mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    const Natural n_minus_1 = n - 1;
    Natural x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

bool strong_lucas_probable_prime(const Natural& n) {
    if (n < 2) return false;
    if (n == 2) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;

    // Selfridge: first D in 5, -7, 9, -11, ... with Jacobi(D/n) = -1.
    long D = 5;
    for (;;) {
        Natural d_big = D;
        int j = mpz_jacobi(d_big.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0) {
            Natural abs_d = D < 0 ? Natural(-D) : Natural(D);
            if (abs_d != n) return false;
        }
        D = D > 0 ? -(D + 2) : -D + 2;
    }
    const long P = 1;
    const long Q = (1 - D) / 4;

    Natural delta = n + 1;
    mp_bitcnt_t s = mpz_scan1(delta.get_mpz_t(), 0);
    Natural d;
    mpz_fdiv_q_2exp(d.get_mpz_t(), delta.get_mpz_t(), s);

    Natural q_mod = Natural(Q) % n;
    if (q_mod < 0) q_mod += n;
    Natural d_mod = Natural(D) % n;
    if (d_mod < 0) d_mod += n;

    // U_1 = 1, V_1 = P, Q^1 = Q
    Natural U = 1;
    Natural V = P;
    Natural Qk = q_mod;
    const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (std::size_t i = bits - 1; i-- > 0;) {
        U = U * V % n;
        V = (V * V - 2 * Qk) % n;
        if (V < 0) V += n;
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            Natural next_u = P * U + V;
            Natural next_v = d_mod * U + P * V;
            halve_mod(next_u, n);
            halve_mod(next_v, n);
            U = std::move(next_u);
            V = std::move(next_v);
            Qk = Qk * q_mod % n;
        }
    }

    if (U == 0 || V == 0) return true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
        V = (V * V - 2 * Qk) % n;
        if (V < 0) V += n;
        if (V == 0) return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

bool baillie_psw(const Natural& n) {
    if (n < 2) return false;
    static constexpr std::array<unsigned, 25> kSmall = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                        29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                        67, 71, 73, 79, 83, 89, 97};
    for (unsigned p : kSmall) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
    }
    return strong_probable_prime(n, 2) && strong_lucas_probable_prime(n);
}

}  // namespace detail

PrimalityVerdict is_prime(const Natural& n, const PrimalityOptions& options) {
    if (sgn(n) < 0) return {false, Certainty::deterministic, 0};
    if (fits_u64(n)) return {is_prime_u64(word(n)), Certainty::deterministic, 0};

    if (!detail::baillie_psw(n)) return {false, Certainty::deterministic, 0};

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(from_u64(options.seed));
    const Natural span = n - 3;
    for (unsigned round = 0; round < options.extra_rounds; ++round) {
        Natural base = rng.get_z_range(span) + 2;
        // A failed strong test proves compositeness outright.
        if (!detail::strong_probable_prime(n, base)) return {false, Certainty::deterministic, 0};
    }
    return {true, Certainty::probable, options.extra_rounds};
}

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& m) {
    require_non_negative(base, "base");
    require_non_negative(exp, "exponent");
    if (sgn(m) <= 0) throw DomainError("modulus must be at least 1");
    Natural result;
    mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return result;
}

Natural multiplicative_order(const Natural& b, const Natural& m, std::uint64_t bound) {
    require_non_negative(b, "base");
    if (m < 2) throw DomainError("multiplicative order needs modulus >= 2");
    Natural g;
    mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw DomainError("base and modulus are not coprime");
    if (!fits_u64(m) || word(m) > bound) {
        throw BudgetError("modulus " + m.get_str() + " exceeds order-search bound " +
                          std::to_string(bound));
    }

    const std::uint64_t mod = word(m);
    const std::uint64_t step = word(Natural(b % m));
    std::uint64_t x = step;
    std::uint64_t d = 1;
    while (x != 1) {
        x = mul_mod(x, step, mod);
        ++d;
    }
    return from_u64(d);
}

Natural factorial(const Natural& n, std::uint64_t bound) {
    require_non_negative(n, "factorial argument");
    if (!fits_u64(n) || word(n) > bound) {
        throw BudgetError(n.get_str() + "! exceeds factorial budget " + std::to_string(bound));
    }
    Natural result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(word(n)));
    return result;
}

Natural factorial_mod(const Natural& n, const Natural& m) {
    require_non_negative(n, "factorial argument");
    if (sgn(m) <= 0) throw DomainError("modulus must be at least 1");
    // m <= n means m itself is one of the factors.
    if (m <= n) return 0;

    if (fits_u64(m)) {
        const std::uint64_t mod = word(m);
        const std::uint64_t top = word(n);
        std::uint64_t acc = 1 % mod;
        for (std::uint64_t i = 2; i <= top && acc != 0; ++i) acc = mul_mod(acc, i, mod);
        return from_u64(acc);
    }
    Natural acc = 1;
    for (Natural i = 2; i <= n && acc != 0; ++i) acc = acc * i % m;
    return acc;
}

}  // namespace primestar
