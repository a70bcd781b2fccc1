#include "primestar/witness.hpp"

#include "primestar/primelang.hpp"

namespace primestar {

namespace {

void require_base(unsigned b) {
    if (b < 2) throw DomainError("base must be at least 2, got " + std::to_string(b));
}

CertificateCheck fail(std::string invariant, std::string detail) {
    return {false, std::move(invariant), std::move(detail)};
}

Natural exponent_residue(const CompositenessCertificate& cert, const Natural& d) {
    if (cert.n_literal) return *cert.n_literal % d;
    return (factorial_mod(cert.bK, d) + 1) % d;
}

std::optional<Natural> materialized_exponent(const CompositenessCertificate& cert) {
    if (cert.n_literal) return cert.n_literal;
    if (cert.bK <= kDefaultExponentMaterializeBound) return factorial(cert.bK) + 1;
    return std::nullopt;
}

}  // namespace

std::string FactorialExponent::form() const {
    if (value) return value->get_str();
    return "(" + bK.get_str() + ")!+1";
}

FactorialExponent proposition_N(unsigned b, const Natural& K, std::uint64_t materialize_bound) {
    require_base(b);
    if (K < 1) throw DomainError("K must be at least 1");
    FactorialExponent out;
    out.bK = K * b;
    if (out.bK <= to_natural(materialize_bound)) out.value = factorial(out.bK) + 1;
    return out;
}

std::string CompositenessCertificate::n_form() const {
    return n_literal ? n_literal->get_str() : std::string(kFactorialForm);
}

CompositenessCertificate divisor_certificate(unsigned b, const Natural& K, const Natural& k,
                                             std::uint64_t order_bound) {
    require_base(b);
    if (K < 1) throw DomainError("K must be at least 1");
    if (k < 1 || k > K) throw DomainError("k must lie in [1, K]");

    CompositenessCertificate cert;
    cert.b = b;
    cert.K = K;
    cert.bK = K * b;
    cert.k = k;
    cert.m = k * b + 1;
    cert.d = multiplicative_order(cert.b, cert.m, order_bound);
    cert.r = exponent_residue(cert, cert.d);
    return cert;
}

CertificateCheck verify_certificate(const CompositenessCertificate& cert,
                                    std::uint64_t order_bound) {
    if (cert.b < 2) return fail("range", "base below 2");
    if (cert.K < 1) return fail("range", "K below 1");
    if (cert.k < 1 || cert.k > cert.K) return fail("range", "k outside [1, K]");
    if (!cert.n_literal && cert.bK != cert.b * cert.K) return fail("range", "bK != b * K");
    if (cert.m < 2) return fail("modulus", "modulus below 2");
    if (sgn(cert.r) < 0 || sgn(cert.d) <= 0) return fail("order", "order and residue must be positive");

    Natural g;
    mpz_gcd(g.get_mpz_t(), cert.b.get_mpz_t(), cert.m.get_mpz_t());
    if (g != 1) return fail("coprimality", "gcd(b, m) = " + g.get_str());

    if (cert.m != cert.b * cert.k + 1) return fail("modulus", "m != b * k + 1");

    Natural order;
    try {
        order = multiplicative_order(cert.b, cert.m, order_bound);
    } catch (const BudgetError& e) {
        return fail("order", e.what());
    }
    if (cert.d != order) {
        return fail("order", "stored order " + cert.d.get_str() + ", recomputed " + order.get_str());
    }
    if (order > cert.b * cert.k || mod_pow(cert.b, order, cert.m) != 1) {
        return fail("order", "order does not satisfy b^d = 1 with d <= bk");
    }

    if ((cert.k * mod_pow(cert.b, cert.r, cert.m) + 1) % cert.m != 0) {
        return fail("divisibility", "k * b^r + 1 is not 0 mod m for r = " + cert.r.get_str());
    }
    const Natural residue = exponent_residue(cert, order);
    if (cert.r != residue) {
        return fail("residue", "stored residue " + cert.r.get_str() + ", recomputed " +
                                   residue.get_str());
    }

    if (cert.m < 3) return fail("nontriviality", "modulus below 3");
    if (cert.n_literal && *cert.n_literal < 2) return fail("nontriviality", "N below 2");
    return {true, {}, {}};
}

std::optional<bool> direct_division_check(const CompositenessCertificate& cert,
                                          std::uint64_t max_bits) {
    if (cert.b < 2 || cert.k < 1 || cert.m < 1) return std::nullopt;
    const auto exponent = materialized_exponent(cert);
    if (!exponent) return std::nullopt;
    const auto n = to_u64(*exponent);
    if (!n) return std::nullopt;

    const std::uint64_t base_bits = mpz_sizeinbase(cert.b.get_mpz_t(), 2);
    const std::uint64_t k_bits = mpz_sizeinbase(cert.k.get_mpz_t(), 2);
    if (*n > max_bits / base_bits || *n * base_bits + k_bits > max_bits) return std::nullopt;

    Natural power;
    mpz_pow_ui(power.get_mpz_t(), cert.b.get_mpz_t(), static_cast<unsigned long>(*n));
    const Natural value = cert.k * power + 1;
    return mpz_divisible_p(value.get_mpz_t(), cert.m.get_mpz_t()) != 0;
}

HardExponentResult smallest_hard_N(unsigned b, const Natural& K, std::uint64_t n_limit,
                                   std::uint64_t k_budget) {
    require_base(b);
    if (K < 1) throw DomainError("K must be at least 1");

    HardExponentResult result;
    result.base = b;
    result.K = K;
    for (std::uint64_t n = 1; n <= n_limit; ++n) {
        Natural fb;
        try {
            fb = compute_fb(b, n, k_budget).k_star;
        } catch (const BudgetError& e) {
            throw ScanExhausted(std::string(e.what()) + " while scanning n = " + std::to_string(n),
                                std::move(result.scan_log));
        }
        result.scan_log.push_back({n, fb});
        if (fb > K) {
            result.N = n;
            result.fb_at_N = fb;
            return result;
        }
    }
    throw ScanExhausted("no n <= " + std::to_string(n_limit) + " has f_" + std::to_string(b) +
                            "(n) > " + K.get_str(),
                        std::move(result.scan_log));
}

std::vector<CanonicalNumeral> lemma_witnesses(unsigned b, std::uint64_t n,
                                              std::uint64_t k_budget) {
    const FbResult fb = compute_fb(b, n, k_budget);
    std::vector<CanonicalNumeral> out;
    for (Natural k = 1; k < fb.k_star; ++k) out.push_back(witness_numeral(b, n, k));
    return out;
}

}  // namespace primestar
