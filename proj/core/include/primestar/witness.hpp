#pragma once

/**
 * @file witness.hpp
 * @brief Compositeness certificates for k * b^N + 1 with N = (bK)! + 1, and the
 * witness families of numerals that no concatenation of primes can spell.
 *
 * For 1 <= k <= K the modulus m = bk + 1 is coprime to b, so the order d of b
 * modulo m is at most bk and divides (bK)!. Hence b^N = b^(N mod d) (mod m)
 * and m | k * b^N + 1 can be checked with residues only; N itself is never
 * materialized once bK is large.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primestar/baseb.hpp"
#include "primestar/errors.hpp"
#include "primestar/numtheory.hpp"

namespace primestar {

/// Largest bK for which (bK)! + 1 is materialized: 20! + 1 < 2^64.
inline constexpr std::uint64_t kDefaultExponentMaterializeBound = 20;

/// N = (bK)! + 1, kept symbolic when too large to write down.
struct FactorialExponent {
    Natural bK;
    std::optional<Natural> value;

    bool symbolic() const noexcept { return !value.has_value(); }
    /// Decimal value when materialized, otherwise "(bK)!+1" with bK filled in.
    std::string form() const;
};

FactorialExponent proposition_N(unsigned b, const Natural& K,
                                std::uint64_t materialize_bound = kDefaultExponentMaterializeBound);

inline constexpr std::string_view kFactorialForm = "(bK)!+1";

/// Claim that m = bk + 1 divides k * b^N + 1. Every field is re-derived by
/// verify_certificate; none is trusted.
struct CompositenessCertificate {
    Natural b;
    Natural K;
    /// Literal exponent; when empty, N = (bK)! + 1.
    std::optional<Natural> n_literal;
    Natural bK;
    Natural k;
    Natural m;
    Natural d;
    Natural r;

    std::string n_form() const;
    friend bool operator==(const CompositenessCertificate&,
                           const CompositenessCertificate&) = default;
};

/// Throws DomainError unless 1 <= k <= K, BudgetError when m exceeds the
/// order-search bound.
CompositenessCertificate divisor_certificate(unsigned b, const Natural& K, const Natural& k,
                                             std::uint64_t order_bound = kDefaultOrderBound);

struct CertificateCheck {
    bool valid = false;
    /// Name of the first violated invariant: range, coprimality, modulus,
    /// order, divisibility, residue or nontriviality. Empty when valid.
    std::string violated;
    std::string detail;

    explicit operator bool() const noexcept { return valid; }
};

CertificateCheck verify_certificate(const CompositenessCertificate& cert,
                                    std::uint64_t order_bound = kDefaultOrderBound);

/// Full-width test of m | k * b^N + 1. Empty when N is symbolic, when
/// k * b^N + 1 would need more than `max_bits` bits, or when fields are
/// out of range.
std::optional<bool> direct_division_check(const CompositenessCertificate& cert,
                                          std::uint64_t max_bits = std::uint64_t{1} << 22);

/// One JSON object, keys in the order b, K, N_form, bK, k, m, d, r, every
/// number a decimal string.
std::string certificate_to_json(const CompositenessCertificate& cert);

/// Throws ValidationError on malformed JSON, missing keys or non-decimal values.
CompositenessCertificate certificate_from_json(std::string_view text);

struct ScanEntry {
    std::uint64_t n;
    Natural fb;
};

struct HardExponentResult {
    unsigned base = 2;
    Natural K;
    std::uint64_t N = 0;
    Natural fb_at_N;
    std::vector<ScanEntry> scan_log;
};

/// Budget exhaustion during the hard-exponent scan, carrying what was scanned.
class ScanExhausted : public BudgetError {
public:
    ScanExhausted(const std::string& what, std::vector<ScanEntry> log)
        : BudgetError(what), log_(std::move(log)) {}

    const std::vector<ScanEntry>& scan_log() const noexcept { return log_; }

private:
    std::vector<ScanEntry> log_;
};

/// First n in 1..n_limit with f_b(n) > K. Throws ScanExhausted when n_limit
/// runs out or some f_b(n) exceeds k_budget.
HardExponentResult smallest_hard_N(unsigned b, const Natural& K, std::uint64_t n_limit,
                                   std::uint64_t k_budget);

/// The numerals of k * b^n + 1 for 1 <= k < f_b(n); none of them lies in P_b^*.
std::vector<CanonicalNumeral> lemma_witnesses(unsigned b, std::uint64_t n,
                                              std::uint64_t k_budget);

}  // namespace primestar
