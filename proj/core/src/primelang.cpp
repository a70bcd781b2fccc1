#include "primestar/primelang.hpp"

#include <limits>
#include <unordered_set>

#include "primestar/errors.hpp"

namespace primestar {

namespace {

void require_base(unsigned b) {
    if (b < 2) throw DomainError("base must be at least 2, got " + std::to_string(b));
}

bool prime(const Natural& v) { return is_prime(v).is_prime; }

}  // namespace

std::string_view to_string(Language lang) {
    return lang == Language::Pb ? "Pb" : "PbStar";
}

Language parse_language(std::string_view text) {
    if (text == "pb" || text == "Pb" || text == "p") return Language::Pb;
    if (text == "pbstar" || text == "PbStar" || text == "pstar" || text == "pb*")
        return Language::PbStar;
    throw ValidationError("unknown language '" + std::string(text) + "'", 0);
}

std::string_view to_string(MembershipReason reason) {
    switch (reason) {
        case MembershipReason::member: return "member";
        case MembershipReason::empty: return "empty";
        case MembershipReason::invalid_digit: return "invalid-digit";
        case MembershipReason::non_canonical: return "non-canonical";
        case MembershipReason::composite: return "composite";
    }
    return "unknown";
}

PbVerdict in_pb(std::string_view text, unsigned b) {
    require_base(b);
    if (text.empty()) return {false, MembershipReason::empty};
    for (char c : text) {
        if (!char_digit(c, b)) return {false, MembershipReason::invalid_digit};
    }
    if (text.size() > 1 && text.front() == '0') return {false, MembershipReason::non_canonical};
    if (!prime(from_base(text, b))) return {false, MembershipReason::composite};
    return {true, MembershipReason::member};
}

std::string StarDecomposition::concatenated() const {
    std::string out;
    for (const auto& f : factors) out += f.str();
    return out;
}

StarVerdict in_pb_star(std::string_view text, unsigned b) {
    return in_pb_star(parse_digits(text, b), b);
}

StarVerdict in_pb_star(const DigitString& digits, unsigned b) {
    require_base(b);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= b) {
            throw ValidationError("digit at position " + std::to_string(i) +
                                      " is not below base " + std::to_string(b),
                                  i);
        }
    }
    const std::size_t n = digits.size();
    if (n == 0) return {true, StarDecomposition{b, {}}};

    // Forward pass: reachability, with factor primality cached per (start, end).
    std::vector<char> reachable(n + 1, 0);
    std::vector<std::vector<char>> factor(n);
    reachable[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (!reachable[i] || digits[i] == 0) continue;
        factor[i].assign(n + 1, 0);
        Natural value = 0;
        for (std::size_t j = i + 1; j <= n; ++j) {
            value *= b;
            value += digits[j - 1];
            if (prime(value)) {
                factor[i][j] = 1;
                reachable[j] = 1;
            }
        }
    }
    if (!reachable[n]) return {false, std::nullopt};

    // Backward pass: fewest factors from each position to the end.
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> fewest(n + 1, kNone);
    fewest[n] = 0;
    for (std::size_t i = n; i-- > 0;) {
        if (factor[i].empty()) continue;
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (factor[i][j] && fewest[j] != kNone && fewest[j] + 1 < fewest[i]) {
                fewest[i] = fewest[j] + 1;
            }
        }
    }

    StarDecomposition decomposition{b, {}};
    std::size_t pos = 0;
    while (pos < n) {
        std::size_t next = pos + 1;
        while (!(factor[pos][next] && fewest[next] + 1 == fewest[pos])) ++next;
        decomposition.factors.emplace_back(
            DigitString(digits.begin() + static_cast<std::ptrdiff_t>(pos),
                        digits.begin() + static_cast<std::ptrdiff_t>(next)),
            b);
        pos = next;
    }
    return {true, std::move(decomposition)};
}

bool language_contains(Language lang, const DigitString& digits, unsigned b) {
    if (lang == Language::PbStar) return in_pb_star(digits, b).member;
    if (digits.empty() || (digits.size() > 1 && digits.front() == 0)) return false;
    for (Digit d : digits) {
        if (d >= b) return false;
    }
    return prime(digits_value(digits, b));
}

MembershipTracker::MembershipTracker(unsigned b) : base_(b) {
    require_base(b);
    levels_.push_back(Level{{}, true, false});
}

void MembershipTracker::push(Digit d) {
    if (d >= base_) throw DomainError("digit is not below base " + std::to_string(base_));
    const Level& top = levels_.back();
    const std::size_t position = digits_.size();

    Level next;
    next.open.reserve(top.open.size() + 1);
    for (const auto& [start, value] : top.open) {
        next.open.emplace_back(start, value * base_ + d);
    }
    if (top.star && d != 0) next.open.emplace_back(position, Natural(d));

    for (const auto& [start, value] : next.open) {
        if (prime(value)) {
            next.star = true;
            if (start == 0) next.pb = true;
        }
    }
    digits_.push_back(d);
    levels_.push_back(std::move(next));
}

void MembershipTracker::pop() {
    if (digits_.empty()) throw DomainError("pop on empty tracker");
    digits_.pop_back();
    levels_.pop_back();
}

FbResult compute_fb(unsigned b, std::uint64_t n, std::uint64_t k_budget) {
    require_base(b);
    if (n < 1) throw DomainError("exponent must be at least 1");
    if (k_budget < 1) throw DomainError("k budget must be at least 1");

    Natural power;
    mpz_ui_pow_ui(power.get_mpz_t(), b, n);
    Natural candidate = power + 1;
    for (std::uint64_t k = 1; k <= k_budget; ++k, candidate += power) {
        PrimalityVerdict verdict = is_prime(candidate);
        if (verdict.is_prime) {
            FbResult result;
            result.base = b;
            result.exponent = n;
            result.k_star = to_natural(k);
            result.prime_found = candidate;
            result.composite_prefix_checked = k - 1;
            result.certainty = verdict.certainty;
            return result;
        }
    }
    throw BudgetError("f_" + std::to_string(b) + "(" + std::to_string(n) + ") exceeds k budget " +
                          std::to_string(k_budget),
                      "k*" + std::to_string(b) + "^" + std::to_string(n) +
                          "+1 composite for k = 1.." + std::to_string(k_budget));
}

NerodeBound nerode_lower_bound(unsigned b, Language lang, unsigned max_len,
                               std::uint64_t enumeration_budget) {
    require_base(b);

    // offsets[len] = number of strings shorter than len; strings are indexed
    // by offsets[len] + positional value.
    std::vector<std::uint64_t> offsets(max_len + 2, 0);
    std::vector<std::uint64_t> powers(max_len + 1, 1);
    for (unsigned len = 0; len <= max_len; ++len) {
        if (len > 0) {
            if (powers[len - 1] > enumeration_budget / b) {
                throw BudgetError("enumerating base-" + std::to_string(b) + " strings up to length " +
                                  std::to_string(max_len) + " exceeds budget " +
                                  std::to_string(enumeration_budget));
            }
            powers[len] = powers[len - 1] * b;
        }
        offsets[len + 1] = offsets[len] + powers[len];
        if (offsets[len + 1] > enumeration_budget) {
            throw BudgetError("enumerating base-" + std::to_string(b) + " strings up to length " +
                              std::to_string(max_len) + " exceeds budget " +
                              std::to_string(enumeration_budget));
        }
    }

    std::vector<char> accepted(offsets[max_len + 1], 0);
    MembershipTracker tracker(b);
    std::uint64_t value = 0;
    auto visit = [&](auto&& self) -> void {
        const std::size_t len = tracker.size();
        accepted[offsets[len] + value] = tracker.contains(lang) ? 1 : 0;
        if (len == max_len) return;
        for (Digit d = 0; d < b; ++d) {
            tracker.push(d);
            value = value * b + d;
            self(self);
            value /= b;
            tracker.pop();
        }
    };
    visit(visit);

    NerodeBound best;
    for (unsigned prefix_len = 0; prefix_len <= max_len; ++prefix_len) {
        const unsigned ext_len = max_len - prefix_len;
        std::unordered_set<std::string> signatures;
        for (unsigned ulen = 0; ulen <= prefix_len; ++ulen) {
            for (std::uint64_t u = 0; u < powers[ulen]; ++u) {
                std::string signature;
                signature.reserve(offsets[ext_len + 1]);
                for (unsigned wlen = 0; wlen <= ext_len; ++wlen) {
                    const std::uint64_t base_index = offsets[ulen + wlen] + u * powers[wlen];
                    for (std::uint64_t w = 0; w < powers[wlen]; ++w) {
                        signature.push_back(accepted[base_index + w] ? '1' : '0');
                    }
                }
                signatures.insert(std::move(signature));
            }
        }
        if (signatures.size() > best.classes) {
            best.classes = signatures.size();
            best.prefix_length = prefix_len;
        }
    }
    return best;
}

}  // namespace primestar
