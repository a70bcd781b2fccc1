#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primestar/baseb.hpp"
#include "primestar/numtheory.hpp"

namespace primestar {

/// P_b: canonical base-b numerals of primes. PbStar: its Kleene star.
enum class Language { Pb, PbStar };

std::string_view to_string(Language lang);
/// Accepts "pb"/"Pb"/"p" and "pbstar"/"PbStar"/"pstar". Throws ValidationError.
Language parse_language(std::string_view text);

enum class MembershipReason { member, empty, invalid_digit, non_canonical, composite };

std::string_view to_string(MembershipReason reason);

struct PbVerdict {
    bool member = false;
    MembershipReason reason = MembershipReason::composite;
};

/// Never throws on malformed text; the reason tells why it was rejected.
PbVerdict in_pb(std::string_view text, unsigned b);

struct StarDecomposition {
    unsigned base = 10;
    std::vector<CanonicalNumeral> factors;

    std::string concatenated() const;
};

struct StarVerdict {
    bool member = false;
    /// Present exactly when member is true.
    std::optional<StarDecomposition> decomposition;
};

/// Decides membership in P_b^* by a left-to-right dynamic program over
/// positions. The returned decomposition has the fewest factors; ties prefer
/// the shorter first factor, then recursively. Throws ValidationError on a
/// character that is not a base-b digit.
StarVerdict in_pb_star(std::string_view text, unsigned b);
StarVerdict in_pb_star(const DigitString& digits, unsigned b);

/// Single membership query against either language.
bool language_contains(Language lang, const DigitString& digits, unsigned b);

/// Incremental membership for a string grown and shrunk one digit at a time,
/// as in a depth-first walk of all strings. Each push costs one multiply-add
/// and one primality test per live factor start.
class MembershipTracker {
public:
    explicit MembershipTracker(unsigned b);

    void push(Digit d);
    void pop();

    std::size_t size() const noexcept { return digits_.size(); }
    const DigitString& digits() const noexcept { return digits_; }
    bool in_pb() const noexcept { return levels_.back().pb; }
    bool in_pb_star() const noexcept { return levels_.back().star; }
    bool contains(Language lang) const noexcept {
        return lang == Language::Pb ? in_pb() : in_pb_star();
    }

private:
    struct Level {
        // (start position, value of digits[start..size)) for every reachable
        // start whose digit is nonzero
        std::vector<std::pair<std::size_t, Natural>> open;
        bool star = false;
        bool pb = false;
    };

    unsigned base_;
    DigitString digits_;
    std::vector<Level> levels_;
};

struct FbResult {
    unsigned base = 2;
    std::uint64_t exponent = 1;
    Natural k_star;
    Natural prime_found;
    std::uint64_t composite_prefix_checked = 0;
    Certainty certainty = Certainty::deterministic;
};

/// Smallest k >= 1 with k * b^n + 1 prime. Throws BudgetError when no such
/// k <= k_budget exists; that says nothing about larger k.
FbResult compute_fb(unsigned b, std::uint64_t n, std::uint64_t k_budget);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 22;

struct NerodeBound {
    std::size_t classes = 0;
    /// Prefix length l at which the count was attained: prefixes of length
    /// <= l were separated by extensions of length <= L - l.
    unsigned prefix_length = 0;
};

/// Lower bound on the state count of any complete DFA that agrees with `lang`
/// on every string of length <= max_len. Throws BudgetError when the number
/// of strings of length <= max_len exceeds `enumeration_budget`.
NerodeBound nerode_lower_bound(unsigned b, Language lang, unsigned max_len,
                               std::uint64_t enumeration_budget = kDefaultEnumerationBudget);

}  // namespace primestar
