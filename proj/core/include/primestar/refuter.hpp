#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primestar/baseb.hpp"
#include "primestar/primelang.hpp"
#include "primestar/witness.hpp"

namespace primestar {

/// Complete DFA over the digit alphabet {0, ..., base-1}.
struct DfaSpec {
    unsigned base = 2;
    std::size_t state_count = 0;
    std::size_t start = 0;
    std::vector<bool> accepting;            // size state_count
    std::vector<std::size_t> transitions;   // state * base + digit -> target

    std::size_t next(std::size_t state, Digit d) const { return transitions[state * base + d]; }

    /// Throws ValidationError when any structural invariant fails.
    void validate() const;
};

/**
 * Line-oriented DFA text:
 *
 *     base <b>
 *     states <m>
 *     start <i>
 *     accept <i1> <i2> ...
 *     trans <state> <digit> <target>      (exactly m * b lines)
 *
 * Lines starting with '#' and blank lines are ignored. Errors carry the
 * 1-based line number, or 0 for whole-file problems such as a missing
 * transition.
 */
DfaSpec parse_dfa(std::string_view text);
std::string dfa_to_text(const DfaSpec& dfa);

/// Throws ValidationError on a character that is not a digit of dfa.base.
bool dfa_accepts(const DfaSpec& dfa, std::string_view word);
bool dfa_accepts(const DfaSpec& dfa, const DigitString& word);

struct Counterexample {
    DigitString digits;
    bool dfa_verdict = false;
    bool oracle_verdict = false;

    std::size_t length() const noexcept { return digits.size(); }
    std::string word() const { return render_digits(digits); }
};

struct CounterexampleSearch {
    Language language = Language::PbStar;
    unsigned max_len = 0;
    std::optional<Counterexample> counterexample;
    /// Without a counterexample, every string of length <= explored_length was
    /// compared; with one, it is the counterexample length.
    unsigned explored_length = 0;
    std::uint64_t strings_checked = 0;
};

/// First disagreement between `dfa` and `lang` in length-then-lexicographic
/// order among strings of length <= max_len. An empty result means only that
/// none exists within the bound.
CounterexampleSearch find_counterexample(const DfaSpec& dfa, Language lang, unsigned max_len);

struct RefutationRow {
    std::string x;
    std::string y;
    std::string z;
    bool pumped_down_in_star = true;  // xz
    bool pumped_up_in_star = false;   // xyyz, recorded only
};

/// Every decomposition s = xyz with |xy| <= p and |y| >= 1 of a prime numeral
/// s whose pumped-down string xz falls outside P_b^*.
struct PumpingRefutation {
    unsigned base = 2;
    unsigned p = 1;
    Natural pumping_bound;  // b^p
    std::uint64_t N = 0;
    Natural fbN;
    CanonicalNumeral s;
    bool s_in_star = false;
    std::optional<StarDecomposition> s_decomposition;
    std::vector<ScanEntry> scan_log;
    std::vector<RefutationRow> rows;

    /// s accepted and every row rejected.
    bool complete() const;
};

/// Throws ScanExhausted (a BudgetError) when no exponent with f_b(N) > b^p
/// is found within n_limit / k_budget.
PumpingRefutation pumping_refutation(unsigned b, unsigned p, std::uint64_t n_limit,
                                     std::uint64_t k_budget);

/// Turns a refutation into a concrete counterexample for `dfa`: s itself when
/// the DFA rejects it, otherwise a pumped-down xz the DFA accepts. The latter
/// always exists when refutation.p >= dfa.state_count.
std::optional<Counterexample> pumping_counterexample(const DfaSpec& dfa,
                                                     const PumpingRefutation& refutation);

std::string refutation_to_json(const PumpingRefutation& refutation);
std::string search_to_json(const CounterexampleSearch& search);

}  // namespace primestar
