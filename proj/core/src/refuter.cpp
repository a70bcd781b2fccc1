#include "primestar/refuter.hpp"

#include <charconv>
#include <sstream>

#include "primestar/errors.hpp"

namespace primestar {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t begin = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > begin) words.push_back(line.substr(begin, i - begin));
    }
    return words;
}

std::uint64_t parse_index(std::string_view word, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
        throw ValidationError("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                                  std::string(word) + "'",
                              line);
    }
    return value;
}

[[noreturn]] void syntax(std::size_t line, const std::string& message) {
    throw ValidationError("line " + std::to_string(line) + ": " + message, line);
}

}  // namespace

void DfaSpec::validate() const {
    if (base < 2) throw ValidationError("base must be at least 2", 0);
    if (state_count == 0) throw ValidationError("a DFA needs at least one state", 0);
    if (start >= state_count) throw ValidationError("start state out of range", 0);
    if (accepting.size() != state_count) throw ValidationError("accepting set size mismatch", 0);
    if (transitions.size() != state_count * base) {
        throw ValidationError("transition table is incomplete", 0);
    }
    for (std::size_t target : transitions) {
        if (target >= state_count) throw ValidationError("transition target out of range", 0);
    }
}

DfaSpec parse_dfa(std::string_view text) {
    constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
    DfaSpec dfa;
    enum class Expect { base, states, start, accept, trans } expect = Expect::base;
    std::size_t line_no = 0;
    std::size_t trans_seen = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto words = split_words(line);
        if (words.empty() || words.front().front() == '#') continue;
        const std::string_view key = words.front();

        auto arity = [&](std::size_t n) {
            if (words.size() != n + 1) {
                syntax(line_no, "'" + std::string(key) + "' takes " + std::to_string(n) +
                                    " argument(s)");
            }
        };

        switch (expect) {
            case Expect::base: {
                if (key != "base") syntax(line_no, "expected 'base <b>'");
                arity(1);
                const auto b = parse_index(words[1], line_no);
                if (b < 2 || b > kMaxTextBase) syntax(line_no, "base must lie in [2, 36]");
                dfa.base = static_cast<unsigned>(b);
                expect = Expect::states;
                break;
            }
            case Expect::states: {
                if (key != "states") syntax(line_no, "expected 'states <m>'");
                arity(1);
                dfa.state_count = parse_index(words[1], line_no);
                if (dfa.state_count == 0) syntax(line_no, "a DFA needs at least one state");
                if (dfa.state_count > (std::size_t{1} << 24)) syntax(line_no, "too many states");
                dfa.accepting.assign(dfa.state_count, false);
                dfa.transitions.assign(dfa.state_count * dfa.base, kMissing);
                expect = Expect::start;
                break;
            }
            case Expect::start: {
                if (key != "start") syntax(line_no, "expected 'start <i>'");
                arity(1);
                dfa.start = parse_index(words[1], line_no);
                if (dfa.start >= dfa.state_count) syntax(line_no, "start state out of range");
                expect = Expect::accept;
                break;
            }
            case Expect::accept: {
                if (key != "accept") syntax(line_no, "expected 'accept <i1> <i2> ...'");
                for (std::size_t i = 1; i < words.size(); ++i) {
                    const auto s = parse_index(words[i], line_no);
                    if (s >= dfa.state_count) syntax(line_no, "accepting state out of range");
                    dfa.accepting[s] = true;
                }
                expect = Expect::trans;
                break;
            }
            case Expect::trans: {
                if (key != "trans") syntax(line_no, "expected 'trans <state> <digit> <target>'");
                arity(3);
                const auto from = parse_index(words[1], line_no);
                const auto digit = parse_index(words[2], line_no);
                const auto target = parse_index(words[3], line_no);
                if (from >= dfa.state_count) syntax(line_no, "source state out of range");
                if (digit >= dfa.base) syntax(line_no, "digit out of range");
                if (target >= dfa.state_count) syntax(line_no, "target state out of range");
                std::size_t& slot = dfa.transitions[from * dfa.base + digit];
                if (slot != kMissing) syntax(line_no, "duplicate transition");
                slot = target;
                ++trans_seen;
                break;
            }
        }
    }

    if (expect != Expect::trans) throw ValidationError("unexpected end of DFA text", line_no);
    if (trans_seen != dfa.state_count * dfa.base) {
        for (std::size_t i = 0; i < dfa.transitions.size(); ++i) {
            if (dfa.transitions[i] == kMissing) {
                throw ValidationError("transition table is incomplete: no transition for state " +
                                          std::to_string(i / dfa.base) + " on digit " +
                                          std::to_string(i % dfa.base),
                                      0);
            }
        }
    }
    dfa.validate();
    return dfa;
}

std::string dfa_to_text(const DfaSpec& dfa) {
    std::ostringstream out;
    out << "base " << dfa.base << "\nstates " << dfa.state_count << "\nstart " << dfa.start
        << "\naccept";
    for (std::size_t s = 0; s < dfa.state_count; ++s) {
        if (dfa.accepting[s]) out << ' ' << s;
    }
    out << '\n';
    for (std::size_t s = 0; s < dfa.state_count; ++s) {
        for (unsigned d = 0; d < dfa.base; ++d) {
            out << "trans " << s << ' ' << d << ' ' << dfa.next(s, d) << '\n';
        }
    }
    return out.str();
}

bool dfa_accepts(const DfaSpec& dfa, std::string_view word) {
    return dfa_accepts(dfa, parse_digits(word, dfa.base));
}

bool dfa_accepts(const DfaSpec& dfa, const DigitString& word) {
    std::size_t state = dfa.start;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] >= dfa.base) {
            throw ValidationError("digit at position " + std::to_string(i) + " is not below base " +
                                      std::to_string(dfa.base),
                                  i);
        }
        state = dfa.next(state, word[i]);
    }
    return dfa.accepting[state];
}

CounterexampleSearch find_counterexample(const DfaSpec& dfa, Language lang, unsigned max_len) {
    dfa.validate();
    CounterexampleSearch search;
    search.language = lang;
    search.max_len = max_len;

    // Depth-first over the digit trie. Preorder visits equal-length strings in
    // lexicographic order, so the first hit at a depth is the smallest there;
    // depths at or beyond the best hit are pruned.
    MembershipTracker oracle(dfa.base);
    std::vector<std::size_t> states{dfa.start};
    std::uint64_t checked = 0;

    auto visit = [&](auto&& self) -> void {
        ++checked;
        const bool dfa_verdict = dfa.accepting[states.back()];
        const bool oracle_verdict = oracle.contains(lang);
        if (dfa_verdict != oracle_verdict) {
            search.counterexample = Counterexample{oracle.digits(), dfa_verdict, oracle_verdict};
            return;
        }
        for (Digit d = 0; d < dfa.base; ++d) {
            const std::size_t child_len = oracle.size() + 1;
            if (child_len > max_len) return;
            if (search.counterexample && child_len >= search.counterexample->length()) return;
            oracle.push(d);
            states.push_back(dfa.next(states.back(), d));
            self(self);
            states.pop_back();
            oracle.pop();
        }
    };
    visit(visit);

    search.strings_checked = checked;
    if (search.counterexample) {
        search.explored_length = static_cast<unsigned>(search.counterexample->length());
    } else {
        search.explored_length = max_len;
    }
    return search;
}

bool PumpingRefutation::complete() const {
    if (!s_in_star) return false;
    for (const auto& row : rows) {
        if (row.pumped_down_in_star) return false;
    }
    return true;
}

PumpingRefutation pumping_refutation(unsigned b, unsigned p, std::uint64_t n_limit,
                                     std::uint64_t k_budget) {
    if (b < 2) throw DomainError("base must be at least 2");
    if (p < 1) throw DomainError("pumping length must be at least 1");

    Natural bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), b, p);
    HardExponentResult hard = smallest_hard_N(b, bound, n_limit, k_budget);

    CanonicalNumeral s = witness_numeral(b, hard.N, hard.fb_at_N);
    StarVerdict s_verdict = in_pb_star(s.digits(), b);

    const std::string text = s.str();
    std::vector<RefutationRow> rows;
    for (std::size_t xy = 1; xy <= p && xy <= text.size(); ++xy) {
        for (std::size_t x = 0; x < xy; ++x) {
            RefutationRow row;
            row.x = text.substr(0, x);
            row.y = text.substr(x, xy - x);
            row.z = text.substr(xy);
            row.pumped_down_in_star = in_pb_star(row.x + row.z, b).member;
            row.pumped_up_in_star = in_pb_star(row.x + row.y + row.y + row.z, b).member;
            rows.push_back(std::move(row));
        }
    }

    return PumpingRefutation{b,
                             p,
                             std::move(bound),
                             hard.N,
                             std::move(hard.fb_at_N),
                             std::move(s),
                             s_verdict.member,
                             std::move(s_verdict.decomposition),
                             std::move(hard.scan_log),
                             std::move(rows)};
}

std::optional<Counterexample> pumping_counterexample(const DfaSpec& dfa,
                                                     const PumpingRefutation& refutation) {
    if (dfa.base != refutation.base) throw DomainError("DFA and refutation bases differ");
    const DigitString s = refutation.s.digits();
    if (!dfa_accepts(dfa, s)) {
        if (refutation.s_in_star) return Counterexample{s, false, true};
        return std::nullopt;
    }
    for (const auto& row : refutation.rows) {
        const DigitString xz = parse_digits(row.x + row.z, dfa.base);
        if (!row.pumped_down_in_star && dfa_accepts(dfa, xz)) return Counterexample{xz, true, false};
    }
    return std::nullopt;
}

}  // namespace primestar
