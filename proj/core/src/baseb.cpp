#include "primestar/baseb.hpp"

#include <algorithm>

#include "primestar/errors.hpp"

namespace primestar {

namespace {

void require_base(unsigned b) {
    if (b < 2) throw DomainError("base must be at least 2, got " + std::to_string(b));
}

}  // namespace

char digit_char(Digit d) {
    if (d < 10) return static_cast<char>('0' + d);
    if (d < kMaxTextBase) return static_cast<char>('a' + (d - 10));
    throw DomainError("digit " + std::to_string(d) + " has no text form");
}

std::optional<Digit> char_digit(char c, unsigned b) {
    Digit d;
    if (c >= '0' && c <= '9') {
        d = static_cast<Digit>(c - '0');
    } else if (c >= 'a' && c <= 'z') {
        d = static_cast<Digit>(c - 'a' + 10);
    } else {
        return std::nullopt;
    }
    if (d >= b) return std::nullopt;
    return d;
}

DigitString parse_digits(std::string_view text, unsigned b) {
    require_base(b);
    DigitString out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto d = char_digit(text[i], b);
        if (!d) {
            throw ValidationError("invalid base-" + std::to_string(b) + " digit '" +
                                      std::string(1, text[i]) + "' at position " +
                                      std::to_string(i),
                                  i);
        }
        out.push_back(*d);
    }
    return out;
}

std::string render_digits(const DigitString& digits) {
    std::string out;
    out.reserve(digits.size());
    for (Digit d : digits) out.push_back(digit_char(d));
    return out;
}

CanonicalNumeral::CanonicalNumeral(DigitString digits, unsigned base)
    : digits_(std::move(digits)), base_(base) {
    require_base(base_);
    if (digits_.empty()) throw ValidationError("numeral is empty", 0);
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] >= base_) {
            throw ValidationError("digit " + std::to_string(digits_[i]) + " at position " +
                                      std::to_string(i) + " is not below base " +
                                      std::to_string(base_),
                                  i);
        }
    }
    if (digits_.size() > 1 && digits_.front() == 0) {
        throw ValidationError("leading zero at position 0", 0);
    }
}

Natural CanonicalNumeral::value() const { return digits_value(digits_, base_); }

std::string CanonicalNumeral::str() const { return render_digits(digits_); }

CanonicalNumeral to_base(const Natural& n, unsigned b) {
    require_base(b);
    if (sgn(n) < 0) throw DomainError("negative values have no numeral");
    if (n == 0) return CanonicalNumeral({0}, b);

    DigitString digits;
    Natural rest = n;
    while (rest != 0) {
        unsigned long r = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), b);
        digits.push_back(static_cast<Digit>(r));
    }
    std::reverse(digits.begin(), digits.end());
    return CanonicalNumeral(std::move(digits), b);
}

Natural from_base(std::string_view text, unsigned b) {
    require_base(b);
    if (text.empty()) throw ValidationError("numeral is empty", 0);
    DigitString digits = parse_digits(text, b);
    if (digits.size() > 1 && digits.front() == 0) {
        throw ValidationError("leading zero at position 0", 0);
    }
    return digits_value(digits, b);
}

Natural digits_value(const DigitString& digits, unsigned b) {
    Natural value = 0;
    for (Digit d : digits) {
        value *= b;
        value += d;
    }
    return value;
}

CanonicalNumeral witness_numeral(unsigned b, std::uint64_t n, const Natural& k) {
    require_base(b);
    if (n < 1) throw DomainError("witness exponent must be at least 1");
    if (k < 1) throw DomainError("witness multiplier must be at least 1");

    DigitString digits = to_base(k, b).digits();
    digits.insert(digits.end(), n - 1, Digit{0});
    digits.push_back(1);
    return CanonicalNumeral(std::move(digits), b);
}

}  // namespace primestar
