#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primestar/numtheory.hpp"

namespace primestar {

using Digit = std::uint32_t;
using DigitString = std::vector<Digit>;

/// Largest base with a text form (digits 0-9 then a-z).
inline constexpr unsigned kMaxTextBase = 36;

/// Text form of a single digit. Requires d < 36.
char digit_char(Digit d);

/// Digit value of `c` in base `b`, or nullopt when `c` is not a digit there.
std::optional<Digit> char_digit(char c, unsigned b);

/// Digits of `text` over base `b`, without any canonicity requirement.
/// Throws ValidationError at the first invalid character.
DigitString parse_digits(std::string_view text, unsigned b);

std::string render_digits(const DigitString& digits);

/// A base-b numeral, most significant digit first, with no leading zero.
/// The numeral of zero is the single digit 0.
class CanonicalNumeral {
public:
    /// Throws ValidationError (empty, digit >= base, leading zero) or
    /// DomainError (base < 2).
    CanonicalNumeral(DigitString digits, unsigned base);

    const DigitString& digits() const noexcept { return digits_; }
    unsigned base() const noexcept { return base_; }
    std::size_t size() const noexcept { return digits_.size(); }

    Natural value() const;
    /// Requires base <= 36.
    std::string str() const;

    friend bool operator==(const CanonicalNumeral&, const CanonicalNumeral&) = default;

private:
    DigitString digits_;
    unsigned base_;
};

/// Throws DomainError when b < 2 or n < 0.
CanonicalNumeral to_base(const Natural& n, unsigned b);

/// Value of a canonical numeral written in text. Throws ValidationError naming
/// the offending position for an empty string, a digit >= b or a leading zero.
Natural from_base(std::string_view text, unsigned b);

/// Positional value of a digit sequence (leading zeros allowed).
Natural digits_value(const DigitString& digits, unsigned b);

/// (k)_b 0^{n-1} 1, the numeral of k * b^n + 1, built without computing b^n.
CanonicalNumeral witness_numeral(unsigned b, std::uint64_t n, const Natural& k);

}  // namespace primestar
