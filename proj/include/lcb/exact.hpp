#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcb {

/// Wide signed integer used for clique counts, binomial sums and rational parts.
using Int = __int128;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// C(n, k); zero whenever k < 0, k > n or n < 0. Rows up to n = 127 are tabulated.
Int binomial(int n, int k);

std::string to_string(Int value);

/// Parses a decimal integer (optional leading '-'); throws std::invalid_argument.
Int parse_int(const std::string& text);

/// Exact rational in lowest terms with a positive denominator.
///
/// Comparisons cross-multiply with overflow checks; nothing on the equality
/// path ever goes through floating point.
class ExactRatio {
public:
    ExactRatio() = default;
    ExactRatio(Int num, Int den = 1);  // NOLINT(google-explicit-constructor)

    [[nodiscard]] Int num() const { return num_; }
    [[nodiscard]] Int den() const { return den_; }
    [[nodiscard]] bool is_integer() const { return den_ == 1; }
    [[nodiscard]] double approx() const;
    /// "num/den", or just "num" for integers.
    [[nodiscard]] std::string str() const;

    friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b);

    ExactRatio& operator+=(const ExactRatio& o) { return *this = *this + o; }
    ExactRatio& operator-=(const ExactRatio& o) { return *this = *this - o; }

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b);

private:
    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace lcb
