#include "lcb/exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace lcb {

namespace {

constexpr int kPascalRows = 128;

Int abs_value(Int v) { return v < 0 ? -v : v; }

Int gcd(Int a, Int b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

struct PascalTable {
    std::array<std::array<Int, kPascalRows>, kPascalRows> rows{};

    PascalTable() {
        for (int n = 0; n < kPascalRows; ++n) {
            rows[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                rows[n][k] = checked_add(rows[n - 1][k - 1], k < n ? rows[n - 1][k] : Int{0});
        }
    }
};

const PascalTable& pascal() {
    static const PascalTable table;
    return table;
}

}  // namespace

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

Int binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n >= kPascalRows) throw OverflowError("binomial row " + std::to_string(n) + " beyond table");
    return pascal().rows[n][k];
}

std::string to_string(Int value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Work on the negative side so the minimum value does not overflow.
    Int v = negative ? value : -value;
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int parse_int(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = 0;
    const bool negative = text[0] == '-';
    if (negative) ++i;
    if (i == text.size()) throw std::invalid_argument("bad integer: " + text);
    Int v = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer: " + text);
        v = checked_add(checked_mul(v, 10), text[i] - '0');
    }
    return negative ? -v : v;
}

ExactRatio::ExactRatio(Int num, Int den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
        num_ = checked_sub(0, num_);
        den_ = checked_sub(0, den_);
    }
    const Int g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

double ExactRatio::approx() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string ExactRatio::str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) {
    const Int g = gcd(a.den_, b.den_);
    const Int scale_a = b.den_ / g;
    const Int scale_b = a.den_ / g;
    return {checked_add(checked_mul(a.num_, scale_a), checked_mul(b.num_, scale_b)),
            checked_mul(a.den_, scale_a)};
}

ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) {
    return a + ExactRatio(checked_sub(0, b.num_), b.den_);
}

ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
    // Cross-reduce first to keep intermediates small.
    const Int g1 = gcd(a.num_, b.den_);
    const Int g2 = gcd(b.num_, a.den_);
    const Int d1 = g1 == 0 ? 1 : g1;
    const Int d2 = g2 == 0 ? 1 : g2;
    return {checked_mul(a.num_ / d1, b.num_ / d2), checked_mul(a.den_ / d2, b.den_ / d1)};
}

ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero ratio");
    return a * ExactRatio(b.den_, b.num_);
}

std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    const Int lhs = checked_mul(a.num_, b.den_);
    const Int rhs = checked_mul(b.num_, a.den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace lcb
