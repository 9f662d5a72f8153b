#pragma once

// Exact integer and rational scalars plus the small combinatorial kernels
// (binomial, factorial, lcm of a range, unsigned Stirling numbers of the
// first kind) that every counting routine is built from.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace partcalc {

/// Signed integer of unbounded magnitude.
class ExactInt {
public:
    ExactInt() = default;
    ExactInt(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit by intent
    explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal string; throws std::invalid_argument.
    static ExactInt parse(std::string_view text);

    ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
    ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
    ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }
    ExactInt operator-() const { return ExactInt(mpz_class(-v_)); }

    friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
    friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
    friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }

    friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool fits_int64() const { return v_.fits_slong_p(); }
    bool fits_uint64() const { return v_.fits_ulong_p(); }
    /// Throws std::overflow_error when the value does not fit.
    std::int64_t to_int64() const;
    std::uint64_t to_uint64() const;

    ExactInt pow(unsigned long exponent) const;
    /// True when `divisor` divides this value exactly; divisor must be nonzero.
    bool divisible_by(const ExactInt& divisor) const;
    /// Exact quotient; throws std::domain_error if the division leaves a remainder.
    ExactInt exact_div(const ExactInt& divisor) const;
    /// Floor quotient and nonnegative remainder for a positive divisor.
    ExactInt floor_div(const ExactInt& divisor) const;
    ExactInt mod(const ExactInt& divisor) const;

    std::string to_string() const { return v_.get_str(10); }
    const mpz_class& raw() const { return v_; }

private:
    mpz_class v_;
};

ExactInt gcd(const ExactInt& a, const ExactInt& b);
ExactInt lcm(const ExactInt& a, const ExactInt& b);
std::ostream& operator<<(std::ostream& os, const ExactInt& v);

/// Exact rational kept in lowest terms with a positive denominator.
class ExactRat {
public:
    ExactRat() = default;
    ExactRat(ExactInt value);  // NOLINT: integers embed implicitly
    /// Throws std::domain_error on a zero denominator.
    ExactRat(const ExactInt& numerator, const ExactInt& denominator);

    ExactRat& operator+=(const ExactRat& o);
    ExactRat& operator-=(const ExactRat& o);
    ExactRat& operator*=(const ExactRat& o);
    /// Throws std::domain_error on division by zero.
    ExactRat& operator/=(const ExactRat& o);
    ExactRat operator-() const;

    friend ExactRat operator+(ExactRat a, const ExactRat& b) { return a += b; }
    friend ExactRat operator-(ExactRat a, const ExactRat& b) { return a -= b; }
    friend ExactRat operator*(ExactRat a, const ExactRat& b) { return a *= b; }
    friend ExactRat operator/(ExactRat a, const ExactRat& b) { return a /= b; }

    friend bool operator==(const ExactRat& a, const ExactRat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    ExactInt numerator() const { return ExactInt(mpz_class(v_.get_num())); }
    ExactInt denominator() const { return ExactInt(mpz_class(v_.get_den())); }
    bool is_integer() const { return v_.get_den() == 1; }
    /// Throws std::domain_error when the value is not an integer.
    ExactInt to_integer() const;
    std::string to_string() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactRat& v);

/// C(n, k); zero when k < 0 or k > n. Throws std::invalid_argument for n < 0.
ExactInt binomial(std::int64_t n, std::int64_t k);

ExactInt factorial(std::uint64_t n);

/// D_n = lcm(1, ..., n). Throws std::invalid_argument for n = 0.
ExactInt lcm_range(std::uint64_t n);

/// Row r of the unsigned Stirling numbers of the first kind: the coefficients
/// of the rising factorial x(x+1)...(x+r-1) = sum_k c(r,k) x^k.
struct StirlingTable {
    std::uint32_t r = 0;
    std::vector<ExactInt> entries;  // entries[k-1] = c(r, k), 1 <= k <= r

    const ExactInt& at(std::uint32_t k) const;
};

/// Built by c(r+1,k) = r c(r,k) + c(r,k-1). Throws std::invalid_argument for r = 0.
StirlingTable stirling_first_unsigned(std::uint32_t r);

}  // namespace partcalc
