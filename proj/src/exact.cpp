#include "partcalc/exact.hpp"

#include <ostream>
#include <stdexcept>

namespace partcalc {

ExactInt ExactInt::parse(std::string_view text) {
    std::string s(text);
    std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == digits_from)
        throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t i = digits_from; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("not an integer: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return ExactInt(mpz_class(s, 10));
}

std::int64_t ExactInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("value does not fit in int64: " + to_string());
    return v_.get_si();
}

std::uint64_t ExactInt::to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("value does not fit in uint64: " + to_string());
    return v_.get_ui();
}

ExactInt ExactInt::pow(unsigned long exponent) const {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), v_.get_mpz_t(), exponent);
    return ExactInt(std::move(out));
}

bool ExactInt::divisible_by(const ExactInt& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divisibility by zero");
    return mpz_divisible_p(v_.get_mpz_t(), divisor.v_.get_mpz_t()) != 0;
}

ExactInt ExactInt::exact_div(const ExactInt& divisor) const {
    if (!divisible_by(divisor))
        throw std::domain_error(to_string() + " is not divisible by " + divisor.to_string());
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), v_.get_mpz_t(), divisor.v_.get_mpz_t());
    return ExactInt(std::move(out));
}

ExactInt ExactInt::floor_div(const ExactInt& divisor) const {
    if (divisor.sign() <= 0) throw std::domain_error("floor_div needs a positive divisor");
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), v_.get_mpz_t(), divisor.v_.get_mpz_t());
    return ExactInt(std::move(out));
}

ExactInt ExactInt::mod(const ExactInt& divisor) const {
    if (divisor.sign() <= 0) throw std::domain_error("mod needs a positive divisor");
    mpz_class out;
    mpz_fdiv_r(out.get_mpz_t(), v_.get_mpz_t(), divisor.v_.get_mpz_t());
    return ExactInt(std::move(out));
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
    mpz_class out;
    mpz_gcd(out.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return ExactInt(std::move(out));
}

ExactInt lcm(const ExactInt& a, const ExactInt& b) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return ExactInt(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

ExactRat::ExactRat(ExactInt value) : v_(value.raw()) {}

ExactRat::ExactRat(const ExactInt& numerator, const ExactInt& denominator) {
    if (denominator.is_zero()) throw std::domain_error("zero denominator");
    v_ = mpq_class(numerator.raw(), denominator.raw());
    v_.canonicalize();
}

ExactRat& ExactRat::operator+=(const ExactRat& o) { v_ += o.v_; return *this; }
ExactRat& ExactRat::operator-=(const ExactRat& o) { v_ -= o.v_; return *this; }
ExactRat& ExactRat::operator*=(const ExactRat& o) { v_ *= o.v_; return *this; }

ExactRat& ExactRat::operator/=(const ExactRat& o) {
    if (sgn(o.v_) == 0) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

ExactRat ExactRat::operator-() const {
    ExactRat out;
    out.v_ = -v_;
    return out;
}

ExactInt ExactRat::to_integer() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + to_string());
    return numerator();
}

std::string ExactRat::to_string() const {
    if (is_integer()) return v_.get_num().get_str(10);
    return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const ExactRat& v) { return os << v.to_string(); }

ExactInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return ExactInt(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return ExactInt(std::move(out));
}

ExactInt factorial(std::uint64_t n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return ExactInt(std::move(out));
}

ExactInt lcm_range(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("lcm_range: n must be at least 1");
    mpz_class acc = 1;
    for (std::uint64_t s = 2; s <= n; ++s) mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), s);
    return ExactInt(std::move(acc));
}

const ExactInt& StirlingTable::at(std::uint32_t k) const {
    if (k < 1 || k > r) throw std::out_of_range("Stirling index out of range");
    return entries[k - 1];
}

StirlingTable stirling_first_unsigned(std::uint32_t r) {
    if (r == 0) throw std::invalid_argument("stirling_first_unsigned: r must be at least 1");
    std::vector<ExactInt> row{ExactInt(1)};
    for (std::uint32_t m = 1; m < r; ++m) {
        // row holds c(m, 1..m); build c(m+1, 1..m+1).
        std::vector<ExactInt> next(m + 1);
        for (std::uint32_t k = 1; k <= m + 1; ++k) {
            ExactInt v = (k <= m) ? row[k - 1] * ExactInt(m) : ExactInt(0);
            if (k >= 2) v += row[k - 2];
            next[k - 1] = std::move(v);
        }
        row = std::move(next);
    }
    return StirlingTable{r, std::move(row)};
}

}  // namespace partcalc
