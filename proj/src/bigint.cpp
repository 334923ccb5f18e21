#include "posetlab/bigint.hpp"

#include "posetlab/error.hpp"

namespace posetlab {

std::string to_decimal(const Count& value) { return value.get_str(10); }

std::string to_fraction(const Rational& value) {
    Rational r = value;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str(10);
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) {
        throw Error(ErrorKind::parse_error, "not a rational: '" + text + "'");
    }
    if (r.get_den() == 0) throw Error(ErrorKind::parse_error, "zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

Count parse_count(const std::string& text) {
    Count c;
    if (text.empty() || c.set_str(text, 10) != 0) {
        throw Error(ErrorKind::parse_error, "not an integer: '" + text + "'");
    }
    return c;
}

Count factorial(int n) {
    Count r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

Count binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Count r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Count from_u64(std::uint64_t value) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return Count(static_cast<unsigned long>(value));
}

Rational signed_square(const Rational& x) { return x < 0 ? Rational(-x * x) : Rational(x * x); }

}  // namespace posetlab
