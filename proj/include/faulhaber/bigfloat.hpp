#ifndef FAULHABER_BIGFLOAT_HPP
#define FAULHABER_BIGFLOAT_HPP

#include <faulhaber/numeric.hpp>

#include <boost/multiprecision/mpfr.hpp>

#include <ios>
#include <string>

namespace faulhaber {

/// Variable-precision real number (MPFR). Exact rational arithmetic never
/// touches this type; it exists only for the numerical root solver.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

inline unsigned digits10_for_bits(unsigned bits)
{
    // ceil(bits * log10(2)) plus slack so the mantissa carries >= bits bits
    return static_cast<unsigned>((static_cast<unsigned long long>(bits) * 30103ULL) / 100000ULL) + 3;
}

/// Scoped default precision for newly constructed BigFloat values. The
/// underlying setting is process-global, so scopes that need a fixed
/// precision must not overlap across threads (the root solver serializes
/// itself for this reason).
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(BigFloat::default_precision())
    {
        BigFloat::default_precision(digits10_for_bits(bits));
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_); }

    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline BigFloat to_bigfloat(const Integer& value)
{
    return BigFloat(value);
}

/// Rounded to the current default precision.
inline BigFloat to_bigfloat(const Rational& value)
{
    return BigFloat(value.num()) / BigFloat(value.den());
}

/// Minimal complex arithmetic over BigFloat. (No MPC dependency; the solver
/// needs only the field operations and the modulus.)
struct BigComplex {
    BigFloat re;
    BigFloat im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigFloat& r) : re(r), im(0) {}

    BigComplex operator-() const { return {-re, -im}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b)
    {
        const BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }

    bool is_zero() const { return re == 0 && im == 0; }

    BigFloat abs() const
    {
        using boost::multiprecision::sqrt;
        return sqrt(re * re + im * im);
    }
};

/// Decimal rendering with a fixed number of significant digits.
inline std::string decimal_string(const BigFloat& value, unsigned digits)
{
    return value.str(static_cast<std::streamsize>(digits));
}

} // namespace faulhaber

#endif
