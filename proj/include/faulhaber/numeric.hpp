#ifndef FAULHABER_NUMERIC_HPP
#define FAULHABER_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace faulhaber {

/// Arbitrary-precision signed integer. Canonical zero, no size limit.
using Integer = boost::multiprecision::cpp_int;

inline Integer int_pow(const Integer& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

/**
 * Binomial coefficient C(n, k) with the convention that out-of-range k
 * (k < 0 or k > n) yields 0. Computed by the multiplicative formula with
 * exact intermediate division, so intermediates never exceed the result
 * by more than one factor.
 */
inline Integer binomial(const Integer& n, const Integer& k)
{
    if (n < 0)
        throw std::domain_error("binomial: n must be non-negative");
    if (k < 0 || k > n)
        return 0;

    Integer kk = k;
    if (kk > n - kk)
        kk = n - kk;

    Integer result = 1;
    for (Integer i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i; // exact: result is C(n-kk+i, i) after this step
    }
    return result;
}

/**
 * Exact rational number. Always normalized: denominator > 0,
 * gcd(|numerator|, denominator) = 1, zero is 0/1.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(const Integer& n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}

    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den))
    {
        normalize();
    }

    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// -1, 0 or +1.
    int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

    Rational operator-() const
    {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o)
    {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    Rational& operator-=(const Rational& o)
    {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    Rational& operator*=(const Rational& o)
    {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    Rational& operator/=(const Rational& o)
    {
        if (o.num_ == 0)
            throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b)
    {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational pow(unsigned exponent) const
    {
        Rational r;
        r.num_ = int_pow(num_, exponent);
        r.den_ = int_pow(den_, exponent);
        return r; // coprime inputs stay coprime under powers
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational reciprocal() const
    {
        if (num_ == 0)
            throw std::domain_error("rational division by zero");
        Rational r;
        if (num_ < 0) {
            r.num_ = -den_;
            r.den_ = -num_;
        } else {
            r.num_ = den_;
            r.den_ = num_;
        }
        return r;
    }

    /// "p/q" with "/q" omitted when the denominator is 1.
    std::string to_string() const
    {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

    /// Parses the textual form produced by to_string().
    static Rational from_string(std::string_view text)
    {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(Integer(std::string(text)), Integer(1));
            return Rational(Integer(std::string(text.substr(0, slash))),
                            Integer(std::string(text.substr(slash + 1))));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("rational parse error: " + std::string(text));
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r)
    {
        return os << r.to_string();
    }

private:
    void normalize()
    {
        if (den_ == 0)
            throw std::domain_error("rational division by zero");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

} // namespace faulhaber

#endif
