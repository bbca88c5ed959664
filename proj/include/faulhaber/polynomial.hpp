#ifndef FAULHABER_POLYNOMIAL_HPP
#define FAULHABER_POLYNOMIAL_HPP

#include <faulhaber/numeric.hpp>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace faulhaber {

struct PolynomialDivision;

/**
 * Dense univariate polynomial with exact rational coefficients.
 * Canonical form: the coefficient vector is empty for the zero polynomial,
 * otherwise its last entry (the leading coefficient) is nonzero.
 */
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(Rational constant)
    {
        if (!constant.is_zero())
            coeffs_.push_back(std::move(constant));
    }

    static Polynomial from_coefficients(std::vector<Rational> coeffs)
    {
        Polynomial p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    /// coefficient * n^degree
    static Polynomial monomial(std::size_t degree, Rational coefficient = Rational(1))
    {
        Polynomial p;
        if (!coefficient.is_zero()) {
            p.coeffs_.assign(degree + 1, Rational(0));
            p.coeffs_[degree] = std::move(coefficient);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of n^i; zero beyond the degree.
    const Rational& coeff(std::size_t i) const
    {
        static const Rational zero(0);
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    const Rational& leading_coefficient() const
    {
        if (coeffs_.empty())
            throw std::domain_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return Polynomial();
        Polynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Multiplies every coefficient by an exact rational factor.
    Polynomial scale(const Rational& factor) const
    {
        if (factor.is_zero())
            return Polynomial();
        Polynomial r = *this;
        for (auto& c : r.coeffs_)
            c *= factor;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Horner evaluation, exact.
    Rational evaluate(const Rational& x) const
    {
        Rational value(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            value = value * x + coeffs_[i];
        return value;
    }

    /// q with q(n) = p(a*n + b), expanded exactly.
    Polynomial compose_affine(const Rational& a, const Rational& b) const
    {
        Polynomial inner = from_coefficients({b, a});
        Polynomial result;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            result = result * inner + Polynomial(coeffs_[i]);
        return result;
    }

    /// Formal derivative.
    Polynomial derivative() const
    {
        if (coeffs_.size() <= 1)
            return Polynomial();
        Polynomial r;
        r.coeffs_.resize(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            r.coeffs_[i - 1] = coeffs_[i] * Rational(Integer(i));
        r.trim();
        return r;
    }

    /// Euclidean division; remainder has degree < degree of the divisor.
    PolynomialDivision divmod(const Polynomial& divisor) const;

    /// Quotient when the division is known exact; throws if a remainder is left.
    Polynomial divide_exact(const Polynomial& divisor) const;

    /// Scaled to leading coefficient 1; the zero polynomial stays zero.
    Polynomial monic() const
    {
        if (is_zero())
            return Polynomial();
        return scale(leading_coefficient().reciprocal());
    }

    /**
     * Integer coefficient vector of the same roots: coefficients are scaled
     * by the common denominator and divided by their content, so the result
     * is primitive with positive leading coefficient.
     */
    std::vector<Integer> primitive_integer_coefficients() const
    {
        if (is_zero())
            return {};
        Integer common_den = 1;
        for (const auto& c : coeffs_)
            common_den = boost::multiprecision::lcm(common_den, c.den());
        std::vector<Integer> out(coeffs_.size());
        Integer content = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out[i] = coeffs_[i].num() * (common_den / coeffs_[i].den());
            content = boost::multiprecision::gcd(content, out[i]);
        }
        if (out.back() < 0)
            content = -content;
        for (auto& c : out)
            c /= content;
        return out;
    }

    /// "1/4*n^4 + 1/2*n^3 + 1/4*n^2"; negative coefficients join with " - ".
    std::string to_string(const std::string& variable = "n") const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c.is_zero())
                continue;
            if (s.empty())
                s += c.sign() < 0 ? "-" : "";
            else
                s += c.sign() < 0 ? " - " : " + ";
            s += c.abs().to_string();
            if (i >= 1) {
                s += "*" + variable;
                if (i >= 2)
                    s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    /// Coefficient strings indexed by degree, for JSON output.
    std::vector<std::string> coefficient_strings() const
    {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(c.to_string());
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p)
    {
        return os << p.to_string();
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
    Polynomial quotient;
    Polynomial remainder;
};

inline PolynomialDivision Polynomial::divmod(const Polynomial& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    PolynomialDivision out;
    out.remainder = *this;
    if (degree() < divisor.degree())
        return out;
    out.quotient.coeffs_.assign(coeffs_.size() - divisor.coeffs_.size() + 1, Rational(0));
    const Rational lead_inv = divisor.leading_coefficient().reciprocal();
    while (!out.remainder.is_zero() && out.remainder.degree() >= divisor.degree()) {
        const std::size_t shift = out.remainder.coeffs_.size() - divisor.coeffs_.size();
        const Rational q = out.remainder.coeffs_.back() * lead_inv;
        out.quotient.coeffs_[shift] = q;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
            out.remainder.coeffs_[shift + i] -= q * divisor.coeffs_[i];
        out.remainder.trim();
    }
    out.quotient.trim();
    return out;
}

inline Polynomial Polynomial::divide_exact(const Polynomial& divisor) const
{
    PolynomialDivision d = divmod(divisor);
    if (!d.remainder.is_zero())
        throw std::domain_error("polynomial division is not exact");
    return d.quotient;
}

/**
 * Monic greatest common divisor by the Euclidean algorithm. Remainders are
 * rescaled to leading coefficient +/-1 at every step to keep the rational
 * coefficients small; the result is exact either way.
 */
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("poly_gcd: both arguments are zero");
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).remainder;
        if (!r.is_zero())
            r = r.scale(r.leading_coefficient().abs().reciprocal());
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

} // namespace faulhaber

#endif
