#ifndef FAULHABER_POWERSUM_HPP
#define FAULHABER_POWERSUM_HPP

#include <faulhaber/bernoulli.hpp>
#include <faulhaber/numeric.hpp>
#include <faulhaber/polynomial.hpp>

#include <json.hpp>

#include <stdexcept>
#include <vector>

namespace faulhaber {

namespace detail {

/// S_1 .. S_p by the recurrence
///   S_1 = n(n+1)/2,
///   S_p = ((n+1)((n+1)^p - 1) - sum_{i=1}^{p-1} C(p+1, i) S_i) / (p+1),
/// built bottom-up so every lower index is computed exactly once.
inline std::vector<Polynomial> powersum_recursive_family(unsigned p_max)
{
    if (p_max < 1)
        throw std::invalid_argument("powersum: p must be >= 1");
    std::vector<Polynomial> family(p_max + 1);
    family[1] = Polynomial::from_coefficients({Rational(0), Rational(1, 2), Rational(1, 2)});

    const Polynomial n_plus_1 = Polynomial::from_coefficients({Rational(1), Rational(1)});
    Polynomial n_plus_1_pow = n_plus_1; // (n+1)^q
    for (unsigned q = 2; q <= p_max; ++q) {
        n_plus_1_pow *= n_plus_1;
        Polynomial acc = n_plus_1 * (n_plus_1_pow - Polynomial(Rational(1)));
        for (unsigned i = 1; i < q; ++i)
            acc -= family[i].scale(Rational(binomial(Integer(q + 1), Integer(i))));
        family[q] = acc.scale(Rational(1, q + 1));
    }
    return family;
}

} // namespace detail

/// S_p(n) from the degree-lowering recurrence.
inline Polynomial powersum_recursive(unsigned p)
{
    return detail::powersum_recursive_family(p)[p];
}

/// S_p(n) = (1/(p+1)) * sum_{i=0}^{p} (-1)^i C(p+1, i) B_i n^(p+1-i).
inline Polynomial powersum_faulhaber(unsigned p, const BernoulliTable& table)
{
    if (p < 1)
        throw std::invalid_argument("powersum: p must be >= 1");
    table.ensure(p);
    std::vector<Rational> coeffs(p + 2, Rational(0));
    Integer binom = 1; // C(p+1, 0)
    int sign = 1;
    for (unsigned i = 0; i <= p; ++i) {
        Rational term = Rational(binom) * table.number(i) / Rational(Integer(p + 1));
        coeffs[p + 1 - i] = sign < 0 ? -term : term;
        binom = binom * Integer(p + 1 - i) / Integer(i + 1); // -> C(p+1, i+1)
        sign = -sign;
    }
    return Polynomial::from_coefficients(std::move(coeffs));
}

/// S_p(n) = (B_{p+1}(n+1) - B_{p+1}(1)) / (p+1), with B_{p+1}(1) read off the
/// constructed polynomial rather than assumed equal to B_{p+1}.
inline Polynomial powersum_bernoulli_poly(unsigned p, const BernoulliTable& table)
{
    if (p < 1)
        throw std::invalid_argument("powersum: p must be >= 1");
    const Polynomial bp = bernoulli_polynomial(p + 1, table);
    const Polynomial shifted = bp.compose_affine(Rational(1), Rational(1));
    const Polynomial constant(bp.evaluate(Rational(1)));
    return (shifted - constant).scale(Rational(1, p + 1));
}

/// Exact sum 1^p + 2^p + ... + n^p; the empty sum (n = 0) is 0. This is the
/// independent oracle every polynomial construction is checked against.
inline Integer brute_force_sum(unsigned p, const Integer& n)
{
    if (p < 1)
        throw std::invalid_argument("brute_force_sum: p must be >= 1");
    if (n < 0)
        throw std::invalid_argument("brute_force_sum: n must be >= 0");
    Integer sum = 0;
    for (Integer k = 1; k <= n; ++k)
        sum += int_pow(k, p);
    return sum;
}

/**
 * S_1 .. S_p_max by all three constructions. Construction enforces the type
 * invariants: every polynomial has degree exactly p+1 and zero constant
 * term, and the three routes agree coefficient for coefficient.
 */
struct PowerSumFamily {
    unsigned p_max = 0;
    std::vector<Polynomial> by_recursion;      // index p; slot 0 unused
    std::vector<Polynomial> by_faulhaber;      // index p; slot 0 unused
    std::vector<Polynomial> by_bernoulli_poly; // index p; slot 0 unused

    static PowerSumFamily build(unsigned p_max, const BernoulliTable& table)
    {
        if (p_max < 1)
            throw std::invalid_argument("PowerSumFamily: p_max must be >= 1");
        PowerSumFamily fam;
        fam.p_max = p_max;
        fam.by_recursion = detail::powersum_recursive_family(p_max);
        fam.by_faulhaber.resize(p_max + 1);
        fam.by_bernoulli_poly.resize(p_max + 1);
        for (unsigned p = 1; p <= p_max; ++p) {
            fam.by_faulhaber[p] = powersum_faulhaber(p, table);
            fam.by_bernoulli_poly[p] = powersum_bernoulli_poly(p, table);
            const Polynomial& s = fam.by_recursion[p];
            if (s.degree() != static_cast<int>(p) + 1 || !s.coeff(0).is_zero())
                throw std::logic_error("PowerSumFamily: S_p shape invariant violated");
            if (s != fam.by_faulhaber[p] || s != fam.by_bernoulli_poly[p])
                throw std::logic_error("PowerSumFamily: constructions disagree");
        }
        return fam;
    }

    const Polynomial& at(unsigned p) const
    {
        if (p < 1 || p > p_max)
            throw std::out_of_range("PowerSumFamily: p out of range");
        return by_recursion[p];
    }

    /// One entry per p: { "p": p, "coefficients": [rational strings, index = degree] }.
    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (unsigned p = 1; p <= p_max; ++p) {
            nlohmann::ordered_json entry;
            entry["p"] = p;
            entry["coefficients"] = by_recursion[p].coefficient_strings();
            out.push_back(std::move(entry));
        }
        return out;
    }
};

} // namespace faulhaber

#endif
