#ifndef FAULHABER_ROOT_ANALYSIS_HPP
#define FAULHABER_ROOT_ANALYSIS_HPP

#include <faulhaber/aberth.hpp>
#include <faulhaber/bernoulli.hpp>
#include <faulhaber/bigfloat.hpp>
#include <faulhaber/numeric.hpp>
#include <faulhaber/polynomial.hpp>
#include <faulhaber/powersum.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace faulhaber {

namespace detail {

inline Integer mod_pow(Integer base, Integer exponent, const Integer& modulus)
{
    Integer result = 1;
    base %= modulus;
    while (exponent > 0) {
        if (boost::multiprecision::bit_test(exponent, 0))
            result = result * base % modulus;
        base = base * base % modulus;
        exponent >>= 1;
    }
    return result;
}

/// Miller-Rabin with a fixed witness set; deterministic far beyond the
/// coefficient sizes this library meets.
inline bool is_probable_prime(const Integer& n)
{
    if (n < 2)
        return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    Integer d = n - 1;
    unsigned r = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Integer x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

/// Brent's variant of Pollard rho. n must be odd, composite and > 1.
inline Integer pollard_brent(const Integer& n)
{
    using boost::multiprecision::gcd;
    for (Integer c = 1;; ++c) {
        Integer x = 2, y = 2, factor = 1;
        Integer saved_y = y;
        unsigned long power = 1, lam = 0;
        while (factor == 1) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            // batch gcd every 64 steps
            Integer q = 1;
            unsigned batch = 0;
            saved_y = y;
            while (batch < 64 && lam < power) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
                ++batch;
                ++lam;
            }
            factor = gcd(q, n);
        }
        if (factor != n)
            return factor;
        // cycle collapsed inside a batch; redo stepwise from the saved point
        Integer y2 = saved_y;
        factor = 1;
        while (factor == 1) {
            y2 = (y2 * y2 + c) % n;
            factor = gcd(abs(x - y2), n);
        }
        if (factor != n)
            return factor;
        // this increment failed entirely; try the next one
    }
}

inline void factorize_into(Integer n, std::map<Integer, unsigned>& out)
{
    if (n <= 1)
        return;
    for (int p : {2, 3, 5}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    for (Integer p = 7; p * p <= n && p < 100000; p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    const Integer f = pollard_brent(n);
    factorize_into(f, out);
    factorize_into(n / f, out);
}

/// All positive divisors, ascending.
inline std::vector<Integer> divisors_of(const Integer& n)
{
    std::map<Integer, unsigned> factors;
    factorize_into(boost::multiprecision::abs(n), factors);
    std::vector<Integer> divisors{1};
    for (const auto& [prime, count] : factors) {
        const std::size_t base = divisors.size();
        Integer power = 1;
        for (unsigned e = 1; e <= count; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i)
                divisors.push_back(divisors[i] * power);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

} // namespace detail

struct SquareFreeFactor {
    Polynomial factor;     // monic, square-free
    unsigned multiplicity; // >= 1
};

/// Pairwise-coprime square-free factors with multiplicities; their product
/// with multiplicities equals the input up to a nonzero rational constant.
struct SquareFreeDecomposition {
    std::vector<SquareFreeFactor> factors;

    /// Monic product of factor^multiplicity.
    Polynomial reconstruct() const
    {
        Polynomial product{Rational(1)};
        for (const auto& [factor, multiplicity] : factors)
            for (unsigned i = 0; i < multiplicity; ++i)
                product *= factor;
        return product;
    }
};

/// Yun's gcd-based decomposition (characteristic 0, exact arithmetic). The
/// extracted factors are monic gcds, so the overall scale of the input is
/// irrelevant; reconstruction is checked against the monic input.
inline SquareFreeDecomposition square_free_decompose(const Polynomial& input)
{
    if (input.is_zero())
        throw std::invalid_argument("square_free_decompose: zero polynomial");
    SquareFreeDecomposition out;
    if (input.degree() == 0)
        return out;

    const Polynomial derivative = input.derivative();
    const Polynomial g = poly_gcd(input, derivative);
    Polynomial w = input.divide_exact(g);
    Polynomial z = derivative.divide_exact(g) - w.derivative();

    for (unsigned multiplicity = 1; w.degree() > 0; ++multiplicity) {
        const Polynomial factor = poly_gcd(w, z);
        if (factor.degree() > 0)
            out.factors.push_back({factor, multiplicity});
        w = w.divide_exact(factor);
        z = z.divide_exact(factor) - w.derivative();
    }

    if (out.reconstruct() != input.monic())
        throw std::logic_error("square_free_decompose: reconstruction check failed");
    return out;
}

/// Cofactor and exact multiplicity after dividing out (n - root)^multiplicity.
inline std::pair<Polynomial, unsigned> deflate_root(const Polynomial& p, const Rational& root)
{
    const Polynomial linear = Polynomial::from_coefficients({-root, Rational(1)});
    Polynomial current = p;
    unsigned multiplicity = 0;
    while (!current.is_zero() && current.evaluate(root).is_zero()) {
        current = current.divide_exact(linear);
        ++multiplicity;
    }
    return {std::move(current), multiplicity};
}

/**
 * All rational roots with exact multiplicities, ascending, via the rational
 * root theorem on the integer-cleared polynomial followed by exact deflation.
 * The deflated cofactor is guaranteed rational-root-free.
 */
inline std::vector<std::pair<Rational, unsigned>> rational_roots(const Polynomial& input)
{
    if (input.is_zero())
        throw std::invalid_argument("rational_roots: zero polynomial");

    std::vector<std::pair<Rational, unsigned>> roots;
    Polynomial work = input;

    // root at 0: multiplicity = index of the first nonzero coefficient
    std::size_t zero_mult = 0;
    while (work.coeff(zero_mult).is_zero())
        ++zero_mult;
    if (zero_mult > 0) {
        std::vector<Rational> shifted(work.coefficients().begin() +
                                          static_cast<std::ptrdiff_t>(zero_mult),
                                      work.coefficients().end());
        work = Polynomial::from_coefficients(std::move(shifted));
        roots.emplace_back(Rational(0), static_cast<unsigned>(zero_mult));
    }

    if (work.degree() >= 1) {
        const std::vector<Integer> cleared = work.primitive_integer_coefficients();
        const auto numerators = detail::divisors_of(cleared.front());
        const auto denominators = detail::divisors_of(cleared.back());

        std::vector<Rational> candidates;
        for (const Integer& u : numerators) {
            for (const Integer& v : denominators) {
                if (boost::multiprecision::gcd(u, v) != 1)
                    continue;
                candidates.emplace_back(u, v);
                candidates.emplace_back(-u, v);
            }
        }
        std::sort(candidates.begin(), candidates.end());

        for (const Rational& candidate : candidates) {
            if (work.degree() < 1)
                break;
            if (!work.evaluate(candidate).is_zero())
                continue;
            auto [cofactor, multiplicity] = deflate_root(work, candidate);
            work = std::move(cofactor);
            roots.emplace_back(candidate, multiplicity);
        }
    }

    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

/// Open interval (lower, upper); an absent endpoint means -infinity or
/// +infinity respectively.
struct RealInterval {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

namespace detail {

inline int sign_of(const Rational& value) { return value.sign(); }

/// Sign of p at +infinity or -infinity.
inline int sign_at_infinity(const Polynomial& p, bool positive)
{
    if (p.is_zero())
        return 0;
    int s = p.leading_coefficient().sign();
    if (!positive && p.degree() % 2 == 1)
        s = -s;
    return s;
}

/// Sign variations of the chain at a point, zeros dropped.
inline long sign_variations(const std::vector<Polynomial>& chain,
                            const std::optional<Rational>& point, bool positive_infinity)
{
    long variations = 0;
    int previous = 0;
    for (const Polynomial& member : chain) {
        const int s = point ? sign_of(member.evaluate(*point))
                            : sign_at_infinity(member, positive_infinity);
        if (s == 0)
            continue;
        if (previous != 0 && s != previous)
            ++variations;
        previous = s;
    }
    return variations;
}

} // namespace detail

/**
 * Exact number of distinct real roots of a square-free polynomial in an open
 * interval (whole real line by default), by Sturm's theorem. The remainder
 * chain is rescaled by positive constants only, which leaves every sign
 * variation intact. Non-square-free input is rejected.
 */
inline long sturm_real_root_count(const Polynomial& p, const RealInterval& interval = {})
{
    if (p.is_zero())
        throw std::invalid_argument("sturm_real_root_count: zero polynomial");
    if (p.degree() == 0)
        return 0;
    if (poly_gcd(p, p.derivative()).degree() > 0)
        throw std::invalid_argument("sturm_real_root_count: input is not square-free");
    if (interval.lower && interval.upper && !(*interval.lower < *interval.upper))
        return 0;

    std::vector<Polynomial> chain{p, p.derivative()};
    while (chain.back().degree() > 0) {
        Polynomial remainder = chain[chain.size() - 2].divmod(chain.back()).remainder;
        if (remainder.is_zero())
            break;
        chain.push_back(-remainder.scale(remainder.leading_coefficient().abs().reciprocal()));
    }

    const long at_lower = detail::sign_variations(chain, interval.lower, false);
    const long at_upper = detail::sign_variations(chain, interval.upper, true);
    long count = at_lower - at_upper; // roots in (lower, upper]
    if (interval.upper && p.evaluate(*interval.upper).is_zero())
        --count; // open on the right
    return count;
}

/// Numerical root of the deflated cofactor, with multiplicity inherited from
/// the square-free factor it came from.
struct ReportedComplexRoot {
    BigFloat re;
    BigFloat im;
    BigFloat error_radius;
    unsigned multiplicity = 1;
};

/**
 * Complete root description of S_p(n): exact rational roots with
 * multiplicities, the exact count of distinct real roots, certified
 * high-precision approximations of the remaining roots, and the pairing of
 * the root multiset under the reflection r -> -1 - r.
 */
struct RootReport {
    unsigned p = 0;
    unsigned degree = 0;
    std::vector<std::pair<Rational, unsigned>> rational_roots; // ascending
    long distinct_real_roots = 0;
    std::vector<ReportedComplexRoot> complex_roots; // ordered by (re, im)
    std::vector<std::pair<std::size_t, std::size_t>> symmetry_pairs;
    unsigned precision_bits = 0;

    nlohmann::ordered_json to_json() const
    {
        const unsigned digits = digits10_for_bits(precision_bits);
        nlohmann::ordered_json out;
        out["p"] = p;
        out["degree"] = degree;
        out["rational_roots"] = nlohmann::ordered_json::array();
        for (const auto& [value, multiplicity] : rational_roots) {
            nlohmann::ordered_json entry;
            entry["value"] = value.to_string();
            entry["multiplicity"] = multiplicity;
            out["rational_roots"].push_back(std::move(entry));
        }
        out["distinct_real_roots"] = distinct_real_roots;
        out["complex_roots"] = nlohmann::ordered_json::array();
        for (const auto& root : complex_roots) {
            nlohmann::ordered_json entry;
            entry["re"] = decimal_string(root.re, digits);
            entry["im"] = decimal_string(root.im, digits);
            entry["error_radius"] = decimal_string(root.error_radius, 3);
            entry["multiplicity"] = root.multiplicity;
            out["complex_roots"].push_back(std::move(entry));
        }
        out["precision_bits"] = precision_bits;
        out["symmetry_pairs"] = nlohmann::ordered_json::array();
        for (const auto& [a, b] : symmetry_pairs)
            out["symmetry_pairs"].push_back({a, b});
        out["error_bound"] = "degree * (|p(z)| + horner_rounding) / |p'(z)|";
        return out;
    }

    /// "p,degree,distinct_real,rational_count,notes"
    std::string csv_row() const
    {
        std::ostringstream os;
        os << p << "," << degree << "," << distinct_real_roots << "," << rational_roots.size()
           << ",";
        if (complex_roots.empty())
            os << "no complex residual";
        else
            os << complex_roots.size() << " complex";
        return os.str();
    }

    std::string to_text() const
    {
        std::ostringstream os;
        os << "S_" << p << ": degree " << degree << ", " << distinct_real_roots
           << " distinct real roots\n";
        for (const auto& [value, multiplicity] : rational_roots)
            os << "  rational root " << value << " (multiplicity " << multiplicity << ")\n";
        for (const auto& root : complex_roots)
            os << "  root ~ (" << decimal_string(root.re, 20) << ", "
               << decimal_string(root.im, 20) << "i), multiplicity " << root.multiplicity
               << ", error radius " << decimal_string(root.error_radius, 3) << "\n";
        os << "  symmetry pairs under r -> -1-r:";
        for (const auto& [a, b] : symmetry_pairs)
            os << " (" << a << "," << b << ")";
        return os.str();
    }
};

namespace detail {

/// Locates, for every root index, a partner index under r -> -1 - r; exact
/// roots must pair exactly, numerical roots within summed error radii.
inline std::vector<std::pair<std::size_t, std::size_t>>
pair_roots_under_reflection(const std::vector<std::pair<Rational, unsigned>>& rational,
                            const std::vector<ReportedComplexRoot>& complex)
{
    std::set<std::pair<std::size_t, std::size_t>> pairs;

    for (std::size_t i = 0; i < rational.size(); ++i) {
        const Rational target = Rational(-1) - rational[i].first;
        bool found = false;
        for (std::size_t j = 0; j < rational.size(); ++j) {
            if (rational[j].first == target) {
                pairs.emplace(std::min(i, j), std::max(i, j));
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("root symmetry violated for a rational root");
    }

    const std::size_t offset = rational.size();
    for (std::size_t i = 0; i < complex.size(); ++i) {
        const BigFloat target_re = -1 - complex[i].re;
        const BigFloat target_im = -complex[i].im;
        bool found = false;
        for (std::size_t j = 0; j < complex.size(); ++j) {
            const BigFloat dr = complex[j].re - target_re;
            const BigFloat di = complex[j].im - target_im;
            const BigFloat distance = sqrt(dr * dr + di * di);
            if (distance <= complex[i].error_radius + complex[j].error_radius) {
                pairs.emplace(std::min(offset + i, offset + j), std::max(offset + i, offset + j));
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("root symmetry violated for a numerical root");
    }

    return {pairs.begin(), pairs.end()};
}

} // namespace detail

/**
 * Full pipeline for S_p: build the polynomial, extract exact rational roots,
 * square-free decompose, count distinct real roots exactly, solve the
 * rational-root-free cofactors numerically, and pair the multiset under
 * r -> -1 - r. Throws if any RootReport invariant fails to hold.
 */
inline RootReport analyze(unsigned p, unsigned precision_bits, const BernoulliTable& table)
{
    if (p < 1)
        throw std::invalid_argument("analyze: p must be >= 1");
    if (precision_bits < 64)
        throw std::invalid_argument("analyze: precision_bits must be >= 64");

    RootReport report;
    report.p = p;
    report.precision_bits = precision_bits;

    const Polynomial s = powersum_faulhaber(p, table);
    report.degree = static_cast<unsigned>(s.degree());
    report.rational_roots = rational_roots(s);

    const SquareFreeDecomposition decomposition = square_free_decompose(s);
    report.distinct_real_roots = 0;
    for (const auto& [factor, multiplicity] : decomposition.factors)
        report.distinct_real_roots += sturm_real_root_count(factor);

    for (const auto& [factor, multiplicity] : decomposition.factors) {
        Polynomial cofactor = factor;
        for (const auto& [root, root_multiplicity] : report.rational_roots) {
            if (root_multiplicity != multiplicity)
                continue;
            cofactor = cofactor.divide_exact(
                Polynomial::from_coefficients({-root, Rational(1)}));
        }
        if (cofactor.degree() < 1)
            continue;
        for (const ComplexRootEstimate& estimate : complex_roots(cofactor, precision_bits))
            report.complex_roots.push_back(
                {estimate.re, estimate.im, estimate.error_radius, multiplicity});
    }
    std::sort(report.complex_roots.begin(), report.complex_roots.end(),
              [](const ReportedComplexRoot& a, const ReportedComplexRoot& b) {
                  return a.re != b.re ? a.re < b.re : a.im < b.im;
              });

    unsigned long long multiplicity_sum = 0;
    for (const auto& [root, multiplicity] : report.rational_roots)
        multiplicity_sum += multiplicity;
    for (const auto& root : report.complex_roots)
        multiplicity_sum += root.multiplicity;
    if (multiplicity_sum != report.degree)
        throw std::logic_error("analyze: multiplicities do not sum to the degree");

    const auto has_root = [&](const Rational& r) {
        for (const auto& [root, multiplicity] : report.rational_roots)
            if (root == r)
                return true;
        return false;
    };
    if (!has_root(Rational(0)) || !has_root(Rational(-1)))
        throw std::logic_error("analyze: 0 and -1 must be roots of S_p");
    if (has_root(Rational(-1, 2)) != (p % 2 == 0))
        throw std::logic_error("analyze: -1/2 must be a root exactly when p is even");

    report.symmetry_pairs =
        detail::pair_roots_under_reflection(report.rational_roots, report.complex_roots);
    return report;
}

inline RootReport analyze(unsigned p, unsigned precision_bits = 256)
{
    const BernoulliTable table;
    return analyze(p, precision_bits, table);
}

} // namespace faulhaber

#endif
