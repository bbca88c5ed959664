#ifndef FAULHABER_VERIFY_HPP
#define FAULHABER_VERIFY_HPP

#include <faulhaber/bernoulli.hpp>
#include <faulhaber/numeric.hpp>
#include <faulhaber/polynomial.hpp>
#include <faulhaber/powersum.hpp>

#include <json.hpp>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace faulhaber {

/// Inclusive index range [lo, hi]; hi < lo is the empty range.
struct IndexRange {
    long long lo = 0;
    long long hi = -1;

    bool empty() const { return hi < lo; }
    std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }

    std::string to_string(const std::string& variable) const
    {
        return variable + " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    }

    /// Parses "A..B".
    static IndexRange parse(const std::string& text)
    {
        const auto pos = text.find("..");
        if (pos == std::string::npos)
            throw std::invalid_argument("range must have the form A..B: " + text);
        try {
            return IndexRange{std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 2))};
        } catch (const std::exception&) {
            throw std::invalid_argument("range must have the form A..B: " + text);
        }
    }
};

struct VerificationFailure {
    std::string parameters;
    std::string left;
    std::string right;
};

/**
 * Outcome of sweeping one identity over a parameter range. Every cell is
 * checked exactly, so zero failures certifies the identity on the whole
 * range, not on a sample.
 */
struct VerificationReport {
    std::string identity;
    std::string range;
    std::size_t checked = 0;
    std::vector<VerificationFailure> failures;

    bool passed() const { return failures.empty(); }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json out;
        out["identity"] = identity;
        out["range"] = range;
        out["checked"] = checked;
        out["failures"] = nlohmann::ordered_json::array();
        for (const auto& f : failures) {
            nlohmann::ordered_json jf;
            jf["parameters"] = f.parameters;
            jf["left"] = f.left;
            jf["right"] = f.right;
            out["failures"].push_back(std::move(jf));
        }
        return out;
    }

    std::string to_text() const
    {
        std::ostringstream os;
        os << identity << " (" << range << "): " << checked << " checked, " << failures.size()
           << " failures";
        for (const auto& f : failures)
            os << "\n  FAIL " << f.parameters << ": " << f.left << " != " << f.right;
        return os.str();
    }
};

namespace detail {

inline void require_lower_bound(const IndexRange& r, long long min_lo, const char* what)
{
    if (!r.empty() && r.lo < min_lo)
        throw std::invalid_argument(std::string(what) + ": range must start at " +
                                    std::to_string(min_lo) + " or above");
}

inline void record_poly_failure(VerificationReport& report, std::string parameters,
                                const Polynomial& left, const Polynomial& right)
{
    if (left != right)
        report.failures.push_back({std::move(parameters), left.to_string(), right.to_string()});
}

inline void record_rational_failure(VerificationReport& report, std::string parameters,
                                    const Rational& left, const Rational& right)
{
    if (left != right)
        report.failures.push_back({std::move(parameters), left.to_string(), right.to_string()});
}

/// Rows 0..n of Pascal's triangle.
inline std::vector<std::vector<Integer>> pascal_triangle(std::size_t n)
{
    std::vector<std::vector<Integer>> rows(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        rows[m].assign(m + 1, 1);
        for (std::size_t k = 1; k < m; ++k)
            rows[m][k] = rows[m - 1][k - 1] + rows[m - 1][k];
    }
    return rows;
}

} // namespace detail

/// (n+1)((n+1)^p - 1) = n(n+1)^p + (n+1)((n+1)^(p-1) - 1), per p as an exact
/// polynomial identity. This is the split that drives the S_p recurrence.
inline VerificationReport check_lemma_2_3(const IndexRange& p_range)
{
    detail::require_lower_bound(p_range, 1, "check_lemma_2_3");
    VerificationReport report{"lemma-2-3", p_range.to_string("p"), 0, {}};

    const Polynomial one(Rational(1));
    const Polynomial n = Polynomial::monomial(1);
    const Polynomial n_plus_1 = n + one;
    if (!p_range.empty()) {
        Polynomial pow_prev = one; // (n+1)^(p-1)
        for (long long q = 1; q < p_range.lo; ++q)
            pow_prev *= n_plus_1;
        for (long long p = p_range.lo; p <= p_range.hi; ++p) {
            const Polynomial pow_p = pow_prev * n_plus_1; // (n+1)^p
            const Polynomial left = n_plus_1 * (pow_p - one);
            const Polynomial right = n * pow_p + n_plus_1 * (pow_prev - one);
            detail::record_poly_failure(report, "p=" + std::to_string(p), left, right);
            ++report.checked;
            pow_prev = pow_p;
        }
    }
    return report;
}

/// sum_{i=1}^{p} C(p+1, i-1) n^i = n((n+1)^(p+1) - n^p(p+n+1)), per p exactly.
inline VerificationReport check_lemma_2_4(const IndexRange& p_range)
{
    detail::require_lower_bound(p_range, 1, "check_lemma_2_4");
    VerificationReport report{"lemma-2-4", p_range.to_string("p"), 0, {}};

    const Polynomial n = Polynomial::monomial(1);
    const Polynomial n_plus_1 = n + Polynomial(Rational(1));
    for (long long p = p_range.lo; p <= p_range.hi; ++p) {
        std::vector<Rational> lhs_coeffs(static_cast<std::size_t>(p) + 1, Rational(0));
        Integer binom = 1; // C(p+1, 0)
        for (long long i = 1; i <= p; ++i) {
            lhs_coeffs[static_cast<std::size_t>(i)] = Rational(binom);
            binom = binom * Integer(p + 2 - i) / Integer(i); // -> C(p+1, i)
        }
        const Polynomial left = Polynomial::from_coefficients(std::move(lhs_coeffs));

        Polynomial pow_np1 = Polynomial(Rational(1));
        for (long long q = 0; q < p + 1; ++q)
            pow_np1 *= n_plus_1; // (n+1)^(p+1)
        const Polynomial tail = Polynomial::monomial(static_cast<std::size_t>(p)) *
                                (n + Polynomial(Rational(Integer(p + 1)))); // n^p(p+n+1)
        const Polynomial right = n * (pow_np1 - tail);

        detail::record_poly_failure(report, "p=" + std::to_string(p), left, right);
        ++report.checked;
    }
    return report;
}

/// Gessel's reflection: sum_{i=0}^{m} C(m,i) B_{n+i} =
/// (-1)^(m+n) sum_{j=0}^{n} C(n,j) B_{m+j}, for all pairs 0 <= m, n <= max.
inline VerificationReport check_gessel(std::size_t m_max, std::size_t n_max,
                                       const BernoulliTable& table)
{
    VerificationReport report;
    report.identity = "gessel";
    report.range = "m in [0, " + std::to_string(m_max) + "], n in [0, " + std::to_string(n_max) + "]";

    table.ensure(m_max + n_max);
    const auto pascal = detail::pascal_triangle(std::max(m_max, n_max));
    for (std::size_t m = 0; m <= m_max; ++m) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            Rational left(0);
            for (std::size_t i = 0; i <= m; ++i)
                left += Rational(pascal[m][i]) * table.number(n + i);
            Rational right(0);
            for (std::size_t j = 0; j <= n; ++j)
                right += Rational(pascal[n][j]) * table.number(m + j);
            if ((m + n) % 2 == 1)
                right = -right;
            detail::record_rational_failure(
                report, "m=" + std::to_string(m) + ", n=" + std::to_string(n), left, right);
            ++report.checked;
        }
    }
    return report;
}

/// (-1)^m B_m = sum_{i=0}^{m} C(m, i) B_i for every m in the range.
inline VerificationReport check_eq3(const IndexRange& m_range, const BernoulliTable& table)
{
    detail::require_lower_bound(m_range, 0, "check_eq3");
    VerificationReport report{"eq-3", m_range.to_string("m"), 0, {}};

    if (!m_range.empty())
        table.ensure(static_cast<std::size_t>(m_range.hi));
    for (long long m = m_range.lo; m <= m_range.hi; ++m) {
        Rational left = table.number(static_cast<std::size_t>(m));
        if (m % 2 == 1)
            left = -left;
        Rational right(0);
        Integer binom = 1; // C(m, 0)
        for (long long i = 0; i <= m; ++i) {
            right += Rational(binom) * table.number(static_cast<std::size_t>(i));
            if (i < m)
                binom = binom * Integer(m - i) / Integer(i + 1); // -> C(m, i+1)
        }
        detail::record_rational_failure(report, "m=" + std::to_string(m), left, right);
        ++report.checked;
    }
    return report;
}

/// (-1)^(m-k) C(m,k) B_{m-k} = sum_{i=k}^{m} C(m,i) C(i,k) B_{m-i} for every
/// m in the range and every 0 <= k <= m.
inline VerificationReport check_theorem_3_4(const IndexRange& m_range, const BernoulliTable& table)
{
    detail::require_lower_bound(m_range, 1, "check_theorem_3_4");
    VerificationReport report{"theorem-3-4", m_range.to_string("m") + ", k in [0, m]", 0, {}};

    if (m_range.empty())
        return report;
    table.ensure(static_cast<std::size_t>(m_range.hi));
    const auto pascal = detail::pascal_triangle(static_cast<std::size_t>(m_range.hi));
    for (long long m = m_range.lo; m <= m_range.hi; ++m) {
        const auto mu = static_cast<std::size_t>(m);
        for (std::size_t k = 0; k <= mu; ++k) {
            Rational left = Rational(pascal[mu][k]) * table.number(mu - k);
            if ((mu - k) % 2 == 1)
                left = -left;
            Rational right(0);
            for (std::size_t i = k; i <= mu; ++i)
                right += Rational(pascal[mu][i] * pascal[i][k]) * table.number(mu - i);
            detail::record_rational_failure(
                report, "m=" + std::to_string(m) + ", k=" + std::to_string(k), left, right);
            ++report.checked;
        }
    }
    return report;
}

/// S_p(-(n+1)) = (-1)^(p+1) S_p(n) as an exact polynomial identity per p:
/// mirror symmetry about n = -1/2 for odd p, point symmetry about
/// (-1/2, 0) for even p.
inline VerificationReport check_symmetry(const IndexRange& p_range)
{
    detail::require_lower_bound(p_range, 1, "check_symmetry");
    VerificationReport report{"symmetry", p_range.to_string("p"), 0, {}};

    if (p_range.empty())
        return report;
    const auto family = detail::powersum_recursive_family(static_cast<unsigned>(p_range.hi));
    for (long long p = p_range.lo; p <= p_range.hi; ++p) {
        const Polynomial& s = family[static_cast<std::size_t>(p)];
        const Polynomial left = s.compose_affine(Rational(-1), Rational(-1));
        const Polynomial right = (p % 2 == 1) ? s : -s;
        detail::record_poly_failure(report, "p=" + std::to_string(p), left, right);
        ++report.checked;
    }
    return report;
}

/// B_m(1-x) = (-1)^m B_m(x) as an exact polynomial identity per m.
inline VerificationReport check_bernoulli_poly_symmetry(const IndexRange& m_range,
                                                        const BernoulliTable& table)
{
    detail::require_lower_bound(m_range, 0, "check_bernoulli_poly_symmetry");
    VerificationReport report{"bernoulli-symmetry", m_range.to_string("m"), 0, {}};

    if (!m_range.empty())
        table.ensure(static_cast<std::size_t>(m_range.hi));
    for (long long m = m_range.lo; m <= m_range.hi; ++m) {
        const Polynomial bm = bernoulli_polynomial(static_cast<std::size_t>(m), table);
        const Polynomial left = bm.compose_affine(Rational(-1), Rational(1));
        const Polynomial right = (m % 2 == 0) ? bm : -bm;
        detail::record_poly_failure(report, "m=" + std::to_string(m), left, right);
        ++report.checked;
    }
    return report;
}

/// Sweep ranges used by `verify all` and by the acceptance suite.
namespace default_ranges {
inline constexpr IndexRange lemma_2_3{1, 40};
inline constexpr IndexRange lemma_2_4{1, 40};
inline constexpr std::size_t gessel_max = 40;
inline constexpr IndexRange eq3{0, 80};
inline constexpr IndexRange theorem_3_4{1, 60};
inline constexpr IndexRange symmetry{1, 50};
inline constexpr IndexRange bernoulli_poly_symmetry{0, 60};
} // namespace default_ranges

/// Every identity at its default range, in a fixed order.
inline std::vector<VerificationReport> run_all_checks(const BernoulliTable& table)
{
    return {
        check_lemma_2_3(default_ranges::lemma_2_3),
        check_lemma_2_4(default_ranges::lemma_2_4),
        check_gessel(default_ranges::gessel_max, default_ranges::gessel_max, table),
        check_eq3(default_ranges::eq3, table),
        check_theorem_3_4(default_ranges::theorem_3_4, table),
        check_symmetry(default_ranges::symmetry),
        check_bernoulli_poly_symmetry(default_ranges::bernoulli_poly_symmetry, table),
    };
}

} // namespace faulhaber

#endif
