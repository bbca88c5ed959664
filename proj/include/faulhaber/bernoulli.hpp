#ifndef FAULHABER_BERNOULLI_HPP
#define FAULHABER_BERNOULLI_HPP

#include <faulhaber/numeric.hpp>
#include <faulhaber/polynomial.hpp>

#include <cstddef>
#include <map>
#include <mutex>
#include <ostream>
#include <vector>

namespace faulhaber {

/**
 * Memoized Bernoulli numbers B_0, B_1, ... under the recurrence
 *
 *   B_0 = 1,   sum_{i=0}^{m} C(m+1, i) * B_i = 0   for m >= 1,
 *
 * which forces B_1 = -1/2. Odd indices >= 3 are computed through the
 * recurrence like every other index; that they come out zero is asserted
 * by the verification suite, not short-circuited here.
 *
 * The table only grows, and growth is serialized, so concurrent reads of
 * overlapping ranges behave like a single fill.
 */
class BernoulliTable {
public:
    BernoulliTable() { values_.push_back(Rational(1)); }

    BernoulliTable(const BernoulliTable& other)
    {
        std::lock_guard<std::mutex> lock(other.mutex_);
        values_ = other.values_;
        offsets_ = other.offsets_;
    }

    BernoulliTable& operator=(const BernoulliTable&) = delete;

    /// B_m, extending the table as needed. Repeated calls return identical values.
    Rational number(std::size_t m) const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        fill_to(m);
        Rational value = values_[m];
        if (auto it = offsets_.find(m); it != offsets_.end())
            value += it->second;
        return value;
    }

    /// Highest index currently stored.
    std::size_t computed_up_to() const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        return values_.size() - 1;
    }

    void ensure(std::size_t m) const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        fill_to(m);
    }

    /**
     * Copy of this table reporting B_m + delta instead of B_m. A fault
     * injection hook for the verification suite: the offset applies to
     * reads only, so later recurrence fills stay pristine and exactly one
     * value is disturbed.
     */
    BernoulliTable perturbed(std::size_t m, const Rational& delta) const
    {
        BernoulliTable copy(*this);
        copy.offsets_[m] += delta;
        return copy;
    }

private:
    // Caller holds mutex_. B_M = -(1/(M+1)) * sum_{i=0}^{M-1} C(M+1, i) B_i.
    void fill_to(std::size_t m) const
    {
        while (values_.size() <= m) {
            const std::size_t M = values_.size();
            Rational sum(0);
            Integer binom = 1; // C(M+1, 0)
            for (std::size_t i = 0; i < M; ++i) {
                sum += Rational(binom) * values_[i];
                binom = binom * Integer(M + 1 - i) / Integer(i + 1); // -> C(M+1, i+1)
            }
            values_.push_back(-sum / Rational(Integer(M + 1)));
        }
    }

    mutable std::mutex mutex_;
    mutable std::vector<Rational> values_;
    std::map<std::size_t, Rational> offsets_;
};

inline Rational bernoulli_number(std::size_t m, const BernoulliTable& table)
{
    return table.number(m);
}

/// B_m(x) = sum_{k=0}^{m} C(m, k) * B_k * x^(m-k).
inline Polynomial bernoulli_polynomial(std::size_t m, const BernoulliTable& table)
{
    table.ensure(m);
    std::vector<Rational> coeffs(m + 1, Rational(0));
    Integer binom = 1; // C(m, 0)
    for (std::size_t k = 0; k <= m; ++k) {
        coeffs[m - k] = Rational(binom) * table.number(k);
        if (k < m)
            binom = binom * Integer(m - k) / Integer(k + 1); // -> C(m, k+1)
    }
    return Polynomial::from_coefficients(std::move(coeffs));
}

/// CSV rows "m,numerator,denominator" for B_0 .. B_max_m.
inline void write_bernoulli_csv(std::ostream& os, std::size_t max_m, const BernoulliTable& table)
{
    for (std::size_t m = 0; m <= max_m; ++m) {
        const Rational b = table.number(m);
        os << m << "," << b.num() << "," << b.den() << "\n";
    }
}

} // namespace faulhaber

#endif
