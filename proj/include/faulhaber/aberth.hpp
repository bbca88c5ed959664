#ifndef FAULHABER_ABERTH_HPP
#define FAULHABER_ABERTH_HPP

#include <faulhaber/bigfloat.hpp>
#include <faulhaber/polynomial.hpp>

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace faulhaber {

/// One simultaneous-iteration root approximation. error_radius is the
/// a-posteriori bound degree * (|p(z)| + horner rounding) / |p'(z)|, which
/// always encloses at least one true root of p around z.
struct ComplexRootEstimate {
    BigFloat re;
    BigFloat im;
    BigFloat error_radius;
};

/// Thrown when the simultaneous iteration fails to converge within the
/// iteration cap; carries the best iterates reached.
class solver_error : public std::runtime_error {
public:
    solver_error(const std::string& message, std::vector<BigComplex> best)
        : std::runtime_error(message), best_iterates_(std::move(best))
    {
    }

    const std::vector<BigComplex>& best_iterates() const { return best_iterates_; }

private:
    std::vector<BigComplex> best_iterates_;
};

namespace detail {

inline BigComplex horner(const std::vector<BigComplex>& coeffs, const BigComplex& z)
{
    BigComplex value;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        value = value * z + coeffs[i];
    return value;
}

/// Upper bound for the rounding error of the Horner evaluation at z. Once
/// the computed residual sits below this, no further digit is attainable at
/// the working precision.
inline BigFloat horner_noise_floor(const std::vector<BigComplex>& coeffs, const BigComplex& z,
                                   unsigned precision_bits)
{
    const BigFloat az = z.abs();
    BigFloat magnitude = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        magnitude = magnitude * az + coeffs[i].abs();
    return boost::multiprecision::ldexp(magnitude * (4 * static_cast<long>(coeffs.size())),
                                        -static_cast<long>(precision_bits));
}

} // namespace detail

/**
 * All complex roots of p by the Aberth-Ehrlich simultaneous iteration at the
 * requested working precision. Intended for square-free input with simple
 * roots (the root-analysis pipeline always deflates first); the iteration is
 * deterministic given precision_bits, since the initial points sit on a
 * circle of radius 1 + max|c_i / c_d| at equally spaced angles with a fixed
 * offset. Roots are returned ordered by (re, im).
 */
inline std::vector<ComplexRootEstimate> complex_roots(const Polynomial& p,
                                                      unsigned precision_bits,
                                                      unsigned iteration_cap = 1000)
{
    if (precision_bits < 64)
        throw std::invalid_argument("complex_roots: precision_bits must be >= 64");
    if (p.degree() < 1)
        throw std::invalid_argument("complex_roots: degree must be >= 1");

    // The default-precision knob is process-global in the MPFR backend, so
    // the solver phase is serialized; concurrent callers stay correct and
    // deterministic. Every value the solver returns carries its own
    // precision, so results can be consumed outside the lock.
    static std::mutex solver_mutex;
    std::lock_guard<std::mutex> lock(solver_mutex);
    PrecisionGuard guard(precision_bits);
    using boost::multiprecision::ldexp;

    const auto d = static_cast<std::size_t>(p.degree());
    std::vector<BigComplex> coeffs(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        coeffs[i] = BigComplex(to_bigfloat(p.coeff(i)));
    std::vector<BigComplex> deriv(d);
    for (std::size_t i = 1; i <= d; ++i)
        deriv[i - 1] = BigComplex(coeffs[i].re * i, coeffs[i].im * i);

    // Cauchy-style inclusion radius for the initial circle.
    const BigFloat lead = coeffs[d].abs();
    BigFloat radius = 0;
    for (std::size_t i = 0; i < d; ++i) {
        BigFloat ratio = coeffs[i].abs() / lead;
        if (ratio > radius)
            radius = ratio;
    }
    radius += 1;

    const BigFloat pi = 4 * atan(BigFloat(1));
    std::vector<BigComplex> z(d);
    for (std::size_t k = 0; k < d; ++k) {
        const BigFloat angle = (2 * pi * static_cast<long>(k) + pi / 2) / static_cast<long>(d);
        z[k] = BigComplex(radius * cos(angle), radius * sin(angle));
    }

    const BigFloat eps = ldexp(BigFloat(1), -static_cast<long>(precision_bits) + 6);
    const BigFloat nudge = ldexp(BigFloat(1), -static_cast<long>(precision_bits) / 2);

    std::vector<bool> settled(d, false);
    bool all_settled = false;
    for (unsigned iter = 0; iter < iteration_cap && !all_settled; ++iter) {
        all_settled = true;
        for (std::size_t k = 0; k < d; ++k) {
            const BigComplex pz = detail::horner(coeffs, z[k]);
            // residual at the rounding-noise floor: converged as far as the
            // working precision can tell, so stop dithering around the root
            if (pz.abs() <= detail::horner_noise_floor(coeffs, z[k], precision_bits)) {
                settled[k] = true;
                continue;
            }
            const BigComplex dz = detail::horner(deriv, z[k]);
            if (dz.is_zero()) {
                // stationary point; step off it and retry next sweep
                z[k] += BigComplex(nudge * radius, nudge * radius);
                settled[k] = false;
                all_settled = false;
                continue;
            }
            const BigComplex newton = pz / dz;
            BigComplex repulsion;
            bool collision = false;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == k)
                    continue;
                const BigComplex diff = z[k] - z[j];
                if (diff.is_zero()) {
                    collision = true;
                    break;
                }
                repulsion += BigComplex(BigFloat(1)) / diff;
            }
            if (collision) {
                z[k] += BigComplex(nudge * radius * static_cast<long>(k + 1), nudge * radius);
                settled[k] = false;
                all_settled = false;
                continue;
            }
            const BigComplex denom = BigComplex(BigFloat(1)) - newton * repulsion;
            const BigComplex step = denom.is_zero() ? newton : newton / denom;
            z[k] -= step;
            settled[k] = step.abs() <= eps * (1 + z[k].abs());
            if (!settled[k])
                all_settled = false;
        }
    }
    if (!all_settled)
        throw solver_error("complex_roots: no convergence within " +
                               std::to_string(iteration_cap) + " iterations",
                           z);

    std::vector<ComplexRootEstimate> out(d);
    for (std::size_t k = 0; k < d; ++k) {
        const BigComplex pz = detail::horner(coeffs, z[k]);
        const BigComplex dz = detail::horner(deriv, z[k]);
        if (dz.is_zero())
            throw solver_error("complex_roots: derivative vanished at an iterate", z);
        // The computed residual cancels almost completely at a converged
        // iterate, so pad it with the evaluation noise bound; otherwise the
        // radius can dip below the true distance.
        const BigFloat rounding = detail::horner_noise_floor(coeffs, z[k], precision_bits);
        out[k].re = z[k].re;
        out[k].im = z[k].im;
        out[k].error_radius = static_cast<long>(d) * (pz.abs() + rounding) / dz.abs();
    }
    std::sort(out.begin(), out.end(), [](const ComplexRootEstimate& a, const ComplexRootEstimate& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
    return out;
}

} // namespace faulhaber

#endif
