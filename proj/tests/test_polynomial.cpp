#include <faulhaber/polynomial.hpp>

#include <doctest.h>

#include <random>
#include <stdexcept>

using faulhaber::Polynomial;
using faulhaber::Rational;
using faulhaber::poly_gcd;

namespace {

Polynomial poly(std::vector<Rational> coeffs)
{
    return Polynomial::from_coefficients(std::move(coeffs));
}

// S_2 as an explicit coefficient list: n/6 + n^2/2 + n^3/3.
const Polynomial s2 = poly({Rational(0), Rational(1, 6), Rational(1, 2), Rational(1, 3)});
// S_3: n^2/4 + n^3/2 + n^4/4.
const Polynomial s3 = poly({Rational(0), Rational(0), Rational(1, 4), Rational(1, 2), Rational(1, 4)});

Polynomial random_poly(std::mt19937& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : coeffs)
        c = Rational(num(rng), den(rng));
    return Polynomial::from_coefficients(std::move(coeffs));
}

} // namespace

TEST_CASE("polynomial arithmetic examples")
{
    const Polynomial n_plus_1 = poly({Rational(1), Rational(1)});
    CHECK(n_plus_1 * n_plus_1 == poly({Rational(1), Rational(2), Rational(1)}));

    const Polynomial p = poly({Rational(3), Rational(0), Rational(-2, 7)});
    CHECK(p + Polynomial() == p);

    const Polynomial s1 = poly({Rational(0), Rational(1, 2), Rational(1, 2)});
    CHECK(s1.scale(Rational(2)) == poly({Rational(0), Rational(1), Rational(1)}));
}

TEST_CASE("canonical form")
{
    CHECK(poly({Rational(0), Rational(0)}).is_zero());
    CHECK(poly({Rational(1), Rational(2), Rational(0)}).degree() == 1);
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial(Rational(0)).is_zero());
}

TEST_CASE("evaluation")
{
    CHECK(s2.evaluate(Rational(3)) == Rational(14));
    CHECK(s2.evaluate(Rational(-1, 2)) == Rational(0));
    const Polynomial p = poly({Rational(5, 7), Rational(1), Rational(3)});
    CHECK(p.evaluate(Rational(0)) == Rational(5, 7));
}

TEST_CASE("affine composition")
{
    const Polynomial n_squared = Polynomial::monomial(2);
    CHECK(n_squared.compose_affine(Rational(-1), Rational(-1)) ==
          poly({Rational(1), Rational(2), Rational(1)}));

    const Polynomial p = poly({Rational(2), Rational(-3), Rational(0), Rational(5)});
    CHECK(p.compose_affine(Rational(1), Rational(0)) == p);

    // S_3 is a fixed point of n -> -(n+1)
    CHECK(s3.compose_affine(Rational(-1), Rational(-1)) == s3);
}

TEST_CASE("evaluate and compose_affine commute on random inputs")
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> small(-6, 6);
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = random_poly(rng, 7);
        const Rational a(small(rng), 3);
        const Rational b(small(rng), 2);
        const Rational x(small(rng), 5);
        CHECK(p.compose_affine(a, b).evaluate(x) == p.evaluate(a * x + b));
    }
}

TEST_CASE("derivative")
{
    CHECK(Polynomial(Rational(42)).derivative().is_zero());
    CHECK(Polynomial().derivative().is_zero());
    // derivative of expanded S_2 is n^2 + n + 1/6
    CHECK(s2.derivative() == poly({Rational(1, 6), Rational(1), Rational(1)}));
}

TEST_CASE("degree is additive under multiplication")
{
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_poly(rng, 6);
        Polynomial q = random_poly(rng, 6);
        if (p.is_zero() || q.is_zero())
            continue;
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("division")
{
    std::mt19937 rng(37);
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = random_poly(rng, 8);
        Polynomial d = random_poly(rng, 4);
        if (d.is_zero())
            d = Polynomial::monomial(1);
        const auto [quotient, remainder] = p.divmod(d);
        CHECK(quotient * d + remainder == p);
        CHECK(remainder.degree() < d.degree());
    }
    CHECK_THROWS_AS(s2.divmod(Polynomial()), std::domain_error);
    // S_2(1) = 1, so n - 1 cannot divide it
    CHECK_THROWS_AS(s2.divide_exact(poly({Rational(-1), Rational(1)})), std::domain_error);
    // but n + 1 does, exactly
    CHECK(s2.divide_exact(poly({Rational(1), Rational(1)})) * poly({Rational(1), Rational(1)}) ==
          s2);
}

TEST_CASE("gcd examples")
{
    // shared factors of n^2(n+1)^2 and n(n+1)
    const Polynomial quartic = poly({Rational(0), Rational(0), Rational(1), Rational(2), Rational(1)});
    const Polynomial quadratic = poly({Rational(0), Rational(1), Rational(1)});
    CHECK(poly_gcd(quartic, quadratic) == quadratic);

    const Polynomial p = poly({Rational(3), Rational(0), Rational(6)});
    CHECK(poly_gcd(p, Polynomial()) == p.monic());
    CHECK(poly_gcd(p, Polynomial(Rational(1))) == Polynomial(Rational(1)));
    CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), std::invalid_argument);
}

TEST_CASE("gcd divides both arguments exactly")
{
    std::mt19937 rng(41);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_poly(rng, 5);
        Polynomial q = random_poly(rng, 5);
        const Polynomial common = random_poly(rng, 3);
        if (!common.is_zero()) {
            p = p * common;
            q = q * common;
        }
        if (p.is_zero() && q.is_zero())
            continue;
        const Polynomial g = poly_gcd(p, q);
        CHECK(p.divmod(g).remainder.is_zero());
        CHECK(q.divmod(g).remainder.is_zero());
        if (!common.is_zero())
            CHECK(g.divmod(common.monic()).remainder.is_zero());
    }
}

TEST_CASE("textual form")
{
    CHECK(s3.to_string() == "1/4*n^4 + 1/2*n^3 + 1/4*n^2");
    CHECK(s2.to_string() == "1/3*n^3 + 1/2*n^2 + 1/6*n");
    CHECK(Polynomial().to_string() == "0");
    CHECK(poly({Rational(-1), Rational(0), Rational(2)}).to_string() == "2*n^2 - 1");
    CHECK(poly({Rational(1, 2), Rational(-3)}).to_string() == "-3*n + 1/2");
    CHECK(s2.coefficient_strings() == std::vector<std::string>{"0", "1/6", "1/2", "1/3"});
}

TEST_CASE("primitive integer coefficients")
{
    CHECK(s2.primitive_integer_coefficients() ==
          std::vector<faulhaber::Integer>{0, 1, 3, 2});
    // scaling by any nonzero rational, including negatives, does not change
    // the primitive form (leading coefficient is kept positive)
    CHECK(s2.scale(Rational(-2, 5)).primitive_integer_coefficients() ==
          std::vector<faulhaber::Integer>{0, 1, 3, 2});
}
