#include <faulhaber/verify.hpp>

#include <doctest.h>

#include <stdexcept>

using faulhaber::BernoulliTable;
using faulhaber::IndexRange;
using faulhaber::Integer;
using faulhaber::Rational;
using faulhaber::VerificationReport;

TEST_CASE("index range parsing and counting")
{
    const IndexRange r = IndexRange::parse("3..17");
    CHECK(r.lo == 3);
    CHECK(r.hi == 17);
    CHECK(r.size() == 15);
    CHECK(IndexRange{5, 4}.empty());
    CHECK(IndexRange::parse("-2..2").lo == -2);
    CHECK_THROWS_AS(IndexRange::parse("12"), std::invalid_argument);
    CHECK_THROWS_AS(IndexRange::parse("a..b"), std::invalid_argument);
}

TEST_CASE("recurrence split identity")
{
    const auto report = faulhaber::check_lemma_2_3(IndexRange{1, 40});
    CHECK(report.passed());
    CHECK(report.checked == 40);

    const auto single = faulhaber::check_lemma_2_3(IndexRange{1, 1});
    CHECK(single.passed()); // both sides expand to n^2 + n

    const auto empty = faulhaber::check_lemma_2_3(IndexRange{4, 3});
    CHECK(empty.passed());
    CHECK(empty.checked == 0);

    CHECK_THROWS_AS(faulhaber::check_lemma_2_3(IndexRange{0, 5}), std::invalid_argument);
}

TEST_CASE("binomial power sum identity")
{
    const auto report = faulhaber::check_lemma_2_4(IndexRange{1, 40});
    CHECK(report.passed());
    CHECK(report.checked == 40);
    CHECK(faulhaber::check_lemma_2_4(IndexRange{1, 1}).passed()); // both sides are n
    CHECK(faulhaber::check_lemma_2_4(IndexRange{2, 2}).passed()); // both sides are 3n^2 + n
}

TEST_CASE("gessel identity")
{
    BernoulliTable table;

    // m=2, n=0: both sides come out 1/6
    const Rational lhs = table.number(0) + Rational(2) * table.number(1) + table.number(2);
    const Rational rhs = table.number(2);
    CHECK(lhs == Rational(1, 6));
    CHECK(rhs == Rational(1, 6));

    const auto reflexive = faulhaber::check_gessel(0, 0, table);
    CHECK(reflexive.passed());
    CHECK(reflexive.checked == 1);

    const auto sweep = faulhaber::check_gessel(40, 40, table);
    CHECK(sweep.passed());
    CHECK(sweep.checked == 1681);
}

TEST_CASE("alternating binomial sum identity")
{
    BernoulliTable table;
    // m = 1: 1/2 = 1 - 1/2
    CHECK(-table.number(1) == Rational(1) + table.number(1));

    const auto report = faulhaber::check_eq3(IndexRange{0, 80}, table);
    CHECK(report.passed());
    CHECK(report.checked == 81);
    CHECK(faulhaber::check_eq3(IndexRange{0, 0}, table).passed());
}

TEST_CASE("double binomial identity")
{
    BernoulliTable table;
    // m=2, k=0: B_2 = B_2 + 2 B_1 + B_0
    CHECK(table.number(2) == table.number(2) + Rational(2) * table.number(1) + table.number(0));
    // boundary k = m: both sides collapse to B_0 = 1
    CHECK(faulhaber::binomial(5, 5) * table.number(0) == Rational(1));

    const auto report = faulhaber::check_theorem_3_4(IndexRange{1, 60}, table);
    CHECK(report.passed());
    CHECK(report.checked == 1890);
    CHECK_THROWS_AS(faulhaber::check_theorem_3_4(IndexRange{0, 5}, table), std::invalid_argument);
}

TEST_CASE("power sum reflection symmetry")
{
    const auto report = faulhaber::check_symmetry(IndexRange{1, 50});
    CHECK(report.passed());
    CHECK(report.checked == 50);

    // p = 1: S_1(-(n+1)) = S_1(n); p = 2: S_2(-(n+1)) = -S_2(n)
    const auto s1 = faulhaber::powersum_recursive(1);
    CHECK(s1.compose_affine(Rational(-1), Rational(-1)) == s1);
    const auto s2 = faulhaber::powersum_recursive(2);
    CHECK(s2.compose_affine(Rational(-1), Rational(-1)) == -s2);
}

TEST_CASE("bernoulli polynomial reflection symmetry")
{
    BernoulliTable table;
    const auto report = faulhaber::check_bernoulli_poly_symmetry(IndexRange{0, 60}, table);
    CHECK(report.passed());
    CHECK(report.checked == 61);

    // m = 1: 1 - x - 1/2 = -(x - 1/2)
    const auto b1 = faulhaber::bernoulli_polynomial(1, table);
    CHECK(b1.compose_affine(Rational(-1), Rational(1)) == -b1);
    const auto b0 = faulhaber::bernoulli_polynomial(0, table);
    CHECK(b0.compose_affine(Rational(-1), Rational(1)) == b0);
}

TEST_CASE("run_all covers every identity at the default ranges")
{
    BernoulliTable table;
    const auto reports = faulhaber::run_all_checks(table);
    REQUIRE(reports.size() == 7);
    for (const auto& report : reports) {
        CAPTURE(report.identity);
        CHECK(report.passed());
        CHECK(report.checked > 0);
    }
    CHECK(reports[0].identity == "lemma-2-3");
    CHECK(reports[4].identity == "theorem-3-4");
    CHECK(reports[2].checked == 1681);
    CHECK(reports[4].checked == 1890);
}

TEST_CASE("a perturbed table is caught by the sensitive identities")
{
    BernoulliTable table;
    table.ensure(30);

    for (std::size_t m : {0u, 1u, 4u, 7u, 12u}) {
        const BernoulliTable tweaked = table.perturbed(m, Rational(1));
        const auto eq3 = faulhaber::check_eq3(IndexRange{0, 30}, tweaked);
        CAPTURE(m);
        CHECK_FALSE(eq3.passed());
        const auto t34 = faulhaber::check_theorem_3_4(IndexRange{1, 30}, tweaked);
        CHECK_FALSE(t34.passed());
    }
}

TEST_CASE("failure records carry both sides verbatim")
{
    BernoulliTable table;
    const BernoulliTable tweaked = table.perturbed(2, Rational(1));
    const auto report = faulhaber::check_eq3(IndexRange{0, 10}, tweaked);
    REQUIRE_FALSE(report.passed());
    const auto& failure = report.failures.front();
    CHECK(!failure.parameters.empty());
    CHECK(!failure.left.empty());
    CHECK(!failure.right.empty());
    CHECK(failure.left != failure.right);
    CHECK(report.checked == 11); // failures do not stop the sweep
}

TEST_CASE("report json shape")
{
    BernoulliTable table;
    const auto report = faulhaber::check_eq3(IndexRange{0, 3}, table);
    const auto json = report.to_json();
    CHECK(json["identity"] == "eq-3");
    CHECK(json["checked"] == 4);
    CHECK(json["failures"].is_array());
    CHECK(json["failures"].empty());
    CHECK(json.dump().find("\"identity\"") == 1); // ordered keys, identity first
}
