#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "fixtures.hpp"

using bott::BottMatrix;

TEST_CASE("sweep counts and verifies every matrix of the dimension") {
    bott::SweepSummary two = bott::run_sweep(2);
    CHECK(two.n == 2);
    CHECK(two.total == 2);
    CHECK(two.orientable == 1);
    CHECK(two.decomposition_failures.empty());
    CHECK(two.w1_mismatches == 0);
    CHECK(bott::sweep_clean(two));

    bott::SweepSummary four = bott::run_sweep(4, 2);
    CHECK(four.total == 64);
    CHECK(four.orientable == 8);
    CHECK(bott::sweep_clean(four));

    bott::SweepSummary five = bott::run_sweep(5);
    CHECK(five.total == 1024);
    CHECK(five.orientable == 64);
    CHECK(bott::sweep_clean(five));
}

TEST_CASE("sweep results do not depend on the worker count") {
    bott::SweepSummary serial = bott::run_sweep(4, 1);
    bott::SweepSummary parallel = bott::run_sweep(4, 8);
    CHECK(serial.total == parallel.total);
    CHECK(serial.orientable == parallel.orientable);
    CHECK(serial.w1_mismatches == parallel.w1_mismatches);
    CHECK(serial.decomposition_failures == parallel.decomposition_failures);
}

TEST_CASE("sweep honors the enumeration cap") {
    CHECK_THROWS_AS(bott::run_sweep(9), std::invalid_argument);
}

TEST_CASE("summary rendering") {
    bott::SweepSummary s = bott::run_sweep(3);
    std::string text = bott::render_summary(s);
    CHECK(text.find("n = 3") != std::string::npos);
    CHECK(text.find("total = 8") != std::string::npos);
    CHECK(text.find("orientable = 2") != std::string::npos);
    CHECK(text.find("decomposition failures = 0") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("summary rendering reports fabricated failures verbatim") {
    bott::SweepSummary s;
    s.n = 2;
    s.total = 2;
    s.decomposition_failures.push_back({1, fixtures::klein(), 1});
    std::string text = bott::render_summary(s);
    CHECK(text.find("FAIL index 1 k=1") != std::string::npos);
    CHECK(text.find("01\n00\n") != std::string::npos);
    CHECK(text.find("lhs = ") != std::string::npos);
    CHECK(text.find("rhs = ") != std::string::npos);
    CHECK_FALSE(bott::sweep_clean(s));
}

TEST_CASE("report rendering shows the support subsets and hides the rest") {
    BottMatrix ex = fixtures::example7();
    std::string text = bott::render_report(ex, bott::decomposition_sum(ex, 2));
    CHECK(text.find("w4 = x1*x2*x3*x4 + x1*x2*x3*x5 + x1*x3*x4*x5 + x2*x3*x4*x5") !=
          std::string::npos);
    CHECK(text.find("w4[1,2,3,4] = x1*x2*x3*x4") != std::string::npos);
    CHECK(text.find("w4[1,2,4,5] = 0") != std::string::npos);
    CHECK(text.find("w4[2,3,4,5] = x2*x3*x4*x5") != std::string::npos);
    CHECK(text.find("30 more subsets, each contributing 0") != std::string::npos);
    CHECK(text.find("w4[4,5,6,7]") == std::string::npos);
    CHECK(text.find("equal: yes") != std::string::npos);
}

TEST_CASE("report rendering flags fabricated disagreement") {
    bott::DecompositionReport bad;
    bad.n = 2;
    bad.k = 1;
    bad.lhs = bott::Z2Polynomial::from_terms({bott::monomial_of({1, 2})});
    bad.rhs = bott::Z2Polynomial::zero();
    bad.subsets.push_back({{1, 2}, bott::Z2Polynomial::zero()});
    bad.equal = false;
    std::string text = bott::render_report(fixtures::klein(), bad);
    CHECK(text.find("equal: no") != std::string::npos);
    CHECK(text.find("w2 = x1*x2") != std::string::npos);
    CHECK(text.find("sum = 0") != std::string::npos);
}
