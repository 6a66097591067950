#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "spinrank/error.hpp"
#include "spinrank/ranking.hpp"

using namespace spinrank;

TEST_CASE("competition ranking shares positions and skips after ties") {
    Ranking r = make_ranking(std::vector<double>{5.0, 3.0, 5.0, 1.0});
    CHECK(r.positions == std::vector<std::uint64_t>{1, 3, 1, 4});

    Ranking all_tied = make_ranking(std::vector<double>{2.0, 2.0, 2.0});
    CHECK(all_tied.positions == std::vector<std::uint64_t>{1, 1, 1});

    Ranking skip = make_ranking(std::vector<double>{9.0, 7.0, 7.0, 7.0, 1.0});
    CHECK(skip.positions == std::vector<std::uint64_t>{1, 2, 2, 2, 5});
}

TEST_CASE("ranking rejects non-finite scores") {
    CHECK_THROWS_AS(make_ranking(std::vector<double>{1.0, std::nan("")}), NonFiniteError);
}

TEST_CASE("kendall endpoints") {
    std::vector<std::uint64_t> asc = {1, 2, 3, 4, 5};
    std::vector<std::uint64_t> desc = {5, 4, 3, 2, 1};
    CHECK(kendall(asc, asc) == doctest::Approx(1.0));
    CHECK(kendall(asc, desc) == doctest::Approx(-1.0));
}

TEST_CASE("kendall hand example with a tie") {
    // x: 1 2 2 4, y: 1 3 2 4. The (2,3) pair is tied in x and contributes 0.
    std::vector<std::uint64_t> x = {1, 2, 2, 4};
    std::vector<std::uint64_t> y = {1, 3, 2, 4};
    CHECK(kendall(x, y) == doctest::Approx(testutil::kendall_oracle(x, y)));
    CHECK(kendall(x, y) == doctest::Approx(5.0 / 6.0));  // 5 concordant of 6 pairs
}

TEST_CASE("kendall matches the double-loop oracle on random data") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> size_dist(2, 200);
        const std::size_t n = size_dist(rng);
        std::vector<std::uint64_t> x = testutil::random_permutation(n, rng);
        std::vector<std::uint64_t> y = testutil::random_permutation(n, rng);
        // Inject ties occasionally by clamping.
        if (trial % 3 == 0) {
            for (auto& v : x) {
                v = (v % 7) + 1;
            }
            for (auto& v : y) {
                v = (v % 5) + 1;
            }
        }
        CHECK(std::abs(kendall(x, y) - testutil::kendall_oracle(x, y)) <= 1e-12);
    }
}

TEST_CASE("kendall input validation") {
    std::vector<std::uint64_t> a = {1, 2, 3};
    std::vector<std::uint64_t> b = {1, 2};
    std::vector<std::uint64_t> single = {1};
    CHECK_THROWS_AS(kendall(a, b), LengthMismatchError);
    CHECK_THROWS_AS(kendall(single, single), TooSmallError);
}

TEST_CASE("kendall of rankings derived from scores") {
    std::vector<double> sp = {3.5, 1.0, 2.0, 9.0};
    std::vector<double> deg = {2.0, 4.0, 1.0, 3.0};
    Ranking rx = make_ranking(sp);
    Ranking ry = make_ranking(deg);
    CHECK(kendall(rx, ry) == doctest::Approx(testutil::kendall_oracle(rx.positions, ry.positions)));
}

TEST_CASE("distribution honors the class boundaries") {
    std::vector<double> scores = {0.5, 1.0, 1.0000001, 9.999, 10.0,
                                  99.0, 100.0, 999.0,    1000.0, 5000.0};
    DistributionReport rep = sp_distribution(scores);
    CHECK(rep.class_counts == std::array<std::size_t, 5>{2, 2, 2, 2, 2});
    for (double p : rep.class_percentages) {
        CHECK(p == doctest::Approx(20.0));
    }
    CHECK(rep.min == 0.5);
    CHECK(rep.max == 5000.0);
}

TEST_CASE("distribution summary statistics") {
    std::vector<double> scores = {1.0, 2.0, 3.0, 4.0};
    DistributionReport rep = sp_distribution(scores);
    CHECK(rep.mean == doctest::Approx(2.5));
    // Population standard deviation: sqrt(5)/2.
    CHECK(rep.std_dev == doctest::Approx(std::sqrt(1.25)));
}

TEST_CASE("duplicate counting uses exact equality") {
    DuplicateReport rep = duplicate_stats(std::vector<double>{1.0, 1.0, 2.0, 3.0, 3.0, 3.0});
    CHECK(rep.duplicates == 3);  // 6 values, 3 distinct
    CHECK(rep.percentage == doctest::Approx(50.0));

    DuplicateReport none = duplicate_stats(std::vector<double>{1.0, 1.0 + 1e-15});
    CHECK(none.duplicates == 0);
}
