#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crtool/linalg.hpp"

using namespace crtool;

TEST_CASE("rank over Q") {
    QMatrix m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(m) == 2);
    QMatrix id = {{1, 0}, {0, 1}};
    CHECK(rank(id) == 2);
    QMatrix zero = {{0, 0}, {0, 0}};
    CHECK(rank(zero) == 0);
}

TEST_CASE("rank over Q(i)") {
    Gaussian i = Gaussian::i();
    CMatrix m = {{Gaussian(1), i}, {i, Gaussian(-1)}};  // row2 = i * row1
    CHECK(rank(m) == 1);
    CMatrix m2 = {{Gaussian(1), i}, {i, Gaussian(1)}};
    CHECK(rank(m2) == 2);
}

TEST_CASE("nullspace vectors satisfy m x = 0") {
    QMatrix m = {{1, 2, 3, 0}, {0, 1, 1, -1}};
    auto basis = nullspace(m);
    CHECK(basis.size() == 2);
    for (const auto& v : basis) {
        for (const auto& row : m) {
            Rational dot = 0;
            for (size_t j = 0; j < row.size(); ++j) dot += row[j] * v[j];
            CHECK(dot == 0);
        }
    }
    CHECK(rank(m) + basis.size() == 4);
}

TEST_CASE("solve consistent and inconsistent systems") {
    QMatrix m = {{2, 1}, {1, -1}};
    auto x = solve(m, {Rational(5), Rational(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);

    QMatrix sing = {{1, 1}, {2, 2}};
    CHECK(!solve(sing, {Rational(1), Rational(3)}).has_value());
    auto y = solve(sing, {Rational(1), Rational(2)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == 1);
}

TEST_CASE("random rank-nullity") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        size_t rows = 2 + rng() % 4, cols = 2 + rng() % 5;
        QMatrix m(rows, QVector(cols));
        for (auto& row : m)
            for (auto& v : row) v = Rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
        CHECK(rank(m) + nullspace(m).size() == cols);
    }
}
