#include "doctest.h"
#include "fano10/exactlin.hpp"
#include "test_support.hpp"

using namespace fano10;
using fano10::testing::random_matrix;
using fano10::testing::random_nondegenerate_symmetric;
using fano10::testing::random_unimodular;

namespace {

IntMat e8_gram() {
    IntMat g(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = 2;
    auto link = [&](int i, int j) { g(i, j) = g(j, i) = -1; };
    link(0, 1);
    link(1, 2);
    link(2, 3);
    link(3, 4);
    link(4, 5);
    link(5, 6);
    link(4, 7);
    return g;
}

}  // namespace

TEST_CASE("smith normal form on fixed inputs") {
    SUBCASE("identity") {
        SnfResult s = smith_normal_form(IntMat::identity(3));
        CHECK(s.d == IntMat::identity(3));
        CHECK(s.u == IntMat::identity(3));
        CHECK(s.v == IntMat::identity(3));
    }
    SUBCASE("already diagonal") {
        SnfResult s = smith_normal_form(IntMat::from_rows({{2, 0}, {0, 2}}));
        CHECK(s.invariant_factors() == std::vector<Int>{2, 2});
    }
    SUBCASE("E8 is unimodular") {
        SnfResult s = smith_normal_form(e8_gram());
        CHECK(s.invariant_factors() == std::vector<Int>(8, Int(1)));
    }
    SUBCASE("divisibility with mixed entries") {
        SnfResult s = smith_normal_form(IntMat::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
        CHECK(s.invariant_factors() == std::vector<Int>{2, 6, 12});
    }
}

TEST_CASE("determinant on fixed inputs") {
    CHECK(determinant(IntMat::from_rows({{2, 2}, {2, 4}})) == 4);
    CHECK(determinant(IntMat::diagonal({2, 2, 2})) == 8);
    CHECK(determinant(IntMat::from_rows({{2, 0, 0}, {0, 2, 1}, {0, 1, 3}})) == 10);
    CHECK(determinant(IntMat::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(IntMat(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(IntMat(2, 3)), NonSquare);
}

TEST_CASE("signature on fixed inputs") {
    CHECK(signature(IntMat::from_rows({{0, 1}, {1, 0}})) == std::pair<int, int>(1, 1));
    CHECK(signature(e8_gram()) == std::pair<int, int>(8, 0));

    std::vector<Int> d(24, Int(1));
    d[22] = -1;
    d[23] = -1;
    CHECK(signature(IntMat::diagonal(d)) == std::pair<int, int>(22, 2));

    CHECK_THROWS_AS(signature(IntMat::from_rows({{1, 1}, {1, 1}})), Degenerate);
    CHECK_THROWS_AS(signature(IntMat::from_rows({{0, 1}, {2, 0}})), NonSymmetric);
}

TEST_CASE("kernel bases are saturated and correct") {
    IntMat k1 = kernel_basis(IntMat::from_rows({{1, 1}}));
    CHECK(k1 == IntMat::from_rows({{1}, {-1}}));

    CHECK(kernel_basis(IntMat::identity(3)).cols() == 0);

    IntMat k2 = kernel_basis(IntMat::from_rows({{2, 4}}));
    CHECK(k2 == IntMat::from_rows({{2}, {-1}}));
}

TEST_CASE("hermite column form is a canonical basis") {
    IntMat h = hermite_column_form(IntMat::from_rows({{4, 2}, {0, 1}}));
    // Index-4 sublattice of Z^2; canonical basis (2,1), (0,2).
    CHECK(h == IntMat::from_rows({{2, 0}, {1, 2}}));

    IntMat wide = column_space_basis(IntMat::from_rows({{2, 4, 6}, {0, 0, 0}}));
    CHECK(wide.cols() == 1);
    CHECK(wide(0, 0) == 2);
}

TEST_CASE("property: SNF reconstruction with unimodular transforms") {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> size(1, 5);
    for (int t = 0; t < 200; ++t) {
        IntMat a = random_matrix(rng, size(rng), size(rng));
        SnfResult s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(abs(determinant(s.u)) == 1);
        CHECK(abs(determinant(s.v)) == 1);
        std::vector<Int> diag = s.diagonal();
        for (size_t i = 0; i + 1 < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        }
    }
}

TEST_CASE("property: signature is congruence-invariant and full-rank") {
    std::mt19937 rng(20240602);
    std::uniform_int_distribution<int> size(1, 5);
    for (int t = 0; t < 200; ++t) {
        int n = size(rng);
        IntMat g = random_nondegenerate_symmetric(rng, n);
        auto [p, q] = signature(g);
        CHECK(p + q == n);
        IntMat tmat = random_unimodular(rng, n);
        CHECK(signature(tmat.transposed() * g * tmat) == std::pair<int, int>(p, q));
    }
}

TEST_CASE("property: determinant matches SNF factors up to sign") {
    std::mt19937 rng(20240603);
    std::uniform_int_distribution<int> size(1, 6);
    for (int t = 0; t < 100; ++t) {
        int n = size(rng);
        IntMat a = random_matrix(rng, n, n);
        Int det = determinant(a);
        SnfResult s = smith_normal_form(a);
        if (s.rank() < n) {
            CHECK(det == 0);
            continue;
        }
        Int prod = 1;
        for (const Int& f : s.invariant_factors()) prod *= f;
        CHECK(abs(det) == prod);
    }
}

TEST_CASE("property: kernel bases are saturated") {
    std::mt19937 rng(20240604);
    std::uniform_int_distribution<int> size(1, 5);
    for (int t = 0; t < 100; ++t) {
        IntMat a = random_matrix(rng, size(rng), size(rng));
        IntMat k = kernel_basis(a);
        CHECK((a * k).is_zero());
        for (const Int& f : smith_normal_form(k).invariant_factors()) CHECK(f == 1);
    }
}
