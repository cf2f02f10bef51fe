#include "doctest.h"
#include "fano10/lattice.hpp"
#include "test_support.hpp"

using namespace fano10;

namespace {

std::vector<Int> i222_coords(std::initializer_list<std::pair<int, long>> terms) {
    std::vector<Int> c(24);
    for (auto [i, x] : terms) c[i] = x;
    return c;
}

// u = e1+e2 and the characteristic vector e1+...+e22-3f1-3f2.
LatticeVector u_vec(const Lattice& i222) {
    return vec(i222, i222_coords({{0, 1}, {1, 1}}));
}
LatticeVector vprime_vec(const Lattice& i222) {
    std::vector<Int> c(24, Int(1));
    c[22] = -3;
    c[23] = -3;
    return vec(i222, c);
}

}  // namespace

TEST_CASE("standard lattices match their invariant table") {
    Lattice u = lattice_U();
    CHECK(u.gram() == IntMat::from_rows({{0, 1}, {1, 0}}));
    CHECK(u.signature() == std::pair<int, int>(1, 1));
    CHECK(u.determinant() == -1);
    CHECK(u.is_even());

    Lattice a1 = lattice_A1();
    CHECK(a1.gram() == IntMat::from_rows({{2}}));
    CHECK(a1.signature() == std::pair<int, int>(1, 0));
    CHECK(a1.determinant() == 2);
    CHECK(a1.is_even());

    Lattice e8 = lattice_E8();
    CHECK(e8.signature() == std::pair<int, int>(8, 0));
    CHECK(e8.determinant() == 1);
    CHECK(e8.is_even());

    Lattice i222 = lattice_odd_unimodular(22, 2);
    CHECK(i222.signature() == std::pair<int, int>(22, 2));
    CHECK(abs(i222.determinant()) == 1);
    CHECK(!i222.is_even());
}

TEST_CASE("direct sums") {
    Lattice two_a1 = direct_sum({lattice_A1(), lattice_A1()});
    CHECK(two_a1.gram() == IntMat::diagonal({2, 2}));
    CHECK(two_a1.determinant() == 4);

    Lattice lam = direct_sum({lattice_E8(), lattice_E8(), lattice_U(), lattice_U(),
                              lattice_A1(), lattice_A1()});
    CHECK(lam.rank() == 22);
    // Two negative eigenvalue signs, so the determinant is +4.
    CHECK(lam.determinant() == 4);
    CHECK(lam.is_even());
    CHECK(lam.signature() == std::pair<int, int>(20, 2));

    CHECK(direct_sum({lattice_U()}) == lattice_U());
}

TEST_CASE("divisibility") {
    Lattice a1 = lattice_A1();
    CHECK(divisibility(vec(a1, {1})) == 2);

    Lattice u = lattice_U();
    CHECK(divisibility(vec(u, {1, 0})) == 1);
    for (long m = 1; m <= 5; ++m) CHECK(divisibility(vec(u, {1, m})) == 1);

    CHECK_THROWS_AS(divisibility(vec(u, {0, 0})), ZeroVector);
}

TEST_CASE("characteristic vectors") {
    Lattice i222 = lattice_odd_unimodular(22, 2);
    CHECK(is_characteristic(vprime_vec(i222)));

    CHECK(is_characteristic(vec(lattice_U(), {0, 0})));
    CHECK(!is_characteristic(vec(lattice_odd_unimodular(2, 0), {1, 0})));
}

TEST_CASE("inner products in the rank-24 odd lattice") {
    Lattice i222 = lattice_odd_unimodular(22, 2);
    LatticeVector u = u_vec(i222);
    LatticeVector vp = vprime_vec(i222);
    CHECK(inner(u, vp) == 2);
    CHECK(norm(u) == 2);
    CHECK(norm(vp) == 4);

    Lattice other = lattice_U();
    CHECK_THROWS_AS(inner(u, vec(other, {1, 0})), OwnerMismatch);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Lattice(IntMat(2, 3)), NonSquare);
    CHECK_THROWS_AS(Lattice(IntMat::from_rows({{0, 1}, {2, 0}})), NonSymmetric);
}

TEST_CASE("property: divisibility divides the norm") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> size(1, 5);
    std::uniform_int_distribution<int> coord(-5, 5);
    int done = 0;
    while (done < 200) {
        int n = size(rng);
        Lattice l(fano10::testing::random_nondegenerate_symmetric(rng, n));
        std::vector<Int> c(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            c[i] = coord(rng);
            if (c[i] != 0) zero = false;
        }
        if (zero) continue;
        LatticeVector w = vec(l, c);
        if (norm(w) == 0 && l.gram().mul_vec(c) == std::vector<Int>(n)) continue;
        CHECK(norm(w) % divisibility(w) == 0);
        ++done;
    }
}

TEST_CASE("property: characteristic vectors satisfy the defining congruence") {
    std::mt19937 rng(20240612);
    Lattice i222 = lattice_odd_unimodular(22, 2);
    LatticeVector vp = vprime_vec(i222);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int t = 0; t < 200; ++t) {
        std::vector<Int> c(24);
        for (int i = 0; i < 24; ++i) c[i] = coord(rng);
        LatticeVector y = vec(i222, c);
        Int diff = inner(vp, y) - norm(y);
        CHECK(diff % 2 == 0);
    }
}
