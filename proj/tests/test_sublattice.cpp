#include "doctest.h"
#include "fano10/discgroup.hpp"
#include "fano10/sublattice.hpp"
#include "test_support.hpp"

using namespace fano10;

namespace {

Lattice i222() { return lattice_odd_unimodular(22, 2); }

IntMat uv_basis(bool use_vprime) {
    // Columns: u = e1+e2 and either v' = e1+...+e22-3f1-3f2 or v = v'-u.
    IntMat b(24, 2);
    b(0, 0) = 1;
    b(1, 0) = 1;
    for (int i = 0; i < 22; ++i) b(i, 1) = 1;
    b(22, 1) = -3;
    b(23, 1) = -3;
    if (!use_vprime) {
        b(0, 1) -= 1;
        b(1, 1) -= 1;
    }
    return b;
}

}  // namespace

TEST_CASE("induced Gram matrices") {
    Lattice amb = i222();
    CHECK(induced_lattice(embed(amb, uv_basis(true))).gram() ==
          IntMat::from_rows({{2, 2}, {2, 4}}));
    CHECK(induced_lattice(embed(amb, uv_basis(false))).gram() == IntMat::diagonal({2, 2}));

    IntMat e1(24, 1);
    e1(0, 0) = 1;
    CHECK(induced_lattice(embed(amb, e1)).gram() == IntMat::from_rows({{1}}));
}

TEST_CASE("saturation") {
    Lattice amb = i222();
    IntMat twice_e1(24, 1);
    twice_e1(0, 0) = 2;
    SaturationResult s = saturation(embed(amb, twice_e1));
    CHECK(s.index == 2);
    IntMat e1(24, 1);
    e1(0, 0) = 1;
    CHECK(s.embedding.basis == e1);
}

TEST_CASE("orthogonal complements") {
    Lattice amb = i222();
    SublatticeEmbedding perp = orthogonal_complement(embed(amb, uv_basis(true)));
    Lattice vanishing = induced_lattice(perp);
    CHECK(vanishing.rank() == 22);
    CHECK(vanishing.is_even());
    CHECK(vanishing.signature() == std::pair<int, int>(20, 2));
    DiscriminantGroup d(vanishing);
    CHECK(d.invariant_factors() == std::vector<Int>{2, 2});
    CHECK(fano10::testing::has_half_half_presentation(d));

    Lattice plane = lattice_odd_unimodular(2, 0);
    IntMat e1(2, 1);
    e1(0, 0) = 1;
    SublatticeEmbedding c = orthogonal_complement(embed(plane, e1));
    IntMat e2(2, 1);
    e2(1, 0) = 1;
    CHECK(c.basis == e2);
}

TEST_CASE("primitivity") {
    Lattice amb = i222();
    CHECK(is_primitive(embed(amb, uv_basis(true))));
    IntMat twice_e1(24, 1);
    twice_e1(0, 0) = 2;
    CHECK(!is_primitive(embed(amb, twice_e1)));
}

TEST_CASE("property: saturation index law det = det_sat * index^2") {
    std::mt19937 rng(20240621);
    Lattice amb = i222();
    int done = 0;
    while (done < 200) {
        IntMat b = fano10::testing::random_matrix(rng, 24, 3, -2, 2);
        if (smith_normal_form(b).rank() != 3) continue;
        SublatticeEmbedding s{amb, b};
        Lattice orig = Lattice(b.transposed() * amb.gram() * b);
        if (determinant(orig.gram()) == 0) continue;
        SaturationResult sat = saturation(s);
        Lattice red = induced_lattice(sat.embedding);
        CHECK(orig.determinant() == red.determinant() * sat.index * sat.index);
        ++done;
    }
}

TEST_CASE("property: complement of complement has the same saturation") {
    std::mt19937 rng(20240622);
    Lattice amb = i222();
    int done = 0;
    while (done < 50) {
        IntMat b = fano10::testing::random_matrix(rng, 24, 2, -2, 2);
        if (smith_normal_form(b).rank() != 2) continue;
        SublatticeEmbedding s{amb, b};
        if (determinant(b.transposed() * amb.gram() * b) == 0) continue;
        SublatticeEmbedding cc = orthogonal_complement(orthogonal_complement(s));
        CHECK(cc.basis == saturation(s).embedding.basis);
        ++done;
    }
}

TEST_CASE("property: primitive sublattices of a unimodular lattice match complement determinants") {
    std::mt19937 rng(20240623);
    Lattice amb = i222();
    std::uniform_int_distribution<int> rk(1, 3);
    int done = 0;
    while (done < 50) {
        IntMat b = fano10::testing::random_matrix(rng, 24, rk(rng), -2, 2);
        if (smith_normal_form(b).rank() != b.cols()) continue;
        SublatticeEmbedding s = saturation(SublatticeEmbedding{amb, b}).embedding;
        IntMat gs = s.basis.transposed() * amb.gram() * s.basis;
        if (determinant(gs) == 0) continue;
        SublatticeEmbedding perp = orthogonal_complement(s);
        IntMat gp = perp.basis.transposed() * amb.gram() * perp.basis;
        CHECK(abs(determinant(gs)) == abs(determinant(gp)));
        ++done;
    }
}
