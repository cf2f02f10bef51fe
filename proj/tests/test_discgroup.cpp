#include <algorithm>

#include "doctest.h"
#include "fano10/discgroup.hpp"
#include "test_support.hpp"

using namespace fano10;
using fano10::testing::has_half_half_presentation;

namespace {

Lattice vanishing_lattice() {
    return direct_sum({lattice_E8(), lattice_E8(), lattice_U(), lattice_U(),
                       lattice_A1(), lattice_A1()});
}

}  // namespace

TEST_CASE("discriminant groups of small lattices") {
    DiscriminantGroup two_a1(direct_sum({lattice_A1(), lattice_A1()}));
    CHECK(two_a1.invariant_factors() == std::vector<Int>{2, 2});
    CHECK(has_half_half_presentation(two_a1));

    DiscriminantGroup u(lattice_U());
    CHECK(u.invariant_factors().empty());
    CHECK(u.order() == 1);

    DiscriminantGroup lam2(Lattice(IntMat::diagonal({2, 2})));
    CHECK(lam2.invariant_factors() == std::vector<Int>{2, 2});
    CHECK(lam2.b({1, 0}, {1, 0}) == Rat(1, 2));
    CHECK(lam2.b({0, 1}, {0, 1}) == Rat(1, 2));
    CHECK(lam2.b({1, 0}, {0, 1}) == 0);
    CHECK(lam2.q({1, 0}) == Rat(1, 2));
    CHECK(lam2.q({1, 1}) == 1);

    CHECK_THROWS_AS(DiscriminantGroup(Lattice(IntMat::from_rows({{1, 1}, {1, 1}}))), Degenerate);
    CHECK_THROWS_AS(DiscriminantGroup(lattice_odd_unimodular(1, 0)).q({}), DomainError);
}

TEST_CASE("vector classes") {
    Lattice a1 = lattice_A1();
    DiscriminantGroup d(a1);
    CHECK(d.vector_class(vec(a1, {1})) == std::vector<Int>{1});
    CHECK(d.vector_class(vec(a1, {2})) == std::vector<Int>{1});  // div(2e) = 4, class (2e)/4
    CHECK(d.vector_class(vec(a1, {1}), 1) == std::vector<Int>{0});

    Lattice u = lattice_U();
    DiscriminantGroup du(u);
    CHECK(du.vector_class(vec(u, {1, 0})).empty());

    CHECK_THROWS_AS(d.vector_class(vec(a1, {1}), 4), InvalidParameter);
}

TEST_CASE("isotropic subgroup enumeration") {
    DiscriminantGroup trivial(lattice_U());
    std::vector<FiniteSubgroup> t = isotropic_subgroups(trivial);
    REQUIRE(t.size() == 1);
    CHECK(t[0].elements.size() == 1);

    // Two copies of the (Z/2)^2 form diag(1/2,1/2): exactly two order-4
    // isotropic subgroups inject into both factors (graphs of the two
    // isometries of the form).
    Lattice l2(IntMat::diagonal({2, 2}));
    DiscriminantGroup d2(l2);
    std::vector<FiniteSubgroup> glues = isotropic_subgroups(d2, d2, true);
    int order4 = 0;
    for (const auto& h : glues)
        if (h.elements.size() == 4) ++order4;
    CHECK(order4 == 2);
    // The identity graph is among them.
    std::vector<std::vector<Int>> graph = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 1, 1}};
    std::sort(graph.begin(), graph.end());
    bool found = false;
    for (const auto& h : glues) found = found || h.elements == graph;
    CHECK(found);
}

TEST_CASE("gluing overlattices") {
    Lattice lam = vanishing_lattice();
    DiscriminantGroup d(lam);

    // Exactly one nonzero class is isotropic for b.
    std::vector<FiniteSubgroup> subs = isotropic_subgroups(d);
    REQUIRE(subs.size() == 2);
    CHECK(subs[0].elements.size() == 1);
    REQUIRE(subs[1].elements.size() == 2);

    Overlattice glued = glue_overlattice(lam, d, subs[1]);
    CHECK(glued.index == 2);
    CHECK(abs(glued.lattice.determinant()) == 1);
    CHECK(glued.lattice.signature() == std::pair<int, int>(20, 2));
    CHECK(!glued.lattice.is_even());

    Overlattice same = glue_overlattice(lam, d, subs[0]);
    CHECK(same.index == 1);
    CHECK(same.lattice.gram() == lam.gram());

    // Gluing along a non-isotropic class must fail.
    std::vector<std::vector<Int>> all = d.elements();
    for (const auto& e : all) {
        if (d.b(e, e) == 0) continue;
        std::vector<Int> zero(d.ngens());
        FiniteSubgroup bad{{zero, e}, {e}};
        CHECK_THROWS_AS(glue_overlattice(lam, d, bad), NotIsotropic);
        break;
    }
}

TEST_CASE("gluing a direct sum to a unimodular overlattice") {
    Lattice lam2(IntMat::diagonal({2, 2}));
    Lattice lam = vanishing_lattice();
    DiscriminantGroup d2(lam2);
    DiscriminantGroup dl(lam);
    std::vector<FiniteSubgroup> glues = isotropic_subgroups(d2, dl, true);
    int checked = 0;
    for (const auto& h : glues) {
        if (h.elements.size() != 4) continue;
        Overlattice o = glue_direct_sum(lam2, d2, lam, dl, h);
        CHECK(o.index == 4);
        CHECK(abs(o.lattice.determinant()) == 1);
        CHECK(o.lattice.signature() == std::pair<int, int>(22, 2));
        CHECK(!o.lattice.is_even());
        ++checked;
    }
    CHECK(checked == 2);
}

TEST_CASE("isometry extension across finite-index inclusions") {
    Lattice z2 = lattice_odd_unimodular(2, 0);
    SublatticeEmbedding doubled{z2, IntMat::diagonal({2, 2})};
    IntMat swap = IntMat::from_rows({{0, 1}, {1, 0}});
    auto ext = extend_isometry(swap, doubled);
    REQUIRE(ext.has_value());
    CHECK(*ext == swap);

    Lattice u = lattice_U();
    SublatticeEmbedding skew{u, IntMat::diagonal({1, 2})};
    CHECK(!extend_isometry(swap, skew).has_value());

    CHECK_THROWS_AS(extend_isometry(IntMat::from_rows({{1, 1}, {0, 1}}), doubled), NotIsometry);
    SublatticeEmbedding thin{u, IntMat(2, 1)};
    CHECK_THROWS_AS(extend_isometry(IntMat::identity(1), thin), NotFiniteIndex);
}

TEST_CASE("cyclic form conjugacy") {
    Lattice ten(IntMat::from_rows({{10}}));
    Lattice neg_ten(IntMat::from_rows({{-10}}));
    DiscriminantGroup dten(ten);
    CHECK(cyclic_form_conjugate(dten, dten));
    CHECK(cyclic_form_conjugate(dten, DiscriminantGroup(direct_sum({lattice_U(), ten}))));
    CHECK(!cyclic_form_conjugate(dten, DiscriminantGroup(neg_ten)));
    CHECK(!cyclic_form_conjugate(dten, DiscriminantGroup(Lattice(IntMat::from_rows({{40}})))));
    CHECK_THROWS_AS(
        cyclic_form_conjugate(dten, DiscriminantGroup(Lattice(IntMat::diagonal({2, 2})))),
        NotCyclic);
}

TEST_CASE("property: group order equals |det|") {
    std::mt19937 rng(20240631);
    std::uniform_int_distribution<int> size(1, 6);
    int done = 0;
    while (done < 200) {
        int n = size(rng);
        IntMat g = fano10::testing::random_symmetric(rng, n);
        if (determinant(g) == 0) continue;
        DiscriminantGroup d{Lattice(g)};
        CHECK(d.order() == abs(determinant(g)));
        ++done;
    }
}

TEST_CASE("property: quadratic refinement identity on generators") {
    std::mt19937 rng(20240632);
    std::uniform_int_distribution<int> size(1, 5);
    int done = 0;
    while (done < 100) {
        int n = size(rng);
        IntMat g = fano10::testing::random_symmetric(rng, n);
        for (int i = 0; i < n; ++i) g(i, i) *= 2;  // force even
        if (determinant(g) == 0) continue;
        DiscriminantGroup d{Lattice(g)};
        const int k = d.ngens();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                std::vector<Int> x(k), y(k), xy(k);
                x[i] += 1;
                y[j] += 1;
                xy[i] += 1;
                xy[j] += 1;
                Rat lhs = mod_two(d.q(xy) - d.q(x) - d.q(y));
                Rat rhs = mod_two(2 * d.b(x, y));
                CHECK(lhs == rhs);
            }
        ++done;
    }
}

TEST_CASE("property: glued determinant drops by the square of the subgroup order") {
    std::mt19937 rng(20240633);
    int done = 0;
    while (done < 40) {
        IntMat g = fano10::testing::random_symmetric(rng, 3, -3, 3);
        for (int i = 0; i < 3; ++i) g(i, i) *= 2;
        Int det = determinant(g);
        if (det == 0 || abs(det) > 64) continue;
        Lattice l(g);
        DiscriminantGroup d(l);
        for (const FiniteSubgroup& h : isotropic_subgroups(d)) {
            Overlattice o = glue_overlattice(l, d, h);
            Int hs(static_cast<long>(h.elements.size()));
            CHECK(o.index == hs);
            CHECK(abs(o.lattice.determinant()) * hs * hs == abs(det));
            CHECK(DiscriminantGroup(o.lattice).order() * hs * hs == d.order());
        }
        ++done;
    }
}
