#include "fano10/lattice.hpp"

#include <utility>

namespace fano10 {

Lattice::Lattice(IntMat gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
    if (!gram_.is_square()) throw NonSquare("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw NonSymmetric("Gram matrix must be symmetric");
}

Int Lattice::determinant() const { return fano10::determinant(gram_); }

std::pair<int, int> Lattice::signature() const { return fano10::signature(gram_); }

bool Lattice::is_even() const {
    for (int i = 0; i < gram_.rows(); ++i)
        if (gram_(i, i) % 2 != 0) return false;
    return true;
}

LatticeVector vec(const Lattice& l, std::vector<Int> coords) {
    if (static_cast<int>(coords.size()) != l.rank())
        throw InvalidParameter("coordinate count does not match lattice rank");
    return LatticeVector{&l, std::move(coords)};
}

LatticeVector vec(const Lattice& l, std::initializer_list<long> coords) {
    std::vector<Int> c;
    c.reserve(coords.size());
    for (long x : coords) c.emplace_back(x);
    return vec(l, std::move(c));
}

static void check_owners(const LatticeVector& x, const LatticeVector& y) {
    if (x.owner == nullptr || y.owner == nullptr)
        throw OwnerMismatch("vector has no owning lattice");
    if (x.owner != y.owner && !(*x.owner == *y.owner))
        throw OwnerMismatch("vectors belong to different lattices");
}

Int inner(const LatticeVector& x, const LatticeVector& y) {
    check_owners(x, y);
    const std::vector<Int> gy = x.owner->gram().mul_vec(y.coords);
    Int s = 0;
    for (size_t i = 0; i < gy.size(); ++i) s += x.coords[i] * gy[i];
    return s;
}

Int norm(const LatticeVector& x) { return inner(x, x); }

Int divisibility(const LatticeVector& w) {
    if (w.owner == nullptr) throw OwnerMismatch("vector has no owning lattice");
    const Int g = gcd_of(w.owner->gram().mul_vec(w.coords));
    if (g == 0) throw ZeroVector("divisibility of a vector pairing to zero with the whole lattice");
    return g;
}

bool is_characteristic(const LatticeVector& x) {
    if (x.owner == nullptr) throw OwnerMismatch("vector has no owning lattice");
    const IntMat& g = x.owner->gram();
    const std::vector<Int> gx = g.mul_vec(x.coords);
    for (int i = 0; i < g.rows(); ++i)
        if ((gx[i] - g(i, i)) % 2 != 0) return false;
    return true;
}

Lattice lattice_U() { return Lattice(IntMat::from_rows({{0, 1}, {1, 0}}), "U"); }

Lattice lattice_A1() { return Lattice(IntMat::from_rows({{2}}), "A1"); }

Lattice lattice_E8() {
    // Standard even basis: chain of -2s would give -E8; this is the positive
    // definite form with the e8 Dynkin diagram numbering 1-2-3-4-5-6-7, node 8
    // attached to node 5.
    IntMat g(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = 2;
    auto link = [&](int i, int j) {
        g(i, j) = -1;
        g(j, i) = -1;
    };
    link(0, 1);
    link(1, 2);
    link(2, 3);
    link(3, 4);
    link(4, 5);
    link(5, 6);
    link(4, 7);
    return Lattice(g, "E8");
}

Lattice lattice_scaled(const Int& n) {
    IntMat g(1, 1);
    g(0, 0) = n;
    return Lattice(g, "<" + g(0, 0).get_str() + ">");
}

Lattice lattice_odd_unimodular(int p, int q) {
    std::vector<Int> d;
    d.reserve(p + q);
    for (int i = 0; i < p; ++i) d.emplace_back(1);
    for (int i = 0; i < q; ++i) d.emplace_back(-1);
    return Lattice(IntMat::diagonal(d),
                   "I" + std::to_string(p) + "," + std::to_string(q));
}

Lattice direct_sum(const std::vector<Lattice>& ls) {
    int n = 0;
    for (const Lattice& l : ls) n += l.rank();
    IntMat g(n, n);
    std::string label;
    int off = 0;
    for (const Lattice& l : ls) {
        for (int i = 0; i < l.rank(); ++i)
            for (int j = 0; j < l.rank(); ++j) g(off + i, off + j) = l.gram()(i, j);
        off += l.rank();
        if (!label.empty()) label += "+";
        label += l.label();
    }
    return Lattice(g, label);
}

}  // namespace fano10
