#include "fano10/sublattice.hpp"

#include <utility>

namespace fano10 {

SublatticeEmbedding embed(Lattice ambient, IntMat basis) {
    if (basis.rows() != ambient.rank())
        throw InvalidParameter("basis rows must match ambient rank");
    if (smith_normal_form(basis).rank() != basis.cols())
        throw Degenerate("basis columns are linearly dependent");
    return SublatticeEmbedding{std::move(ambient), std::move(basis)};
}

SublatticeEmbedding embed_span(const Lattice& ambient,
                               const std::vector<LatticeVector>& gens) {
    IntMat b(ambient.rank(), static_cast<int>(gens.size()));
    for (int j = 0; j < b.cols(); ++j) {
        if (gens[j].owner == nullptr || !(*gens[j].owner == ambient))
            throw OwnerMismatch("generator does not live in the ambient lattice");
        b.set_col(j, gens[j].coords);
    }
    return embed(ambient, b);
}

Lattice induced_lattice(const SublatticeEmbedding& s) {
    IntMat g = s.basis.transposed() * s.ambient.gram() * s.basis;
    if (determinant(g) == 0) throw Degenerate("induced Gram matrix is singular");
    return Lattice(std::move(g));
}

SaturationResult saturation(const SublatticeEmbedding& s) {
    // basis = U^-1 * D * V^-1, so the first rank columns of U^-1 span the
    // primitive closure over Z; the invariant factors measure the index.
    const SnfResult snf = smith_normal_form(s.basis);
    const int m = s.basis.cols();
    const IntMat uinv = RatMat(snf.u).inverse().to_int();
    std::vector<int> idx(m);
    for (int j = 0; j < m; ++j) idx[j] = j;
    IntMat sat = hermite_column_form(uinv.cols_subset(idx));
    Int index = 1;
    for (const Int& f : snf.invariant_factors()) index *= f;
    return SaturationResult{SublatticeEmbedding{s.ambient, std::move(sat)}, index};
}

SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& s) {
    IntMat k = kernel_basis(s.basis.transposed() * s.ambient.gram());
    return SublatticeEmbedding{s.ambient, std::move(k)};
}

bool is_primitive(const SublatticeEmbedding& s) {
    for (const Int& f : smith_normal_form(s.basis).invariant_factors())
        if (f != 1) return false;
    return true;
}

}  // namespace fano10
