#pragma once

#include "fano10/lattice.hpp"

namespace fano10 {

/// Sublattice of an ambient lattice, given by the coordinates of its basis
/// vectors (columns) in the ambient basis. Columns must be independent.
struct SublatticeEmbedding {
    Lattice ambient;
    IntMat basis;
};

/// Validating constructor; throws Degenerate on dependent columns.
SublatticeEmbedding embed(Lattice ambient, IntMat basis);

SublatticeEmbedding embed_span(const Lattice& ambient,
                               const std::vector<LatticeVector>& gens);

/// Lattice with Gram basis^T * G * basis; throws Degenerate if singular.
Lattice induced_lattice(const SublatticeEmbedding& s);

struct SaturationResult {
    SublatticeEmbedding embedding;
    Int index;      // [saturation : original]
};

/// Primitive closure: (Q-span of the sublattice) intersected with the ambient
/// lattice, with a Hermite-normal basis so results are byte-stable.
SaturationResult saturation(const SublatticeEmbedding& s);

/// Saturated sublattice {x in ambient : x . s = 0}, Hermite-normal basis.
SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& s);

bool is_primitive(const SublatticeEmbedding& s);

}  // namespace fano10
