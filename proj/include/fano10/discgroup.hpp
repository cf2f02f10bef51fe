#pragma once

#include <optional>
#include <vector>

#include "fano10/lattice.hpp"
#include "fano10/sublattice.hpp"

namespace fano10 {

/// Rational residue normalized to [0, 1), the value group of the torsion
/// bilinear form.
Rat mod_one(const Rat& x);
/// Rational residue normalized to [0, 2), the value group of the torsion
/// quadratic form.
Rat mod_two(const Rat& x);

/// D(L) = L^dual / L for a nondegenerate integral lattice L, presented as
/// Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... (invariant factors > 1).
///
/// Elements are coordinate tuples (x_1, ..., x_k) with x_i taken mod d_i.
/// `lifts` column i is a rational vector in the basis of L representing the
/// i-th generator, so b and q are evaluated exactly through the Gram matrix.
class DiscriminantGroup {
  public:
    explicit DiscriminantGroup(const Lattice& l);

    const Lattice& lattice() const { return lattice_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    const RatMat& lifts() const { return lifts_; }
    int ngens() const { return static_cast<int>(factors_.size()); }
    Int order() const;
    bool from_even_lattice() const { return even_; }

    std::vector<Int> reduce(std::vector<Int> coords) const;
    std::vector<Rat> lift(const std::vector<Int>& coords) const;

    /// Torsion bilinear form, valued in [0, 1).
    Rat b(const std::vector<Int>& x, const std::vector<Int>& y) const;
    /// Torsion quadratic form, valued in [0, 2); requires an even lattice.
    Rat q(const std::vector<Int>& x) const;

    /// Class of w / div in D(L); throws if w / div is not in the dual.
    std::vector<Int> vector_class(const LatticeVector& w, const Int& div) const;
    /// Class of w / divisibility(w), the star class of w.
    std::vector<Int> vector_class(const LatticeVector& w) const;

    /// All group elements in lexicographic coordinate order.
    /// Throws TooLarge beyond 10^6 elements.
    std::vector<std::vector<Int>> elements() const;

  private:
    Lattice lattice_;
    std::vector<Int> factors_;
    RatMat lifts_;      // rank(L) x k
    RatMat dual_gram_;  // k x k, pairings of the generator lifts
    IntMat ug_;         // rank x rank, class coordinates of dual vectors
    bool even_ = false;
};

/// Subgroup of a discriminant group (or of a product of two), listed by its
/// elements in sorted order plus a generating set.
struct FiniteSubgroup {
    std::vector<std::vector<Int>> elements;    // sorted lexicographically
    std::vector<std::vector<Int>> generators;
};

enum class IsotropyMode {
    bilinear,   // b(x, y) = 0 in Q/Z for all x, y in the subgroup
    quadratic,  // additionally q(x) = 0 in Q/2Z for all x (even lattices)
};

/// All isotropic subgroups of D(L1) x D(L2); element coordinates are the
/// concatenation of the two factors' coordinates. With injective_to_both the
/// list keeps only subgroups projecting injectively to each factor (the glue
/// data of primitive overlattice extensions). Deterministic order: by
/// subgroup order, then lexicographic on the sorted element lists.
std::vector<FiniteSubgroup> isotropic_subgroups(
    const DiscriminantGroup& d1, const DiscriminantGroup& d2,
    bool injective_to_both,
    IsotropyMode mode = IsotropyMode::bilinear);

/// Same, for subgroups of a single discriminant group.
std::vector<FiniteSubgroup> isotropic_subgroups(
    const DiscriminantGroup& d, IsotropyMode mode = IsotropyMode::bilinear);

struct Overlattice {
    Lattice lattice;
    Int index;      // [M : L]
    RatMat basis;   // columns: basis of M written in the basis of L
};

/// Overlattice L subset M subset L^dual generated by L and the lifts of the
/// subgroup H; throws NotIsotropic if the glued Gram is not integral.
Overlattice glue_overlattice(const Lattice& l, const DiscriminantGroup& d,
                             const FiniteSubgroup& h);

/// Gluing of a direct sum L1 + L2 along a subgroup of D(L1) x D(L2) given in
/// concatenated coordinates (the format produced by the two-group
/// isotropic_subgroups overload). The result's basis is written in the basis
/// of L1 + L2.
Overlattice glue_direct_sum(const Lattice& l1, const DiscriminantGroup& d1,
                            const Lattice& l2, const DiscriminantGroup& d2,
                            const FiniteSubgroup& h);

/// Given a finite-index sublattice M of the embedding's ambient lattice and an
/// isometry g of M (matrix in the embedding basis), return the matrix of the
/// unique rational extension on ambient coordinates if it preserves the
/// ambient lattice, nullopt otherwise.
std::optional<IntMat> extend_isometry(const IntMat& g, const SublatticeEmbedding& m_in_l);

/// True iff some group isomorphism phi: D1 -> D2 matches the torsion
/// bilinear forms up to the given sign: b2(phi x, phi y) = sign * b1(x, y)
/// in Q/Z for all x, y. sign must be +1 or -1. Exhaustive generator-image
/// search; throws TooLarge beyond 10^4 elements.
bool forms_b_conjugate(const DiscriminantGroup& d1, const DiscriminantGroup& d2, int sign);

/// True iff both discriminant forms are cyclic of the same order n and some
/// unit k mod n matches the quadratic forms: q2(k * g2) = q1(g1) in Q/2Z.
bool cyclic_form_conjugate(const DiscriminantGroup& d1, const DiscriminantGroup& d2);

}  // namespace fano10
