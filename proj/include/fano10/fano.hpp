#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano10/discgroup.hpp"
#include "fano10/lattice.hpp"
#include "fano10/sublattice.hpp"

namespace fano10 {

/// Fixed rank-24 setup shared by the whole classification: the odd unimodular
/// lattice I(22,2) in the basis e1..e22, f1, f2; the pair u = e1+e2 and
/// v = v' - u with v' = e1+...+e22-3f1-3f2 characteristic; Lambda2 = <u, v>
/// with Gram diag(2,2); Lambda = Lambda2^perp (even, signature (20,2),
/// discriminant group (Z/2)^2); glue vectors e_glue, f_glue in Lambda of norm
/// 2 and divisibility 2 whose half-sums with u resp. v are integral; and a
/// hyperbolic pair p_iso, q_iso in Lambda orthogonal to both glue vectors.
///
/// All vectors are stored as coordinate columns in the I(22,2) basis;
/// accessor methods wrap them as LatticeVectors owned by this->i222.
struct AmbientModel {
    Lattice i222;
    std::vector<Int> u_coords, v_coords, vprime_coords;
    std::vector<Int> e_coords, f_coords;
    std::vector<Int> p_coords, q_coords;
    SublatticeEmbedding lambda2;  // columns u, v
    SublatticeEmbedding lambda;   // orthogonal complement of lambda2

    LatticeVector u() const { return vec(i222, u_coords); }
    LatticeVector v() const { return vec(i222, v_coords); }
    LatticeVector vprime() const { return vec(i222, vprime_coords); }
    LatticeVector e_vec() const { return vec(i222, e_coords); }
    LatticeVector f_vec() const { return vec(i222, f_coords); }
    LatticeVector p_vec() const { return vec(i222, p_coords); }
    LatticeVector q_vec() const { return vec(i222, q_coords); }
};

/// Builds and fully verifies the model; every invariant is re-checked and an
/// InternalVerificationFailed is thrown if any fails. The glue vectors are
/// pinned deterministically: lowest-lexicographic coordinate vector within
/// the sign-pattern family matching the required parity (coordinates +-1 on
/// the support of u resp. v, with +-3 on the two negative slots), so repeated
/// builds are byte-identical.
AmbientModel build_ambient_model();

/// Shared immutable instance (built once on first use).
const AmbientModel& ambient_model();

/// True iff d mod 8 is 0, 2, or 4; only these occur as discriminants of
/// special sublattices.
bool admissible_discriminant(const Int& d);

/// Residue case of an admissible discriminant: a (d = 0 mod 8),
/// b (d = 2 mod 8), c (d = 4 mod 8).
enum class DiscCase { a, b, c };
DiscCase discriminant_case(const Int& d);  // throws NotAdmissible

enum class DivisorLabel { D, Dprime, Dsecond };

std::string label_name(DivisorLabel l);                        // "D", "Dprime", "Dsecond"
std::string divisor_label_string(DivisorLabel l, const Int& d);  // e.g. "Dprime_10"

/// Primitive positive-definite rank-3 sublattice K of I(22,2) containing
/// Lambda2, carried with its canonical Gram (basis starts with the diag(2,2)
/// block spanned by u, v) and its divisor label.
struct SpecialSublattice {
    Int d;
    IntMat gram;                    // 3x3, det = d, positive definite
    SublatticeEmbedding embedding;  // columns: the Gram basis in I(22,2) coords
    DivisorLabel label;
};

/// One representative per orbit of special sublattices of discriminant d,
/// built from explicit vectors and re-verified by independent linear algebra
/// (primitive, positive definite, determinant d, containing Lambda2):
///   d = 0 mod 8: one orbit, Gram diag(2,2,d/4);
///   d = 2 mod 8: two orbits (Dprime first, then Dsecond), both with Gram
///                [[2,0,0],[0,2,1],[0,1,(d+2)/4]];
///   d = 4 mod 8: one orbit, Gram [[2,0,1],[0,2,1],[1,1,(d+4)/4]].
/// Throws NotAdmissible for other residues.
std::vector<SpecialSublattice> classify_special_sublattice(const Int& d);

/// Label from the ideals K.u and K.v: Dprime iff (K.u, K.v) = (Z, 2Z),
/// Dsecond iff (2Z, Z); for d = 0 mod 4 the merged label D.
DivisorLabel orbit_label(const SpecialSublattice& k);

/// Same rule applied to a raw 3x3 Gram whose first two basis vectors are
/// u and v: the ideals are generated by rows 0 and 1.
DivisorLabel orbit_label_from_gram(const IntMat& gram_uvs);

/// Discriminant form of K^perp for the (first) representative of
/// discriminant d, computed from the explicit embedding and cross-checked
/// against the closed form: case a -> (Z/2)^2 x Z/(d/4); case b -> cyclic of
/// order d with a generator of b-value -(d+8)/(2d) mod Z; case c -> cyclic
/// with b-value -(d+2)/(2d). Throws InvalidParameter if the case does not
/// match d mod 8.
DiscriminantGroup nonspecial_discriminant_form(const Int& d, DiscCase c);
DiscriminantGroup nonspecial_discriminant_form(const Int& d);

/// Fourfold of discriminant d has an associated K3 surface. Decided by two
/// independent methods asserted equal (MethodDisagreement otherwise):
/// (i) d != 0 mod 8 and every odd prime dividing d is 1 mod 4;
/// (ii) exhaustive search for a unit square root of -(d+8)/2 (case b) or
///      -(d+2)/2 (case c) mod d; false in case a.
bool has_associated_k3(const Int& d);

/// Per-method verdicts behind has_associated_k3 / has_associated_cubic, for
/// callers that report both (they always agree or the combined entry points
/// throw).
struct AssociationVerdict {
    bool by_criterion = false;  // prime / congruence criterion
    bool by_oracle = false;     // exhaustive unit-square search
};
AssociationVerdict k3_association_verdict(const Int& d);
AssociationVerdict cubic_association_verdict(const Int& d);

/// Associated cubic fourfold, again by two methods:
/// (i) (d = 2 or 20 mod 24 and every odd prime p | d has p = +-1 mod 12) or
///     (d = 12 or 66 mod 72 and every prime p >= 5 dividing d has
///      p = +-1 mod 12);
/// (ii) congruence oracle on e = d mod 24, d' = (d-e)/24:
///      e=2:  n^2 = d/2 + 12 mod d for some unit n;
///      e=20: n^2 = d/2 + 3 mod d;
///      e=12: 9 does not divide d and n^2 (16d'+5) = -12d'-7 mod d;
///      e=18: 9 does not divide d and n^2 (16d'+9) = -12d'-13 mod d;
///      other residues: false.
bool has_associated_cubic(const Int& d);

/// Surface S in the fourfold with class a*sigma_{3,1} + b*sigma_{2,2},
/// together with the classical invariants its self-intersection needs.
struct SurfaceClass {
    Int a, b;
    Int k_dot_sigma1;  // K_S . sigma_1|_S
    Int k_squared;     // K_S^2
    Int chi;           // chi(O_S)
};

/// (S)^2 = 3a + 4b + 2 K_S.sigma_1 + 2 K_S^2 - 12 chi(O_S).
Int surface_self_intersection(const SurfaceClass& s);

/// d = 4 (S)^2 - 2 (b^2 + (a-b)^2).
Int surface_discriminant(const SurfaceClass& s);

/// Rank-3 Gram of <u, v, [S]> given the surface class and self-intersection:
/// u.[S] = b, v.[S] = a - b.
IntMat surface_gram(const SurfaceClass& s, const Int& self_intersection);

struct ExampleFamilyRow {
    std::string family;
    std::optional<SurfaceClass> surface;  // absent for the nodal family
    Int self_intersection;
    IntMat gram;  // 3x3 in the basis (u, v, [S])
    Int d;
    DivisorLabel label;
};

/// The six worked families: sigma-plane, rho-plane, tau-quadric, cubic
/// scroll, quintic del Pezzo, nodal. Self-intersections and discriminants
/// are recomputed from the surface formulas and cross-checked against the
/// Gram determinants; labels are recomputed from the Gram ideals.
std::vector<ExampleFamilyRow> example_family_table();

struct Th81Row {
    long e;
    IntMat gram;  // 3x3
    Int d;
    DivisorLabel label;
};

/// Target table of the construction families, for 0 <= e <= e_max:
///   diag(2,2,2e)                  -> D_{8e}       (e >= 2)
///   [[2,0,0],[0,2,1],[0,1,2e+3]]  -> Dsecond_{8e+10} (e = 0 or e >= 2)
///   [[2,0,1],[0,2,0],[1,0,2e+3]]  -> Dprime_{8e+10}  (e >= 0)
///   [[2,0,1],[0,2,1],[1,1,2e+6]]  -> D_{8e+20}       (e >= 0)
/// Rows are grouped by e; within each e the order is the list above.
/// Throws InvalidParameter for e_max < 0.
std::vector<Th81Row> th81_targets(long e_max);

/// One forbidden-class condition of the rank-2 polarized lattice check:
/// existence of c with c^2 = c_norm and c.h = c_dot_h.
struct HassettCondition {
    Int c_norm;
    Int c_dot_h;
    bool violated = false;
    std::optional<std::pair<Int, Int>> witness;  // c in the Gram basis
};

struct HassettReport {
    std::vector<HassettCondition> conditions;
    bool all_satisfied = true;
};

/// Checks the four forbidden conditions (c^2, c.h) in
/// {(-2,0), (0,1), (0,2), (0,3)} on a rank-2 lattice with distinguished
/// vector h = basis vector h_index, h^2 = 10 (else HNotNorm10). Each check
/// reduces exactly to a one-variable integer quadratic; degenerate or
/// non-2x2 Grams are rejected with UnsupportedShape.
HassettReport hassett_lemma_check(const IntMat& gram2x2, int h_index);

}  // namespace fano10
