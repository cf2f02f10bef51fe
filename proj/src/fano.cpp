#include "fano10/fano.hpp"

#include <algorithm>
#include <numeric>

namespace fano10 {

namespace {

constexpr int kDim = 24;  // e1..e22, f1, f2

void require(bool ok, const char* msg) {
    if (!ok) throw InternalVerificationFailed(msg);
}

Int dot(const IntMat& g, const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> gy = g.mul_vec(y);
    Int s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
    return s;
}

std::vector<Int> add(const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

std::vector<Int> scaled(const Int& c, const std::vector<Int>& x) {
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

bool all_even(const std::vector<Int>& x) {
    for (const Int& c : x)
        if (c % 2 != 0) return false;
    return true;
}

std::vector<Int> halved(const std::vector<Int>& x) {
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] / 2;
    return r;
}

// Divisibility of an ambient vector inside the sublattice cut out by the
// embedding; nullopt if the vector does not lie in the sublattice.
std::optional<Int> divisibility_in(const SublatticeEmbedding& s, const Lattice& induced,
                                   const std::vector<Int>& w) {
    std::optional<std::vector<Int>> c = solve_integer(s.basis, w);
    if (!c) return std::nullopt;
    return divisibility(vec(induced, *c));
}

IntMat basis_from_cols(const std::vector<std::vector<Int>>& cols) {
    IntMat b(kDim, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) b.set_col(static_cast<int>(j), cols[j]);
    return b;
}

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

long mod_long(const Int& x, long d) {
    Int r, m(d);
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r.get_si();
}

std::vector<Int> distinct_prime_factors(Int n) {
    std::vector<Int> ps;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; p = (p == 2 ? Int(3) : p + 2)) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Exists a unit n mod d with coef * n^2 = rhs (mod d). Exhaustive over [0, d).
bool unit_square_solution(const Int& coef_in, const Int& rhs_in, const Int& d_in) {
    if (!d_in.fits_slong_p()) throw TooLarge("modulus too large for exhaustive residue search");
    const long d = d_in.get_si();
    const long coef = mod_long(coef_in, d);
    const long rhs = mod_long(rhs_in, d);
    for (long n = 0; n < d; ++n) {
        if (std::gcd(n, d) != 1) continue;
        if (static_cast<long>(static_cast<__int128>(n) * n % d * coef % d) == rhs) return true;
    }
    return false;
}

}  // namespace

AmbientModel build_ambient_model() {
    AmbientModel m;
    m.i222 = lattice_odd_unimodular(22, 2);
    const IntMat& g = m.i222.gram();

    m.u_coords.assign(kDim, Int(0));
    m.u_coords[0] = 1;
    m.u_coords[1] = 1;
    m.vprime_coords.assign(kDim, Int(1));
    m.vprime_coords[22] = -3;
    m.vprime_coords[23] = -3;
    m.v_coords = m.vprime_coords;
    m.v_coords[0] -= 1;
    m.v_coords[1] -= 1;

    require(is_characteristic(vec(m.i222, m.vprime_coords)), "v' must be characteristic");
    require(dot(g, m.u_coords, m.u_coords) == 2, "u^2 = 2");
    require(dot(g, m.v_coords, m.v_coords) == 2, "v^2 = 2");
    require(dot(g, m.u_coords, m.v_coords) == 0, "u.v = 0");

    m.lambda2 = embed(m.i222, basis_from_cols({m.u_coords, m.v_coords}));
    require(induced_lattice(m.lambda2).gram() == IntMat::diagonal({2, 2}),
            "Lambda2 Gram must be diag(2,2)");

    m.lambda = orthogonal_complement(m.lambda2);
    const Lattice lam = induced_lattice(m.lambda);
    require(lam.rank() == 22, "Lambda has rank 22");
    require(lam.is_even(), "Lambda is even");
    require(lam.signature() == std::pair<int, int>(20, 2), "Lambda signature (20,2)");
    const DiscriminantGroup dlam(lam);
    require(dlam.invariant_factors() == std::vector<Int>{2, 2},
            "D(Lambda) must be (Z/2)^2");

    // Glue vector for u: sign pattern on the support {e1, e2} of u, checked in
    // lexicographic order; the vector must lie in Lambda with divisibility 2,
    // have norm 2, and make (u + w)/2 integral.
    auto accept_glue = [&](const std::vector<Int>& w, const std::vector<Int>& partner) {
        if (dot(g, w, m.u_coords) != 0 || dot(g, w, m.v_coords) != 0) return false;
        if (dot(g, w, w) != 2) return false;
        if (!all_even(add(partner, w))) return false;
        std::optional<Int> div = divisibility_in(m.lambda, lam, w);
        return div && *div == 2;
    };
    bool found_e = false;
    for (long a1 : {-1L, 1L}) {
        for (long a2 : {-1L, 1L}) {
            std::vector<Int> w(kDim);
            w[0] = a1;
            w[1] = a2;
            if (accept_glue(w, m.u_coords)) {
                m.e_coords = w;
                found_e = true;
                break;
            }
        }
        if (found_e) break;
    }
    require(found_e, "no glue vector for u");

    // Glue vector for v: signs +-1 on e3..e22 and +-3 on f1, f2. The linear
    // condition w.v = 0 fixes the number of plus signs per f-sign choice; the
    // lexicographically least arrangement puts the plus signs last.
    std::vector<std::vector<Int>> f_candidates;
    for (long b1 : {-3L, 3L})
        for (long b2 : {-3L, 3L}) {
            long sum = -3 * (b1 + b2);  // required sum of the 20 e-signs
            if ((20 + sum) % 2 != 0) continue;
            long nplus = (20 + sum) / 2;
            if (nplus < 0 || nplus > 20) continue;
            std::vector<Int> w(kDim);
            for (int i = 2; i < 22; ++i) w[i] = (i - 2 >= 20 - nplus) ? 1 : -1;
            w[22] = b1;
            w[23] = b2;
            f_candidates.push_back(w);
        }
    std::sort(f_candidates.begin(), f_candidates.end(), lex_less);
    bool found_f = false;
    for (const auto& w : f_candidates)
        if (accept_glue(w, m.v_coords)) {
            m.f_coords = w;
            found_f = true;
            break;
        }
    require(found_f, "no glue vector for v");

    require(dot(g, m.e_coords, m.f_coords) == 0, "e.f = 0");
    require(all_even(add(add(m.u_coords, m.v_coords), add(m.e_coords, m.f_coords))),
            "(u+v+e+f)/2 must be integral");
    {
        std::vector<Int> ce = *solve_integer(m.lambda.basis, m.e_coords);
        std::vector<Int> cf = *solve_integer(m.lambda.basis, m.f_coords);
        std::vector<Int> cls_e = dlam.vector_class(vec(lam, ce));
        std::vector<Int> cls_f = dlam.vector_class(vec(lam, cf));
        require(cls_e != std::vector<Int>(2) && cls_f != std::vector<Int>(2) && cls_e != cls_f,
                "glue classes must span D(Lambda)");
        require(dlam.b(cls_e, cls_e) == Rat(1, 2) && dlam.b(cls_f, cls_f) == Rat(1, 2),
                "glue classes have b = 1/2");
    }

    // Hyperbolic pair in Lambda orthogonal to both glue vectors, searched over
    // the bounded family e_i - e_j +- (f1 - f2).
    auto pair_candidates = [&]() {
        std::vector<std::vector<Int>> out;
        for (int i = 2; i < 22; ++i)
            for (int j = i + 1; j < 22; ++j)
                for (long s : {1L, -1L})
                    for (long c : {1L, -1L}) {
                        std::vector<Int> w(kDim);
                        w[i] = s;
                        w[j] = -s;
                        w[22] = c;
                        w[23] = -c;
                        out.push_back(w);
                    }
        return out;
    };
    auto in_perp = [&](const std::vector<Int>& w) {
        return dot(g, w, m.u_coords) == 0 && dot(g, w, m.v_coords) == 0 &&
               dot(g, w, m.e_coords) == 0 && dot(g, w, m.f_coords) == 0;
    };
    const std::vector<std::vector<Int>> cands = pair_candidates();
    bool found_pq = false;
    for (const auto& p : cands) {
        if (!in_perp(p) || dot(g, p, p) != 0) continue;
        for (const auto& q : cands) {
            if (!in_perp(q) || dot(g, q, q) != 0) continue;
            if (dot(g, p, q) != 1) continue;
            m.p_coords = p;
            m.q_coords = q;
            found_pq = true;
            break;
        }
        if (found_pq) break;
    }
    require(found_pq, "no hyperbolic pair orthogonal to the glue vectors");
    require(solve_integer(m.lambda.basis, m.p_coords).has_value() &&
                solve_integer(m.lambda.basis, m.q_coords).has_value(),
            "hyperbolic pair must lie in Lambda");

    return m;
}

const AmbientModel& ambient_model() {
    static const AmbientModel m = build_ambient_model();
    return m;
}

bool admissible_discriminant(const Int& d) {
    if (d < 1) return false;
    long r = mod_long(d, 8);
    return r == 0 || r == 2 || r == 4;
}

DiscCase discriminant_case(const Int& d) {
    if (!admissible_discriminant(d)) throw NotAdmissible("discriminant must be 0, 2, or 4 mod 8");
    switch (mod_long(d, 8)) {
        case 0: return DiscCase::a;
        case 2: return DiscCase::b;
        default: return DiscCase::c;
    }
}

std::string label_name(DivisorLabel l) {
    switch (l) {
        case DivisorLabel::D: return "D";
        case DivisorLabel::Dprime: return "Dprime";
        default: return "Dsecond";
    }
}

std::string divisor_label_string(DivisorLabel l, const Int& d) {
    return label_name(l) + "_" + d.get_str();
}

namespace {

// Canonical Gram for each residue case.
IntMat canonical_gram(const Int& d) {
    switch (discriminant_case(d)) {
        case DiscCase::a:
            return IntMat::diagonal({2, 2, d / 4});
        case DiscCase::b: {
            IntMat g = IntMat::from_rows({{2, 0, 0}, {0, 2, 1}, {0, 1, 0}});
            g(2, 2) = (d + 2) / 4;
            return g;
        }
        default: {
            IntMat g = IntMat::from_rows({{2, 0, 1}, {0, 2, 1}, {1, 1, 0}});
            g(2, 2) = (d + 4) / 4;
            return g;
        }
    }
}

SpecialSublattice make_special(const AmbientModel& m, const Int& d,
                               const std::vector<std::vector<Int>>& basis_cols,
                               DivisorLabel expected) {
    SpecialSublattice k{d, canonical_gram(d), embed(m.i222, basis_from_cols(basis_cols)),
                        expected};
    const Lattice induced = induced_lattice(k.embedding);
    require(induced.gram() == k.gram, "special sublattice Gram mismatch");
    require(induced.determinant() == d, "special sublattice determinant mismatch");
    require(induced.signature() == std::pair<int, int>(3, 0),
            "special sublattice must be positive definite");
    require(is_primitive(k.embedding), "special sublattice must be primitive");
    require(solve_integer(k.embedding.basis, m.u_coords).has_value() &&
                solve_integer(k.embedding.basis, m.v_coords).has_value(),
            "special sublattice must contain Lambda2");
    require(orbit_label(k) == expected, "special sublattice label mismatch");
    return k;
}

}  // namespace

std::vector<SpecialSublattice> classify_special_sublattice(const Int& d) {
    const DiscCase c = discriminant_case(d);
    const AmbientModel& m = ambient_model();
    const IntMat& g = m.i222.gram();

    std::vector<SpecialSublattice> out;
    switch (c) {
        case DiscCase::a: {
            const Int mm = d / 8;
            std::vector<Int> w = add(m.p_coords, scaled(mm, m.q_coords));
            require(dot(g, w, w) == 2 * mm, "case-a vector norm");
            out.push_back(make_special(m, d, {m.u_coords, m.v_coords, w}, DivisorLabel::D));
            break;
        }
        case DiscCase::b: {
            const Int mm = (d - 2) / 8;
            std::vector<Int> step = scaled(2, add(m.p_coords, scaled(mm, m.q_coords)));
            std::vector<Int> wp = add(m.e_coords, step);
            std::vector<Int> ws = add(m.f_coords, step);
            require(dot(g, wp, wp) == d && dot(g, ws, ws) == d, "case-b vector norms");
            out.push_back(make_special(m, d,
                                       {m.v_coords, m.u_coords, halved(add(m.u_coords, wp))},
                                       DivisorLabel::Dprime));
            out.push_back(make_special(m, d,
                                       {m.u_coords, m.v_coords, halved(add(m.v_coords, ws))},
                                       DivisorLabel::Dsecond));
            break;
        }
        default: {
            const Int mm = (d - 4) / 8;
            std::vector<Int> w = add(add(m.e_coords, m.f_coords),
                                     scaled(2, add(m.p_coords, scaled(mm, m.q_coords))));
            require(dot(g, w, w) == d, "case-c vector norm");
            std::vector<Int> third = halved(add(add(m.u_coords, m.v_coords), w));
            out.push_back(
                make_special(m, d, {m.u_coords, m.v_coords, third}, DivisorLabel::D));
            break;
        }
    }
    return out;
}

namespace {

DivisorLabel label_from_ideals(const Int& d, const Int& gu, const Int& gv) {
    if (mod_long(d, 4) == 0) return DivisorLabel::D;
    if (gu == 1 && gv == 2) return DivisorLabel::Dprime;
    if (gu == 2 && gv == 1) return DivisorLabel::Dsecond;
    throw InvalidParameter("ideal pattern does not match any special-sublattice orbit");
}

}  // namespace

DivisorLabel orbit_label(const SpecialSublattice& k) {
    const AmbientModel& m = ambient_model();
    const IntMat& g = m.i222.gram();
    std::vector<Int> pu, pv;
    for (int j = 0; j < k.embedding.basis.cols(); ++j) {
        pu.push_back(dot(g, m.u_coords, k.embedding.basis.col(j)));
        pv.push_back(dot(g, m.v_coords, k.embedding.basis.col(j)));
    }
    return label_from_ideals(k.d, gcd_of(pu), gcd_of(pv));
}

DivisorLabel orbit_label_from_gram(const IntMat& gram_uvs) {
    if (gram_uvs.rows() != 3 || gram_uvs.cols() != 3 || !gram_uvs.is_symmetric())
        throw InvalidParameter("expected a symmetric 3x3 Gram matrix");
    if (gram_uvs(0, 0) != 2 || gram_uvs(1, 1) != 2 || gram_uvs(0, 1) != 0)
        throw InvalidParameter("basis must start with the diag(2,2) block of u, v");
    const Int d = determinant(gram_uvs);
    if (!admissible_discriminant(d)) throw NotAdmissible("Gram determinant is not admissible");
    std::vector<Int> row_u{gram_uvs(0, 0), gram_uvs(0, 1), gram_uvs(0, 2)};
    std::vector<Int> row_v{gram_uvs(1, 0), gram_uvs(1, 1), gram_uvs(1, 2)};
    return label_from_ideals(d, gcd_of(row_u), gcd_of(row_v));
}

DiscriminantGroup nonspecial_discriminant_form(const Int& d, DiscCase c) {
    if (discriminant_case(d) != c)
        throw InvalidParameter("residue case does not match the discriminant");

    const SpecialSublattice k = classify_special_sublattice(d).front();
    const Lattice perp = induced_lattice(orthogonal_complement(k.embedding));
    require(perp.rank() == 21 && perp.is_even(), "nonspecial lattice must be even of rank 21");
    DiscriminantGroup dg(perp);

    if (c == DiscCase::a) {
        require(dg.invariant_factors() == std::vector<Int>({2, 2, d / 4}),
                "case-a discriminant group must be (Z/2)^2 x Z/(d/4)");
        return dg;
    }
    require(dg.invariant_factors() == std::vector<Int>{d},
            "nonspecial discriminant group must be cyclic of order d");
    Rat target(c == DiscCase::b ? -(d + 8) : -(d + 2));
    target /= 2 * d;
    target = mod_one(target);
    const Rat b11 = dg.b({Int(1)}, {Int(1)});
    bool found = false;
    for (Int n = 1; n < d && !found; ++n) {
        Int gg;
        mpz_gcd(gg.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (gg == 1 && mod_one(Rat(n * n) * b11) == target) found = true;
    }
    require(found, "no generator realizes the pinned b-value");
    return dg;
}

DiscriminantGroup nonspecial_discriminant_form(const Int& d) {
    return nonspecial_discriminant_form(d, discriminant_case(d));
}

AssociationVerdict k3_association_verdict(const Int& d) {
    const DiscCase c = discriminant_case(d);

    bool by_primes = c != DiscCase::a;
    if (by_primes)
        for (const Int& p : distinct_prime_factors(d))
            if (p != 2 && mod_long(p, 4) != 1) by_primes = false;

    bool by_oracle = false;
    if (c == DiscCase::b) by_oracle = unit_square_solution(1, -(d + 8) / 2, d);
    if (c == DiscCase::c) by_oracle = unit_square_solution(1, -(d + 2) / 2, d);
    return {by_primes, by_oracle};
}

bool has_associated_k3(const Int& d) {
    const AssociationVerdict v = k3_association_verdict(d);
    if (v.by_criterion != v.by_oracle)
        throw MethodDisagreement("K3 association methods disagree at d = " + d.get_str());
    return v.by_criterion;
}

AssociationVerdict cubic_association_verdict(const Int& d) {
    discriminant_case(d);  // admissibility gate

    const long r24 = mod_long(d, 24);
    const long r72 = mod_long(d, 72);
    bool by_primes = false;
    if (r24 == 2 || r24 == 20) {
        by_primes = true;
        for (const Int& p : distinct_prime_factors(d)) {
            long r = mod_long(p, 12);
            if (p != 2 && r != 1 && r != 11) by_primes = false;
        }
    } else if (r72 == 12 || r72 == 66) {
        by_primes = true;
        for (const Int& p : distinct_prime_factors(d)) {
            long r = mod_long(p, 12);
            if (p >= 5 && r != 1 && r != 11) by_primes = false;
        }
    }

    bool by_oracle = false;
    const Int e = r24;
    const Int dprime = (d - e) / 24;
    if (e == 2) by_oracle = unit_square_solution(1, d / 2 + 12, d);
    else if (e == 20) by_oracle = unit_square_solution(1, d / 2 + 3, d);
    else if (e == 12)
        by_oracle = d % 9 != 0 && unit_square_solution(16 * dprime + 5, -12 * dprime - 7, d);
    else if (e == 18)
        by_oracle = d % 9 != 0 && unit_square_solution(16 * dprime + 9, -12 * dprime - 13, d);

    return {by_primes, by_oracle};
}

bool has_associated_cubic(const Int& d) {
    const AssociationVerdict v = cubic_association_verdict(d);
    if (v.by_criterion != v.by_oracle)
        throw MethodDisagreement("cubic association methods disagree at d = " + d.get_str());
    return v.by_criterion;
}

Int surface_self_intersection(const SurfaceClass& s) {
    return 3 * s.a + 4 * s.b + 2 * s.k_dot_sigma1 + 2 * s.k_squared - 12 * s.chi;
}

Int surface_discriminant(const SurfaceClass& s) {
    const Int self = surface_self_intersection(s);
    return 4 * self - 2 * (s.b * s.b + (s.a - s.b) * (s.a - s.b));
}

IntMat surface_gram(const SurfaceClass& s, const Int& self_intersection) {
    IntMat g(3, 3);
    g(0, 0) = 2;
    g(1, 1) = 2;
    g(2, 2) = self_intersection;
    g(0, 2) = g(2, 0) = s.b;
    g(1, 2) = g(2, 1) = s.a - s.b;
    return g;
}

std::vector<ExampleFamilyRow> example_family_table() {
    struct Seed {
        const char* family;
        SurfaceClass surface;
    };
    const std::vector<Seed> seeds{
        {"sigma-plane", {1, 0, -3, 9, 1}},   {"rho-plane", {0, 1, -3, 9, 1}},
        {"tau-quadric", {1, 1, -4, 8, 1}},   {"cubic-scroll", {2, 1, -5, 8, 1}},
        {"quintic-del-pezzo", {3, 2, -5, 5, 1}},
    };

    std::vector<ExampleFamilyRow> rows;
    for (const Seed& s : seeds) {
        ExampleFamilyRow r;
        r.family = s.family;
        r.surface = s.surface;
        r.self_intersection = surface_self_intersection(s.surface);
        r.d = surface_discriminant(s.surface);
        r.gram = surface_gram(s.surface, r.self_intersection);
        require(determinant(r.gram) == r.d, "example family Gram determinant mismatch");
        r.label = orbit_label_from_gram(r.gram);
        rows.push_back(std::move(r));
    }

    // One-nodal degeneration: <sigma_{1,1}, sigma_2 - sigma_{1,1}, delta> with
    // the vanishing cycle delta of square 2 orthogonal to both.
    ExampleFamilyRow nodal;
    nodal.family = "nodal";
    nodal.self_intersection = 2;
    nodal.gram = IntMat::diagonal({2, 2, 2});
    nodal.d = determinant(nodal.gram);
    nodal.label = orbit_label_from_gram(nodal.gram);
    rows.push_back(std::move(nodal));
    return rows;
}

std::vector<Th81Row> th81_targets(long e_max) {
    if (e_max < 0) throw InvalidParameter("e_max must be nonnegative");

    std::vector<Th81Row> rows;
    auto push = [&](long e, IntMat gram, Int d, DivisorLabel label) {
        require(determinant(gram) == d, "target table determinant mismatch");
        require(orbit_label_from_gram(gram) == label, "target table label mismatch");
        rows.push_back({e, std::move(gram), std::move(d), label});
    };
    for (long e = 0; e <= e_max; ++e) {
        if (e >= 2) push(e, IntMat::diagonal({2, 2, 2 * e}), 8 * e, DivisorLabel::D);
        if (e == 0 || e >= 2) {
            IntMat g = IntMat::from_rows({{2, 0, 0}, {0, 2, 1}, {0, 1, 0}});
            g(2, 2) = 2 * e + 3;
            push(e, g, 8 * e + 10, DivisorLabel::Dsecond);
        }
        IntMat gp = IntMat::from_rows({{2, 0, 1}, {0, 2, 0}, {1, 0, 0}});
        gp(2, 2) = 2 * e + 3;
        push(e, gp, 8 * e + 10, DivisorLabel::Dprime);
        IntMat gd = IntMat::from_rows({{2, 0, 1}, {0, 2, 1}, {1, 1, 0}});
        gd(2, 2) = 2 * e + 6;
        push(e, gd, 8 * e + 20, DivisorLabel::D);
    }
    return rows;
}

HassettReport hassett_lemma_check(const IntMat& gram2x2, int h_index) {
    if (gram2x2.rows() != 2 || gram2x2.cols() != 2 || !gram2x2.is_symmetric())
        throw UnsupportedShape("expected a symmetric 2x2 Gram matrix");
    if (h_index != 0 && h_index != 1) throw InvalidParameter("h_index must be 0 or 1");
    if (determinant(gram2x2) == 0) throw UnsupportedShape("degenerate rank-2 form");
    const int i = h_index, j = 1 - h_index;
    const Int alpha = gram2x2(i, i), beta = gram2x2(i, j), gamma = gram2x2(j, j);
    if (alpha != 10) throw HNotNorm10("distinguished vector must have square 10");

    // Q in the (h, other) coordinates x, y.
    auto quad = [&](const Int& x, const Int& y) -> Int {
        return alpha * x * x + 2 * beta * x * y + gamma * y * y;
    };

    HassettReport rep;
    const std::pair<long, long> wanted[] = {{-2, 0}, {0, 1}, {0, 2}, {0, 3}};
    for (auto [norm_target, k] : wanted) {
        HassettCondition cond;
        cond.c_norm = norm_target;
        cond.c_dot_h = k;

        // Solve alpha x + beta y = k, then the quadratic along the solution line.
        Int gg, s, t;
        mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), alpha.get_mpz_t(),
                   beta.get_mpz_t());
        if (Int(k) % gg == 0) {
            const Int scale = Int(k) / gg;
            const Int x0 = s * scale, y0 = t * scale;
            const Int px = beta / gg, py = -alpha / gg;  // direction of the line
            const Int a2 = quad(px, py);                 // nonzero: = alpha*det/g^2
            const Int b1 = 2 * (alpha * x0 * px + beta * (x0 * py + y0 * px) + gamma * y0 * py);
            const Int c0 = quad(x0, y0) - norm_target;
            require(a2 != 0, "quadratic along the solution line degenerated");
            const Int disc = b1 * b1 - 4 * a2 * c0;
            if (disc >= 0) {
                Int root;
                mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
                if (root * root == disc) {
                    for (const Int& num : {Int(-b1 + root), Int(-b1 - root)}) {
                        if (num % (2 * a2) != 0) continue;
                        const Int tt = num / (2 * a2);
                        const Int cx = x0 + px * tt, cy = y0 + py * tt;
                        cond.violated = true;
                        // Report in the original basis order.
                        cond.witness = (i == 0) ? std::pair<Int, Int>(cx, cy)
                                                : std::pair<Int, Int>(cy, cx);
                        break;
                    }
                }
            }
        }
        if (cond.violated) rep.all_satisfied = false;
        rep.conditions.push_back(std::move(cond));
    }
    return rep;
}

}  // namespace fano10
