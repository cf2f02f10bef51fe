#include "fano10/discgroup.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <utility>

namespace fano10 {

namespace {
constexpr long kEnumerationGuard = 1000000;
}

Rat mod_one(const Rat& x) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rat(fl);
}

Rat mod_two(const Rat& x) {
    Rat half = x / 2;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
    return x - 2 * Rat(fl);
}

DiscriminantGroup::DiscriminantGroup(const Lattice& l) : lattice_(l) {
    const IntMat& g = l.gram();
    const int n = g.rows();
    const SnfResult s = smith_normal_form(g);
    if (s.rank() != n) throw Degenerate("discriminant group of a degenerate lattice");

    // Diagonal entries equal to 1 come first in the divisibility chain, so the
    // nontrivial factors occupy the trailing positions.
    const std::vector<Int> diag = s.diagonal();
    std::vector<int> pos;
    for (int i = 0; i < n; ++i)
        if (diag[i] > 1) {
            factors_.push_back(diag[i]);
            pos.push_back(i);
        }

    const int k = static_cast<int>(factors_.size());
    lifts_ = RatMat(n, k);
    for (int j = 0; j < k; ++j)
        for (int r = 0; r < n; ++r) {
            Rat t(s.v(r, pos[j]));
            t /= diag[pos[j]];
            lifts_(r, j) = t;
        }
    dual_gram_ = lifts_.transposed() * RatMat(g) * lifts_;
    ug_ = s.u * g;
    even_ = l.is_even();
}

Int DiscriminantGroup::order() const {
    Int o = 1;
    for (const Int& f : factors_) o *= f;
    return o;
}

std::vector<Int> DiscriminantGroup::reduce(std::vector<Int> coords) const {
    if (coords.size() != factors_.size())
        throw InvalidParameter("coordinate count does not match number of generators");
    for (size_t i = 0; i < coords.size(); ++i)
        mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), factors_[i].get_mpz_t());
    return coords;
}

std::vector<Rat> DiscriminantGroup::lift(const std::vector<Int>& coords) const {
    if (coords.size() != factors_.size())
        throw InvalidParameter("coordinate count does not match number of generators");
    std::vector<Rat> r(lifts_.rows());
    for (int i = 0; i < lifts_.rows(); ++i)
        for (int j = 0; j < lifts_.cols(); ++j) r[i] += lifts_(i, j) * Rat(coords[j]);
    return r;
}

Rat DiscriminantGroup::b(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (x.size() != factors_.size() || y.size() != factors_.size())
        throw InvalidParameter("coordinate count does not match number of generators");
    Rat s;
    for (int i = 0; i < dual_gram_.rows(); ++i)
        for (int j = 0; j < dual_gram_.cols(); ++j)
            s += dual_gram_(i, j) * Rat(x[i] * y[j]);
    return mod_one(s);
}

Rat DiscriminantGroup::q(const std::vector<Int>& x) const {
    if (!even_) throw DomainError("quadratic form is defined only for even lattices");
    if (x.size() != factors_.size())
        throw InvalidParameter("coordinate count does not match number of generators");
    Rat s;
    for (int i = 0; i < dual_gram_.rows(); ++i)
        for (int j = 0; j < dual_gram_.cols(); ++j)
            s += dual_gram_(i, j) * Rat(x[i] * x[j]);
    return mod_two(s);
}

std::vector<Int> DiscriminantGroup::vector_class(const LatticeVector& w, const Int& div) const {
    if (w.owner == nullptr || !(*w.owner == lattice_))
        throw OwnerMismatch("vector does not live in this group's lattice");
    if (div <= 0) throw InvalidParameter("divisor must be positive");
    const std::vector<Int> c = ug_.mul_vec(w.coords);
    for (const Int& x : c)
        if (x % div != 0) throw InvalidParameter("w / div is not in the dual lattice");
    const int n = static_cast<int>(c.size());
    const int k = static_cast<int>(factors_.size());
    std::vector<Int> coords(k);
    for (int j = 0; j < k; ++j) coords[j] = c[n - k + j] / div;
    return reduce(std::move(coords));
}

std::vector<Int> DiscriminantGroup::vector_class(const LatticeVector& w) const {
    return vector_class(w, divisibility(w));
}

std::vector<std::vector<Int>> DiscriminantGroup::elements() const {
    if (order() > kEnumerationGuard) throw TooLarge("discriminant group too large to enumerate");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(factors_.size());
    for (;;) {
        out.push_back(cur);
        int i = static_cast<int>(factors_.size()) - 1;
        while (i >= 0) {
            cur[i] += 1;
            if (cur[i] < factors_[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

namespace {

// Product D(L1) x D(L2) in concatenated coordinates; k2 = 0 degenerates to a
// single group.
struct ProductGroup {
    const DiscriminantGroup* d1;
    const DiscriminantGroup* d2;  // may be null
    std::vector<Int> factors;

    int k1() const { return d1->ngens(); }

    std::vector<Int> add(const std::vector<Int>& x, const std::vector<Int>& y) const {
        std::vector<Int> r(x.size());
        for (size_t i = 0; i < x.size(); ++i) {
            r[i] = x[i] + y[i];
            if (r[i] >= factors[i]) r[i] -= factors[i];
        }
        return r;
    }

    std::pair<std::vector<Int>, std::vector<Int>> split(const std::vector<Int>& x) const {
        std::vector<Int> a(x.begin(), x.begin() + k1());
        std::vector<Int> b(x.begin() + k1(), x.end());
        return {std::move(a), std::move(b)};
    }

    Rat bform(const std::vector<Int>& x, const std::vector<Int>& y) const {
        auto [xa, xb] = split(x);
        auto [ya, yb] = split(y);
        Rat s = d1->b(xa, ya);
        if (d2) s += d2->b(xb, yb);
        return mod_one(s);
    }

    Rat qform(const std::vector<Int>& x) const {
        auto [xa, xb] = split(x);
        Rat s = d1->q(xa);
        if (d2) s += d2->q(xb);
        return mod_two(s);
    }

    std::vector<std::vector<Int>> all_elements() const {
        Int o = 1;
        for (const Int& f : factors) o *= f;
        if (o > kEnumerationGuard) throw TooLarge("group too large to enumerate");
        std::vector<std::vector<Int>> out;
        std::vector<Int> cur(factors.size());
        for (;;) {
            out.push_back(cur);
            int i = static_cast<int>(factors.size()) - 1;
            while (i >= 0) {
                cur[i] += 1;
                if (cur[i] < factors[i]) break;
                cur[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
        return out;
    }
};

bool is_zero_vec(const std::vector<Int>& x) {
    for (const Int& c : x)
        if (c != 0) return false;
    return true;
}

std::vector<FiniteSubgroup> enumerate_isotropic(const ProductGroup& g, IsotropyMode mode) {
    if (mode == IsotropyMode::quadratic) {
        if (!g.d1->from_even_lattice() || (g.d2 && !g.d2->from_even_lattice()))
            throw DomainError("quadratic isotropy requires even lattices");
    }

    const std::vector<std::vector<Int>> all = g.all_elements();
    std::vector<std::vector<Int>> iso;
    for (const auto& e : all) {
        if (is_zero_vec(e)) continue;
        if (g.bform(e, e) != 0) continue;
        if (mode == IsotropyMode::quadratic && g.qform(e) != 0) continue;
        iso.push_back(e);
    }

    // Grow subgroups one compatible generator at a time; every isotropic
    // subgroup is reached because any generating chain stays isotropic.
    const std::vector<Int> zero(g.factors.size());
    FiniteSubgroup trivial{{zero}, {}};
    std::set<std::vector<std::vector<Int>>> seen{trivial.elements};
    std::deque<FiniteSubgroup> queue{trivial};
    std::vector<FiniteSubgroup> out;
    while (!queue.empty()) {
        FiniteSubgroup h = std::move(queue.front());
        queue.pop_front();
        for (const auto& cand : iso) {
            if (std::binary_search(h.elements.begin(), h.elements.end(), cand)) continue;
            bool ok = true;
            for (const auto& e : h.elements)
                if (g.bform(cand, e) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::set<std::vector<Int>> ext(h.elements.begin(), h.elements.end());
            std::vector<Int> cur = cand;
            while (!is_zero_vec(cur)) {
                for (const auto& e : h.elements) ext.insert(g.add(e, cur));
                cur = g.add(cur, cand);
            }
            std::vector<std::vector<Int>> elems(ext.begin(), ext.end());
            if (!seen.insert(elems).second) continue;
            FiniteSubgroup bigger{std::move(elems), h.generators};
            bigger.generators.push_back(cand);
            queue.push_back(std::move(bigger));
        }
        out.push_back(std::move(h));
    }

    std::sort(out.begin(), out.end(), [](const FiniteSubgroup& a, const FiniteSubgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

}  // namespace

std::vector<FiniteSubgroup> isotropic_subgroups(const DiscriminantGroup& d1,
                                                const DiscriminantGroup& d2,
                                                bool injective_to_both, IsotropyMode mode) {
    ProductGroup g{&d1, &d2, {}};
    g.factors = d1.invariant_factors();
    g.factors.insert(g.factors.end(), d2.invariant_factors().begin(),
                     d2.invariant_factors().end());
    std::vector<FiniteSubgroup> subs = enumerate_isotropic(g, mode);
    if (!injective_to_both) return subs;

    std::vector<FiniteSubgroup> out;
    const int k1 = d1.ngens();
    for (FiniteSubgroup& h : subs) {
        bool ok = true;
        for (const auto& e : h.elements) {
            if (is_zero_vec(e)) continue;
            const bool first_zero =
                is_zero_vec(std::vector<Int>(e.begin(), e.begin() + k1));
            const bool second_zero =
                is_zero_vec(std::vector<Int>(e.begin() + k1, e.end()));
            if (first_zero || second_zero) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(std::move(h));
    }
    return out;
}

std::vector<FiniteSubgroup> isotropic_subgroups(const DiscriminantGroup& d, IsotropyMode mode) {
    ProductGroup g{&d, nullptr, d.invariant_factors()};
    return enumerate_isotropic(g, mode);
}

namespace {

Overlattice glue_with_lifts(const Lattice& l, const std::vector<std::vector<Rat>>& gen_lifts,
                            size_t subgroup_order) {
    const int n = l.rank();

    Int m = 1;
    for (const auto& gl : gen_lifts)
        for (const Rat& x : gl) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), x.get_den_mpz_t());

    IntMat big(n, n + static_cast<int>(gen_lifts.size()));
    for (int i = 0; i < n; ++i) big(i, i) = m;
    for (size_t j = 0; j < gen_lifts.size(); ++j)
        for (int i = 0; i < n; ++i) {
            Rat x = gen_lifts[j][i] * Rat(m);
            big(i, n + static_cast<int>(j)) = x.get_num();
        }

    const IntMat bb = column_space_basis(big);
    if (bb.cols() != n) throw InternalVerificationFailed("glued lattice lost rank");

    RatMat basis(bb);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) basis(i, j) /= Rat(m);

    const RatMat gram = basis.transposed() * RatMat(l.gram()) * basis;
    if (!gram.is_integral()) throw NotIsotropic("glue subgroup is not isotropic");

    Int index;
    Int mn;
    mpz_pow_ui(mn.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n));
    Int det = abs(determinant(bb));
    mpz_divexact(index.get_mpz_t(), mn.get_mpz_t(), det.get_mpz_t());
    if (index != Int(static_cast<long>(subgroup_order)))
        throw InvalidParameter("element list is not the subgroup generated by the generators");

    return Overlattice{Lattice(gram.to_int()), index, basis};
}

}  // namespace

Overlattice glue_overlattice(const Lattice& l, const DiscriminantGroup& d,
                             const FiniteSubgroup& h) {
    if (!(d.lattice() == l)) throw OwnerMismatch("subgroup lives in a different lattice's group");
    std::vector<std::vector<Rat>> gen_lifts;
    for (const auto& gen : h.generators) gen_lifts.push_back(d.lift(gen));
    return glue_with_lifts(l, gen_lifts, h.elements.size());
}

Overlattice glue_direct_sum(const Lattice& l1, const DiscriminantGroup& d1,
                            const Lattice& l2, const DiscriminantGroup& d2,
                            const FiniteSubgroup& h) {
    if (!(d1.lattice() == l1) || !(d2.lattice() == l2))
        throw OwnerMismatch("subgroup lives in a different lattice's group");
    const Lattice sum = direct_sum({l1, l2});
    const int k1 = d1.ngens();
    std::vector<std::vector<Rat>> gen_lifts;
    for (const auto& gen : h.generators) {
        std::vector<Int> a(gen.begin(), gen.begin() + k1);
        std::vector<Int> b(gen.begin() + k1, gen.end());
        std::vector<Rat> lift = d1.lift(a);
        const std::vector<Rat> lift2 = d2.lift(b);
        lift.insert(lift.end(), lift2.begin(), lift2.end());
        gen_lifts.push_back(std::move(lift));
    }
    return glue_with_lifts(sum, gen_lifts, h.elements.size());
}

std::optional<IntMat> extend_isometry(const IntMat& g, const SublatticeEmbedding& m_in_l) {
    const IntMat& b = m_in_l.basis;
    if (!b.is_square() || determinant(b) == 0)
        throw NotFiniteIndex("sublattice does not have finite index in the ambient lattice");
    const IntMat gram_m = b.transposed() * m_in_l.ambient.gram() * b;
    if (!(g.transposed() * gram_m * g == gram_m))
        throw NotIsometry("matrix is not an isometry of the sublattice");
    const RatMat a = RatMat(b) * RatMat(g) * RatMat(b).inverse();
    if (!a.is_integral()) return std::nullopt;
    return a.to_int();
}

bool cyclic_form_conjugate(const DiscriminantGroup& d1, const DiscriminantGroup& d2) {
    if (d1.ngens() == 0 && d2.ngens() == 0) return true;
    if (d1.ngens() > 1 || d2.ngens() > 1) throw NotCyclic("discriminant group is not cyclic");
    if (d1.ngens() != d2.ngens()) return false;
    const Int n = d1.invariant_factors()[0];
    if (n != d2.invariant_factors()[0]) return false;
    if (n > kEnumerationGuard) throw TooLarge("cyclic group too large for exhaustive search");
    if (!d1.from_even_lattice() || !d2.from_even_lattice())
        throw DomainError("form conjugacy is checked on quadratic forms of even lattices");

    const Rat q1 = d1.q({Int(1)});
    for (Int k = 1; k < n; ++k) {
        Int g;
        mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), n.get_mpz_t());
        if (g != 1) continue;
        if (d2.q({k}) == q1) return true;
    }
    return false;
}

namespace {

Int tuple_order(const std::vector<Int>& factors, const std::vector<Int>& x) {
    Int ord = 1;
    for (size_t i = 0; i < factors.size(); ++i) {
        Int g;
        mpz_gcd(g.get_mpz_t(), x[i].get_mpz_t(), factors[i].get_mpz_t());
        Int o = factors[i] / g;
        mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), o.get_mpz_t());
    }
    return ord;
}

}  // namespace

bool forms_b_conjugate(const DiscriminantGroup& d1, const DiscriminantGroup& d2, int sign) {
    if (sign != 1 && sign != -1) throw InvalidParameter("sign must be +1 or -1");
    if (d1.invariant_factors() != d2.invariant_factors()) return false;
    const std::vector<Int>& factors = d1.invariant_factors();
    const int k = d1.ngens();
    if (k == 0) return true;
    if (d1.order() > 10000) throw TooLarge("group too large for exhaustive conjugacy search");

    const std::vector<std::vector<Int>> elems = d2.elements();
    auto unit = [&](int i) {
        std::vector<Int> g(k);
        g[i] = 1;
        return g;
    };
    // Required pairings of the generator images, mod 1.
    std::vector<std::vector<Rat>> target(k, std::vector<Rat>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) target[i][j] = mod_one(Rat(sign) * d1.b(unit(i), unit(j)));

    std::vector<std::vector<Int>> image(k);
    auto is_bijective = [&]() {
        // Walk all of D1 by odometer and collect the induced images.
        std::set<std::vector<Int>> seen;
        std::vector<Int> x(k);
        while (true) {
            std::vector<Int> y(k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) y[j] += x[i] * image[i][j];
            seen.insert(d2.reduce(y));
            int i = 0;
            while (i < k && ++x[i] == factors[i]) x[i++] = 0;
            if (i == k) break;
        }
        return seen.size() == elems.size();
    };
    std::function<bool(int)> search = [&](int i) -> bool {
        if (i == k) return is_bijective();
        for (const auto& h : elems) {
            if (tuple_order(factors, h) != factors[i]) continue;
            bool ok = mod_one(d2.b(h, h)) == target[i][i];
            for (int j = 0; ok && j < i; ++j) ok = mod_one(d2.b(h, image[j])) == target[i][j];
            if (!ok) continue;
            image[i] = h;
            if (search(i + 1)) return true;
        }
        return false;
    };
    return search(0);
}

}  // namespace fano10
