#include "fano10/exactlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace fano10 {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IntMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw InvalidParameter("ragged matrix literal");
        int j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

IntMat IntMat::diagonal(const std::vector<Int>& d) {
    IntMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
    return m;
}

bool IntMat::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntMat::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw InvalidParameter("matrix product dimension mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidParameter("matrix difference dimension mismatch");
    IntMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntMat IntMat::transposed() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

std::vector<Int> IntMat::col(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Int> IntMat::mul_vec(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw InvalidParameter("matrix-vector dimension mismatch");
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
    return r;
}

void IntMat::set_col(int j, const std::vector<Int>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMat IntMat::cols_subset(const std::vector<int>& idx) const {
    IntMat r(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < r.cols(); ++j)
        for (int i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
    return r;
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

RatMat::RatMat(const IntMat& m) : RatMat(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw InvalidParameter("matrix product dimension mismatch");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

RatMat RatMat::transposed() const {
    RatMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

std::vector<Rat> RatMat::mul_vec(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw InvalidParameter("matrix-vector dimension mismatch");
    std::vector<Rat> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
    return r;
}

std::vector<Rat> RatMat::col(int j) const {
    std::vector<Rat> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw NonSquare("inverse of non-square matrix");
    int n = rows_;
    RatMat a = *this;
    RatMat inv = RatMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw Degenerate("singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        Rat p = a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

bool RatMat::is_integral() const {
    for (const Rat& x : a_)
        if (x.get_den() != 1) return false;
    return true;
}

IntMat RatMat::to_int() const {
    if (!is_integral()) throw Degenerate("matrix is not integral");
    IntMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).get_num();
    return r;
}

std::vector<Int> SnfResult::diagonal() const {
    int n = std::min(d.rows(), d.cols());
    std::vector<Int> r(n);
    for (int i = 0; i < n; ++i) r[i] = d(i, i);
    return r;
}

std::vector<Int> SnfResult::invariant_factors() const {
    std::vector<Int> r;
    for (const Int& x : diagonal())
        if (x != 0) r.push_back(x);
    return r;
}

int SnfResult::rank() const { return static_cast<int>(invariant_factors().size()); }

namespace {

// Division with remainder minimized in absolute value; used to shrink SNF pivots fast.
Int rounded_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > abs(b)) q += 1;
    return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& a) {
    const int nr = a.rows(), nc = a.cols();
    SnfResult res{a, IntMat::identity(nr), IntMat::identity(nc)};
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    auto swap_rows = [&](int i, int k) {
        if (i == k) return;
        for (int j = 0; j < nc; ++j) std::swap(d(i, j), d(k, j));
        for (int j = 0; j < nr; ++j) std::swap(u(i, j), u(k, j));
    };
    auto swap_cols = [&](int j, int k) {
        if (j == k) return;
        for (int i = 0; i < nr; ++i) std::swap(d(i, j), d(i, k));
        for (int i = 0; i < nc; ++i) std::swap(v(i, j), v(i, k));
    };
    auto add_row = [&](int dst, int src, const Int& f) {  // row dst += f * row src
        for (int j = 0; j < nc; ++j) d(dst, j) += f * d(src, j);
        for (int j = 0; j < nr; ++j) u(dst, j) += f * u(src, j);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < nc; ++j) d(i, j) = -d(i, j);
        for (int j = 0; j < nr; ++j) u(i, j) = -u(i, j);
    };

    // One-shot gcd elimination (Bezout 2x2 unimodular transform) instead of
    // iterated Euclidean subtraction: keeps intermediate entries small on the
    // dense structured matrices that arise from rank-20+ Gram computations.
    auto gcd_rows = [&](int t, int i) {  // zero d(i, t) against pivot d(t, t)
        const Int a = d(t, t), b = d(i, t);
        if (b == 0) return;
        if (a != 0 && b % a == 0) {
            add_row(i, t, -(b / a));
            return;
        }
        Int g, s, w;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), w.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        const Int ag = a / g, bg = b / g;
        for (int j = 0; j < nc; ++j) {
            const Int x = d(t, j), y = d(i, j);
            d(t, j) = s * x + w * y;
            d(i, j) = ag * y - bg * x;
        }
        for (int j = 0; j < nr; ++j) {
            const Int x = u(t, j), y = u(i, j);
            u(t, j) = s * x + w * y;
            u(i, j) = ag * y - bg * x;
        }
    };
    auto gcd_cols = [&](int t, int j) {  // zero d(t, j) against pivot d(t, t)
        const Int a = d(t, t), b = d(t, j);
        if (b == 0) return;
        if (a != 0 && b % a == 0) {
            const Int q = -(b / a);
            for (int i = 0; i < nr; ++i) d(i, j) += q * d(i, t);
            for (int i = 0; i < nc; ++i) v(i, j) += q * v(i, t);
            return;
        }
        Int g, s, w;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), w.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        const Int ag = a / g, bg = b / g;
        for (int i = 0; i < nr; ++i) {
            const Int x = d(i, t), y = d(i, j);
            d(i, t) = s * x + w * y;
            d(i, j) = ag * y - bg * x;
        }
        for (int i = 0; i < nc; ++i) {
            const Int x = v(i, t), y = v(i, j);
            v(i, t) = s * x + w * y;
            v(i, j) = ag * y - bg * x;
        }
    };

    const int n = std::min(nr, nc);
    for (int t = 0; t < n; ++t) {
        // Smallest-absolute-value nonzero pivot, row-major scan.
        auto find_pivot = [&]() -> std::pair<int, int> {
            int bi = -1, bj = -1;
            Int best;
            for (int i = t; i < nr; ++i)
                for (int j = t; j < nc; ++j) {
                    if (d(i, j) == 0) continue;
                    Int av = abs(d(i, j));
                    if (bi < 0 || av < best) {
                        best = av;
                        bi = i;
                        bj = j;
                    }
                }
            return {bi, bj};
        };

        auto [pi, pj] = find_pivot();
        if (pi < 0) break;  // remaining block is zero
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            // Clear column t, then row t; a Bezout column step can re-dirty
            // the column, so iterate. The pivot only ever shrinks to a proper
            // divisor of itself, so this terminates.
            for (int i = t + 1; i < nr; ++i) gcd_rows(t, i);
            for (int j = t + 1; j < nc; ++j) gcd_cols(t, j);
            bool clean = true;
            for (int i = t + 1; i < nr && clean; ++i) clean = d(i, t) == 0;
            for (int j = t + 1; j < nc && clean; ++j) clean = d(t, j) == 0;
            if (!clean) continue;

            // Divisibility fix-up: pivot must divide the rest of the block.
            bool fixed = true;
            for (int i = t + 1; i < nr && fixed; ++i)
                for (int j = t + 1; j < nc && fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d(t, t) < 0) negate_row(t);
    }
    return res;
}

Int determinant(const IntMat& a) {
    if (!a.is_square()) throw NonSquare("determinant of non-square matrix");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMat m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::pair<int, int> signature(const IntMat& gram) {
    if (!gram.is_square()) throw NonSquare("signature of non-square matrix");
    if (!gram.is_symmetric()) throw NonSymmetric("signature of non-symmetric matrix");
    const int n = gram.rows();
    RatMat m(gram);
    int pos = 0, neg = 0;
    int k = 0;
    auto sym_swap = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
        for (int r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
    };
    while (k < n) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv >= 0) {
            sym_swap(k, piv);
            const Rat p = m(k, k);
            if (p > 0)
                ++pos;
            else
                ++neg;
            // Row-only elimination; the untouched row k is never revisited, and
            // the working block stays symmetric (Schur complement).
            for (int i = k + 1; i < n; ++i) {
                if (m(i, k) == 0) continue;
                Rat f = m(i, k) / p;
                for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            }
            ++k;
            continue;
        }
        // All remaining diagonal entries vanish: find an off-diagonal entry
        // and reduce a hyperbolic 2x2 block, contributing (1,1).
        int bi = -1, bj = -1;
        for (int i = k; i < n && bi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (m(i, j) != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        if (bi < 0) throw Degenerate("degenerate symmetric matrix");
        sym_swap(k, bi);
        sym_swap(k + 1, bj);
        const Rat s = m(k, k + 1);
        ++pos;
        ++neg;
        for (int i = k + 2; i < n; ++i) {
            // Zero m(i,k) and m(i,k+1) using the inverse of [[0,s],[s,0]].
            Rat x = m(i, k + 1) / s;
            Rat y = m(i, k) / s;
            if (x == 0 && y == 0) continue;
            for (int j = k; j < n; ++j) m(i, j) -= x * m(k, j) + y * m(k + 1, j);
        }
        k += 2;
    }
    return {pos, neg};
}

IntMat hermite_column_form(const IntMat& a) {
    const int nr = a.rows(), nc = a.cols();
    IntMat h = a;
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int i = 0; i < nr; ++i) h(i, dst) += f * h(i, src);
    };
    int c = 0;
    for (int r = 0; r < nr && c < nc; ++r) {
        // Euclid across columns c..nc-1 in row r.
        for (;;) {
            int jmin = -1;
            Int best;
            for (int j = c; j < nc; ++j) {
                if (h(r, j) == 0) continue;
                Int av = abs(h(r, j));
                if (jmin < 0 || av < best) {
                    best = av;
                    jmin = j;
                }
            }
            if (jmin < 0) break;  // row r is zero on the working columns
            for (int i = 0; i < nr; ++i) std::swap(h(i, c), h(i, jmin));
            if (h(r, c) < 0)
                for (int i = 0; i < nr; ++i) h(i, c) = -h(i, c);
            bool clean = true;
            for (int j = c + 1; j < nc; ++j) {
                if (h(r, j) == 0) continue;
                Int q = rounded_quotient(h(r, j), h(r, c));
                add_col(j, c, -q);
                if (h(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, c) != 0) {
            // Reduce earlier columns against the new pivot.
            for (int j = 0; j < c; ++j) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, c).get_mpz_t());
                if (q != 0) add_col(j, c, -q);
            }
            ++c;
        }
    }
    return h;
}

IntMat kernel_basis(const IntMat& a) {
    SnfResult s = smith_normal_form(a);
    const int rank = s.rank();
    std::vector<int> idx;
    for (int j = rank; j < a.cols(); ++j) idx.push_back(j);
    IntMat k = s.v.cols_subset(idx);
    return hermite_column_form(k);
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& rhs) {
    if (static_cast<int>(rhs.size()) != a.rows())
        throw InvalidParameter("right-hand side length does not match row count");
    const SnfResult s = smith_normal_form(a);
    const std::vector<Int> c = s.u.mul_vec(rhs);
    const std::vector<Int> diag = s.diagonal();
    std::vector<Int> y(a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        const Int d = i < static_cast<int>(diag.size()) ? diag[i] : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    return s.v.mul_vec(y);
}

IntMat column_space_basis(const IntMat& a) {
    IntMat h = hermite_column_form(a);
    std::vector<int> keep;
    for (int j = 0; j < h.cols(); ++j) {
        bool zero = true;
        for (int i = 0; i < h.rows() && zero; ++i)
            if (h(i, j) != 0) zero = false;
        if (!zero) keep.push_back(j);
    }
    return h.cols_subset(keep);
}

Int gcd_of(const std::vector<Int>& xs) {
    Int g = 0;
    for (const Int& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

}  // namespace fano10
