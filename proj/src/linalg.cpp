#include "mahler/linalg.hpp"

#include <algorithm>

namespace mahler {

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::row_cleared() const {
    QMatrix r(*this);
    for (size_t i = 0; i < rows_; ++i) {
        Int l(1);
        for (size_t j = 0; j < cols_; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.at(i, j).get_den().get_mpz_t());
        if (l != 1) {
            Rat s{l};
            for (size_t j = 0; j < cols_; ++j) r.at(i, j) *= s;
        }
    }
    return r;
}

size_t RankProfile::rank_of_prefix(size_t t) const {
    size_t r = 0;
    for (size_t c : pivot_cols) {
        if (c < t) ++r;
        else break;
    }
    return r;
}

RankProfile bareiss_rank_profile(const QMatrix& A0) {
    QMatrix A = A0.row_cleared();
    size_t rows = A.rows(), cols = A.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = A.at(i, j).get_num();

    RankProfile prof;
    Int prev(1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) {
                Int t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                Int q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw ConditionError("fraction-free division failed");
                a[i][j] = q;
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        prof.pivot_cols.push_back(col);
        ++row;
    }
    return prof;
}

namespace {

/* Reduced row echelon form in place; returns pivot columns. */
std::vector<size_t> rref(QMatrix& A) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        size_t piv = row;
        while (piv < A.rows() && A.at(piv, col) == 0) ++piv;
        if (piv == A.rows()) continue;
        for (size_t j = 0; j < A.cols(); ++j) std::swap(A.at(piv, j), A.at(row, j));
        Rat inv = Rat(1) / A.at(row, col);
        for (size_t j = col; j < A.cols(); ++j) A.at(row, j) *= inv;
        for (size_t i = 0; i < A.rows(); ++i) {
            if (i == row || A.at(i, col) == 0) continue;
            Rat f = A.at(i, col);
            for (size_t j = col; j < A.cols(); ++j)
                A.at(i, j) -= f * A.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rat>> kernel_from_rref(const QMatrix& R,
                                               const std::vector<size_t>& pivots) {
    std::vector<bool> is_pivot(R.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t f = 0; f < R.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(R.cols(), Rat(0));
        x[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -R.at(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

/* ----- word-size modular arithmetic ----- */

uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}
uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) {
    return (uint64_t)(((unsigned __int128)a * b) % p);
}
uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
uint64_t invm(uint64_t a, uint64_t p) { return powm(a, p - 2, p); }

uint64_t rat_mod(const Rat& q, uint64_t p, bool& ok) {
    uint64_t d = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (d == 0) { ok = false; return 0; }
    uint64_t n = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    return mulm(n, invm(d, p), p);
}

struct ModRref {
    std::vector<size_t> pivots;
    std::vector<std::vector<uint64_t>> m;  /* reduced rows */
};

bool mod_rref(const QMatrix& A, uint64_t p, ModRref& out) {
    size_t rows = A.rows(), cols = A.cols();
    out.m.assign(rows, std::vector<uint64_t>(cols, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            bool ok = true;
            out.m[i][j] = rat_mod(A.at(i, j), p, ok);
            if (!ok) return false;
        }
    out.pivots.clear();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && out.m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(out.m[piv], out.m[row]);
        uint64_t inv = invm(out.m[row][col], p);
        for (size_t j = col; j < cols; ++j) out.m[row][j] = mulm(out.m[row][j], inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || out.m[i][col] == 0) continue;
            uint64_t f = out.m[i][col];
            for (size_t j = col; j < cols; ++j)
                out.m[i][j] = subm(out.m[i][j], mulm(f, out.m[row][j], p), p);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return true;
}

bool rational_reconstruct(const Int& r, const Int& m, Rat& out) {
    Int bound;
    mpz_fdiv_q_2exp(bound.get_mpz_t(), m.get_mpz_t(), 1);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    Int r0 = m, r1 = r % m;
    if (r1 < 0) r1 += m;
    Int s0(0), s1(1);
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (s1 == 0) return false;
    if (s1 < 0) { s1 = -s1; r1 = -r1; }
    if (s1 > bound) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1) return false;
    out = Rat(r1) / Rat(s1);
    return true;
}

}  // namespace

std::vector<std::vector<Rat>> rref_right_kernel(const QMatrix& A) {
    QMatrix R = A;
    auto pivots = rref(R);
    return kernel_from_rref(R, pivots);
}

std::vector<std::vector<Rat>> modular_right_kernel(const QMatrix& A,
                                                   const RankProfile& reference) {
    size_t cols = A.cols();
    size_t nullity = cols - reference.rank();
    if (nullity == 0) return {};

    /* Accumulated CRT residues for each basis vector entry. */
    std::vector<std::vector<Int>> acc(nullity, std::vector<Int>(cols, Int(0)));
    Int modulus(1);
    size_t used = 0;

    for (size_t k = 0; k < 64; ++k) {
        uint64_t p = nth_modulus(k);
        ModRref mr;
        if (!mod_rref(A, p, mr)) continue;            /* denominator hit */
        if (mr.pivots != reference.pivot_cols) continue; /* unlucky prime */

        std::vector<bool> is_pivot(cols, false);
        for (size_t c : mr.pivots) is_pivot[c] = true;
        std::vector<std::vector<uint64_t>> basis;
        for (size_t f = 0; f < cols; ++f) {
            if (is_pivot[f]) continue;
            std::vector<uint64_t> x(cols, 0);
            x[f] = 1;
            for (size_t r = 0; r < mr.pivots.size(); ++r)
                x[mr.pivots[r]] = mr.m[r][f] == 0 ? 0 : p - mr.m[r][f];
            basis.push_back(std::move(x));
        }

        Int pz(p);
        for (size_t v = 0; v < nullity; ++v) {
            for (size_t j = 0; j < cols; ++j) {
                if (used == 0) {
                    acc[v][j] = Int(basis[v][j]);
                } else {
                    /* x == acc mod modulus, x == basis mod p */
                    Int d = Int(basis[v][j]) - acc[v][j] % pz;
                    Int minv;
                    if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0)
                        throw ConditionError("repeated modulus in CRT");
                    Int t = (d * minv) % pz;
                    if (t < 0) t += pz;
                    acc[v][j] = acc[v][j] + modulus * t;
                }
            }
        }
        modulus *= pz;
        ++used;
        if (used < 2) continue;  /* insist on at least two moduli */

        std::vector<std::vector<Rat>> out(nullity, std::vector<Rat>(cols));
        bool all_ok = true;
        for (size_t v = 0; v < nullity && all_ok; ++v)
            for (size_t j = 0; j < cols && all_ok; ++j)
                all_ok = rational_reconstruct(acc[v][j], modulus, out[v][j]);
        if (!all_ok) continue;

        bool verified = true;
        for (size_t v = 0; v < nullity && verified; ++v) {
            for (size_t i = 0; i < A.rows() && verified; ++i) {
                Rat s(0);
                for (size_t j = 0; j < cols; ++j) s += A.at(i, j) * out[v][j];
                verified = (s == 0);
            }
        }
        if (verified) return out;
    }
    throw ConditionError("modular kernel reconstruction did not converge");
}

std::vector<std::vector<Rat>> dual_right_kernel(const QMatrix& A) {
    RankProfile prof = bareiss_rank_profile(A);
    auto exact = rref_right_kernel(A);
    if (exact.size() != A.cols() - prof.rank())
        throw ConditionError("elimination routes disagree on nullity");
    auto modular = modular_right_kernel(A, prof);
    if (exact != modular)
        throw ConditionError("elimination routes disagree on the kernel basis");
    return exact;
}

SolveStatus solve_linear(const QMatrix& A, const std::vector<Rat>& b,
                         std::vector<Rat>& x) {
    if (b.size() != A.rows()) throw PreconditionError("rhs size mismatch");
    QMatrix aug(A.rows(), A.cols() + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols())
        return SolveStatus::inconsistent;
    x.assign(A.cols(), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, A.cols());
    return pivots.size() == A.cols() ? SolveStatus::unique
                                     : SolveStatus::underdetermined;
}

uint64_t nth_modulus(size_t k) {
    static std::vector<uint64_t> cache;
    if (cache.empty()) {
        mpz_class p(1);
        p <<= 62;
        for (;;) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            cache.push_back(mpz_get_ui(p.get_mpz_t()));
            if (cache.size() >= 64) break;
        }
    }
    if (k >= cache.size()) throw ConditionError("modulus pool exhausted");
    return cache[k];
}

}  // namespace mahler
