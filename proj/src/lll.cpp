#include "mahler/lll.hpp"

#include <algorithm>

namespace mahler {

namespace {

struct GramSchmidt {
    std::vector<std::vector<Rat>> star;  /* orthogonal vectors */
    std::vector<std::vector<Rat>> mu;    /* mu[i][j], j < i */
    std::vector<Rat> B;                  /* |star_i|^2 */
};

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

GramSchmidt gram_schmidt(const std::vector<std::vector<Int>>& basis) {
    size_t n = basis.size();
    GramSchmidt gs;
    gs.star.resize(n);
    gs.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    gs.B.resize(n);
    for (size_t i = 0; i < n; ++i) {
        gs.star[i] = to_rat(basis[i]);
        for (size_t j = 0; j < i; ++j) {
            gs.mu[i][j] = dot(to_rat(basis[i]), gs.star[j]) / gs.B[j];
            for (size_t k = 0; k < gs.star[i].size(); ++k)
                gs.star[i][k] -= gs.mu[i][j] * gs.star[j][k];
        }
        gs.B[i] = dot(gs.star[i], gs.star[i]);
        if (gs.B[i] == 0)
            throw ConditionError("dependent rows in lattice basis");
    }
    return gs;
}

Int round_rat(const Rat& q) {
    /* Nearest integer, ties toward zero. */
    Int num = q.get_num(), den = q.get_den();
    Int twice = 2 * num + (sgn(num) >= 0 ? den : Int(-den));
    Int den2 = 2 * den;
    Int r;
    mpz_tdiv_q(r.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
    return r;
}

}  // namespace

Rat norm2(const std::vector<Int>& v) {
    Rat s(0);
    for (const auto& c : v) s += Rat(c * c);
    return s;
}

LLLResult lll_reduce(std::vector<std::vector<Int>> basis, const Rat& delta) {
    LLLResult res;
    size_t n = basis.size();
    if (n == 0) { res.basis = basis; return res; }
    size_t dim = basis[0].size();
    for (const auto& row : basis)
        if (row.size() != dim) throw PreconditionError("ragged lattice basis");

    GramSchmidt gs = gram_schmidt(basis);
    auto reduce_pair = [&](size_t k, size_t l) {
        Rat m = gs.mu[k][l];
        if (2 * abs(m) <= 1) return;
        Int r = round_rat(m);
        for (size_t c = 0; c < dim; ++c) basis[k][c] -= r * basis[l][c];
        Rat rr{r};
        for (size_t j = 0; j < l; ++j) gs.mu[k][j] -= rr * gs.mu[l][j];
        gs.mu[k][l] -= rr;
    };

    size_t k = 1;
    while (k < n) {
        reduce_pair(k, k - 1);
        Rat lhs = gs.B[k];
        Rat rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1];
        if (lhs < rhs) {
            std::swap(basis[k], basis[k - 1]);
            gs = gram_schmidt(basis);
            ++res.swap_count;
            k = std::max<size_t>(1, k - 1);
        } else {
            for (size_t l = k - 1; l-- > 0;) reduce_pair(k, l);
            ++k;
        }
    }
    res.basis = std::move(basis);
    return res;
}

bool is_lll_reduced(const std::vector<std::vector<Int>>& basis, const Rat& delta) {
    if (basis.empty()) return true;
    GramSchmidt gs = gram_schmidt(basis);
    size_t n = basis.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            if (2 * abs(gs.mu[i][j]) > 1) return false;
    for (size_t k = 1; k < n; ++k) {
        Rat rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1];
        if (gs.B[k] < rhs) return false;
    }
    return true;
}

}  // namespace mahler
