#ifndef MAHLER_LINALG_HPP
#define MAHLER_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mahler/rat.hpp"

namespace mahler {

/* Dense row-major rational matrix; deliberately minimal. */
class QMatrix {
public:
    QMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    QMatrix transpose() const;
    /* Scale each row by the lcm of its denominators: integer entries, same
       rank profile and right kernel. */
    QMatrix row_cleared() const;

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

/* Columns at which the rank increases during left-to-right elimination;
   rank of the first t columns == number of recorded pivots < t. */
struct RankProfile {
    std::vector<size_t> pivot_cols;
    size_t rank() const { return pivot_cols.size(); }
    size_t rank_of_prefix(size_t t) const;
};

/* Fraction-free (Bareiss) elimination on the row-cleared matrix. */
RankProfile bareiss_rank_profile(const QMatrix& A);

/* Canonical right-kernel basis {x : Ax = 0} derived from the reduced row
   echelon form: one vector per free column, unit in that coordinate.  The
   basis is uniquely determined by A, which is what makes the two
   independent routes below comparable entry by entry. */
std::vector<std::vector<Rat>> rref_right_kernel(const QMatrix& A);

/* Modular route: elimination mod several word-size primes, CRT lift,
   rational reconstruction, then exact verification of A x == 0.  Primes
   whose rank profile disagrees with the reference profile are discarded as
   unlucky.  ConditionError if reconstruction keeps failing. */
std::vector<std::vector<Rat>> modular_right_kernel(const QMatrix& A,
                                                   const RankProfile& reference);

/* Runs both routes, checks they agree exactly, returns the basis. */
std::vector<std::vector<Rat>> dual_right_kernel(const QMatrix& A);

enum class SolveStatus { unique, underdetermined, inconsistent };

/* Gaussian elimination over Q for square or rectangular A, solving Ax = b. */
SolveStatus solve_linear(const QMatrix& A, const std::vector<Rat>& b,
                         std::vector<Rat>& x);

/* Deterministic sequence of ~62-bit primes for the modular route. */
uint64_t nth_modulus(size_t k);

}  // namespace mahler

#endif
