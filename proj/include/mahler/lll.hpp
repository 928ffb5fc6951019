#ifndef MAHLER_LLL_HPP
#define MAHLER_LLL_HPP

#include <vector>

#include "mahler/rat.hpp"

namespace mahler {

/* Lattice basis reduction (LLL) on integer row vectors with exact rational
   Gram-Schmidt data.  Rows must be linearly independent. */
struct LLLResult {
    std::vector<std::vector<Int>> basis;
    size_t swap_count = 0;
};

LLLResult lll_reduce(std::vector<std::vector<Int>> basis,
                     const Rat& delta = Rat(3) / Rat(4));

/* Exact check of the size-reduction and Lovasz conditions. */
bool is_lll_reduced(const std::vector<std::vector<Int>>& basis,
                    const Rat& delta = Rat(3) / Rat(4));

/* Squared euclidean norm. */
Rat norm2(const std::vector<Int>& v);

}  // namespace mahler

#endif
