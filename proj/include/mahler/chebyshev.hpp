#ifndef MAHLER_CHEBYSHEV_HPP
#define MAHLER_CHEBYSHEV_HPP

#include "mahler/poly.hpp"

namespace mahler {

/* Chebyshev polynomial of the first kind, from the hypergeometric closed
   form in powers of (1 - x).  T_0 = 1, T_1 = x, and T_m o T_n = T_{mn}. */
Poly chebyshev_poly(unsigned n);

}  // namespace mahler

#endif
