#include "mahler/chebyshev.hpp"

namespace mahler {

Poly chebyshev_poly(unsigned n) {
    if (n == 0) return Poly(Rat(1));
    /* T_n(x) = n * sum_{k=0}^{n} (-2)^k (n+k-1)! / ((n-k)! (2k)!) (1-x)^k */
    Poly in_u;
    for (unsigned k = 0; k <= n; ++k) {
        Int num, d1, d2;
        mpz_fac_ui(num.get_mpz_t(), n + k - 1);
        mpz_fac_ui(d1.get_mpz_t(), n - k);
        mpz_fac_ui(d2.get_mpz_t(), 2 * k);
        Int sign(1);
        mpz_mul_2exp(sign.get_mpz_t(), sign.get_mpz_t(), k);
        if (k & 1) sign = -sign;
        Rat c = Rat(sign * num) / Rat(d1 * d2);
        in_u.set_coeff(k, c * Rat((long)n));
    }
    Poly one_minus_x(std::vector<Rat>{Rat(1), Rat(-1)});
    return compose(in_u, one_minus_x);
}

}  // namespace mahler
