#ifndef MAHLER_RAT_HPP
#define MAHLER_RAT_HPP

#include <gmpxx.h>
#include <string>

#include "mahler/errors.hpp"

namespace mahler {

using Int = mpz_class;
using Rat = mpq_class;

/* Accepts "num", "num/den", optional leading '-'.  Always canonicalizes. */
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw PreconditionError("empty rational literal");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw PreconditionError("bad rational literal: " + s);
    if (sgn(q.get_den()) == 0)
        throw PreconditionError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/* Floor of log2|q| as a crude magnitude gauge; q must be nonzero. */
inline long log2_abs_floor(const Rat& q) {
    long en = mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
    long ed = mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    return en - ed;
}

}  // namespace mahler

#endif
