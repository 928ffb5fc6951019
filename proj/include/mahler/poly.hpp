#ifndef MAHLER_POLY_HPP
#define MAHLER_POLY_HPP

#include <vector>

#include "mahler/rat.hpp"

namespace mahler {

/* Dense univariate polynomial over Q.  Invariant: no trailing zero
   coefficient; the zero polynomial has an empty coefficient vector and
   degree() == -1. */
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c) { coeffs_.push_back(c); trim(); }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly x();                       /* the monomial z */
    static Poly monomial(size_t k, const Rat& c = Rat(1));

    long degree() const { return (long)coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    const Rat& lc() const;
    Rat coeff(size_t k) const;             /* 0 beyond degree */
    void set_coeff(size_t k, const Rat& c);
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /* Order of vanishing at 0; PoleError on the zero polynomial. */
    long ord0() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator/(const Rat& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(unsigned long e) const;
    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Poly shift(long k) const;              /* multiply by z^k, k >= 0 */

    /* Euclidean division; PoleError when o is zero. */
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
    Poly operator/(const Poly& o) const;   /* exact; throws if remainder != 0 */

    bool has_integer_coeffs() const;
    /* Gcd of integer numerators over lcm of denominators split out: returns
       c > 0 with *this == c * primitive_part(); PoleError on zero. */
    Rat content() const;
    Poly primitive_part() const;           /* integer coeffs, gcd 1, lc > 0 */

    /* Sum of absolute values of the coefficients. */
    Rat length() const;

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

Poly gcd(const Poly& a, const Poly& b);                   /* monic, or 0 */
Poly xgcd(const Poly& a, const Poly& b, Poly& u, Poly& v); /* g = u*a+v*b */

/* p(r(z)) by Horner.  compose(p, q) == p o q. */
Poly compose(const Poly& p, const Poly& q);

/* Iterated self-composition p o p o ... o p (n copies); n == 0 gives z. */
Poly self_compose(const Poly& p, unsigned n);

}  // namespace mahler

#endif
