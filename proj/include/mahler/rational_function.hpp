#ifndef MAHLER_RATIONAL_FUNCTION_HPP
#define MAHLER_RATIONAL_FUNCTION_HPP

#include "mahler/poly.hpp"

namespace mahler {

/* Quotient of polynomials over Q, eagerly reduced: gcd(num, den) == 1 and
   den is monic.  den is never the zero polynomial. */
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rat(1)) {}
    explicit RationalFunction(const Poly& num) : num_(num), den_(Rat(1)) {}
    RationalFunction(const Poly& num, const Poly& den);

    static RationalFunction x() { return RationalFunction(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    const Poly& as_poly() const;

    /* max(deg num, deg den); the degree of the map. */
    long map_degree() const;
    /* ord0(num) - ord0(den); PoleError on the zero function. */
    long ord0() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    Rat eval(const Rat& x) const;          /* PoleError at a pole */

    /* this o inner. */
    RationalFunction compose(const RationalFunction& inner) const;

    std::string str(const std::string& var = "z") const;

private:
    void reduce();
    Poly num_, den_;
};

}  // namespace mahler

#endif
