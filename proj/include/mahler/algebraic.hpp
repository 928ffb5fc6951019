#ifndef MAHLER_ALGEBRAIC_HPP
#define MAHLER_ALGEBRAIC_HPP

#include <memory>

#include "mahler/ball.hpp"
#include "mahler/poly.hpp"

namespace mahler {

/* A real algebraic number given by an integer defining polynomial and an
   isolating rational interval.  The polynomial is stored primitive with
   positive leading coefficient and is checked squarefree; minimality
   (irreducibility) is the caller's contract and everything downstream that
   needs field semantics says so.  Rational numbers take a degree-1 defining
   polynomial and keep their exact value. */
class AlgebraicNumber {
public:
    static AlgebraicNumber from_rational(const Rat& q);
    /* Isolate the unique root of m in [lo, hi]; requires an exact sign
       change and refines until interval Newton certifies uniqueness.
       AmbiguousError when the interval cannot be certified to hold exactly
       one root; PreconditionError when there is no sign change. */
    static AlgebraicNumber from_real_root(const Poly& m, const Rat& lo, const Rat& hi);

    const Poly& defining_poly() const { return minpoly_; }
    long degree() const { return minpoly_.degree(); }
    /* Leading coefficient of the defining polynomial; den * y is an
       algebraic integer. */
    Int den() const;

    bool is_rational() const { return rational_; }
    const Rat& rational_value() const;

    /* Enclosure of the root, refined so the radius is below 2^(8-prec)
       relative to the midpoint (absolute when the root straddles 0). */
    ComplexBall value(mpfr_prec_t prec) const;
    RealBall real_value(mpfr_prec_t prec) const;

    bool operator==(const AlgebraicNumber& o) const;

private:
    AlgebraicNumber() = default;
    void refine(mpfr_prec_t prec) const;
    Poly minpoly_;
    bool rational_ = false;
    Rat rat_;
    mutable Rat lo_, hi_;   /* isolating interval, shrinks monotonically */
};

/* Element of Q[w]/(m) for the defining polynomial m of a shared
   AlgebraicNumber, represented by its reduced polynomial in the generator.
   Field semantics (inverses of all nonzero elements) relies on m being
   irreducible; a zero divisor surfaces as PreconditionError. */
class NumberFieldElement {
public:
    NumberFieldElement(std::shared_ptr<const AlgebraicNumber> field, Poly rep);
    static NumberFieldElement from_rational(std::shared_ptr<const AlgebraicNumber> field,
                                            const Rat& q);
    static NumberFieldElement generator(std::shared_ptr<const AlgebraicNumber> field);

    const Poly& rep() const { return rep_; }
    const std::shared_ptr<const AlgebraicNumber>& field() const { return field_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rat rational_value() const;

    NumberFieldElement operator-() const;
    NumberFieldElement operator+(const NumberFieldElement& o) const;
    NumberFieldElement operator-(const NumberFieldElement& o) const;
    NumberFieldElement operator*(const NumberFieldElement& o) const;
    NumberFieldElement inverse() const;
    bool operator==(const NumberFieldElement& o) const;

    ComplexBall value(mpfr_prec_t prec) const;

    /* Max coefficient bit size, a crude growth gauge for budget checks. */
    size_t bit_size() const;

private:
    void reduce();
    std::shared_ptr<const AlgebraicNumber> field_;
    Poly rep_;
};

}  // namespace mahler

#endif
