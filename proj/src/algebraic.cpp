#include "mahler/algebraic.hpp"

namespace mahler {

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& q) {
    AlgebraicNumber a;
    a.rational_ = true;
    a.rat_ = q;
    a.minpoly_ = Poly(std::vector<Rat>{Rat(-q.get_num()), Rat(q.get_den())});
    a.lo_ = q;
    a.hi_ = q;
    return a;
}

AlgebraicNumber AlgebraicNumber::from_real_root(const Poly& m, const Rat& lo,
                                                const Rat& hi) {
    if (m.degree() < 1) throw PreconditionError("constant defining polynomial");
    if (lo >= hi) throw PreconditionError("empty isolating interval");
    AlgebraicNumber a;
    a.minpoly_ = m.primitive_part();
    {
        Poly g = gcd(a.minpoly_, a.minpoly_.derivative());
        if (g.degree() > 0)
            throw PreconditionError("defining polynomial is not squarefree");
    }
    Rat flo = a.minpoly_.eval(lo), fhi = a.minpoly_.eval(hi);
    if (flo == 0) return from_rational(lo);
    if (fhi == 0) return from_rational(hi);
    if ((flo > 0) == (fhi > 0))
        throw PreconditionError("no sign change on the isolating interval");
    a.lo_ = lo;
    a.hi_ = hi;

    /* Shrink by bisection until the derivative is certainly nonzero on the
       interval, which pins the root count at exactly one. */
    Poly dm = a.minpoly_.derivative();
    for (int step = 0; step < 256; ++step) {
        Mpfr l(128), h(128);
        mpfr_set_q(l.get(), a.lo_.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(h.get(), a.hi_.get_mpq_t(), MPFR_RNDU);
        RealBall iv = RealBall::from_interval(l, h, 128);
        bool certified = false;
        try {
            certified = eval_ball(dm, iv, 128).is_nonzero();
        } catch (const Error&) {
            certified = false;
        }
        if (certified) return a;
        Rat mid = (a.lo_ + a.hi_) / 2;
        Rat fm = a.minpoly_.eval(mid);
        if (fm == 0) return from_rational(mid);
        if ((fm > 0) == (a.minpoly_.eval(a.lo_) > 0)) a.lo_ = mid;
        else a.hi_ = mid;
    }
    throw AmbiguousError("could not certify a unique root in the interval");
}

Int AlgebraicNumber::den() const {
    Int d = minpoly_.lc().get_num();
    return ::abs(d);
}

const Rat& AlgebraicNumber::rational_value() const {
    if (!rational_) throw PreconditionError("not a rational number");
    return rat_;
}

void AlgebraicNumber::refine(mpfr_prec_t prec) const {
    if (rational_) return;
    /* Target interval width: 2^(8-prec) * max(|lo|, 1). */
    Rat scale = abs(lo_);
    if (scale < 1) scale = 1;
    Rat target = scale;
    for (mpfr_prec_t k = 8; k < prec; ++k) target /= 2;
    Rat flo = minpoly_.eval(lo_);
    while (hi_ - lo_ > target) {
        Rat mid = (lo_ + hi_) / 2;
        Rat fm = minpoly_.eval(mid);
        if (fm == 0) {
            /* The root is exactly mid; collapse the interval. */
            lo_ = mid;
            hi_ = mid;
            return;
        }
        if ((fm > 0) == (flo > 0)) { lo_ = mid; flo = fm; }
        else hi_ = mid;
    }
}

ComplexBall AlgebraicNumber::value(mpfr_prec_t prec) const {
    return ComplexBall(real_value(prec));
}

RealBall AlgebraicNumber::real_value(mpfr_prec_t prec) const {
    if (rational_) return RealBall(rat_, prec);
    refine(prec);
    Mpfr l(prec), h(prec);
    mpfr_set_q(l.get(), lo_.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(h.get(), hi_.get_mpq_t(), MPFR_RNDU);
    return RealBall::from_interval(l, h, prec);
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
    if (rational_ != o.rational_) return false;
    if (rational_) return rat_ == o.rat_;
    return minpoly_ == o.minpoly_ && !(hi_ < o.lo_) && !(o.hi_ < lo_);
}

/* ---------------- NumberFieldElement ---------------- */

NumberFieldElement::NumberFieldElement(std::shared_ptr<const AlgebraicNumber> field,
                                       Poly rep)
    : field_(std::move(field)), rep_(std::move(rep)) {
    if (!field_) throw PreconditionError("null field");
    reduce();
}

NumberFieldElement NumberFieldElement::from_rational(
    std::shared_ptr<const AlgebraicNumber> field, const Rat& q) {
    return NumberFieldElement(std::move(field), Poly(q));
}

NumberFieldElement NumberFieldElement::generator(
    std::shared_ptr<const AlgebraicNumber> field) {
    return NumberFieldElement(std::move(field), Poly::x());
}

void NumberFieldElement::reduce() {
    const Poly& m = field_->defining_poly();
    if (rep_.degree() >= m.degree()) {
        Poly q, r;
        Poly::divrem(rep_, m, q, r);
        rep_ = r;
    }
}

Rat NumberFieldElement::rational_value() const {
    if (!is_rational()) throw PreconditionError("element is not rational");
    return rep_.coeff(0);
}

NumberFieldElement NumberFieldElement::operator-() const {
    return NumberFieldElement(field_, -rep_);
}

NumberFieldElement NumberFieldElement::operator+(const NumberFieldElement& o) const {
    return NumberFieldElement(field_, rep_ + o.rep_);
}

NumberFieldElement NumberFieldElement::operator-(const NumberFieldElement& o) const {
    return NumberFieldElement(field_, rep_ - o.rep_);
}

NumberFieldElement NumberFieldElement::operator*(const NumberFieldElement& o) const {
    return NumberFieldElement(field_, rep_ * o.rep_);
}

NumberFieldElement NumberFieldElement::inverse() const {
    if (rep_.is_zero()) throw PoleError("inverse of zero");
    Poly u, v;
    Poly g = xgcd(field_->defining_poly(), rep_, u, v);
    if (g.degree() != 0)
        throw PreconditionError("zero divisor: defining polynomial is reducible");
    return NumberFieldElement(field_, v);
}

bool NumberFieldElement::operator==(const NumberFieldElement& o) const {
    return rep_ == o.rep_;
}

ComplexBall NumberFieldElement::value(mpfr_prec_t prec) const {
    if (field_->is_rational())
        return ComplexBall(rep_.eval(field_->rational_value()), Rat(0), prec);
    return ComplexBall(eval_ball(rep_, field_->real_value(prec), prec));
}

size_t NumberFieldElement::bit_size() const {
    size_t b = 0;
    for (const auto& c : rep_.coeffs()) {
        b = std::max(b, mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
        b = std::max(b, mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
    }
    return b;
}

}  // namespace mahler
