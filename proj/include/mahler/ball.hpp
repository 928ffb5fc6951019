#ifndef MAHLER_BALL_HPP
#define MAHLER_BALL_HPP

#include <mpfr.h>

#include <string>
#include <vector>

#include "mahler/multipoly.hpp"
#include "mahler/rat.hpp"

namespace mahler {

/* Minimal RAII wrapper around mpfr_t.  Copy preserves the source precision
   and value exactly. */
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Mpfr(const Mpfr& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Mpfr(Mpfr&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Mpfr& operator=(const Mpfr& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Mpfr& operator=(Mpfr&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Mpfr() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

private:
    mpfr_t v_;
};

/* Closed real ball {x : |x - mid| <= rad}.  mid carries the working
   precision; rad is kept at a small fixed precision and every operation on
   it rounds away from zero, so the containment invariant survives all
   arithmetic.  Operations mixing two balls work at the larger of the two
   midpoint precisions. */
class RealBall {
public:
    static constexpr mpfr_prec_t radius_prec = 64;

    explicit RealBall(mpfr_prec_t prec = 64);
    RealBall(const Rat& q, mpfr_prec_t prec);
    RealBall(long v, mpfr_prec_t prec);
    RealBall(const Int& v, mpfr_prec_t prec);

    /* Ball covering [lo, hi]; endpoints taken exactly. */
    static RealBall from_interval(const Mpfr& lo, const Mpfr& hi, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mid_.prec(); }
    const Mpfr& mid() const { return mid_; }
    const Mpfr& rad() const { return rad_; }
    bool is_exact() const { return mpfr_zero_p(rad_.get()); }

    Mpfr lower() const;                    /* rounded down */
    Mpfr upper() const;                    /* rounded up */

    bool contains_zero() const;            /* |mid| <= rad, certified */
    bool is_nonzero() const;               /* |mid| >  rad, certified */
    bool is_positive() const;              /* mid - rad > 0, certified */
    /* Certified strict comparison; false means "not provably less". */
    bool definitely_less(const RealBall& o) const;

    RealBall operator-() const;
    RealBall operator+(const RealBall& o) const;
    RealBall operator-(const RealBall& o) const;
    RealBall operator*(const RealBall& o) const;
    RealBall operator/(const RealBall& o) const;  /* PoleError unless o certified nonzero */

    RealBall abs() const;
    RealBall pow_ui(unsigned long e) const;
    RealBall sqrt() const;                 /* PreconditionError unless lower() >= 0 */
    RealBall root(unsigned long k) const;  /* k-th root, same domain rule */
    RealBall log() const;                  /* PreconditionError unless is_positive() */
    RealBall exp() const;
    /* x^q for rational q via exp(q log x); requires is_positive(). */
    RealBall pow_rat(const Rat& q) const;

    double to_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
    std::string str(size_t digits = 20) const;

private:
    friend class ComplexBall;
    void bump_rad_ulp(int ternary);        /* absorb one rounding of mid_ */
    void check_finite() const;
    Mpfr mid_;
    Mpfr rad_;
};

/* Closed complex ball {x : |x - (re + i*im)| <= rad} with a single shared
   radius.  Same precision conventions as RealBall. */
class ComplexBall {
public:
    explicit ComplexBall(mpfr_prec_t prec = 64);
    ComplexBall(const Rat& re, const Rat& im, mpfr_prec_t prec);
    explicit ComplexBall(const RealBall& re);

    mpfr_prec_t prec() const { return re_.prec(); }
    const Mpfr& re() const { return re_; }
    const Mpfr& im() const { return im_; }
    const Mpfr& rad() const { return rad_; }
    bool is_exact() const { return mpfr_zero_p(rad_.get()); }

    /* Ball enclosing |x| over the whole complex ball. */
    RealBall abs() const;
    bool is_nonzero() const;
    bool contains_zero() const;

    ComplexBall operator-() const;
    ComplexBall conj() const;
    ComplexBall operator+(const ComplexBall& o) const;
    ComplexBall operator-(const ComplexBall& o) const;
    ComplexBall operator*(const ComplexBall& o) const;
    ComplexBall operator/(const ComplexBall& o) const;
    ComplexBall operator*(const Rat& c) const;

    ComplexBall pow_ui(unsigned long e) const;
    ComplexBall inverse() const;           /* PoleError unless certified nonzero */

    /* Widen the radius by t (t >= 0), e.g. to absorb a series tail bound. */
    ComplexBall widened(const RealBall& t) const;

    std::string str(size_t digits = 20) const;

private:
    void bump_rad(const Mpfr& e);
    void check_finite() const;
    Mpfr re_, im_;
    Mpfr rad_;
};

/* Horner evaluation of an exact rational polynomial on a ball. */
ComplexBall eval_ball(const Poly& p, const ComplexBall& x, mpfr_prec_t prec);
RealBall eval_ball(const Poly& p, const RealBall& x, mpfr_prec_t prec);
/* point[i] is the value of variable i. */
ComplexBall eval_ball(const MultiPoly& p, const std::vector<ComplexBall>& point,
                      mpfr_prec_t prec);

}  // namespace mahler

#endif
