#include "mahler/ball.hpp"

#include <algorithm>

namespace mahler {

namespace {

mpfr_prec_t join_prec(mpfr_prec_t a, mpfr_prec_t b) { return std::max(a, b); }

/* One-ulp magnitude of x, an upper bound for any single nearest rounding
   applied when producing x.  x must be a nonzero finite number. */
void ulp_of(Mpfr& out, mpfr_srcptr x) {
    mpfr_set_ui_2exp(out.get(), 1, mpfr_get_exp(x) - mpfr_get_prec(x), MPFR_RNDU);
}

}  // namespace

/* ---------------- RealBall ---------------- */

RealBall::RealBall(mpfr_prec_t prec) : mid_(prec), rad_(radius_prec) {}

RealBall::RealBall(const Rat& q, mpfr_prec_t prec) : mid_(prec), rad_(radius_prec) {
    int t = mpfr_set_q(mid_.get(), q.get_mpq_t(), MPFR_RNDN);
    bump_rad_ulp(t);
    check_finite();
}

RealBall::RealBall(long v, mpfr_prec_t prec) : mid_(prec), rad_(radius_prec) {
    int t = mpfr_set_si(mid_.get(), v, MPFR_RNDN);
    bump_rad_ulp(t);
}

RealBall::RealBall(const Int& v, mpfr_prec_t prec) : mid_(prec), rad_(radius_prec) {
    int t = mpfr_set_z(mid_.get(), v.get_mpz_t(), MPFR_RNDN);
    bump_rad_ulp(t);
}

RealBall RealBall::from_interval(const Mpfr& lo, const Mpfr& hi, mpfr_prec_t prec) {
    if (mpfr_cmp(lo.get(), hi.get()) > 0)
        throw PreconditionError("interval endpoints out of order");
    RealBall b(prec);
    mpfr_add(b.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(b.mid_.get(), b.mid_.get(), 1, MPFR_RNDN);
    /* Radius measured from the computed midpoint covers both endpoints and
       absorbs the midpoint rounding. */
    Mpfr d1(radius_prec), d2(radius_prec);
    mpfr_sub(d1.get(), hi.get(), b.mid_.get(), MPFR_RNDU);
    mpfr_sub(d2.get(), b.mid_.get(), lo.get(), MPFR_RNDU);
    mpfr_max(b.rad_.get(), d1.get(), d2.get(), MPFR_RNDU);
    if (mpfr_sgn(b.rad_.get()) < 0) mpfr_set_zero(b.rad_.get(), 1);
    b.check_finite();
    return b;
}

void RealBall::bump_rad_ulp(int ternary) {
    if (ternary == 0) return;
    if (mpfr_zero_p(mid_.get()) || !mpfr_number_p(mid_.get()))
        throw PrecisionExhausted("cannot bound rounding error");
    Mpfr u(radius_prec);
    ulp_of(u, mid_.get());
    mpfr_add(rad_.get(), rad_.get(), u.get(), MPFR_RNDU);
}

void RealBall::check_finite() const {
    if (!mpfr_number_p(mid_.get()) || !mpfr_number_p(rad_.get()) ||
        mpfr_sgn(rad_.get()) < 0)
        throw PrecisionExhausted("non-finite ball");
}

Mpfr RealBall::lower() const {
    Mpfr r(prec());
    mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return r;
}

Mpfr RealBall::upper() const {
    Mpfr r(prec());
    mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return r;
}

bool RealBall::contains_zero() const {
    return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0;
}

bool RealBall::is_nonzero() const {
    return mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

bool RealBall::is_positive() const {
    return mpfr_sgn(mid_.get()) > 0 && mpfr_cmp(mid_.get(), rad_.get()) > 0;
}

bool RealBall::definitely_less(const RealBall& o) const {
    Mpfr u = upper(), l = o.lower();
    return mpfr_cmp(u.get(), l.get()) < 0;
}

RealBall RealBall::operator-() const {
    RealBall r(*this);
    mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
    return r;
}

RealBall RealBall::operator+(const RealBall& o) const {
    RealBall r(join_prec(prec(), o.prec()));
    int t = mpfr_add(r.mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    r.bump_rad_ulp(t);
    r.check_finite();
    return r;
}

RealBall RealBall::operator-(const RealBall& o) const { return *this + (-o); }

RealBall RealBall::operator*(const RealBall& o) const {
    RealBall r(join_prec(prec(), o.prec()));
    int t = mpfr_mul(r.mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    /* |ab - mb'| <= |a||rb| + |b||ra| + ra rb, all accumulated upward. */
    Mpfr am(prec()), bm(o.prec()), term(radius_prec);
    mpfr_abs(am.get(), mid_.get(), MPFR_RNDU);
    mpfr_abs(bm.get(), o.mid_.get(), MPFR_RNDU);
    mpfr_mul(term.get(), am.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_set(r.rad_.get(), term.get(), MPFR_RNDU);
    mpfr_mul(term.get(), bm.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
    mpfr_mul(term.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
    r.bump_rad_ulp(t);
    r.check_finite();
    return r;
}

RealBall RealBall::operator/(const RealBall& o) const {
    if (!o.is_nonzero()) throw PoleError("division by a ball containing zero");
    RealBall r(join_prec(prec(), o.prec()));
    int t = mpfr_div(r.mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    /* |a/b - am/bm| <= (|am| rb + |bm| ra) / (|bm| (|bm| - rb)). */
    Mpfr am(radius_prec), bm(radius_prec), num(radius_prec), den(radius_prec), tmp(radius_prec);
    mpfr_abs(am.get(), mid_.get(), MPFR_RNDU);     /* low-prec abs rounds up */
    mpfr_abs(bm.get(), o.mid_.get(), MPFR_RNDU);
    mpfr_mul(num.get(), am.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), bm.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), tmp.get(), MPFR_RNDU);
    mpfr_abs(bm.get(), o.mid_.get(), MPFR_RNDD);
    mpfr_sub(den.get(), bm.get(), o.rad_.get(), MPFR_RNDD);
    mpfr_mul(den.get(), bm.get(), den.get(), MPFR_RNDD);
    mpfr_div(r.rad_.get(), num.get(), den.get(), MPFR_RNDU);
    r.bump_rad_ulp(t);
    r.check_finite();
    return r;
}

RealBall RealBall::abs() const {
    RealBall r(*this);
    mpfr_abs(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
    return r;
}

RealBall RealBall::pow_ui(unsigned long e) const {
    RealBall r(Rat(1), prec());
    RealBall b(*this);
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

namespace {

/* Monotone increasing f applied to a ball through its endpoints. */
template <typename F>
RealBall monotone_map(const RealBall& x, F&& f, mpfr_prec_t prec) {
    Mpfr lo = x.lower(), hi = x.upper();
    Mpfr rlo(prec), rhi(prec);
    f(rlo.get(), lo.get(), MPFR_RNDD);
    f(rhi.get(), hi.get(), MPFR_RNDU);
    return RealBall::from_interval(rlo, rhi, prec);
}

}  // namespace

RealBall RealBall::sqrt() const {
    Mpfr lo = lower();
    if (mpfr_sgn(lo.get()) < 0) throw PreconditionError("sqrt of a ball crossing 0");
    return monotone_map(*this, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) {
        mpfr_sqrt(r, x, rnd);
    }, prec());
}

RealBall RealBall::root(unsigned long k) const {
    if (k == 0) throw PreconditionError("0th root");
    Mpfr lo = lower();
    if (mpfr_sgn(lo.get()) < 0) throw PreconditionError("root of a ball crossing 0");
    return monotone_map(*this, [k](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) {
        mpfr_rootn_ui(r, x, k, rnd);
    }, prec());
}

RealBall RealBall::log() const {
    if (!is_positive()) throw PreconditionError("log of a ball not certified positive");
    return monotone_map(*this, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) {
        mpfr_log(r, x, rnd);
    }, prec());
}

RealBall RealBall::exp() const {
    RealBall r = monotone_map(*this, [](mpfr_ptr rr, mpfr_srcptr x, mpfr_rnd_t rnd) {
        mpfr_exp(rr, x, rnd);
    }, prec());
    r.check_finite();
    return r;
}

RealBall RealBall::pow_rat(const Rat& q) const {
    if (is_integer(q) && q >= 0 && q.get_num().fits_ulong_p())
        return pow_ui(q.get_num().get_ui());
    RealBall l = log();
    return (l * RealBall(q, prec())).exp();
}

std::string RealBall::str(size_t digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", (int)digits, mid_.get());
    std::string out(s);
    mpfr_free_str(s);
    if (!is_exact()) {
        mpfr_asprintf(&s, "%.3Rg", rad_.get());
        out += " +/- ";
        out += s;
        mpfr_free_str(s);
    }
    return out;
}

/* ---------------- ComplexBall ---------------- */

ComplexBall::ComplexBall(mpfr_prec_t prec)
    : re_(prec), im_(prec), rad_(RealBall::radius_prec) {}

ComplexBall::ComplexBall(const Rat& re, const Rat& im, mpfr_prec_t prec)
    : re_(prec), im_(prec), rad_(RealBall::radius_prec) {
    int t1 = mpfr_set_q(re_.get(), re.get_mpq_t(), MPFR_RNDN);
    int t2 = mpfr_set_q(im_.get(), im.get_mpq_t(), MPFR_RNDN);
    Mpfr u(RealBall::radius_prec);
    if (t1 != 0) { ulp_of(u, re_.get()); bump_rad(u); }
    if (t2 != 0) { ulp_of(u, im_.get()); bump_rad(u); }
    check_finite();
}

ComplexBall::ComplexBall(const RealBall& re)
    : re_(re.mid()), im_(re.prec()), rad_(re.rad()) {}

void ComplexBall::bump_rad(const Mpfr& e) {
    mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU);
}

void ComplexBall::check_finite() const {
    if (!mpfr_number_p(re_.get()) || !mpfr_number_p(im_.get()) ||
        !mpfr_number_p(rad_.get()) || mpfr_sgn(rad_.get()) < 0)
        throw PrecisionExhausted("non-finite ball");
}

RealBall ComplexBall::abs() const {
    RealBall out(prec());
    int t = mpfr_hypot(out.mid_.get(), re_.get(), im_.get(), MPFR_RNDN);
    mpfr_set(out.rad_.get(), rad_.get(), MPFR_RNDU);
    out.bump_rad_ulp(t);
    out.check_finite();
    return out;
}

bool ComplexBall::is_nonzero() const {
    Mpfr h(RealBall::radius_prec);
    mpfr_hypot(h.get(), re_.get(), im_.get(), MPFR_RNDD);
    return mpfr_cmp(h.get(), rad_.get()) > 0;
}

bool ComplexBall::contains_zero() const {
    Mpfr h(RealBall::radius_prec);
    mpfr_hypot(h.get(), re_.get(), im_.get(), MPFR_RNDU);
    return mpfr_cmp(h.get(), rad_.get()) <= 0;
}

ComplexBall ComplexBall::operator-() const {
    ComplexBall r(*this);
    mpfr_neg(r.re_.get(), r.re_.get(), MPFR_RNDN);
    mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);
    return r;
}

ComplexBall ComplexBall::conj() const {
    ComplexBall r(*this);
    mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);
    return r;
}

ComplexBall ComplexBall::operator+(const ComplexBall& o) const {
    ComplexBall r(join_prec(prec(), o.prec()));
    int t1 = mpfr_add(r.re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    int t2 = mpfr_add(r.im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    Mpfr u(RealBall::radius_prec);
    if (t1 != 0) {
        if (mpfr_zero_p(r.re_.get())) throw PrecisionExhausted("cannot bound rounding error");
        ulp_of(u, r.re_.get());
        r.bump_rad(u);
    }
    if (t2 != 0) {
        if (mpfr_zero_p(r.im_.get())) throw PrecisionExhausted("cannot bound rounding error");
        ulp_of(u, r.im_.get());
        r.bump_rad(u);
    }
    r.check_finite();
    return r;
}

ComplexBall ComplexBall::operator-(const ComplexBall& o) const { return *this + (-o); }

ComplexBall ComplexBall::operator*(const ComplexBall& o) const {
    mpfr_prec_t p = join_prec(prec(), o.prec());
    ComplexBall r(p);
    Mpfr t1(p), t2(p), err(RealBall::radius_prec), u(RealBall::radius_prec);
    mpfr_set_zero(err.get(), 1);
    auto track = [&](int tern, mpfr_srcptr v) {
        if (tern == 0) return;
        if (mpfr_zero_p(v)) throw PrecisionExhausted("cannot bound rounding error");
        ulp_of(u, v);
        mpfr_add(err.get(), err.get(), u.get(), MPFR_RNDU);
    };
    track(mpfr_mul(t1.get(), re_.get(), o.re_.get(), MPFR_RNDN), t1.get());
    track(mpfr_mul(t2.get(), im_.get(), o.im_.get(), MPFR_RNDN), t2.get());
    track(mpfr_sub(r.re_.get(), t1.get(), t2.get(), MPFR_RNDN), r.re_.get());
    track(mpfr_mul(t1.get(), re_.get(), o.im_.get(), MPFR_RNDN), t1.get());
    track(mpfr_mul(t2.get(), im_.get(), o.re_.get(), MPFR_RNDN), t2.get());
    track(mpfr_add(r.im_.get(), t1.get(), t2.get(), MPFR_RNDN), r.im_.get());
    /* Propagated radius |a| rb + |b| ra + ra rb, moduli rounded up. */
    Mpfr am(RealBall::radius_prec), bm(RealBall::radius_prec), term(RealBall::radius_prec);
    mpfr_hypot(am.get(), re_.get(), im_.get(), MPFR_RNDU);
    mpfr_hypot(bm.get(), o.re_.get(), o.im_.get(), MPFR_RNDU);
    mpfr_mul(term.get(), am.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), err.get(), term.get(), MPFR_RNDU);
    mpfr_mul(term.get(), bm.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
    mpfr_mul(term.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), term.get(), MPFR_RNDU);
    r.check_finite();
    return r;
}

ComplexBall ComplexBall::operator*(const Rat& c) const {
    ComplexBall cc(c, Rat(0), prec());
    return *this * cc;
}

ComplexBall ComplexBall::inverse() const {
    if (!is_nonzero()) throw PoleError("inverse of a ball containing zero");
    mpfr_prec_t p = prec();
    /* 1/m = conj(m)/|m|^2 through directed-rounded component intervals. */
    Mpfr s_lo(p), s_hi(p), t(p);
    mpfr_sqr(s_lo.get(), re_.get(), MPFR_RNDD);
    mpfr_sqr(t.get(), im_.get(), MPFR_RNDD);
    mpfr_add(s_lo.get(), s_lo.get(), t.get(), MPFR_RNDD);
    mpfr_sqr(s_hi.get(), re_.get(), MPFR_RNDU);
    mpfr_sqr(t.get(), im_.get(), MPFR_RNDU);
    mpfr_add(s_hi.get(), s_hi.get(), t.get(), MPFR_RNDU);
    if (mpfr_sgn(s_lo.get()) <= 0) throw PrecisionExhausted("inverse: modulus underflow");

    auto comp = [&](mpfr_srcptr num, bool negate) {
        Mpfr lo(p), hi(p);
        if (mpfr_sgn(num) >= 0) {
            mpfr_div(lo.get(), num, s_hi.get(), MPFR_RNDD);
            mpfr_div(hi.get(), num, s_lo.get(), MPFR_RNDU);
        } else {
            mpfr_div(lo.get(), num, s_lo.get(), MPFR_RNDD);
            mpfr_div(hi.get(), num, s_hi.get(), MPFR_RNDU);
        }
        if (negate) {
            Mpfr nlo(p);
            mpfr_neg(nlo.get(), hi.get(), MPFR_RNDD);
            mpfr_neg(hi.get(), lo.get(), MPFR_RNDU);
            lo = std::move(nlo);
        }
        return RealBall::from_interval(lo, hi, p);
    };
    RealBall rre = comp(re_.get(), false);
    RealBall rim = comp(im_.get(), true);

    /* Propagated error |1/x - 1/m| <= rad / (|m| (|m| - rad)). */
    Mpfr hd(RealBall::radius_prec), den(RealBall::radius_prec), prop(RealBall::radius_prec);
    mpfr_hypot(hd.get(), re_.get(), im_.get(), MPFR_RNDD);
    mpfr_sub(den.get(), hd.get(), rad_.get(), MPFR_RNDD);
    mpfr_mul(den.get(), hd.get(), den.get(), MPFR_RNDD);
    if (mpfr_sgn(den.get()) <= 0) throw PrecisionExhausted("inverse: radius too large");
    mpfr_div(prop.get(), rad_.get(), den.get(), MPFR_RNDU);

    ComplexBall r(p);
    mpfr_set(r.re_.get(), rre.mid().get(), MPFR_RNDN);
    mpfr_set(r.im_.get(), rim.mid().get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), rre.rad().get(), rim.rad().get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), prop.get(), MPFR_RNDU);
    r.check_finite();
    return r;
}

ComplexBall ComplexBall::operator/(const ComplexBall& o) const {
    return *this * o.inverse();
}

ComplexBall ComplexBall::pow_ui(unsigned long e) const {
    ComplexBall r(Rat(1), Rat(0), prec());
    ComplexBall b(*this);
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

ComplexBall ComplexBall::widened(const RealBall& t) const {
    Mpfr lo = t.lower();
    if (mpfr_sgn(lo.get()) < 0)
        throw PreconditionError("widening by a possibly negative amount");
    ComplexBall r(*this);
    Mpfr up = t.upper();
    mpfr_add(r.rad_.get(), r.rad_.get(), up.get(), MPFR_RNDU);
    r.check_finite();
    return r;
}

std::string ComplexBall::str(size_t digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", (int)digits, re_.get());
    std::string out(s);
    mpfr_free_str(s);
    if (!mpfr_zero_p(im_.get())) {
        mpfr_asprintf(&s, "%.*Rg", (int)digits, im_.get());
        out += std::string(" + I*") + s;
        mpfr_free_str(s);
    }
    if (!is_exact()) {
        mpfr_asprintf(&s, "%.3Rg", rad_.get());
        out += " +/- ";
        out += s;
        mpfr_free_str(s);
    }
    return out;
}

/* ---------------- polynomial evaluation ---------------- */

ComplexBall eval_ball(const Poly& p, const ComplexBall& x, mpfr_prec_t prec) {
    ComplexBall acc(prec);
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * x + ComplexBall(p.coeffs()[i], Rat(0), prec);
    }
    return acc;
}

RealBall eval_ball(const Poly& p, const RealBall& x, mpfr_prec_t prec) {
    RealBall acc(Rat(0), prec);
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * x + RealBall(p.coeffs()[i], prec);
    }
    return acc;
}

ComplexBall eval_ball(const MultiPoly& p, const std::vector<ComplexBall>& point,
                      mpfr_prec_t prec) {
    if (point.size() != p.nvars()) throw PreconditionError("point arity mismatch");
    std::vector<unsigned> maxe(p.nvars(), 0);
    for (const auto& [e, c] : p.terms())
        for (size_t i = 0; i < p.nvars(); ++i) maxe[i] = std::max(maxe[i], e[i]);
    std::vector<std::vector<ComplexBall>> pows(p.nvars());
    for (size_t i = 0; i < p.nvars(); ++i) {
        pows[i].reserve(maxe[i] + 1);
        pows[i].push_back(ComplexBall(Rat(1), Rat(0), prec));
        for (unsigned k = 1; k <= maxe[i]; ++k)
            pows[i].push_back(pows[i].back() * point[i]);
    }
    ComplexBall acc(prec);
    for (const auto& [e, c] : p.terms()) {
        ComplexBall term(c, Rat(0), prec);
        for (size_t i = 0; i < p.nvars(); ++i)
            if (e[i] > 0) term = term * pows[i][e[i]];
        acc = acc + term;
    }
    return acc;
}

}  // namespace mahler
