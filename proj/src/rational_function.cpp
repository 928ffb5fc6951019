#include "mahler/rational_function.hpp"

namespace mahler {

RationalFunction::RationalFunction(const Poly& num, const Poly& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw PoleError("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    Poly g = gcd(num_, den_);
    if (!g.is_zero() && g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Rat c = den_.lc();
    if (c != 1) {
        num_ = num_ / c;
        den_ = den_ / c;
    }
}

const Poly& RationalFunction::as_poly() const {
    if (!is_polynomial()) throw PreconditionError("rational function is not a polynomial");
    return num_;
}

long RationalFunction::map_degree() const {
    return std::max(num_.degree(), den_.degree());
}

long RationalFunction::ord0() const {
    if (num_.is_zero()) throw PoleError("vanishing order of zero function");
    return num_.ord0() - den_.ord0();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw PoleError("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

Rat RationalFunction::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw PoleError("evaluation at a pole");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
    /* Horner over num and den separately, tracking a common denominator
       power: p(u/v) = sum a_k (u/v)^k = (sum a_k u^k v^(n-k)) / v^n. */
    const Poly& u = inner.num_;
    const Poly& v = inner.den_;
    auto lift = [&](const Poly& p) {
        Poly acc;
        for (size_t i = p.coeffs().size(); i-- > 0;)
            acc = acc * u + Poly(p.coeffs()[i]) * v.pow(p.coeffs().size() - 1 - i);
        return acc;
    };
    long dn = num_.degree(), dd = den_.degree();
    long m = std::max(dn, dd);
    if (m < 0) return *this;  /* zero function */
    Poly fn = lift(num_) * v.pow((unsigned long)(m - std::max(dn, 0L)));
    Poly fd = lift(den_) * v.pow((unsigned long)(m - std::max(dd, 0L)));
    if (num_.is_zero()) fn = Poly();
    if (den_.is_zero()) fd = Poly();  /* cannot happen; den invariant */
    return RationalFunction(fn, fd);
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace mahler
