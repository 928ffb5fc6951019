#include "mahler/poly.hpp"

#include <sstream>

namespace mahler {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(size_t k, const Rat& c) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, Rat(0));
        p.coeffs_[k] = c;
    }
    return p;
}

const Rat& Poly::lc() const {
    if (is_zero()) throw PoleError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rat Poly::coeff(size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

void Poly::set_coeff(size_t k, const Rat& c) {
    if (k >= coeffs_.size()) {
        if (c == 0) return;
        coeffs_.resize(k + 1, Rat(0));
    }
    coeffs_[k] = c;
    trim();
}

long Poly::ord0() const {
    if (is_zero()) throw PoleError("vanishing order of zero polynomial");
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return (long)k;
    return -1; /* unreachable */
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0) return Poly();
    Poly r(*this);
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

Poly Poly::operator/(const Rat& c) const {
    if (c == 0) throw PoleError("division of polynomial by zero scalar");
    return *this * (Rat(1) / c);
}

Poly Poly::pow(unsigned long e) const {
    Poly r(Rat(1));
    Poly b(*this);
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = coeffs_[i] * Rat((long)i);
    r.trim();
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat v(0);
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
    return v;
}

Poly Poly::shift(long k) const {
    if (k < 0) throw PreconditionError("negative shift");
    if (is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(coeffs_.size() + (size_t)k, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + (size_t)k] = coeffs_[i];
    return r;
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw PoleError("polynomial division by zero");
    q = Poly();
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long k = r.degree() - b.degree();
        Rat c = r.lc() / b.lc();
        Poly t = Poly::monomial((size_t)k, c);
        q = q + t;
        r = r - t * b;
    }
}

Poly Poly::operator/(const Poly& o) const {
    Poly q, r;
    divrem(*this, o, q, r);
    if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
    return q;
}

bool Poly::has_integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

Rat Poly::content() const {
    if (is_zero()) throw PoleError("content of zero polynomial");
    Int num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return Rat(num_gcd) / Rat(den_lcm);
}

Poly Poly::primitive_part() const {
    Poly r = *this / content();
    if (r.lc() < 0) r = -r;
    return r;
}

Rat Poly::length() const {
    Rat s(0);
    for (const auto& c : coeffs_) s += abs(c);
    return s;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly q, r;
        Poly::divrem(u, v, q, r);
        u = v;
        v = r;
    }
    if (!u.is_zero()) u = u / u.lc();
    return u;
}

Poly xgcd(const Poly& a, const Poly& b, Poly& u, Poly& v) {
    Poly r0 = a, r1 = b;
    Poly u0(Rat(1)), u1, v0, v1(Rat(1));
    while (!r1.is_zero()) {
        Poly q, r;
        Poly::divrem(r0, r1, q, r);
        r0 = r1; r1 = r;
        Poly u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!r0.is_zero()) {
        Rat c = Rat(1) / r0.lc();
        r0 = r0 * c; u0 = u0 * c; v0 = v0 * c;
    }
    u = u0; v = v0;
    return r0;
}

Poly compose(const Poly& p, const Poly& q) {
    Poly r;
    for (size_t i = p.coeffs().size(); i-- > 0;)
        r = r * q + Poly(p.coeffs()[i]);
    return r;
}

Poly self_compose(const Poly& p, unsigned n) {
    Poly r = Poly::x();
    for (unsigned i = 0; i < n; ++i) r = compose(p, r);
    return r;
}

}  // namespace mahler
