#include "mahler/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace mahler {

MultiPoly MultiPoly::constant(size_t nvars, const Rat& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t i) {
    if (i >= nvars) throw PreconditionError("variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
}

MultiPoly MultiPoly::from_poly(const Poly& p, size_t nvars, size_t var) {
    if (var >= nvars) throw PreconditionError("variable index out of range");
    MultiPoly r(nvars);
    for (size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k] == 0) continue;
        Exponents e(nvars, 0);
        e[var] = (unsigned)k;
        r.add_term(e, p.coeffs()[k]);
    }
    return r;
}

Rat MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != nvars_) throw PreconditionError("exponent arity mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long MultiPoly::degree(size_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, (long)e[var]);
    return d;
}

long MultiPoly::total_degree_from(size_t first_var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long s = std::accumulate(e.begin() + (long)first_var, e.end(), 0L);
        d = std::max(d, s);
    }
    return d;
}

Rat MultiPoly::length() const {
    Rat s(0);
    for (const auto& [e, c] : terms_) s += abs(c);
    return s;
}

bool MultiPoly::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

Int MultiPoly::integer_content() const {
    Int g(0);
    for (const auto& [e, c] : terms_) {
        if (!is_integer(c)) throw PreconditionError("content of non-integer polynomial");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    return g;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("arity mismatch");
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("arity mismatch");
    MultiPoly r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly r = constant(nvars_, Rat(1));
    MultiPoly b(*this);
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != nvars_) throw PreconditionError("point arity mismatch");
    Rat s(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        }
        s += t;
    }
    return s;
}

Poly MultiPoly::z_section(const Exponents& xexp) const {
    if (xexp.size() != nvars_ - 1) throw PreconditionError("section arity mismatch");
    Poly p;
    for (const auto& [e, c] : terms_) {
        bool match = true;
        for (size_t i = 1; i < nvars_; ++i)
            if (e[i] != xexp[i - 1]) { match = false; break; }
        if (match) p.set_coeff(e[0], p.coeff(e[0]) + c);
    }
    return p;
}

std::map<MultiPoly::Exponents, Poly> MultiPoly::x_sections() const {
    std::map<Exponents, Poly> out;
    for (const auto& [e, c] : terms_) {
        Exponents xe(e.begin() + 1, e.end());
        Poly& p = out[xe];
        p.set_coeff(e[0], p.coeff(e[0]) + c);
    }
    return out;
}

Poly MultiPoly::to_poly(size_t var) const {
    Poly p;
    for (const auto& [e, c] : terms_) {
        for (size_t i = 0; i < nvars_; ++i)
            if (i != var && e[i] != 0)
                throw PreconditionError("polynomial is not univariate in the chosen variable");
        p.set_coeff(e[var], p.coeff(e[var]) + c);
    }
    return p;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw PreconditionError("name arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        bool unit = (a == 1);
        bool any_var = false;
        std::ostringstream vars;
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            vars << names[i];
            if (e[i] > 1) vars << "^" << e[i];
            any_var = true;
        }
        if (!unit || !any_var) os << a.get_str();
        if (any_var) {
            if (!unit) os << "*";
            os << vars.str();
        }
        first = false;
    }
    return os.str();
}

}  // namespace mahler
