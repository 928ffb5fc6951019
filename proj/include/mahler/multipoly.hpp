#ifndef MAHLER_MULTIPOLY_HPP
#define MAHLER_MULTIPOLY_HPP

#include <map>
#include <vector>

#include "mahler/poly.hpp"

namespace mahler {

/* Sparse polynomial over Q in nvars variables.  Terms are keyed by the
   exponent vector (one entry per variable); zero coefficients are never
   stored.  By convention throughout this project, variable 0 is the series
   variable z and variables 1..nvars-1 are the unknown-function slots X_i. */
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit MultiPoly(size_t nvars = 1) : nvars_(nvars) {}

    static MultiPoly constant(size_t nvars, const Rat& c);
    static MultiPoly variable(size_t nvars, size_t i);
    static MultiPoly from_poly(const Poly& p, size_t nvars, size_t var);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    Rat coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rat& c);

    long degree(size_t var) const;             /* -1 for the zero polynomial */
    long total_degree_from(size_t first_var) const; /* max sum of exps >= first_var */
    Rat length() const;                        /* sum of |coefficients| */
    bool has_integer_coeffs() const;
    Int integer_content() const;               /* gcd of numerators; integer coeffs only */

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    MultiPoly pow(unsigned long e) const;

    Rat eval(const std::vector<Rat>& point) const;

    /* Coefficient of the X-monomial with the given exponents (vars 1..),
       as a polynomial in variable 0. */
    Poly z_section(const Exponents& xexp) const;
    /* All X-monomials appearing, with their z-sections. */
    std::map<Exponents, Poly> x_sections() const;

    /* Collapse a univariate MultiPoly (all exponents zero except var) into
       a Poly. */
    Poly to_poly(size_t var) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    size_t nvars_;
    std::map<Exponents, Rat> terms_;
};

}  // namespace mahler

#endif
