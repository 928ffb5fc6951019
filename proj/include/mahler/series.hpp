#ifndef MAHLER_SERIES_HPP
#define MAHLER_SERIES_HPP

#include <vector>

#include "mahler/rational_function.hpp"

namespace mahler {

/* Power series over Q known modulo z^order.  Stores exactly order()
   coefficients, zeros included.  order >= 0; order == 0 carries no
   information and arises only transiently. */
class TruncatedSeries {
public:
    TruncatedSeries() : order_(0) {}
    TruncatedSeries(std::vector<Rat> coeffs, long order);

    static TruncatedSeries from_poly(const Poly& p, long order);
    static TruncatedSeries zero(long order);

    long order() const { return order_; }
    /* TruncationError when k >= order. */
    const Rat& coeff(long k) const;
    void set_coeff(long k, const Rat& c);
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;                  /* all known coefficients zero */
    /* Order of vanishing; TruncationError if zero through the known order. */
    long ord0() const;

    TruncatedSeries truncate(long order) const;

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rat& c) const;
    bool operator==(const TruncatedSeries& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

    /* Multiplicative inverse; PoleError when the constant term is 0. */
    TruncatedSeries inverse() const;

    Poly to_poly() const;

private:
    std::vector<Rat> coeffs_;
    long order_;
};

/* f(g(z)) to order N, where ord0(g) >= 1 (CompositionOrderError when the
   inner map has order 0 at the origin, PoleError when it has a pole there).
   Only coefficients of f up to index floor(N / ord0(g)) are consumed;
   TruncationError when f is not known that far. */
TruncatedSeries series_compose_inner(const TruncatedSeries& f,
                                     const RationalFunction& g, long N);

/* Expansion of a rational function at 0 to the given order; PoleError when
   den(0) == 0 after reduction. */
TruncatedSeries series_expand(const RationalFunction& r, long order);

}  // namespace mahler

#endif
