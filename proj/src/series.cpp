#include "mahler/series.hpp"

#include <algorithm>

namespace mahler {

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs, long order)
    : coeffs_(std::move(coeffs)), order_(order) {
    if (order < 0) throw PreconditionError("negative truncation order");
    coeffs_.resize((size_t)order, Rat(0));
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, long order) {
    TruncatedSeries s = zero(order);
    long n = std::min<long>(order, p.degree() + 1);
    for (long k = 0; k < n; ++k) s.coeffs_[(size_t)k] = p.coeff((size_t)k);
    return s;
}

TruncatedSeries TruncatedSeries::zero(long order) {
    if (order < 0) throw PreconditionError("negative truncation order");
    TruncatedSeries s;
    s.order_ = order;
    s.coeffs_.assign((size_t)order, Rat(0));
    return s;
}

const Rat& TruncatedSeries::coeff(long k) const {
    if (k < 0 || k >= order_)
        throw TruncationError("coefficient " + std::to_string(k) +
                              " beyond truncation order " + std::to_string(order_));
    return coeffs_[(size_t)k];
}

void TruncatedSeries::set_coeff(long k, const Rat& c) {
    if (k < 0 || k >= order_)
        throw TruncationError("coefficient " + std::to_string(k) +
                              " beyond truncation order " + std::to_string(order_));
    coeffs_[(size_t)k] = c;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return c == 0; });
}

long TruncatedSeries::ord0() const {
    for (long k = 0; k < order_; ++k)
        if (coeffs_[(size_t)k] != 0) return k;
    throw TruncationError("series vanishes through its known order");
}

TruncatedSeries TruncatedSeries::truncate(long order) const {
    if (order > order_)
        throw TruncationError("cannot extend a truncated series");
    std::vector<Rat> c(coeffs_.begin(), coeffs_.begin() + order);
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    long n = std::min(order_, o.order_);
    TruncatedSeries r = zero(n);
    for (long k = 0; k < n; ++k)
        r.coeffs_[(size_t)k] = coeffs_[(size_t)k] + o.coeffs_[(size_t)k];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    long n = std::min(order_, o.order_);
    TruncatedSeries r = zero(n);
    for (long i = 0; i < n; ++i) {
        if (coeffs_[(size_t)i] == 0) continue;
        for (long j = 0; i + j < n && j < o.order_; ++j) {
            if (o.coeffs_[(size_t)j] == 0) continue;
            r.coeffs_[(size_t)(i + j)] += coeffs_[(size_t)i] * o.coeffs_[(size_t)j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rat& c) const {
    TruncatedSeries r(*this);
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (order_ == 0) throw TruncationError("inverse of order-0 series");
    if (coeffs_[0] == 0) throw PoleError("series inverse with zero constant term");
    TruncatedSeries r = zero(order_);
    Rat c0 = Rat(1) / coeffs_[0];
    r.coeffs_[0] = c0;
    for (long n = 1; n < order_; ++n) {
        Rat s(0);
        for (long k = 1; k <= n; ++k)
            s += coeffs_[(size_t)k] * r.coeffs_[(size_t)(n - k)];
        r.coeffs_[(size_t)n] = -s * c0;
    }
    return r;
}

Poly TruncatedSeries::to_poly() const { return Poly(coeffs_); }

TruncatedSeries series_compose_inner(const TruncatedSeries& f,
                                     const RationalFunction& g,
                                     long max_order) {
    if (g.is_zero() || g.ord0() < 1)
        throw CompositionOrderError("inner map must vanish at 0");
    if (g.den().ord0() > 0) throw PoleError("inner map has a pole at 0");
    long delta = g.ord0();
    long order = f.order() * delta;
    if (max_order >= 0) order = std::min(order, max_order);

    TruncatedSeries gs = series_expand(g, order);
    /* Horner from the top coefficient down. */
    TruncatedSeries acc = TruncatedSeries::zero(order);
    for (long k = f.order(); k-- > 0;) {
        acc = acc * gs;
        if (order > 0) acc.set_coeff(0, acc.coeff(0) + f.coeff(k));
    }
    return acc;
}

TruncatedSeries series_expand(const RationalFunction& r, long order) {
    if (r.den().ord0() > 0) throw PoleError("expansion at a pole");
    TruncatedSeries num = TruncatedSeries::from_poly(r.num(), order);
    if (r.is_polynomial()) return num;
    TruncatedSeries den = TruncatedSeries::from_poly(r.den(), order);
    return num * den.inverse();
}

}  // namespace mahler
