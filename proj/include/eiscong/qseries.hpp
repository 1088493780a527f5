#pragma once

#include "eiscong/dirichlet.hpp"
#include "eiscong/quadfield.hpp"
#include "eiscong/rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eiscong {

/// Truncated power series in q: coefficients for q^0 .. q^{precision-1}.
/// Arithmetic never claims coefficients past the shorter operand.
template <class R>
struct QSeries {
    std::vector<R> coeff;
    unsigned weight = 0;
    unsigned level = 1;
    unsigned long character_modulus = 0;  // 0 = trivial character
    std::string label;

    unsigned precision() const { return static_cast<unsigned>(coeff.size()); }

    const R& at(unsigned n) const {
        if (n >= coeff.size())
            throw std::out_of_range("QSeries: coefficient q^" + std::to_string(n) +
                                    " beyond precision " +
                                    std::to_string(coeff.size()));
        return coeff[n];
    }
};

namespace detail {

template <class R>
void require_same_space(const QSeries<R>& f, const QSeries<R>& g) {
    if (f.weight != g.weight || f.level != g.level ||
        f.character_modulus != g.character_modulus)
        throw std::invalid_argument(
            "QSeries: weight/level/character mismatch between operands");
}

template <class R>
R zero_like(const QSeries<R>& f) {
    if (f.coeff.empty())
        throw std::invalid_argument("QSeries: empty series");
    return f.coeff.front() - f.coeff.front();
}

}  // namespace detail

template <class R>
QSeries<R> series_add(const QSeries<R>& f, const QSeries<R>& g) {
    detail::require_same_space(f, g);
    unsigned n = std::min(f.precision(), g.precision());
    QSeries<R> out;
    out.coeff.reserve(n);
    for (unsigned i = 0; i < n; ++i) out.coeff.push_back(f.coeff[i] + g.coeff[i]);
    out.weight = f.weight;
    out.level = f.level;
    out.character_modulus = f.character_modulus;
    return out;
}

template <class R>
QSeries<R> series_sub(const QSeries<R>& f, const QSeries<R>& g) {
    detail::require_same_space(f, g);
    unsigned n = std::min(f.precision(), g.precision());
    QSeries<R> out;
    out.coeff.reserve(n);
    for (unsigned i = 0; i < n; ++i) out.coeff.push_back(f.coeff[i] - g.coeff[i]);
    out.weight = f.weight;
    out.level = f.level;
    out.character_modulus = f.character_modulus;
    return out;
}

/// Cauchy product truncated to the shorter precision. Weights add,
/// levels combine by lcm; a quadratic character squared is trivial.
template <class R>
QSeries<R> series_mul(const QSeries<R>& f, const QSeries<R>& g) {
    unsigned n = std::min(f.precision(), g.precision());
    QSeries<R> out;
    out.coeff.assign(n, detail::zero_like(f));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; i + j < n; ++j)
            out.coeff[i + j] = out.coeff[i + j] + f.coeff[i] * g.coeff[j];
    out.weight = f.weight + g.weight;
    out.level = static_cast<unsigned>(std::lcm(f.level, g.level));
    if (f.character_modulus == g.character_modulus)
        out.character_modulus = 0;
    else if (f.character_modulus == 0)
        out.character_modulus = g.character_modulus;
    else if (g.character_modulus == 0)
        out.character_modulus = f.character_modulus;
    else
        throw std::invalid_argument(
            "series_mul: product of distinct nontrivial characters unsupported");
    return out;
}

template <class R>
QSeries<R> series_scale(QSeries<R> f, const R& c) {
    for (R& x : f.coeff) x = x * c;
    return f;
}

/// q Prod_{n>=1} (1 - q^n)^24 = Sum tau(n) q^n; integer coefficients,
/// tau(1) = 1. Requires terms >= 2.
QSeries<Rational> delta_qexp(unsigned terms);

/// -B_k/(2k) + Sum_n sigma_{k-1}(n) q^n for even k >= 4.
QSeries<Rational> eisenstein_level1(unsigned k, unsigned terms);

/// -B_{k,chi}/(2k) + Sum_n { Sum_{d|n} chi(d) d^{k-1} } q^n for the
/// quadratic character mod p = 1 (mod 4) and even k >= 2. The constant
/// term comes from the cross-checked gen_bernoulli front door.
QSeries<Rational> eisenstein_chi(const QuadCharacter& chi, unsigned k,
                                 unsigned terms);

/// Coefficient-wise embedding of a rational series into the field with
/// alpha^2 = d.
QSeries<QuadFieldElem> embed_in_field(const QSeries<Rational>& f, const Int& d);

}  // namespace eiscong
