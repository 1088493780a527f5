#include "eiscong/qseries.hpp"

#include "eiscong/bernoulli.hpp"

#include <stdexcept>

namespace eiscong {

namespace {

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b,
                          unsigned n) {
    std::vector<Int> out(n, Int(0));
    for (unsigned i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < b.size() && i + j < n; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Int> poly_pow(std::vector<Int> base, unsigned e, unsigned n) {
    std::vector<Int> out(1, Int(1));
    while (e) {
        if (e & 1) out = poly_mul(out, base, n);
        e >>= 1;
        if (e) base = poly_mul(base, base, n);
    }
    return out;
}

}  // namespace

QSeries<Rational> delta_qexp(unsigned terms) {
    if (terms < 2)
        throw std::invalid_argument("delta_qexp: need at least 2 terms");
    const unsigned n = terms - 1;  // product precision before the q shift
    std::vector<Int> prod(n, Int(0));
    prod[0] = 1;
    for (unsigned k = 1; k < n; ++k) {
        std::vector<Int> factor(k + 1, Int(0));
        factor[0] = 1;
        factor[k] = -1;
        prod = poly_mul(prod, poly_pow(factor, 24, n), n);
    }
    QSeries<Rational> s;
    s.coeff.reserve(terms);
    s.coeff.emplace_back(0);
    for (unsigned i = 0; i < n; ++i) s.coeff.emplace_back(prod[i]);
    s.weight = 12;
    s.level = 1;
    s.label = "delta";
    return s;
}

QSeries<Rational> eisenstein_level1(unsigned k, unsigned terms) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("eisenstein_level1: weight must be even and >= 4");
    if (terms < 1)
        throw std::invalid_argument("eisenstein_level1: need at least 1 term");
    std::vector<Int> sums(terms, Int(0));
    for (unsigned long d = 1; d < terms; ++d) {
        Int dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), d, k - 1);
        for (unsigned long n = d; n < terms; n += d) sums[n] += dp;
    }
    QSeries<Rational> s;
    s.coeff.reserve(terms);
    s.coeff.push_back(-bernoulli_number(k) / Rational(Int(2 * k)));
    for (unsigned n = 1; n < terms; ++n) s.coeff.emplace_back(sums[n]);
    s.weight = k;
    s.level = 1;
    s.label = "eisenstein-" + std::to_string(k);
    return s;
}

QSeries<Rational> eisenstein_chi(const QuadCharacter& chi, unsigned k,
                                 unsigned terms) {
    if (chi.modulus() % 4 != 1)
        throw std::invalid_argument("eisenstein_chi: modulus must be 1 mod 4");
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("eisenstein_chi: weight must be even and >= 2");
    if (terms < 1)
        throw std::invalid_argument("eisenstein_chi: need at least 1 term");
    std::vector<Int> sums(terms, Int(0));
    for (unsigned long d = 1; d < terms; ++d) {
        int v = chi.at(d % chi.modulus());
        if (v == 0) continue;
        Int dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), d, k - 1);
        if (v < 0) dp = -dp;
        for (unsigned long n = d; n < terms; n += d) sums[n] += dp;
    }
    QSeries<Rational> s;
    s.coeff.reserve(terms);
    s.coeff.push_back(-gen_bernoulli(chi, k) / Rational(Int(2 * k)));
    for (unsigned n = 1; n < terms; ++n) s.coeff.emplace_back(sums[n]);
    s.weight = k;
    s.level = static_cast<unsigned>(chi.modulus());
    s.character_modulus = chi.modulus();
    s.label = "eisenstein-" + std::to_string(k) + "-chi" +
              std::to_string(chi.modulus());
    return s;
}

QSeries<QuadFieldElem> embed_in_field(const QSeries<Rational>& f, const Int& d) {
    QSeries<QuadFieldElem> out;
    out.coeff.reserve(f.coeff.size());
    for (const Rational& c : f.coeff)
        out.coeff.emplace_back(c, Rational(0), d);
    out.weight = f.weight;
    out.level = f.level;
    out.character_modulus = f.character_modulus;
    out.label = f.label;
    return out;
}

}  // namespace eiscong
