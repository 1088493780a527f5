#include "eiscong/bernoulli.hpp"

#include "eiscong/factor.hpp"

#include <stdexcept>

namespace eiscong {

Rational BernoulliPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::vector<Rational> bernoulli_numbers(unsigned max_m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = m + 1 for m >= 1
    std::vector<Rational> b;
    b.reserve(max_m + 1);
    b.emplace_back(1);
    for (unsigned m = 1; m <= max_m; ++m) {
        Rational s(0);
        for (unsigned j = 0; j < m; ++j)
            s += Rational(binomial(m + 1, j)) * b[j];
        b.push_back((Rational(Int(m + 1)) - s) / Rational(Int(m + 1)));
    }
    return b;
}

Rational bernoulli_number(unsigned m) { return bernoulli_numbers(m)[m]; }

BernoulliPolynomial bernoulli_polynomial(unsigned n) {
    std::vector<Rational> numbers = bernoulli_numbers(n);
    BernoulliPolynomial p;
    p.degree = n;
    p.coeff.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        unsigned j = n - i;  // coefficient of x^i carries B_j
        Rational c = Rational(binomial(n, j)) * numbers[j];
        if (j % 2 == 1) c = -c;
        p.coeff.push_back(c);
    }
    return p;
}

Rational zeta_ratio(unsigned two_m) {
    if (two_m == 0 || two_m % 2 != 0)
        throw std::invalid_argument("zeta_ratio: index must be even and positive");
    Int pow2, fact;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, two_m);
    mpz_fac_ui(fact.get_mpz_t(), two_m);
    Rational z = bernoulli_number(two_m) * Rational(pow2, Int(2 * fact));
    unsigned m = two_m / 2;
    if (m % 2 == 0) z = -z;
    return z;
}

}  // namespace eiscong
