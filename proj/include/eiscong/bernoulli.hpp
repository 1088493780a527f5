#pragma once

#include "eiscong/rational.hpp"

#include <vector>

namespace eiscong {

/// Monic polynomial B_n(x); coefficients ascending by power of x,
/// so coeff.size() == degree + 1 and coeff.back() == 1.
struct BernoulliPolynomial {
    unsigned degree = 0;
    std::vector<Rational> coeff;

    Rational eval(const Rational& x) const;
};

/// B_0 .. B_max in the convention t e^t/(e^t - 1) = sum B_m t^m/m!,
/// i.e. B_1 = +1/2. Pure: the table is rebuilt per call.
std::vector<Rational> bernoulli_numbers(unsigned max_m);

Rational bernoulli_number(unsigned m);

/// B_n(x) = sum_j (-1)^j C(n,j) B_j x^{n-j}. With the B_1 = +1/2
/// convention the alternating sign makes this the standard Bernoulli
/// polynomial: B_n(1) = B_n and B_n(0) = (-1)^n B_n.
BernoulliPolynomial bernoulli_polynomial(unsigned n);

/// Z_{2m} = zeta(2m)/pi^{2m} = (-1)^{m-1} 2^{2m} B_{2m} / (2 (2m)!),
/// exact and always positive. Rejects odd or zero input.
Rational zeta_ratio(unsigned two_m);

}  // namespace eiscong
