#include "eiscong/dirichlet.hpp"

#include "eiscong/bernoulli.hpp"
#include "eiscong/factor.hpp"

#include <stdexcept>

namespace eiscong {

QuadCharacter::QuadCharacter(unsigned long p) : p_(p) {
    if (p % 2 == 0 || !is_prime(Int(p)))
        throw std::invalid_argument("QuadCharacter: modulus must be an odd prime");
    values_.assign(p_, 0);
    const Int mod(p);
    const Int half((p - 1) / 2);
    for (unsigned long a = 1; a < p_; ++a) {
        Int e;
        Int base(a);
        mpz_powm(e.get_mpz_t(), base.get_mpz_t(), half.get_mpz_t(), mod.get_mpz_t());
        values_[a] = (e == 1) ? 1 : -1;
    }
}

int QuadCharacter::operator()(const Int& a) const {
    unsigned long r = mpz_fdiv_ui(a.get_mpz_t(), p_);
    return values_[r];
}

Int power_sum(const QuadCharacter& chi, unsigned n) {
    Int s(0);
    for (unsigned long a = 1; a < chi.modulus(); ++a) {
        int v = chi.at(a);
        if (v == 0) continue;
        Int an;
        mpz_ui_pow_ui(an.get_mpz_t(), a, n);
        s += v > 0 ? an : -an;
    }
    return s;
}

Rational gen_bernoulli_via_polynomials(const QuadCharacter& chi, unsigned n) {
    const unsigned long p = chi.modulus();
    BernoulliPolynomial bn = bernoulli_polynomial(n);
    Rational s(0);
    for (unsigned long a = 1; a < p; ++a) {
        int v = chi.at(a);
        if (v == 0) continue;
        Rational term = bn.eval(Rational(Int(a), Int(p)));
        s += v > 0 ? term : -term;
    }
    // p^{n-1}; for n = 0 this is 1/p
    if (n == 0) return s / Rational(Int(p));
    Int ppow;
    mpz_ui_pow_ui(ppow.get_mpz_t(), p, n - 1);
    return s * Rational(ppow);
}

GenBernoulliTable gen_bernoulli_via_recursion(const QuadCharacter& chi,
                                              unsigned max_two_m) {
    const unsigned long p = chi.modulus();
    if (p % 4 != 1)
        throw std::invalid_argument(
            "gen_bernoulli_via_recursion: modulus must be 1 mod 4");
    if (max_two_m < 2 || max_two_m % 2 != 0)
        throw std::invalid_argument(
            "gen_bernoulli_via_recursion: index bound must be even and >= 2");

    GenBernoulliTable table;
    table.modulus = p;
    table.method = GenBernoulliTable::Method::recursion;
    table.entries[2] = Rational(power_sum(chi, 2), Int(p));
    for (unsigned two_m = 4; two_m <= max_two_m; two_m += 2) {
        unsigned m = two_m / 2;
        Rational s(0);
        for (unsigned j = 0; j + 2 <= m; ++j) {
            Int ppow;
            mpz_ui_pow_ui(ppow.get_mpz_t(), p, two_m - 2 * j - 1);
            s += Rational(binomial(two_m, 2 * j + 1)) *
                 table.entries[2 * j + 2] / Rational(Int(2 * j + 2)) *
                 Rational(ppow);
        }
        table.entries[two_m] =
            (Rational(power_sum(chi, two_m)) - s) / Rational(Int(p));
    }
    return table;
}

Rational gen_bernoulli(const QuadCharacter& chi, unsigned n) {
    Rational poly = gen_bernoulli_via_polynomials(chi, n);
    if (chi.modulus() % 4 == 1 && n >= 2 && n % 2 == 0) {
        GenBernoulliTable table = gen_bernoulli_via_recursion(chi, n);
        if (!(table.entries.at(n) == poly))
            throw std::logic_error(
                "gen_bernoulli: polynomial and recursion methods disagree at n=" +
                std::to_string(n) + " for p=" + std::to_string(chi.modulus()));
    }
    return poly;
}

Int carlitz_integer(const QuadCharacter& chi, unsigned two_m) {
    if (chi.modulus() % 4 != 1)
        throw std::invalid_argument("carlitz_integer: modulus must be 1 mod 4");
    if (two_m < 2 || two_m % 2 != 0)
        throw std::invalid_argument("carlitz_integer: index must be even and >= 2");
    Rational pb = gen_bernoulli(chi, two_m) * Rational(Int(chi.modulus()));
    if (!pb.is_integer())
        throw std::logic_error("carlitz_integer: p*B_{2m,chi} is not integral at n=" +
                               std::to_string(two_m));
    return pb.num();
}

Rational leopoldt_ratio(const QuadCharacter& chi, unsigned two_m) {
    if (chi.modulus() % 4 != 1)
        throw std::invalid_argument("leopoldt_ratio: modulus must be 1 mod 4");
    if (two_m < 2 || two_m % 2 != 0)
        throw std::invalid_argument("leopoldt_ratio: index must be even and >= 2");
    Int pow2, ppow, fact;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, two_m);
    mpz_ui_pow_ui(ppow.get_mpz_t(), chi.modulus(), two_m);
    mpz_fac_ui(fact.get_mpz_t(), two_m);
    Rational r = gen_bernoulli(chi, two_m) * Rational(pow2, Int(2 * ppow * fact));
    unsigned m = two_m / 2;
    if (m % 2 == 0) r = -r;
    return r;
}

}  // namespace eiscong
