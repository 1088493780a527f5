#include "eiscong/quadfield.hpp"

#include "eiscong/factor.hpp"

#include <utility>

namespace eiscong {

namespace {

void require_same_field(const QuadFieldElem& x, const QuadFieldElem& y) {
    if (x.d != y.d)
        throw std::invalid_argument("QuadFieldElem: mixed field data (alpha^2 = " +
                                    x.d.get_str() + " vs " + y.d.get_str() + ")");
}

}  // namespace

QuadFieldElem::QuadFieldElem(Rational a_, Rational b_, Int d_)
    : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
    if (d >= 0 && mpz_perfect_square_p(d.get_mpz_t()))
        throw std::invalid_argument("QuadFieldElem: alpha^2 = " + d.get_str() +
                                    " is a perfect square");
}

QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y) {
    require_same_field(x, y);
    return {x.a + y.a, x.b + y.b, x.d};
}

QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y) {
    require_same_field(x, y);
    return {x.a - y.a, x.b - y.b, x.d};
}

QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y) {
    require_same_field(x, y);
    Rational dd{x.d};
    return {x.a * y.a + dd * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
}

Rational norm(const QuadFieldElem& x) {
    return x.a * x.a - Rational(x.d) * x.b * x.b;
}

QuadFieldElem conjugate(const QuadFieldElem& x) { return {x.a, -x.b, x.d}; }

std::string to_string(const QuadFieldElem& x) {
    if (x.b.is_zero()) return x.a.to_string();
    Rational babs = x.b.abs();
    std::string term = babs == Rational(1) ? "alpha" : babs.to_string() + "*alpha";
    if (x.a.is_zero()) return (x.b.sign() < 0 ? "-" : "") + term;
    return x.a.to_string() + (x.b.sign() < 0 ? " - " : " + ") + term;
}

namespace {

// Tonelli-Shanks; a is a nonzero quadratic residue mod the odd prime p.
Int sqrt_mod_prime(const Int& a, const Int& p) {
    if (mpz_tstbit(p.get_mpz_t(), 1)) {  // p = 3 (mod 4)
        Int e = (p + 1) / 4, r;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    Int q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    Int z(2);
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Int c, t, r, b;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Int e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        Int t2 = t;
        unsigned long i = 0;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return r;
}

}  // namespace

SqrtModResult sqrt_mod(const Int& d, const Int& ell) {
    if (ell < 3 || mpz_even_p(ell.get_mpz_t()) || !is_prime(ell))
        throw std::invalid_argument("sqrt_mod: modulus must be an odd prime");
    Int a;
    mpz_mod(a.get_mpz_t(), d.get_mpz_t(), ell.get_mpz_t());
    SqrtModResult res;
    if (a == 0) {
        res.type = PrimeSplit::ramified;
        return res;
    }
    if (mpz_legendre(a.get_mpz_t(), ell.get_mpz_t()) == -1) {
        res.type = PrimeSplit::inert;
        return res;
    }
    Int r = sqrt_mod_prime(a, ell);
    Int r2 = ell - r;
    if (r > r2) std::swap(r, r2);
    res.type = PrimeSplit::split;
    res.r1 = r;
    res.r2 = r2;
    return res;
}

ResidueEmbedding::ResidueEmbedding(Int ell, Int root, Int d)
    : ell_(std::move(ell)), root_(std::move(root)), d_(std::move(d)) {
    Int check;
    mpz_mod(check.get_mpz_t(), Int(root_ * root_ - d_).get_mpz_t(), ell_.get_mpz_t());
    if (check != 0)
        throw std::invalid_argument("ResidueEmbedding: root^2 != d (mod ell)");
}

namespace {

Int rational_residue(const Rational& q, const Int& ell) {
    Int den = q.den();
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ell.get_mpz_t()) == 0)
        throw NonIntegralError("denominator " + den.get_str() +
                               " is not invertible mod " + ell.get_str());
    Int r;
    mpz_mod(r.get_mpz_t(), Int(q.num() * inv).get_mpz_t(), ell.get_mpz_t());
    return r;
}

}  // namespace

Int ResidueEmbedding::reduce(const QuadFieldElem& x) const {
    if (x.d != d_)
        throw std::invalid_argument("ResidueEmbedding: element from a different field");
    Int r = rational_residue(x.a, ell_) + rational_residue(x.b, ell_) * root_;
    Int out;
    mpz_mod(out.get_mpz_t(), r.get_mpz_t(), ell_.get_mpz_t());
    return out;
}

}  // namespace eiscong
