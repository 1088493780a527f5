#pragma once

#include "eiscong/rational.hpp"

#include <map>
#include <vector>

namespace eiscong {

/// The quadratic character mod an odd prime p: chi(a) = Legendre
/// symbol (a/p), built once by Euler's criterion. Immutable.
class QuadCharacter {
public:
    /// Rejects even or composite moduli.
    explicit QuadCharacter(unsigned long p);

    unsigned long modulus() const { return p_; }

    /// chi on a residue class in [0, p).
    int at(unsigned long residue) const { return values_[residue % p_]; }

    /// chi on any integer (reduced mod p first).
    int operator()(const Int& a) const;

    /// p = 1 (mod 4), equivalently chi(-1) = +1.
    bool is_even_character() const { return p_ % 4 == 1; }

private:
    unsigned long p_;
    std::vector<int> values_;
};

inline QuadCharacter quad_character(unsigned long p) { return QuadCharacter(p); }

/// S_chi(n) = sum_{a=1}^{p-1} chi(a) a^n.
Int power_sum(const QuadCharacter& chi, unsigned n);

/// Table of B_{2,chi} .. B_{max,chi} at even indices.
struct GenBernoulliTable {
    enum class Method { polynomial, recursion, cross_checked };
    unsigned long modulus = 0;
    Method method = Method::recursion;
    std::map<unsigned, Rational> entries;
};

/// B_{n,chi} = p^{n-1} sum_{a=1}^{p-1} chi(a) B_n(a/p).
/// Defined for any odd prime modulus.
Rational gen_bernoulli_via_polynomials(const QuadCharacter& chi, unsigned n);

/// Bottom-up recursion from p B_{2,chi} = S_chi(2) and
///   B_{2m,chi} = (1/p) [ S_chi(2m)
///                - sum_{j=0}^{m-2} C(2m,2j+1) B_{2j+2,chi}/(2j+2) p^{2m-2j-1} ].
/// Requires p = 1 (mod 4) and even max_two_m >= 2.
GenBernoulliTable gen_bernoulli_via_recursion(const QuadCharacter& chi,
                                              unsigned max_two_m);

/// Cross-checked front door: computes by both methods when p = 1 (mod 4)
/// and n is even >= 2, and throws std::logic_error if they ever disagree
/// (that would be an implementation bug, never an expected outcome).
Rational gen_bernoulli(const QuadCharacter& chi, unsigned n);

/// p * B_{2m,chi}, which is an integer (Carlitz). A non-integral product
/// throws std::logic_error. Requires p = 1 (mod 4), even two_m >= 2.
Int carlitz_integer(const QuadCharacter& chi, unsigned two_m);

/// L(2m,chi) / (pi^{2m} sqrt(p)) = (-1)^{m-1} (1/2) (2/p)^{2m} B_{2m,chi} / (2m)!
/// as an exact rational. Requires p = 1 (mod 4), even two_m >= 2.
Rational leopoldt_ratio(const QuadCharacter& chi, unsigned two_m);

}  // namespace eiscong
