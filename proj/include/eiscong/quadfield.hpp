#pragma once

#include "eiscong/rational.hpp"

#include <stdexcept>
#include <string>

namespace eiscong {

/// A coefficient has a denominator sharing a factor with the working
/// prime: the congruence is undefined there.
struct NonIntegralError : std::domain_error {
    using std::domain_error::domain_error;
};

/// a + b*alpha with alpha^2 = d. The field datum d travels with each
/// element; mixing elements of different fields throws. d must not be
/// a perfect square (the field is genuinely quadratic).
struct QuadFieldElem {
    Rational a;
    Rational b;
    Int d;

    QuadFieldElem(Rational a_, Rational b_, Int d_);

    bool is_rational() const { return b.is_zero(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y);
    friend QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y);
    friend QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y);
    QuadFieldElem operator-() const { return {-a, -b, d}; }

    bool operator==(const QuadFieldElem&) const = default;
};

/// N(a + b*alpha) = a^2 - d b^2, exactly.
Rational norm(const QuadFieldElem& x);

/// a + b*alpha -> a - b*alpha; x * conjugate(x) is rational and equals norm(x).
QuadFieldElem conjugate(const QuadFieldElem& x);

/// "242 - 3*alpha", "alpha", "-45*alpha - 220" style rendering.
std::string to_string(const QuadFieldElem& x);

enum class PrimeSplit { split, inert, ramified };

struct SqrtModResult {
    PrimeSplit type = PrimeSplit::inert;
    Int r1, r2;  // the two roots with r1 < r2; meaningful only when split
};

/// Square roots of d mod an odd prime ell: split with both roots when d
/// is a nonzero residue, inert when a non-residue, ramified when ell | d.
/// Rejects even or composite moduli.
SqrtModResult sqrt_mod(const Int& d, const Int& ell);

/// Ring map a + b*alpha -> a + b*root (mod ell) through one fixed root
/// of d mod ell, i.e. reduction at one chosen prime above ell.
class ResidueEmbedding {
public:
    /// Verifies root^2 = d (mod ell).
    ResidueEmbedding(Int ell, Int root, Int d);

    const Int& ell() const { return ell_; }
    const Int& root() const { return root_; }

    /// Residue in [0, ell); denominators are inverted mod ell.
    /// Throws NonIntegralError when ell divides a denominator.
    Int reduce(const QuadFieldElem& x) const;

private:
    Int ell_, root_, d_;
};

}  // namespace eiscong
