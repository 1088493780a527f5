#pragma once

#include "eiscong/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eiscong {

/// Sign and prime-power decomposition of a nonzero integer.
/// Primes are strictly increasing; every exponent is >= 1.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;

    /// sign * prod p^e
    Int value() const;

    /// "2^2·3·67", "-1·2^3·5"; a unit renders as "1" or "-1".
    std::string to_string(const char* sep = "·") const;

    bool operator==(const Factorization&) const = default;
};

/// C(n, k); zero when k > n.
Int binomial(unsigned long n, unsigned long k);

/// Primality test with no false positives: a fixed deterministic
/// Miller-Rabin base set below 2^64, a Baillie-PSW style check above.
/// Returns false for n < 2.
bool is_prime(const Int& n);

/// Trial division by primes <= 10^4, then Brent's cycle method with a
/// fixed parameter sequence, so output is identical run to run.
/// Rejects n = 0.
Factorization factorize(const Int& n);

}  // namespace eiscong
