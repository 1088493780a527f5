#include "eiscong/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eiscong {

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 10000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// One Miller-Rabin round; n odd >= 3, 1 < a < n.
bool miller_rabin_round(const Int& n, const Int& a) {
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's variant of the rho cycle method. n composite with no prime
// factor <= 10^4. The parameter c walks 1, 2, 3, ... so the result is
// the same on every run.
Int brent_rho(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int y(2), g(1), q(1), x, ys;
        unsigned long r = 1;
        const unsigned long block = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += block) {
                ys = y;
                unsigned long steps = std::min(block, r - k);
                for (unsigned long i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(Int(abs(x - ys)), n);
            }
        }
        if (g != n) return g;
    }
}

void split_into_primes(const Int& m, std::map<Int, unsigned>& acc) {
    if (is_prime(m)) {
        ++acc[m];
        return;
    }
    Int d = brent_rho(m);
    split_into_primes(d, acc);
    split_into_primes(Int(m / d), acc);
}

}  // namespace

Int Factorization::value() const {
    Int v(sign);
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

std::string Factorization::to_string(const char* sep) const {
    std::string out;
    if (sign < 0) out = "-1";
    for (const auto& [p, e] : factors) {
        if (!out.empty()) out += sep;
        out += p.get_str();
        if (e != 1) out += "^" + std::to_string(e);
    }
    if (out.empty()) out = "1";
    return out;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const unsigned long tiny[] = {2,  3,  5,  7,  11, 13,
                                         17, 19, 23, 29, 31, 37};
    for (unsigned long p : tiny) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    static const Int two64 = [] {
        Int t;
        mpz_ui_pow_ui(t.get_mpz_t(), 2, 64);
        return t;
    }();
    if (n < two64) {
        // the first twelve primes are a proven deterministic base set
        // well past 2^64
        for (unsigned long a : tiny)
            if (!miller_rabin_round(n, Int(a))) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Factorization factorize(const Int& n) {
    if (n == 0)
        throw std::invalid_argument("factorize: argument must be nonzero");
    Factorization f;
    f.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);
    std::map<Int, unsigned> acc;
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++acc[Int(p)];
            m /= p;
        }
    }
    if (m > 1) split_into_primes(m, acc);
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

}  // namespace eiscong
