#pragma once

#include "eiscong/factor.hpp"
#include "eiscong/rational.hpp"

#include <vector>

namespace eiscong {

/// One scanned index: the integer whose prime support was searched,
/// its factorization, and every prime factor strictly above the
/// strangeness threshold.
struct CandidateReport {
    enum class Source { zeta, dirichlet };

    Source source = Source::zeta;
    unsigned long modulus = 0;  // p for dirichlet scans, 0 for zeta
    unsigned two_m = 0;
    Int scanned;                // numerator of Z_{2m}, or p * B_{2m,chi}
    Factorization factorization;
    Int threshold;              // candidates satisfy prime > threshold
    std::vector<Int> candidates;

    bool operator==(const CandidateReport&) const = default;
};

/// Factorizes the numerator of Z_{2m} and keeps primes > 2m+1.
CandidateReport zeta_candidates(unsigned two_m);

/// Factorizes p * B_{2m,chi} and keeps primes > max{p, 2m+1}.
/// Requires p = 1 (mod 4).
CandidateReport dirichlet_candidates(unsigned long p, unsigned two_m);

/// One report per even index 2, 4, .., two_m_max, in ascending order.
std::vector<CandidateReport> scan_range(unsigned long p, unsigned two_m_max);
std::vector<CandidateReport> scan_range_zeta(unsigned two_m_max);

}  // namespace eiscong
