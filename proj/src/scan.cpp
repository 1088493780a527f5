#include "eiscong/scan.hpp"

#include "eiscong/bernoulli.hpp"
#include "eiscong/dirichlet.hpp"

#include <algorithm>

namespace eiscong {

namespace {

void collect_candidates(CandidateReport& r) {
    for (const auto& [p, e] : r.factorization.factors)
        if (p > r.threshold) r.candidates.push_back(p);
}

}  // namespace

CandidateReport zeta_candidates(unsigned two_m) {
    CandidateReport r;
    r.source = CandidateReport::Source::zeta;
    r.two_m = two_m;
    r.scanned = zeta_ratio(two_m).num();
    r.factorization = factorize(r.scanned);
    r.threshold = Int(two_m + 1);
    collect_candidates(r);
    return r;
}

CandidateReport dirichlet_candidates(unsigned long p, unsigned two_m) {
    QuadCharacter chi(p);
    CandidateReport r;
    r.source = CandidateReport::Source::dirichlet;
    r.modulus = p;
    r.two_m = two_m;
    r.scanned = carlitz_integer(chi, two_m);
    r.factorization = factorize(r.scanned);
    r.threshold = std::max(Int(p), Int(two_m + 1));
    collect_candidates(r);
    return r;
}

std::vector<CandidateReport> scan_range(unsigned long p, unsigned two_m_max) {
    std::vector<CandidateReport> out;
    for (unsigned two_m = 2; two_m <= two_m_max; two_m += 2)
        out.push_back(dirichlet_candidates(p, two_m));
    return out;
}

std::vector<CandidateReport> scan_range_zeta(unsigned two_m_max) {
    std::vector<CandidateReport> out;
    for (unsigned two_m = 2; two_m <= two_m_max; two_m += 2)
        out.push_back(zeta_candidates(two_m));
    return out;
}

}  // namespace eiscong
