#pragma once

#include "eiscong/factor.hpp"
#include "eiscong/qseries.hpp"
#include "eiscong/quadfield.hpp"
#include "eiscong/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eiscong {

/// [SL_2(Z) : Gamma_0(N)] = N Prod_{q | N} (1 + 1/q).
Int gamma0_index(const Int& level);

struct SturmBound {
    Rational bound;    // weight * index / 12
    unsigned cutoff;   // floor(bound); coefficients 0..cutoff get checked
    Int index;
};

SturmBound sturm_bound(unsigned weight, unsigned level);

/// Exact norm with its numerator/denominator factorizations.
struct DiffNorm {
    Rational value;
    std::optional<Factorization> num_factors;  // absent iff value == 0
    std::optional<Factorization> den_factors;  // absent when denominator == 1
};

DiffNorm factored_norm(const QuadFieldElem& x);

enum class VerifyMode { norm, embed };

struct CongruenceRow {
    unsigned n = 0;
    QuadFieldElem difference;
    std::optional<DiffNorm> norm;   // norm mode
    std::optional<Int> residue;     // embed mode
    bool pass = false;
};

struct CongruenceReport {
    Int ell;
    VerifyMode mode = VerifyMode::norm;  // mode actually used
    std::optional<Int> root;             // embed mode: the root that was checked
    SturmBound sturm;
    std::vector<CongruenceRow> rows;
    bool pass = false;
    std::vector<std::string> notes;
};

/// Checks a_n(f) = a_n(g) at n = 0 .. max(cutoff, min_rows-1).
///
/// norm mode: verdict per row is ell | norm(difference) (zero passes);
/// a denominator divisible by ell raises NonIntegralError.
///
/// embed mode: picks one root r of d mod ell, the same for every
/// coefficient, trying both and succeeding if either zeroes all checked
/// residues. When ell is inert or ramified no embedding exists and the
/// verifier falls back to norm mode with a warning note.
///
/// An overall pass at precision > cutoff proves the full congruence.
CongruenceReport verify_congruence(const QSeries<QuadFieldElem>& f,
                                   const QSeries<QuadFieldElem>& g,
                                   const Int& ell, VerifyMode mode,
                                   unsigned min_rows = 0);

struct NormTableRow {
    unsigned n;
    QuadFieldElem difference;
    DiffNorm norm;
};

struct NormTable {
    std::vector<NormTableRow> rows;
    std::vector<std::string> notes;
};

/// Factored norms of the first `terms` coefficient differences.
/// A rational difference is normed as its square; when that happens at
/// n = 0 a note flags it.
NormTable norm_difference_table(const QSeries<QuadFieldElem>& f,
                                const QSeries<QuadFieldElem>& g,
                                unsigned terms);

}  // namespace eiscong
