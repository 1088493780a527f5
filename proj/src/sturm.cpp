#include "eiscong/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace eiscong {

Int gamma0_index(const Int& level) {
    if (level < 1)
        throw std::invalid_argument("gamma0_index: level must be positive");
    if (level == 1) return Int(1);
    Int index = level;
    for (const auto& [q, e] : factorize(level).factors)
        index = index / q * (q + 1);
    return index;
}

SturmBound sturm_bound(unsigned weight, unsigned level) {
    if (weight < 1 || level < 1)
        throw std::invalid_argument("sturm_bound: weight and level must be positive");
    SturmBound sb;
    sb.index = gamma0_index(Int(level));
    sb.bound = Rational(Int(weight) * sb.index, Int(12));
    Int floor_q;
    mpz_fdiv_q(floor_q.get_mpz_t(), sb.bound.num().get_mpz_t(),
               sb.bound.den().get_mpz_t());
    sb.cutoff = static_cast<unsigned>(floor_q.get_ui());
    return sb;
}

DiffNorm factored_norm(const QuadFieldElem& x) {
    DiffNorm out;
    out.value = norm(x);
    if (out.value.is_zero()) return out;
    out.num_factors = factorize(out.value.num());
    if (out.value.den() != 1) out.den_factors = factorize(out.value.den());
    return out;
}

namespace {

std::string rational_square_note(unsigned n, const QuadFieldElem& diff) {
    return "n=" + std::to_string(n) + ": difference is the rational " +
           diff.a.to_string() + "; the reported value is its norm, the square of the element";
}

bool norm_row_passes(const DiffNorm& dn, const Int& ell, unsigned n) {
    if (dn.value.is_zero()) return true;
    if (mpz_divisible_p(dn.value.den().get_mpz_t(), ell.get_mpz_t()))
        throw NonIntegralError("difference at n=" + std::to_string(n) +
                               " is not integral at " + ell.get_str());
    return mpz_divisible_p(dn.value.num().get_mpz_t(), ell.get_mpz_t()) != 0;
}

}  // namespace

CongruenceReport verify_congruence(const QSeries<QuadFieldElem>& f,
                                   const QSeries<QuadFieldElem>& g,
                                   const Int& ell, VerifyMode mode,
                                   unsigned min_rows) {
    detail::require_same_space(f, g);
    if (f.coeff.empty() || g.coeff.empty())
        throw std::invalid_argument("verify_congruence: empty series");
    if (!is_prime(ell))
        throw std::invalid_argument("verify_congruence: modulus must be prime");

    CongruenceReport rep;
    rep.ell = ell;
    rep.sturm = sturm_bound(f.weight, f.level);

    unsigned minprec = std::min(f.precision(), g.precision());
    if (minprec <= rep.sturm.cutoff)
        throw std::invalid_argument(
            "verify_congruence: precision " + std::to_string(minprec) +
            " does not cover the Sturm cutoff " + std::to_string(rep.sturm.cutoff));

    unsigned last = rep.sturm.cutoff;
    if (min_rows > 0) last = std::max(last, min_rows - 1);
    last = std::min(last, minprec - 1);

    std::vector<QuadFieldElem> diffs;
    diffs.reserve(last + 1);
    for (unsigned n = 0; n <= last; ++n) diffs.push_back(f.at(n) - g.at(n));

    const Int& d = f.coeff.front().d;

    if (mode == VerifyMode::embed) {
        SqrtModResult roots = sqrt_mod(d, ell);
        if (roots.type != PrimeSplit::split) {
            rep.notes.push_back(
                ell.get_str() +
                (roots.type == PrimeSplit::inert ? " is inert" : " is ramified") +
                " in the coefficient field (alpha^2 = " + d.get_str() +
                "): no residue embedding exists; falling back to norm mode, "
                "where per-coefficient norm checks do not pin a single prime above " +
                ell.get_str());
        } else {
            std::optional<Int> chosen;
            std::vector<Int> residues, first_residues;
            for (const Int& r : {roots.r1, roots.r2}) {
                ResidueEmbedding emb(ell, r, d);
                std::vector<Int> cur;
                cur.reserve(diffs.size());
                bool all_zero = true;
                for (const QuadFieldElem& x : diffs) {
                    cur.push_back(emb.reduce(x));
                    if (cur.back() != 0) all_zero = false;
                }
                if (r == roots.r1) first_residues = cur;
                if (all_zero) {
                    chosen = r;
                    residues = std::move(cur);
                    break;
                }
            }
            rep.mode = VerifyMode::embed;
            rep.pass = chosen.has_value();
            if (chosen) {
                rep.root = *chosen;
            } else {
                rep.root = roots.r1;
                residues = std::move(first_residues);
                rep.notes.push_back(
                    "neither root of " + d.get_str() + " mod " + ell.get_str() +
                    " zeroes all checked differences; residues shown for root " +
                    roots.r1.get_str());
            }
            for (unsigned n = 0; n <= last; ++n) {
                CongruenceRow row{n, diffs[n], std::nullopt, residues[n],
                                  residues[n] == 0};
                rep.rows.push_back(std::move(row));
            }
            return rep;
        }
    }

    rep.mode = VerifyMode::norm;
    rep.pass = true;
    for (unsigned n = 0; n <= last; ++n) {
        DiffNorm dn = factored_norm(diffs[n]);
        bool ok = norm_row_passes(dn, ell, n);
        if (!ok) rep.pass = false;
        if (n == 0 && diffs[n].is_rational() && !diffs[n].is_zero())
            rep.notes.push_back(rational_square_note(0, diffs[n]));
        rep.rows.push_back(CongruenceRow{n, diffs[n], std::move(dn), std::nullopt, ok});
    }
    return rep;
}

NormTable norm_difference_table(const QSeries<QuadFieldElem>& f,
                                const QSeries<QuadFieldElem>& g,
                                unsigned terms) {
    detail::require_same_space(f, g);
    if (terms < 1)
        throw std::invalid_argument("norm_difference_table: need at least 1 term");
    if (f.precision() < terms || g.precision() < terms)
        throw std::invalid_argument("norm_difference_table: series precision below " +
                                    std::to_string(terms));
    NormTable table;
    for (unsigned n = 0; n < terms; ++n) {
        QuadFieldElem diff = f.at(n) - g.at(n);
        if (n == 0 && diff.is_rational() && !diff.is_zero())
            table.notes.push_back(rational_square_note(0, diff));
        table.rows.push_back(NormTableRow{n, diff, factored_norm(diff)});
    }
    return table;
}

}  // namespace eiscong
