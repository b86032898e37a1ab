#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "monreg/corpus.hpp"
#include "monreg/report.hpp"

namespace monreg {

/// Resource caps and verification policy shared by all checkers.
struct CheckConfig {
    CoefficientField field = CoefficientField::rationals();
    /// Generator-count cap for the Betti/regularity oracle.
    std::int64_t mu_cap = 16;
    /// Candidate-box cap for integral closures.
    std::int64_t closure_cell_cap = 262144;
    /// Search bound for the uniform power scale (the s with u^s in I^s for
    /// all closure generators).
    std::int64_t scale_cap = 6;
    /// Box cap for the degree-complex witness search; regularity values are
    /// cross-checked against the witness search whenever the box fits.
    std::int64_t witness_cell_cap = 4096;
    /// Exponent-shift samples per proof-identity parameter cell.
    std::int64_t identity_samples = 2;
    /// Cross-check every regularity value with the witness search (within
    /// the box cap); a mismatch is an internal error, not a report failure.
    bool verify_with_witness = true;
    /// Record wall-clock time per report; off by default so equal inputs
    /// produce byte-identical output.
    bool record_timings = false;
};

/// Parameter grids for the corpus run; the j-range of SYM is always the full
/// legal one (m-k <= j <= m with km+j >= 1).
struct GridConfig {
    std::int64_t m_max = 2;
    std::int64_t k_max = 2;
    std::int64_t s_max = 2;
};

// Single-instance checkers.  Each returns one report; resource caps inside
// the oracles surface as skipped reports carrying the reason, while genuine
// precondition violations throw DomainError.

/// reg(I) >= reg(radical(I)) + (gamma(I)-1)*height(I).
CheckReport check_rrad(const MonomialIdeal& ideal, const CheckConfig& config = {});

/// reg(I^(km+j)) >= reg(I^(m)) + (k-1)m + j for squarefree I,
/// m,k >= 1, m-k <= j <= m, km+j >= 1.
CheckReport check_sym(const MonomialIdeal& ideal, std::int64_t m, std::int64_t k,
                      std::int64_t j, const CheckConfig& config = {});

/// reg(I^(km)) >= reg(I^(m)) + (k-1)m for squarefree I.
CheckReport check_corsym(const MonomialIdeal& ideal, std::int64_t k,
                         std::int64_t m, const CheckConfig& config = {});

/// reg(I^(3)) >= reg(I^(2)) + 1 for squarefree I.
CheckReport check_corsym_ii(const MonomialIdeal& ideal,
                            const CheckConfig& config = {});

/// reg(I) + m - 1 <= min(reg(I^m), reg(I^(m))) for squarefree I.
CheckReport check_base_mv(const MonomialIdeal& ideal, std::int64_t m,
                          const CheckConfig& config = {});

/// reg(closure(I)) <= reg(I^(sm)) - gamma(I)(sm-1) with s the uniform power
/// scale found within config.scale_cap.
CheckReport check_rnormal1(const MonomialIdeal& ideal, std::int64_t m,
                           const CheckConfig& config = {});

/// reg(I^m) >= reg(I) + gamma(I)(m-1) for integrally closed I; a
/// non-integrally-closed input violates the theorem's hypothesis and is a
/// domain error.
CheckReport check_rintc(const MonomialIdeal& ideal, std::int64_t m,
                        const CheckConfig& config = {});

/// reg(closure(I^(sm))) >= reg(closure(I^s)) + gamma(I)s(m-1).
CheckReport check_rint(const MonomialIdeal& ideal, std::int64_t s,
                       std::int64_t m, const CheckConfig& config = {});

/// Delta_a(I^s) = Delta(radical(I)) (or with the integral closure of I^s)
/// for |a| <= gamma(I)s - 1, as an equality-form report.
CheckReport check_delta_stab(const MonomialIdeal& ideal, std::int64_t s,
                             const Monomial& a, bool closed,
                             const CheckConfig& config = {});

/// Radical-colon identities, as equality-form reports.
/// Variant 1 (squarefree I, |a| >= m):
///     radical(I^(m) : x^a) = radical(I^(km+j) : x^((k+1)a))
CheckReport check_identity_sym(const MonomialIdeal& ideal, std::int64_t m,
                               std::int64_t k, std::int64_t j, const Monomial& a,
                               const CheckConfig& config = {});
/// Variant 2 (|a| >= gamma(I), s the uniform power scale):
///     radical(closure(I) : x^a) = radical(I^(sm) : x^((sm)a))
CheckReport check_identity_closure(const MonomialIdeal& ideal, std::int64_t m,
                                   const Monomial& a,
                                   const CheckConfig& config = {});
/// Variant 3 (|a| >= gamma(I)s):
///     radical(closure(I^s) : x^a) = radical(closure(I^(sm)) : x^(ma))
CheckReport check_identity_closure_powers(const MonomialIdeal& ideal,
                                          std::int64_t s, std::int64_t m,
                                          const Monomial& a,
                                          const CheckConfig& config = {});

/// Every suite cell for every corpus ideal, deterministically ordered by
/// (ideal index, theorem, params) regardless of `jobs`.  Failures of proved
/// inequalities surface as holds=false reports; oracle resource caps surface
/// as skipped reports with reasons.
std::vector<CheckReport> run_corpus(const std::vector<CorpusItem>& corpus,
                                    const std::set<TheoremId>& suite,
                                    const GridConfig& grid = {},
                                    const CheckConfig& config = {},
                                    int jobs = 1);

/// Suite names: all, rrad, sym, corsym, rnormal1, rintc, rint, base, delta,
/// proof; comma-separated combinations allowed.
std::set<TheoremId> parse_suite(const std::string& text);

}  // namespace monreg
