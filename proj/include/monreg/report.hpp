#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monreg/betti.hpp"
#include "monreg/degree_complex.hpp"
#include "monreg/field.hpp"

namespace monreg {

/// The inequality (or identity) a report instantiates.
enum class TheoremId {
    RRAD,            // reg(I) >= reg(radical(I)) + (gamma(I)-1)*height(I)
    SYM,             // reg(I^(km+j)) >= reg(I^(m)) + (k-1)m + j
    CORSYM_I,        // reg(I^(km)) >= reg(I^(m)) + (k-1)m
    CORSYM_II,       // reg(I^(3)) >= reg(I^(2)) + 1
    RNORMAL1,        // reg(closure(I)) <= reg(I^(sm)) - gamma(I)(sm-1)
    RINTC,           // reg(I^m) >= reg(I) + gamma(I)(m-1), I integrally closed
    RINT,            // reg(closure(I^(sm))) >= reg(closure(I^s)) + gamma(I)s(m-1)
    BASE_MV,         // reg(I) + m - 1 <= min(reg(I^m), reg(I^(m)))
    DELTA_STAB,      // Delta_a(I^s) = Delta(radical(I)) for |a| <= gamma(I)s-1
    PROOF_IDENTITY,  // radical-colon identities behind the Case-2 arguments
};

std::string theorem_id_str(TheoremId id);

/// One theorem instance: the ideal and parameters it was evaluated on, every
/// intermediate quantity, both sides of the (normalized, >=-form) inequality,
/// and the outcome.  A skipped record documents a resource cap or an
/// inapplicable precondition instead of a verdict; it never counts as a
/// failure, but always carries its reason.
struct CheckReport {
    TheoremId theorem_id = TheoremId::RRAD;
    std::string ideal;
    std::int64_t ideal_index = 0;
    /// Integer parameters: m/k/j/s, plus closed (0/1) and a0..a{n-1} for the
    /// checks that take an exponent shift.
    std::map<std::string, std::int64_t> params;
    /// Named intermediate values (reg values, gamma, height, mu, s_used);
    /// extended integers so minus infinity survives serialization.
    std::map<std::string, Regularity> quantities;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::int64_t slack = 0;  // lhs - rhs; >= 0 exactly when the check holds
    bool holds = false;
    bool skipped = false;
    std::string skip_reason;
    std::optional<RegWitness> witness;
    CoefficientField field = CoefficientField::rationals();
    std::int64_t runtime_ms = 0;
};

/// Deterministic emission order: (ideal_index, theorem_id, params).
bool report_order(const CheckReport& lhs, const CheckReport& rhs);

struct ReportHeader {
    std::string tool_version;
    std::uint64_t seed = 0;
    CoefficientField field = CoefficientField::rationals();
    std::string flags;
};

/// Full JSON document: header, reports (sorted), summary counts.  Keys are
/// emitted in sorted order, so equal inputs give byte-identical output.
std::string reports_to_json(const ReportHeader& header,
                            std::vector<CheckReport> reports);

}  // namespace monreg
