#include "monreg/report.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

namespace monreg {

using nlohmann::json;

std::string theorem_id_str(TheoremId id) {
    switch (id) {
        case TheoremId::RRAD: return "RRAD";
        case TheoremId::SYM: return "SYM";
        case TheoremId::CORSYM_I: return "CORSYM_I";
        case TheoremId::CORSYM_II: return "CORSYM_II";
        case TheoremId::RNORMAL1: return "RNORMAL1";
        case TheoremId::RINTC: return "RINTC";
        case TheoremId::RINT: return "RINT";
        case TheoremId::BASE_MV: return "BASE_MV";
        case TheoremId::DELTA_STAB: return "DELTA_STAB";
        case TheoremId::PROOF_IDENTITY: return "PROOF_IDENTITY";
    }
    throw DomainError("theorem_id_str: unknown theorem id");
}

bool report_order(const CheckReport& lhs, const CheckReport& rhs) {
    return std::tie(lhs.ideal_index, lhs.theorem_id, lhs.params) <
           std::tie(rhs.ideal_index, rhs.theorem_id, rhs.params);
}

namespace {

json regularity_to_json(const Regularity& reg) {
    if (reg.is_minus_infinity()) return json("-inf");
    return json(reg.value());
}

json witness_to_json(const RegWitness& witness) {
    json vertices = json::array();
    for (int v = 0; v < 64; ++v)
        if (witness.face >> v & 1) vertices.push_back(v);
    return json{{"a", witness.a.exponents()},
                {"face", std::move(vertices)},
                {"i", witness.i},
                {"value", witness.value},
                {"field", witness.field.str()}};
}

json report_to_json(const CheckReport& report) {
    json quantities = json::object();
    for (const auto& [name, value] : report.quantities)
        quantities[name] = regularity_to_json(value);
    json out{{"theorem_id", theorem_id_str(report.theorem_id)},
             {"ideal", report.ideal},
             {"ideal_index", report.ideal_index},
             {"params", report.params},
             {"quantities", std::move(quantities)},
             {"lhs", report.lhs},
             {"rhs", report.rhs},
             {"slack", report.slack},
             {"holds", report.holds},
             {"skipped", report.skipped},
             {"skip_reason", report.skip_reason},
             {"witness", report.witness ? witness_to_json(*report.witness)
                                        : json(nullptr)},
             {"field", report.field.str()},
             {"runtime_ms", report.runtime_ms}};
    return out;
}

}  // namespace

std::string reports_to_json(const ReportHeader& header,
                            std::vector<CheckReport> reports) {
    std::sort(reports.begin(), reports.end(), report_order);

    std::int64_t passed = 0, failed = 0, skipped = 0;
    json items = json::array();
    for (const CheckReport& report : reports) {
        if (report.skipped)
            ++skipped;
        else if (report.holds)
            ++passed;
        else
            ++failed;
        items.push_back(report_to_json(report));
    }

    json doc{{"header",
              {{"tool_version", header.tool_version},
               {"seed", header.seed},
               {"field", header.field.str()},
               {"flags", header.flags}}},
             {"reports", std::move(items)},
             {"summary",
              {{"total", static_cast<std::int64_t>(reports.size())},
               {"passed", passed},
               {"failed", failed},
               {"skipped", skipped}}}};
    return doc.dump(2) + "\n";
}

}  // namespace monreg
