// Command-line front end: exact regularity computations on monomial ideals
// and the theorem-checking harness with JSON reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monreg/betti.hpp"
#include "monreg/checks.hpp"
#include "monreg/corpus.hpp"
#include "monreg/degree_complex.hpp"
#include "monreg/errors.hpp"
#include "monreg/ideal_io.hpp"
#include "monreg/powers.hpp"
#include "monreg/simplicial.hpp"

namespace {

constexpr const char* kToolVersion = "monreg 0.1.0";

monreg::MonomialIdeal load_ideal(const std::string& path) {
    monreg::ParsedIdeal parsed = monreg::parse_ideal_file(path);
    for (const std::string& warning : parsed.warnings)
        std::cerr << "warning: " << path << ": " << warning << "\n";
    return std::move(parsed.ideal);
}

std::vector<monreg::CorpusItem> build_corpus(const std::string& kind,
                                             std::uint64_t seed, int count) {
    if (kind == "acceptance") return monreg::acceptance_corpus(seed);
    if (kind == "sqfree3") return monreg::exhaustive_squarefree(3);
    if (kind == "sqfree4") return monreg::exhaustive_squarefree(4);
    if (kind == "random")
        return monreg::random_monomial_corpus(3, 3, 4, count, seed);
    if (kind == "named") return monreg::named_families();
    throw monreg::DomainError("unknown corpus: " + kind);
}

void print_betti(const monreg::BettiTable& table) {
    for (const auto& [key, mult] : table.entries()) {
        const auto& [i, a] = key;
        std::cout << "beta i=" << i << " deg=" << a.degree() << " a=" << a.str()
                  << " mult=" << mult << "\n";
    }
    std::cout << "coarse:";
    for (const auto& [key, mult] : table.coarse())
        std::cout << " (" << key.first << "," << key.second << ")=" << mult;
    std::cout << "\n";
    std::cout << "reg = " << table.regularity().str() << "\n";
}

int run_compute(const std::string& op, const std::string& path,
                const monreg::CoefficientField& field, std::int64_t m,
                std::int64_t s) {
    const monreg::MonomialIdeal ideal = load_ideal(path);
    if (op == "reg") {
        std::cout << monreg::regularity(ideal, field).str() << "\n";
    } else if (op == "radical") {
        std::cout << monreg::format_ideal_file(monreg::radical(ideal));
    } else if (op == "sympow") {
        std::cout << monreg::format_ideal_file(monreg::symbolic_power(ideal, m));
    } else if (op == "closure") {
        std::cout << monreg::format_ideal_file(
            monreg::integral_closure_power(ideal, s));
    } else if (op == "gamma") {
        std::cout << monreg::gamma(ideal) << "\n";
    } else if (op == "height") {
        std::cout << monreg::height(ideal) << "\n";
    } else if (op == "betti") {
        print_betti(monreg::betti_table(ideal, field));
    } else {
        throw monreg::DomainError("unknown compute operation: " + op);
    }
    return 0;
}

int run_witness(const std::string& path, const monreg::CoefficientField& field,
                const std::vector<monreg::Exponent>& box,
                std::int64_t cell_cap) {
    const monreg::MonomialIdeal ideal = load_ideal(path);
    const monreg::RegWitness witness =
        box.empty()
            ? monreg::reg_witness_search(ideal, field, cell_cap)
            : monreg::reg_witness_search_in_box(ideal, field, box, cell_cap);
    if (!monreg::verify_reg_witness(ideal, witness))
        throw std::logic_error("witness failed re-verification");
    std::cout << "a =";
    for (monreg::Exponent e : witness.a.exponents()) std::cout << " " << e;
    std::cout << "\nface =";
    for (int v = 0; v < ideal.nvars(); ++v)
        if (witness.face >> v & 1) std::cout << " " << v;
    std::cout << "\ni = " << witness.i << "\nvalue = " << witness.value << "\n";
    if (!box.empty())
        std::cout << "mode = lower-bound (caller box)\n";
    return 0;
}

struct CheckOptions {
    std::string suite = "all";
    std::string corpus = "acceptance";
    std::string out;
    std::string field = "q";
    std::uint64_t seed = 42;
    int count = 100;
    int jobs = 1;
    bool strict = false;
    bool timings = false;
    monreg::GridConfig grid;
    monreg::CheckConfig config;
};

std::string flags_string(const CheckOptions& opt) {
    std::ostringstream out;
    out << "corpus=" << opt.corpus << ";suite=" << opt.suite
        << ";m_max=" << opt.grid.m_max << ";k_max=" << opt.grid.k_max
        << ";s_max=" << opt.grid.s_max << ";mu_cap=" << opt.config.mu_cap
        << ";closure_cap=" << opt.config.closure_cell_cap
        << ";scale_cap=" << opt.config.scale_cap
        << ";witness_cap=" << opt.config.witness_cell_cap
        << ";samples=" << opt.config.identity_samples
        << ";verify=" << (opt.config.verify_with_witness ? 1 : 0)
        << ";strict=" << (opt.strict ? 1 : 0)
        << ";timings=" << (opt.timings ? 1 : 0);
    return out.str();
}

int run_check(CheckOptions opt) {
    opt.config.field = monreg::CoefficientField::parse(opt.field);
    opt.config.record_timings = opt.timings;

    const std::vector<monreg::CorpusItem> corpus =
        build_corpus(opt.corpus, opt.seed, opt.count);
    const std::set<monreg::TheoremId> suite = monreg::parse_suite(opt.suite);
    const std::vector<monreg::CheckReport> reports =
        monreg::run_corpus(corpus, suite, opt.grid, opt.config, opt.jobs);

    std::int64_t failed = 0, skipped = 0;
    for (const monreg::CheckReport& report : reports) {
        if (report.skipped) {
            ++skipped;
        } else if (!report.holds) {
            ++failed;
            std::cerr << "FAILED " << monreg::theorem_id_str(report.theorem_id)
                      << " on " << report.ideal << " (index "
                      << report.ideal_index << ")\n";
        }
    }

    monreg::ReportHeader header{kToolVersion, opt.seed, opt.config.field,
                                flags_string(opt)};
    const std::string json = monreg::reports_to_json(header, reports);
    if (opt.out.empty()) {
        std::cout << json;
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + opt.out);
        file << json;
    }

    std::cerr << "checked " << reports.size() << " cells: "
              << (reports.size() - static_cast<std::size_t>(failed + skipped))
              << " passed, " << failed << " failed, " << skipped
              << " skipped\n";
    if (failed > 0) return 1;
    if (opt.strict && skipped > 0) return 1;
    return 0;
}

int run_corpus_listing(const std::string& kind, std::uint64_t seed, int count) {
    const std::vector<monreg::CorpusItem> corpus =
        build_corpus(kind, seed, count);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        std::cout << "# " << i << " " << corpus[i].label << " "
                  << corpus[i].ideal.str() << "\n"
                  << monreg::format_ideal_file(corpus[i].ideal) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact regularity computations on monomial ideals"};
    app.require_subcommand(1);

    // compute
    std::string compute_op, compute_file, compute_field = "q";
    std::int64_t compute_m = 1, compute_s = 1;
    CLI::App* compute = app.add_subcommand(
        "compute", "evaluate one operation on an ideal file");
    compute->add_option("op", compute_op,
                        "reg|radical|sympow|closure|gamma|height|betti")
        ->required();
    compute->add_option("file", compute_file, "ideal file")->required();
    compute->add_option("--field", compute_field, "q|f2|fp:<p>");
    compute->add_option("--m", compute_m, "symbolic power order");
    compute->add_option("--s", compute_s, "closure power order");

    // witness
    std::string witness_file, witness_field = "q";
    std::vector<monreg::Exponent> witness_box;
    std::int64_t witness_cap = 65536;
    CLI::App* witness = app.add_subcommand(
        "witness", "degree-complex witness search for the regularity");
    witness->add_option("file", witness_file, "ideal file")->required();
    witness->add_option("--field", witness_field, "q|f2|fp:<p>");
    witness->add_option("--box", witness_box,
                        "per-variable box bounds (lower-bound-only mode)");
    witness->add_option("--cap", witness_cap, "box cell cap");

    // check
    CheckOptions opt;
    CLI::App* check = app.add_subcommand(
        "check", "run theorem suites over a corpus, emit JSON reports");
    check->add_option("--suite", opt.suite,
                      "all|rrad|sym|corsym|rnormal1|rintc|rint|base|delta|proof"
                      " (comma-separated)");
    check->add_option("--corpus", opt.corpus,
                      "acceptance|sqfree3|sqfree4|random|named");
    check->add_option("--out", opt.out, "write the JSON document here");
    check->add_option("--field", opt.field, "q|f2|fp:<p>");
    check->add_option("--seed", opt.seed, "random corpus seed");
    check->add_option("--count", opt.count, "random corpus size");
    check->add_option("--jobs", opt.jobs, "worker threads");
    check->add_flag("--strict", opt.strict, "fail when anything was skipped");
    check->add_flag("--timings", opt.timings,
                    "record wall-clock time per report (breaks byte-for-byte "
                    "reproducibility)");
    check->add_option("--m-max", opt.grid.m_max, "power grid bound");
    check->add_option("--k-max", opt.grid.k_max, "multiplier grid bound");
    check->add_option("--s-max", opt.grid.s_max, "closure power grid bound");
    check->add_option("--mu-cap", opt.config.mu_cap,
                      "generator cap for the Betti oracle");
    check->add_option("--closure-cap", opt.config.closure_cell_cap,
                      "closure candidate box cap");
    check->add_option("--scale-cap", opt.config.scale_cap,
                      "uniform power scale search cap");
    check->add_option("--witness-cap", opt.config.witness_cell_cap,
                      "witness search box cap");
    check->add_option("--samples", opt.config.identity_samples,
                      "shift samples per proof-identity cell");
    bool no_verify = false;
    check->add_flag("--no-witness-verify", no_verify,
                    "skip the witness cross-check of regularity values");

    // corpus
    std::string corpus_kind = "acceptance";
    std::uint64_t corpus_seed = 42;
    int corpus_count = 100;
    CLI::App* corpus = app.add_subcommand("corpus", "emit the generated ideals");
    corpus->add_option("--corpus", corpus_kind,
                       "acceptance|sqfree3|sqfree4|random|named");
    corpus->add_option("--seed", corpus_seed, "random corpus seed");
    corpus->add_option("--count", corpus_count, "random corpus size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return run_compute(compute_op, compute_file,
                               monreg::CoefficientField::parse(compute_field),
                               compute_m, compute_s);
        if (witness->parsed())
            return run_witness(witness_file,
                               monreg::CoefficientField::parse(witness_field),
                               witness_box, witness_cap);
        if (check->parsed()) {
            opt.config.verify_with_witness = !no_verify;
            return run_check(opt);
        }
        if (corpus->parsed())
            return run_corpus_listing(corpus_kind, corpus_seed, corpus_count);
    } catch (const monreg::ParseError& error) {
        std::cerr << "parse error: " << error.what() << "\n";
        return 2;
    } catch (const monreg::DomainError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const monreg::ResourceError& error) {
        std::cerr << "resource cap: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return 3;
    }
    return 2;
}
