#include "monreg/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "monreg/degree_complex.hpp"
#include "monreg/powers.hpp"
#include "monreg/simplicial.hpp"

namespace monreg {

namespace {

struct RegInfo {
    Regularity reg = Regularity::minus_infinity();
    std::optional<RegWitness> witness;
};

void compositions_of(Exponent total, int nvars, std::vector<Exponent>& prefix,
                     std::vector<std::vector<Exponent>>& out) {
    if (static_cast<int>(prefix.size()) + 1 == nvars) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (Exponent e = 0; e <= total; ++e) {
        prefix.push_back(e);
        compositions_of(total - e, nvars, prefix, out);
        prefix.pop_back();
    }
}

/// All exponent vectors with the given total degree, ascending lexicographic.
std::vector<Monomial> shifts_with_degree(Exponent total, int nvars) {
    std::vector<std::vector<Exponent>> raw;
    std::vector<Exponent> prefix;
    compositions_of(total, nvars, prefix, raw);
    std::vector<Monomial> out;
    out.reserve(raw.size());
    for (auto& e : raw) out.emplace_back(std::move(e));
    return out;
}

void require_positive(std::int64_t value, const char* name) {
    if (value < 1)
        throw DomainError(std::string(name) + " must be positive");
}

void put_shift(std::map<std::string, std::int64_t>& params, const Monomial& a) {
    for (int j = 0; j < a.nvars(); ++j)
        params["a" + std::to_string(j)] = a.exponent(j);
}

/// Evaluates every check against one ideal, caching powers, closures,
/// symbolic powers, the Stanley-Reisner complex of the radical, and verified
/// regularity values across cells.
class IdealChecker {
public:
    IdealChecker(MonomialIdeal ideal, std::int64_t index, CheckConfig config)
        : ideal_(std::move(ideal)), index_(index), config_(std::move(config)) {
        if (ideal_.is_zero() || ideal_.is_unit())
            throw DomainError("checks require a proper nonzero ideal");
    }

    const MonomialIdeal& ideal() const { return ideal_; }

    CheckReport rrad() {
        return guarded(TheoremId::RRAD, {}, [&](CheckReport& r) {
            const Exponent g = gamma(ideal_);
            const int h = height(ideal_);
            const RegInfo top = reg_verified(ideal_);
            const RegInfo rad = reg_verified(radical(ideal_));
            r.lhs = top.reg.value();
            r.rhs = rad.reg.value() + (g - 1) * h;
            r.witness = top.witness;
            r.quantities = {{"reg_ideal", top.reg},
                            {"reg_radical", rad.reg},
                            {"gamma", Regularity::of(g)},
                            {"height", Regularity::of(h)},
                            {"mu", Regularity::of(static_cast<std::int64_t>(mu(ideal_)))}};
        });
    }

    CheckReport sym(std::int64_t m, std::int64_t k, std::int64_t j) {
        require_squarefree("check_sym");
        require_positive(m, "m");
        require_positive(k, "k");
        if (j < m - k || j > m)
            throw DomainError("check_sym: j out of range [m-k, m]");
        if (k * m + j < 1)
            throw DomainError("check_sym: km+j must be at least 1");
        return guarded(TheoremId::SYM, {{"m", m}, {"k", k}, {"j", j}},
                       [&](CheckReport& r) {
            const RegInfo high = reg_verified(sym_power(k * m + j));
            const RegInfo low = reg_verified(sym_power(m));
            r.lhs = high.reg.value();
            r.rhs = low.reg.value() + (k - 1) * m + j;
            r.witness = high.witness;
            r.quantities = {{"reg_symbolic_high", high.reg},
                            {"reg_symbolic_low", low.reg}};
        });
    }

    CheckReport corsym(std::int64_t k, std::int64_t m) {
        require_squarefree("check_corsym");
        require_positive(k, "k");
        require_positive(m, "m");
        return guarded(TheoremId::CORSYM_I, {{"k", k}, {"m", m}},
                       [&](CheckReport& r) {
            const RegInfo high = reg_verified(sym_power(k * m));
            const RegInfo low = reg_verified(sym_power(m));
            r.lhs = high.reg.value();
            r.rhs = low.reg.value() + (k - 1) * m;
            r.witness = high.witness;
            r.quantities = {{"reg_symbolic_high", high.reg},
                            {"reg_symbolic_low", low.reg}};
        });
    }

    CheckReport corsym_ii() {
        require_squarefree("check_corsym_ii");
        return guarded(TheoremId::CORSYM_II, {}, [&](CheckReport& r) {
            const RegInfo high = reg_verified(sym_power(3));
            const RegInfo low = reg_verified(sym_power(2));
            r.lhs = high.reg.value();
            r.rhs = low.reg.value() + 1;
            r.witness = high.witness;
            r.quantities = {{"reg_symbolic_3", high.reg},
                            {"reg_symbolic_2", low.reg}};
        });
    }

    CheckReport base_mv(std::int64_t m) {
        require_squarefree("check_base_mv");
        require_positive(m, "m");
        return guarded(TheoremId::BASE_MV, {{"m", m}}, [&](CheckReport& r) {
            const RegInfo base = reg_verified(ideal_);
            const RegInfo ordinary = reg_verified(ord_power(m));
            const RegInfo symbolic = reg_verified(sym_power(m));
            r.rhs = base.reg.value() + m - 1;
            r.lhs = std::min(ordinary.reg.value(), symbolic.reg.value());
            r.witness = ordinary.reg.value() <= symbolic.reg.value()
                            ? ordinary.witness
                            : symbolic.witness;
            r.quantities = {
                {"reg_ideal", base.reg},
                {"reg_power", ordinary.reg},
                {"reg_symbolic", symbolic.reg},
                {"slack_ordinary", Regularity::of(ordinary.reg.value() - r.rhs)},
                {"slack_symbolic", Regularity::of(symbolic.reg.value() - r.rhs)}};
        });
    }

    CheckReport rnormal1(std::int64_t m) {
        require_positive(m, "m");
        return guarded(TheoremId::RNORMAL1, {{"m", m}}, [&](CheckReport& r) {
            const Exponent g = gamma(ideal_);
            const std::int64_t s = scale();
            const RegInfo closure = reg_verified(closure_power_cached(1));
            const RegInfo high = reg_verified(ord_power(s * m));
            // Normalized to >=-form: the upper bound goes on the left.
            r.lhs = high.reg.value() - g * (s * m - 1);
            r.rhs = closure.reg.value();
            r.witness = closure.witness;
            r.quantities = {{"reg_closure", closure.reg},
                            {"reg_power_sm", high.reg},
                            {"gamma", Regularity::of(g)},
                            {"s_used", Regularity::of(s)}};
        });
    }

    bool integrally_closed() { return closure_power_cached(1) == ideal_; }

    CheckReport rintc(std::int64_t m) {
        require_positive(m, "m");
        return guarded(TheoremId::RINTC, {{"m", m}}, [&](CheckReport& r) {
            if (!integrally_closed())
                throw DomainError(
                    "check_rintc: requires an integrally closed ideal");
            const Exponent g = gamma(ideal_);
            const RegInfo high = reg_verified(ord_power(m));
            const RegInfo base = reg_verified(ideal_);
            r.lhs = high.reg.value();
            r.rhs = base.reg.value() + g * (m - 1);
            r.witness = high.witness;
            r.quantities = {{"reg_power", high.reg},
                            {"reg_ideal", base.reg},
                            {"gamma", Regularity::of(g)}};
        });
    }

    CheckReport rint(std::int64_t s, std::int64_t m) {
        require_positive(s, "s");
        require_positive(m, "m");
        return guarded(TheoremId::RINT, {{"s", s}, {"m", m}},
                       [&](CheckReport& r) {
            const Exponent g = gamma(ideal_);
            const RegInfo high = reg_verified(closure_power_cached(s * m));
            const RegInfo low = reg_verified(closure_power_cached(s));
            r.lhs = high.reg.value();
            r.rhs = low.reg.value() + g * s * (m - 1);
            r.witness = high.witness;
            r.quantities = {{"reg_closure_sm", high.reg},
                            {"reg_closure_s", low.reg},
                            {"gamma", Regularity::of(g)}};
        });
    }

    CheckReport delta_stab(std::int64_t s, const Monomial& a, bool closed) {
        require_positive(s, "s");
        const Exponent g = gamma(ideal_);
        if (a.degree() > g * s - 1)
            throw DomainError(
                "check_delta_stab: |a| must be at most gamma(I)*s - 1");
        std::map<std::string, std::int64_t> params{{"s", s},
                                                   {"closed", closed ? 1 : 0}};
        put_shift(params, a);
        return guarded(TheoremId::DELTA_STAB, std::move(params),
                       [&](CheckReport& r) {
            const MonomialIdeal& big = closed ? closure_power_cached(s) : ord_power(s);
            const bool equal = degree_complex(big, a) == radical_complex();
            r.lhs = equal ? 1 : 0;
            r.rhs = 1;
            r.quantities = {{"gamma", Regularity::of(g)}};
        });
    }

    CheckReport identity_sym(std::int64_t m, std::int64_t k, std::int64_t j,
                             const Monomial& a) {
        require_squarefree("check_identity_sym");
        require_positive(m, "m");
        require_positive(k, "k");
        if (j < m - k || j > m)
            throw DomainError("check_identity_sym: j out of range [m-k, m]");
        if (k * m + j < 1)
            throw DomainError("check_identity_sym: km+j must be at least 1");
        if (a.degree() < m)
            throw DomainError("check_identity_sym: requires |a| >= m");
        std::map<std::string, std::int64_t> params{
            {"variant", 1}, {"m", m}, {"k", k}, {"j", j}};
        put_shift(params, a);
        return guarded(TheoremId::PROOF_IDENTITY, std::move(params),
                       [&](CheckReport& r) {
            const bool equal =
                radical(colon_monomial(sym_power(m), a)) ==
                radical(colon_monomial(sym_power(k * m + j), a.pow(k + 1)));
            r.lhs = equal ? 1 : 0;
            r.rhs = 1;
        });
    }

    CheckReport identity_closure(std::int64_t m, const Monomial& a) {
        require_positive(m, "m");
        if (a.degree() < gamma(ideal_))
            throw DomainError("check_identity_closure: requires |a| >= gamma(I)");
        std::map<std::string, std::int64_t> params{{"variant", 2}, {"m", m}};
        put_shift(params, a);
        return guarded(TheoremId::PROOF_IDENTITY, std::move(params),
                       [&](CheckReport& r) {
            const std::int64_t s = scale();
            const bool equal =
                radical(colon_monomial(closure_power_cached(1), a)) ==
                radical(colon_monomial(ord_power(s * m), a.pow(s * m)));
            r.lhs = equal ? 1 : 0;
            r.rhs = 1;
            r.quantities = {{"s_used", Regularity::of(s)}};
        });
    }

    CheckReport identity_closure_powers(std::int64_t s, std::int64_t m,
                                        const Monomial& a) {
        require_positive(s, "s");
        require_positive(m, "m");
        if (a.degree() < gamma(ideal_) * s)
            throw DomainError(
                "check_identity_closure_powers: requires |a| >= gamma(I)*s");
        std::map<std::string, std::int64_t> params{
            {"variant", 3}, {"s", s}, {"m", m}};
        put_shift(params, a);
        return guarded(TheoremId::PROOF_IDENTITY, std::move(params),
                       [&](CheckReport& r) {
            const bool equal =
                radical(colon_monomial(closure_power_cached(s), a)) ==
                radical(colon_monomial(closure_power_cached(s * m), a.pow(m)));
            r.lhs = equal ? 1 : 0;
            r.rhs = 1;
        });
    }

    /// A record for a cell whose evaluation could not start (e.g. the
    /// integral-closedness test behind RINTC hit a resource cap).
    CheckReport skipped_report(TheoremId id,
                               std::map<std::string, std::int64_t> params,
                               const std::string& reason) {
        CheckReport report = skeleton(id, std::move(params));
        report.skipped = true;
        report.skip_reason = reason;
        report.holds = true;
        return report;
    }

private:
    void require_squarefree(const char* who) const {
        if (!ideal_.is_squarefree())
            throw DomainError(std::string(who) + ": requires a squarefree ideal");
    }

    CheckReport skeleton(TheoremId id,
                         std::map<std::string, std::int64_t> params) const {
        CheckReport report;
        report.theorem_id = id;
        report.ideal = ideal_.str();
        report.ideal_index = index_;
        report.params = std::move(params);
        report.field = config_.field;
        return report;
    }

    template <typename Fill>
    CheckReport guarded(TheoremId id, std::map<std::string, std::int64_t> params,
                        Fill&& fill) {
        const auto start = std::chrono::steady_clock::now();
        CheckReport report = skeleton(id, std::move(params));
        try {
            fill(report);
            report.slack = report.lhs - report.rhs;
            report.holds = report.slack >= 0;
        } catch (const ResourceError& error) {
            report.skipped = true;
            report.skip_reason = error.what();
            report.lhs = report.rhs = report.slack = 0;
            report.holds = true;  // no verdict; the reason is recorded
            report.witness.reset();
        }
        if (config_.record_timings)
            report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
        return report;
    }

    const MonomialIdeal& sym_power(std::int64_t m) {
        auto it = sym_cache_.find(m);
        if (it == sym_cache_.end())
            it = sym_cache_.emplace(m, symbolic_power(ideal_, m)).first;
        return it->second;
    }

    const MonomialIdeal& ord_power(std::int64_t m) {
        auto it = pow_cache_.find(m);
        if (it == pow_cache_.end())
            it = pow_cache_.emplace(m, power(ideal_, m)).first;
        return it->second;
    }

    const MonomialIdeal& closure_power_cached(std::int64_t s) {
        auto it = clo_cache_.find(s);
        if (it == clo_cache_.end())
            it = clo_cache_
                     .emplace(s, integral_closure_power(ideal_, s,
                                                        config_.closure_cell_cap))
                     .first;
        return it->second;
    }

    const SimplicialComplex& radical_complex() {
        if (!radical_complex_)
            radical_complex_ = stanley_reisner(radical(ideal_));
        return *radical_complex_;
    }

    std::int64_t scale() {
        if (!scale_)
            scale_ = uniform_power_scale(ideal_, config_.scale_cap,
                                         config_.closure_cell_cap);
        return *scale_;
    }

    /// Regularity via the Betti oracle, cross-checked against the witness
    /// search when the search box fits the cap.  Disagreement means one of
    /// the two oracles is broken, which must abort the run.
    RegInfo reg_verified(const MonomialIdeal& subject) {
        const std::string key = subject.str();
        auto it = reg_cache_.find(key);
        if (it != reg_cache_.end()) return it->second;
        RegInfo info;
        info.reg = regularity(subject, config_.field, config_.mu_cap);
        if (config_.verify_with_witness && !subject.is_zero() &&
            subject.is_proper()) {
            try {
                const RegWitness witness = reg_witness_search(
                    subject, config_.field, config_.witness_cell_cap);
                if (info.reg.is_minus_infinity() ||
                    witness.value != info.reg.value())
                    throw std::logic_error(
                        "regularity oracles disagree on " + key + ": " +
                        info.reg.str() + " (betti) vs " +
                        std::to_string(witness.value) + " (witness)");
                info.witness = witness;
            } catch (const ResourceError&) {
                // Witness box over the cap; the Betti value stands alone.
            }
        }
        reg_cache_.emplace(key, info);
        return info;
    }

    const MonomialIdeal ideal_;
    const std::int64_t index_;
    const CheckConfig config_;
    std::map<std::int64_t, MonomialIdeal> sym_cache_;
    std::map<std::int64_t, MonomialIdeal> pow_cache_;
    std::map<std::int64_t, MonomialIdeal> clo_cache_;
    std::map<std::string, RegInfo> reg_cache_;
    std::optional<SimplicialComplex> radical_complex_;
    std::optional<std::int64_t> scale_;
};

/// First `budget` exponent shifts of total degree `lo` or `lo + 1`, in the
/// deterministic (degree, lex) order.
std::vector<Monomial> identity_shift_samples(Exponent lo, int nvars,
                                             std::int64_t budget) {
    std::vector<Monomial> out;
    for (Exponent t = lo; t <= lo + 1; ++t) {
        for (Monomial& a : shifts_with_degree(t, nvars)) {
            if (static_cast<std::int64_t>(out.size()) == budget) return out;
            out.push_back(std::move(a));
        }
    }
    return out;
}

std::vector<CheckReport> check_ideal(const MonomialIdeal& ideal,
                                     std::int64_t index,
                                     const std::set<TheoremId>& suite,
                                     const GridConfig& grid,
                                     const CheckConfig& config) {
    IdealChecker checker(ideal, index, config);
    const bool squarefree = ideal.is_squarefree();
    const int n = ideal.nvars();
    const Exponent g = gamma(ideal);
    std::vector<CheckReport> out;

    if (suite.contains(TheoremId::RRAD)) out.push_back(checker.rrad());

    if (squarefree && suite.contains(TheoremId::SYM))
        for (std::int64_t m = 1; m <= grid.m_max; ++m)
            for (std::int64_t k = 1; k <= grid.k_max; ++k)
                for (std::int64_t j = std::max(m - k, 1 - k * m); j <= m; ++j)
                    out.push_back(checker.sym(m, k, j));

    if (squarefree && suite.contains(TheoremId::CORSYM_I))
        for (std::int64_t k = 1; k <= grid.k_max; ++k)
            for (std::int64_t m = 1; m <= grid.m_max; ++m)
                out.push_back(checker.corsym(k, m));

    if (squarefree && suite.contains(TheoremId::CORSYM_II))
        out.push_back(checker.corsym_ii());

    if (squarefree && suite.contains(TheoremId::BASE_MV))
        for (std::int64_t m = 1; m <= grid.m_max; ++m)
            out.push_back(checker.base_mv(m));

    if (suite.contains(TheoremId::RNORMAL1))
        for (std::int64_t m = 1; m <= grid.m_max; ++m)
            out.push_back(checker.rnormal1(m));

    if (suite.contains(TheoremId::RINTC)) {
        std::optional<bool> closed;
        std::string reason;
        try {
            closed = checker.integrally_closed();
        } catch (const ResourceError& error) {
            reason = error.what();
        }
        for (std::int64_t m = 1; m <= grid.m_max; ++m) {
            if (!closed.has_value())
                out.push_back(
                    checker.skipped_report(TheoremId::RINTC, {{"m", m}}, reason));
            else if (*closed)
                out.push_back(checker.rintc(m));
            // The theorem does not apply to non-closed ideals: no cell.
        }
    }

    if (suite.contains(TheoremId::RINT))
        for (std::int64_t s = 1; s <= grid.s_max; ++s)
            for (std::int64_t m = 1; m <= grid.m_max; ++m)
                out.push_back(checker.rint(s, m));

    if (suite.contains(TheoremId::DELTA_STAB))
        for (std::int64_t s = 1; s <= grid.s_max; ++s)
            for (int closed = 0; closed <= 1; ++closed)
                for (Exponent t = 0; t <= g * s - 1; ++t)
                    for (const Monomial& a : shifts_with_degree(t, n))
                        out.push_back(checker.delta_stab(s, a, closed != 0));

    if (suite.contains(TheoremId::PROOF_IDENTITY)) {
        if (squarefree)
            for (std::int64_t m = 1; m <= grid.m_max; ++m)
                for (std::int64_t k = 1; k <= grid.k_max; ++k)
                    for (std::int64_t j = std::max(m - k, 1 - k * m); j <= m; ++j)
                        for (const Monomial& a :
                             identity_shift_samples(m, n, config.identity_samples))
                            out.push_back(checker.identity_sym(m, k, j, a));
        for (std::int64_t m = 1; m <= grid.m_max; ++m)
            for (const Monomial& a :
                 identity_shift_samples(g, n, config.identity_samples))
                out.push_back(checker.identity_closure(m, a));
        for (std::int64_t s = 1; s <= grid.s_max; ++s)
            for (std::int64_t m = 1; m <= grid.m_max; ++m)
                for (const Monomial& a :
                     identity_shift_samples(g * s, n, config.identity_samples))
                    out.push_back(checker.identity_closure_powers(s, m, a));
    }

    return out;
}

}  // namespace

CheckReport check_rrad(const MonomialIdeal& ideal, const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).rrad();
}

CheckReport check_sym(const MonomialIdeal& ideal, std::int64_t m, std::int64_t k,
                      std::int64_t j, const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).sym(m, k, j);
}

CheckReport check_corsym(const MonomialIdeal& ideal, std::int64_t k,
                         std::int64_t m, const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).corsym(k, m);
}

CheckReport check_corsym_ii(const MonomialIdeal& ideal,
                            const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).corsym_ii();
}

CheckReport check_base_mv(const MonomialIdeal& ideal, std::int64_t m,
                          const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).base_mv(m);
}

CheckReport check_rnormal1(const MonomialIdeal& ideal, std::int64_t m,
                           const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).rnormal1(m);
}

CheckReport check_rintc(const MonomialIdeal& ideal, std::int64_t m,
                        const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).rintc(m);
}

CheckReport check_rint(const MonomialIdeal& ideal, std::int64_t s,
                       std::int64_t m, const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).rint(s, m);
}

CheckReport check_delta_stab(const MonomialIdeal& ideal, std::int64_t s,
                             const Monomial& a, bool closed,
                             const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).delta_stab(s, a, closed);
}

CheckReport check_identity_sym(const MonomialIdeal& ideal, std::int64_t m,
                               std::int64_t k, std::int64_t j, const Monomial& a,
                               const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).identity_sym(m, k, j, a);
}

CheckReport check_identity_closure(const MonomialIdeal& ideal, std::int64_t m,
                                   const Monomial& a,
                                   const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).identity_closure(m, a);
}

CheckReport check_identity_closure_powers(const MonomialIdeal& ideal,
                                          std::int64_t s, std::int64_t m,
                                          const Monomial& a,
                                          const CheckConfig& config) {
    return IdealChecker(ideal, 0, config).identity_closure_powers(s, m, a);
}

std::vector<CheckReport> run_corpus(const std::vector<CorpusItem>& corpus,
                                    const std::set<TheoremId>& suite,
                                    const GridConfig& grid,
                                    const CheckConfig& config, int jobs) {
    std::vector<std::vector<CheckReport>> buckets(corpus.size());
    std::vector<std::exception_ptr> errors(corpus.size());
    std::atomic<std::size_t> cursor{0};

    const auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= corpus.size()) return;
            try {
                buckets[i] = check_ideal(corpus[i].ideal,
                                         static_cast<std::int64_t>(i), suite,
                                         grid, config);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const int nthreads =
        std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& error : errors)
        if (error) std::rethrow_exception(error);

    std::vector<CheckReport> all;
    for (std::vector<CheckReport>& bucket : buckets)
        for (CheckReport& report : bucket) all.push_back(std::move(report));
    std::sort(all.begin(), all.end(), report_order);
    return all;
}

std::set<TheoremId> parse_suite(const std::string& text) {
    std::set<TheoremId> out;
    std::stringstream stream(text);
    std::string name;
    while (std::getline(stream, name, ',')) {
        if (name == "all") {
            for (TheoremId id :
                 {TheoremId::RRAD, TheoremId::SYM, TheoremId::CORSYM_I,
                  TheoremId::CORSYM_II, TheoremId::RNORMAL1, TheoremId::RINTC,
                  TheoremId::RINT, TheoremId::BASE_MV, TheoremId::DELTA_STAB,
                  TheoremId::PROOF_IDENTITY})
                out.insert(id);
        } else if (name == "rrad") {
            out.insert(TheoremId::RRAD);
        } else if (name == "sym") {
            out.insert(TheoremId::SYM);
        } else if (name == "corsym") {
            out.insert(TheoremId::CORSYM_I);
            out.insert(TheoremId::CORSYM_II);
        } else if (name == "rnormal1") {
            out.insert(TheoremId::RNORMAL1);
        } else if (name == "rintc") {
            out.insert(TheoremId::RINTC);
        } else if (name == "rint") {
            out.insert(TheoremId::RINT);
        } else if (name == "base") {
            out.insert(TheoremId::BASE_MV);
        } else if (name == "delta") {
            out.insert(TheoremId::DELTA_STAB);
        } else if (name == "proof") {
            out.insert(TheoremId::PROOF_IDENTITY);
        } else {
            throw DomainError("unknown suite name: " + name);
        }
    }
    if (out.empty()) throw DomainError("empty suite");
    return out;
}

}  // namespace monreg
