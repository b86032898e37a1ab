#include "monreg/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace monreg {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b)
        throw OverflowError("exponent addition overflow");
    return a + b;
}

Exponent checked_mul(Exponent a, Exponent b) {
    if (a != 0 && b > std::numeric_limits<Exponent>::max() / a)
        throw OverflowError("exponent multiplication overflow");
    return a * b;
}

void require_same_nvars(int a, int b) {
    if (a != b)
        throw DomainError("variable count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::string variable_name(int nvars, int index) {
    static const char* small[] = {"x", "y", "z"};
    if (nvars <= 3)
        return small[index];
    return "x" + std::to_string(index + 1);
}

} // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {
    for (Exponent e : exponents_)
        if (e < 0)
            throw DomainError("negative exponent");
}

Monomial Monomial::one(int nvars) {
    return Monomial(std::vector<Exponent>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int index) {
    std::vector<Exponent> e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return Monomial(std::move(e));
}

Exponent Monomial::degree() const {
    Exponent d = 0;
    for (Exponent e : exponents_)
        d = checked_add(d, e);
    return d;
}

std::uint64_t Monomial::support_mask() const {
    if (nvars() > 64)
        throw DomainError("support masks require n <= 64");
    std::uint64_t mask = 0;
    for (int j = 0; j < nvars(); ++j)
        if (exponents_[static_cast<std::size_t>(j)] > 0)
            mask |= std::uint64_t{1} << j;
    return mask;
}

bool Monomial::is_one() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    require_same_nvars(nvars(), other.nvars());
    for (std::size_t j = 0; j < exponents_.size(); ++j)
        if (exponents_[j] > other.exponents_[j])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    require_same_nvars(nvars(), other.nvars());
    std::vector<Exponent> e(exponents_.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = checked_add(exponents_[j], other.exponents_[j]);
    return Monomial(std::move(e));
}

Monomial Monomial::pow(Exponent k) const {
    if (k < 0)
        throw DomainError("negative monomial power");
    std::vector<Exponent> e(exponents_.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = checked_mul(exponents_[j], k);
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
    require_same_nvars(nvars(), other.nvars());
    std::vector<Exponent> e(exponents_.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = std::max(exponents_[j], other.exponents_[j]);
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
    require_same_nvars(nvars(), other.nvars());
    std::vector<Exponent> e(exponents_.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = std::min(exponents_[j], other.exponents_[j]);
    return Monomial(std::move(e));
}

Monomial Monomial::quotient_by_gcd(const Monomial& other) const {
    require_same_nvars(nvars(), other.nvars());
    std::vector<Exponent> e(exponents_.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = std::max<Exponent>(exponents_[j] - other.exponents_[j], 0);
    return Monomial(std::move(e));
}

Monomial Monomial::clamp(const std::vector<Exponent>& bounds) const {
    if (bounds.size() != exponents_.size())
        throw DomainError("clamp bounds length mismatch");
    std::vector<Exponent> e(exponents_.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = std::min(exponents_[j], bounds[j]);
    return Monomial(std::move(e));
}

Monomial Monomial::squarefree_part() const {
    std::vector<Exponent> e(exponents_.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = exponents_[j] > 0 ? 1 : 0;
    return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    return std::lexicographical_compare_three_way(exponents_.begin(), exponents_.end(),
                                                  other.exponents_.begin(), other.exponents_.end());
}

std::string Monomial::str() const {
    if (is_one())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (int j = 0; j < nvars(); ++j) {
        Exponent e = exponents_[static_cast<std::size_t>(j)];
        if (e == 0)
            continue;
        if (!first)
            out << "*";
        out << variable_name(nvars(), j);
        if (e > 1)
            out << "^" << e;
        first = false;
    }
    return out.str();
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators) : nvars_(nvars) {
    if (nvars < 0)
        throw DomainError("negative variable count");
    for (const Monomial& g : generators)
        if (g.nvars() != nvars)
            throw DomainError("generator has wrong variable count");
    // Sweep in increasing degree so every potential divisor is seen first.
    std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a < b;
    });
    for (const Monomial& g : generators) {
        bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                     [&](const Monomial& kept) { return kept.divides(g); });
        if (!redundant)
            gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
}

MonomialIdeal MonomialIdeal::zero(int nvars) {
    return MonomialIdeal(nvars, {});
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
    return MonomialIdeal(nvars, {Monomial::one(nvars)});
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& u) const {
    require_same_nvars(nvars_, u.nvars());
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(u); });
}

std::string MonomialIdeal::str() const {
    if (is_zero())
        return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += gens_[i].str();
    }
    return out + ")";
}

MonomialIdeal minimize(const std::vector<Monomial>& generators, int nvars) {
    return MonomialIdeal(nvars, generators);
}

MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    require_same_nvars(lhs.nvars(), rhs.nvars());
    std::vector<Monomial> products;
    products.reserve(lhs.gens().size() * rhs.gens().size());
    for (const Monomial& u : lhs.gens())
        for (const Monomial& v : rhs.gens())
            products.push_back(u * v);
    return MonomialIdeal(lhs.nvars(), std::move(products));
}

MonomialIdeal power(const MonomialIdeal& ideal, Exponent m) {
    if (m < 1)
        throw DomainError("ideal power requires m >= 1");
    MonomialIdeal result = ideal;
    for (Exponent i = 1; i < m; ++i)
        result = multiply(result, ideal);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    require_same_nvars(lhs.nvars(), rhs.nvars());
    std::vector<Monomial> lcms;
    lcms.reserve(lhs.gens().size() * rhs.gens().size());
    for (const Monomial& u : lhs.gens())
        for (const Monomial& v : rhs.gens())
            lcms.push_back(u.lcm(v));
    return MonomialIdeal(lhs.nvars(), std::move(lcms));
}

MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& v) {
    require_same_nvars(ideal.nvars(), v.nvars());
    std::vector<Monomial> quotients;
    quotients.reserve(ideal.gens().size());
    for (const Monomial& u : ideal.gens())
        quotients.push_back(u.quotient_by_gcd(v));
    return MonomialIdeal(ideal.nvars(), std::move(quotients));
}

MonomialIdeal saturate_monomial(const MonomialIdeal& ideal, const Monomial& v) {
    MonomialIdeal current = ideal;
    for (;;) {
        MonomialIdeal next = colon_monomial(current, v);
        if (next == current)
            return current;
        current = next;
    }
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> parts;
    parts.reserve(ideal.gens().size());
    for (const Monomial& u : ideal.gens())
        parts.push_back(u.squarefree_part());
    return MonomialIdeal(ideal.nvars(), std::move(parts));
}

Exponent gamma(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw DomainError("gamma requires a nonzero proper ideal");
    Exponent best = std::numeric_limits<Exponent>::max();
    for (const Monomial& u : ideal.gens())
        for (int j = 0; j < ideal.nvars(); ++j)
            if (u.exponent(j) >= 1)
                best = std::min(best, u.exponent(j));
    return best;
}

std::size_t mu(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw DomainError("mu requires a nonzero ideal");
    return ideal.gens().size();
}

Monomial lcm_of_gens(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw DomainError("lcm_of_gens requires a nonzero ideal");
    Monomial result = ideal.gens().front();
    for (std::size_t i = 1; i < ideal.gens().size(); ++i)
        result = result.lcm(ideal.gens()[i]);
    return result;
}

std::vector<Exponent> per_variable_max(const MonomialIdeal& ideal) {
    return lcm_of_gens(ideal).exponents();
}

} // namespace monreg
