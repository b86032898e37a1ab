#include "monreg/field.hpp"

namespace monreg {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

CoefficientField CoefficientField::prime(std::uint32_t p) {
    if (!is_prime(p))
        throw DomainError("field characteristic must be prime, got " + std::to_string(p));
    return CoefficientField(Kind::Prime, p);
}

CoefficientField CoefficientField::parse(const std::string& text) {
    if (text == "q")
        return rationals();
    if (text == "f2")
        return prime(2);
    if (text.rfind("fp:", 0) == 0) {
        try {
            unsigned long p = std::stoul(text.substr(3));
            if (p > 0xffffffffUL)
                throw DomainError("field characteristic too large: " + text);
            return prime(static_cast<std::uint32_t>(p));
        } catch (const std::logic_error&) {
            throw DomainError("malformed field spec: " + text);
        }
    }
    throw DomainError("unknown field spec '" + text + "' (expected q, f2, or fp:<p>)");
}

std::string CoefficientField::str() const {
    if (kind_ == Kind::Rationals)
        return "q";
    if (p_ == 2)
        return "f2";
    return "fp:" + std::to_string(p_);
}

} // namespace monreg
