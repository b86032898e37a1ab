#ifndef MONREG_FIELD_HPP
#define MONREG_FIELD_HPP

#include <cstdint>
#include <string>

#include "monreg/errors.hpp"

namespace monreg {

/// Coefficient field for homology and Betti computations: the rationals or
/// a prime field.  Every report carries its field, since the answers may
/// depend on the characteristic.
class CoefficientField {
public:
    enum class Kind { Rationals, Prime };

    static CoefficientField rationals() { return CoefficientField(Kind::Rationals, 0); }
    static CoefficientField prime(std::uint32_t p);

    /// Accepts "q", "f2", or "fp:<p>".
    static CoefficientField parse(const std::string& text);

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const CoefficientField& other) const = default;

    /// "q", "f2", or "fp:<p>" (inverse of parse).
    std::string str() const;

private:
    CoefficientField(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

} // namespace monreg

#endif
