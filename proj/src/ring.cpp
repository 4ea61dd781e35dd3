#include "qgrowth/ring.hpp"

#include <cctype>

#include "qgrowth/errors.hpp"

namespace qgrowth {

Integer parse_integer(std::string_view text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        throw invalid_argument("not an integer: '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw invalid_argument("not an integer: '" + std::string(text) + "'");
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

CoefficientRing CoefficientRing::residues(const Integer& m)
{
    if (m < 2)
        throw invalid_argument("residue modulus must be >= 2, got " + to_string(m));
    CoefficientRing r;
    r.modulus_ = m;
    return r;
}

const Integer& CoefficientRing::modulus() const
{
    if (!modulus_)
        throw invalid_argument("the integer ring has no modulus");
    return *modulus_;
}

std::string CoefficientRing::describe() const
{
    return modulus_ ? "Z/" + to_string(*modulus_) + "Z" : "Z";
}

} // namespace qgrowth
