#include "vassiliev/torus_knot.hpp"

#include "vassiliev/errors.hpp"

#include <cstdlib>
#include <numeric>

namespace vassiliev {

bool TorusKnot::is_valid() const
{
    return n != 0 && m != 0 && std::gcd(std::abs(n), std::abs(m)) == 1;
}

void TorusKnot::require_valid() const
{
    if (!is_valid())
        throw NotAKnot(str() + " is not a torus knot: n and m must be non-zero and coprime");
}

bool TorusKnot::is_unknot() const
{
    return std::abs(n) == 1 || std::abs(m) == 1;
}

std::string TorusKnot::str() const
{
    return "{" + std::to_string(n) + "," + std::to_string(m) + "}";
}

}  // namespace vassiliev
