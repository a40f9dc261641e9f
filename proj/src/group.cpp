#include "vassiliev/group.hpp"

#include "vassiliev/errors.hpp"

namespace vassiliev {

std::string family_name(GroupFamily family)
{
    switch (family) {
    case GroupFamily::SU_N:
        return "su_n";
    case GroupFamily::SO_N:
        return "so_n";
    case GroupFamily::SU2:
        return "su2";
    case GroupFamily::SU_N_x_SU2:
        return "su_n_x_su2";
    }
    throw InvalidGroup("unknown group family");
}

GroupFamily parse_family(std::string_view name)
{
    if (name == "su_n")
        return GroupFamily::SU_N;
    if (name == "so_n")
        return GroupFamily::SO_N;
    if (name == "su2")
        return GroupFamily::SU2;
    if (name == "su_n_x_su2" || name == "product")
        return GroupFamily::SU_N_x_SU2;
    throw InvalidGroup("unknown group family '" + std::string(name) + "'");
}

GroupInstance GroupInstance::su_n(int N)
{
    if (N < 2)
        throw InvalidGroup("SU(N) needs N >= 2");
    return {GroupFamily::SU_N, N, 0};
}

GroupInstance GroupInstance::so_n(int N)
{
    if (N < 3)
        throw InvalidGroup("SO(N) needs N >= 3");
    return {GroupFamily::SO_N, N, 0};
}

GroupInstance GroupInstance::su2(int j)
{
    if (j < 1)
        throw InvalidGroup("SU(2) spin label j must be >= 1");
    return {GroupFamily::SU2, 0, j};
}

GroupInstance GroupInstance::product(int N, int j)
{
    if (N < 2 || j < 1)
        throw InvalidGroup("SU(N) x SU(2) needs N >= 2 and j >= 1");
    return {GroupFamily::SU_N_x_SU2, N, j};
}

Rational GroupInstance::substitution_scale() const
{
    return family_ == GroupFamily::SO_N ? Rational(1, 2) : Rational(1);
}

Rational GroupInstance::dimension() const
{
    switch (family_) {
    case GroupFamily::SU_N:
    case GroupFamily::SO_N:
        return N_;
    case GroupFamily::SU2:
        return j_ + 1;
    case GroupFamily::SU_N_x_SU2:
        return Rational(N_) * Rational(j_ + 1);
    }
    throw InvalidGroup("unknown group family");
}

std::string GroupInstance::str() const
{
    switch (family_) {
    case GroupFamily::SU_N:
        return "SU(" + std::to_string(N_) + ")";
    case GroupFamily::SO_N:
        return "SO(" + std::to_string(N_) + ")";
    case GroupFamily::SU2:
        return "SU(2)_j=" + std::to_string(j_);
    case GroupFamily::SU_N_x_SU2:
        return "SU(" + std::to_string(N_) + ")xSU(2)_j=" + std::to_string(j_);
    }
    return "?";
}

}  // namespace vassiliev
