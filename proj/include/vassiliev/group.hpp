#pragma once

#include "vassiliev/rational.hpp"

#include <string>
#include <string_view>

namespace vassiliev {

enum class GroupFamily {
    SU_N,        ///< SU(N), fundamental representation
    SO_N,        ///< SO(N), fundamental representation
    SU2,         ///< SU(2), spin j/2
    SU_N_x_SU2,  ///< SU(N) x SU(2), fundamental times spin j/2
};

/// "su_n", "so_n", "su2", "su_n_x_su2"
std::string family_name(GroupFamily family);
/// Inverse of family_name; also accepts "product". Throws InvalidGroup.
GroupFamily parse_family(std::string_view name);

/// A concrete group and representation. Build through the factories, which
/// validate the parameters.
class GroupInstance {
public:
    static GroupInstance su_n(int N);
    static GroupInstance so_n(int N);
    static GroupInstance su2(int j);
    static GroupInstance product(int N, int j);

    GroupFamily family() const { return family_; }
    /// Rank parameter of SU(N)/SO(N); 0 for plain SU(2).
    int N() const { return N_; }
    /// Spin label (spin j/2); 0 for SU(N)/SO(N).
    int j() const { return j_; }

    /// t = exp(scale * x): 1 for SU(N) and SU(2), 1/2 for SO(N).
    Rational substitution_scale() const;
    /// Classical dimension of the representation.
    Rational dimension() const;

    std::string str() const;

    friend bool operator==(const GroupInstance&, const GroupInstance&) = default;

private:
    GroupInstance(GroupFamily family, int N, int j) : family_(family), N_(N), j_(j) {}

    GroupFamily family_;
    int N_;
    int j_;
};

}  // namespace vassiliev
