#pragma once

#include <string>
#include <vector>

#include "core/lattice.hpp"
#include "core/symmetry.hpp"

namespace dmap {

enum class DirectionClass { D100, D110, D111, Other };

std::string direction_class_name(DirectionClass c);

/// Direction class of a coordinate vector: sorted absolute components
/// (0,0,a) -> 100, (0,a,a) -> 110, (a,a,a) -> 111, anything else -> other.
DirectionClass direction_class(IVec3 v);

/// A set of probe sites equivalent under a symmetry group at fixed distance
/// from the donor. Produced either as a full Td shell or as a field-split
/// sub-orbit of one.
struct ShellOrbit {
    IVec3 representative;              ///< canonical (lexicographically greatest) member
    std::vector<std::int32_t> members; ///< site ids, sorted by site index
    long long dist2_quarter;           ///< squared distance in (a0/4)^2 units
    double distance_nm;
    DirectionClass dclass;
    int shell_id = -1; ///< id of the parent Td shell
    int orbit_id = -1; ///< id after field splitting (== shell ordinal at zero field)

    int multiplicity() const { return static_cast<int>(members.size()); }
};

/// Group every non-donor site within max_radius_nm of the donor into Td
/// shells, sorted by distance, then direction class, then representative.
std::vector<ShellOrbit> classify_shells(const LatticeDomain& domain, double max_radius_nm);

/// Split one shell into orbits of `group` (acting about the donor).
/// Sub-orbits are sorted by canonical representative; union equals the shell.
std::vector<ShellOrbit> orbit_partition(const ShellOrbit& shell, const SymmetryGroup& group,
                                        const LatticeDomain& domain);

/// classify_shells + orbit_partition over all shells, with shell_id/orbit_id
/// assigned in listing order.
std::vector<ShellOrbit> split_shells(const std::vector<ShellOrbit>& shells,
                                     const SymmetryGroup& group, const LatticeDomain& domain);

/// Find the shell containing the site equivalent to `coords` (relative to the
/// donor, any Td image); returns -1 if absent.
int find_shell(const std::vector<ShellOrbit>& shells, const LatticeDomain& domain, IVec3 coords);

} // namespace dmap
