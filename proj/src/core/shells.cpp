#include "core/shells.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dmap {

std::string direction_class_name(DirectionClass c) {
    switch (c) {
    case DirectionClass::D100: return "100";
    case DirectionClass::D110: return "110";
    case DirectionClass::D111: return "111";
    default: return "other";
    }
}

DirectionClass direction_class(IVec3 v) {
    int a[3] = {std::abs(v.x), std::abs(v.y), std::abs(v.z)};
    std::sort(a, a + 3);
    if (a[0] == 0 && a[1] == 0 && a[2] > 0) return DirectionClass::D100;
    if (a[0] == 0 && a[1] > 0 && a[1] == a[2]) return DirectionClass::D110;
    if (a[0] > 0 && a[0] == a[1] && a[1] == a[2]) return DirectionClass::D111;
    return DirectionClass::Other;
}

std::vector<ShellOrbit> classify_shells(const LatticeDomain& domain, double max_radius_nm) {
    if (max_radius_nm <= 0.0) throw DomainError("max_radius_nm must be > 0");

    const SymmetryGroup td = SymmetryGroup::tetrahedral();
    const IVec3 donor = domain.donor_coords();
    const double q = domain.quarter_nm();
    const long long max_d2 =
        static_cast<long long>(std::floor((max_radius_nm / q) * (max_radius_nm / q) + 1e-9));

    // Key: (squared distance, canonical representative) -- exact integers.
    std::map<std::pair<long long, IVec3>, std::vector<std::int32_t>> buckets;

    for (const auto& s : domain.sites()) {
        if (s.index == domain.donor_index()) continue;
        const IVec3 rel = s.coords - donor;
        const long long d2 = rel.norm2();
        if (d2 > max_d2) continue;
        buckets[{d2, td.canonical_representative(rel)}].push_back(s.index);
    }

    std::vector<ShellOrbit> shells;
    shells.reserve(buckets.size());
    for (auto& [key, members] : buckets) {
        ShellOrbit sh;
        sh.representative = key.second;
        sh.dist2_quarter = key.first;
        sh.distance_nm = std::sqrt(static_cast<double>(key.first)) * q;
        sh.dclass = direction_class(key.second);
        std::sort(members.begin(), members.end());
        sh.members = std::move(members);
        shells.push_back(std::move(sh));
    }

    std::sort(shells.begin(), shells.end(), [](const ShellOrbit& a, const ShellOrbit& b) {
        if (a.dist2_quarter != b.dist2_quarter) return a.dist2_quarter < b.dist2_quarter;
        if (a.dclass != b.dclass) return static_cast<int>(a.dclass) < static_cast<int>(b.dclass);
        return a.representative < b.representative;
    });
    for (size_t i = 0; i < shells.size(); ++i) shells[i].shell_id = static_cast<int>(i);
    return shells;
}

std::vector<ShellOrbit> orbit_partition(const ShellOrbit& shell, const SymmetryGroup& group,
                                        const LatticeDomain& domain) {
    const IVec3 donor = domain.donor_coords();

    std::map<IVec3, std::vector<std::int32_t>> by_rep;
    for (std::int32_t id : shell.members) {
        const IVec3 rel = domain.site(id).coords - donor;
        by_rep[group.canonical_representative(rel)].push_back(id);
    }

    std::vector<ShellOrbit> orbits;
    orbits.reserve(by_rep.size());
    for (auto& [rep, members] : by_rep) {
        ShellOrbit o;
        o.representative = rep;
        o.dist2_quarter = shell.dist2_quarter;
        o.distance_nm = shell.distance_nm;
        o.dclass = shell.dclass;
        o.shell_id = shell.shell_id;
        std::sort(members.begin(), members.end());
        o.members = std::move(members);
        orbits.push_back(std::move(o));
    }
    std::sort(orbits.begin(), orbits.end(), [](const ShellOrbit& a, const ShellOrbit& b) {
        return a.representative < b.representative;
    });
    return orbits;
}

std::vector<ShellOrbit> split_shells(const std::vector<ShellOrbit>& shells,
                                     const SymmetryGroup& group, const LatticeDomain& domain) {
    std::vector<ShellOrbit> out;
    int next_orbit = 0;
    for (const auto& sh : shells) {
        auto orbits = orbit_partition(sh, group, domain);
        for (auto& o : orbits) {
            o.orbit_id = next_orbit++;
            out.push_back(std::move(o));
        }
    }
    return out;
}

int find_shell(const std::vector<ShellOrbit>& shells, const LatticeDomain& domain, IVec3 coords) {
    const SymmetryGroup td = SymmetryGroup::tetrahedral();
    const IVec3 rep = td.canonical_representative(coords);
    for (const auto& sh : shells)
        if (sh.representative == rep && sh.orbit_id == -1) return sh.shell_id;
    // fall back to matching split orbits' parent shell
    for (const auto& sh : shells) {
        const IVec3 donor = domain.donor_coords();
        for (auto id : sh.members)
            if (td.canonical_representative(domain.site(id).coords - donor) == rep)
                return sh.shell_id;
    }
    return -1;
}

} // namespace dmap
