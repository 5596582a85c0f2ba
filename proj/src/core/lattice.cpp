#include "core/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace dmap {

namespace {

int mod4(long long v) { return static_cast<int>(((v % 4) + 4) % 4); }

bool all_even(IVec3 c) { return (c.x % 2 == 0) && (c.y % 2 == 0) && (c.z % 2 == 0); }
bool all_odd(IVec3 c) { return (c.x % 2 != 0) && (c.y % 2 != 0) && (c.z % 2 != 0); }

} // namespace

bool is_lattice_site(IVec3 c) {
    const long long s = static_cast<long long>(c.x) + c.y + c.z;
    if (all_even(c)) return mod4(s) == 0;
    if (all_odd(c)) return mod4(s) == 3;
    return false;
}

Sublattice sublattice_of(IVec3 c) { return all_even(c) ? Sublattice::A : Sublattice::B; }

const std::array<IVec3, 4>& bond_offsets() {
    static const std::array<IVec3, 4> offsets = {
        IVec3{1, 1, 1}, IVec3{1, -1, -1}, IVec3{-1, 1, -1}, IVec3{-1, -1, 1}};
    return offsets;
}

LatticeDomain LatticeDomain::build(IVec3 extent_cells, IVec3 donor_coords, BoxMode mode,
                                   std::optional<InterfaceSpec> interface, double a0_nm) {
    for (int k = 0; k < 3; ++k) {
        if (extent_cells[k] < 1) throw DomainError("extent_cells must be >= 1 in each direction");
    }
    if (!is_lattice_site(donor_coords))
        throw DomainError("donor coords " + donor_coords.str() + " are not a diamond lattice site");
    if (interface && interface->depth_nm <= 0.0)
        throw DomainError("interface depth must be > 0");
    if (interface && (interface->axis < 0 || interface->axis > 2))
        throw DomainError("interface axis must be 0, 1 or 2");

    LatticeDomain d;
    d.extent_cells_ = extent_cells;
    d.box_mode_ = mode;
    d.donor_coords_ = donor_coords;
    d.interface_ = interface;
    d.a0_nm_ = a0_nm;

    IVec3 lo, hi; // inclusive coordinate bounds
    for (int k = 0; k < 3; ++k) {
        if (mode == BoxMode::Cells) {
            lo[k] = donor_coords[k] - 2 * extent_cells[k];
            hi[k] = donor_coords[k] + 2 * extent_cells[k] - 1; // half-open upper edge
        } else {
            lo[k] = donor_coords[k] - 2 * extent_cells[k];
            hi[k] = donor_coords[k] + 2 * extent_cells[k];
        }
    }

    const double q = a0_nm / 4.0;
    auto beyond_wall = [&](IVec3 c) {
        if (!interface) return false;
        const double r = (c[interface->axis] - donor_coords[interface->axis]) * q;
        return r < -interface->depth_nm - 1e-12;
    };

    d.sites_.reserve(static_cast<size_t>(8LL * extent_cells.x * extent_cells.y * extent_cells.z));
    for (int x = lo.x; x <= hi.x; ++x)
        for (int y = lo.y; y <= hi.y; ++y)
            for (int z = lo.z; z <= hi.z; ++z) {
                const IVec3 c{x, y, z};
                if (!is_lattice_site(c) || beyond_wall(c)) continue;
                d.sites_.push_back({c, sublattice_of(c), 0});
            }

    std::sort(d.sites_.begin(), d.sites_.end(),
              [](const LatticeSite& a, const LatticeSite& b) { return a.coords < b.coords; });

    std::unordered_map<IVec3, std::int32_t, IVec3Hash> lookup;
    lookup.reserve(d.sites_.size() * 2);
    for (std::int32_t i = 0; i < d.site_count(); ++i) {
        d.sites_[i].index = i;
        lookup.emplace(d.sites_[i].coords, i);
        if (d.sites_[i].coords == donor_coords) d.donor_index_ = i;
    }
    if (d.donor_index_ < 0)
        throw DomainError("donor site " + donor_coords.str() + " is outside the domain box");

    d.neighbors_.resize(d.sites_.size());
    const auto& offs = bond_offsets();
    for (std::int32_t i = 0; i < d.site_count(); ++i) {
        const LatticeSite& s = d.sites_[i];
        for (int k = 0; k < 4; ++k) {
            const IVec3 nc =
                s.sublattice == Sublattice::A ? s.coords + offs[k] : s.coords - offs[k];
            auto it = lookup.find(nc);
            d.neighbors_[i][k] = (it == lookup.end()) ? -1 : it->second;
        }
    }
    return d;
}

std::int32_t LatticeDomain::find(IVec3 coords) const {
    auto it = std::lower_bound(
        sites_.begin(), sites_.end(), coords,
        [](const LatticeSite& s, const IVec3& c) { return s.coords < c; });
    if (it != sites_.end() && it->coords == coords) return it->index;
    return -1;
}

int LatticeDomain::neighbor_count(std::int32_t i) const {
    int n = 0;
    for (auto v : neighbors_[i])
        if (v >= 0) ++n;
    return n;
}

} // namespace dmap
