#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "core/constants.hpp"

namespace dmap {

/// Integer 3-vector in units of a0/4 (quarter of the conventional lattice constant).
struct IVec3 {
    int x = 0, y = 0, z = 0;

    int& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    int operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend IVec3 operator+(IVec3 a, IVec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend IVec3 operator-(IVec3 a, IVec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend IVec3 operator-(IVec3 a) { return {-a.x, -a.y, -a.z}; }
    friend bool operator==(IVec3 a, IVec3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
    friend bool operator!=(IVec3 a, IVec3 b) { return !(a == b); }
    /// Lexicographic order; used for deterministic site ordering.
    friend bool operator<(IVec3 a, IVec3 b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }

    long long norm2() const {
        return static_cast<long long>(x) * x + static_cast<long long>(y) * y +
               static_cast<long long>(z) * z;
    }
    Eigen::Vector3d cast_double() const { return {double(x), double(y), double(z)}; }
    std::string str() const {
        return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
    }
};

struct IVec3Hash {
    size_t operator()(const IVec3& v) const {
        // FNV-1a over the three ints
        size_t h = 1469598103934665603ull;
        auto mix = [&h](int c) {
            for (int i = 0; i < 4; ++i) {
                h ^= static_cast<size_t>((c >> (8 * i)) & 0xff);
                h *= 1099511628211ull;
            }
        };
        mix(v.x);
        mix(v.y);
        mix(v.z);
        return h;
    }
};

enum class Sublattice : std::uint8_t { A, B };

/// One substitutional site of the diamond lattice.
struct LatticeSite {
    IVec3 coords;          ///< in units of a0/4
    Sublattice sublattice; ///< A: FCC points, B: FCC + (1,1,1)
    std::int32_t index;    ///< dense id within the domain
};

/// True if c is on the diamond lattice with basis {(0,0,0), (1,1,1)} * a0/4.
bool is_lattice_site(IVec3 c);
Sublattice sublattice_of(IVec3 c);

/// The four A->B nearest-neighbor bond offsets, in a0/4 units.
const std::array<IVec3, 4>& bond_offsets();

/// Box construction mode. `Cells` fills whole conventional cells centered on
/// the donor (half-open box, exactly 8 sites per cell); `Centered` keeps every
/// site with |c - donor| <= 2*extent per axis, which is exactly invariant
/// under the donor-site Td group.
enum class BoxMode { Cells, Centered };

/// Optional hard-wall interface: sites with (coords - donor)[axis] * a0/4 < -depth_nm
/// are removed from the domain. The wall sits on the side the electron is
/// pushed toward under a positive field along `axis` (potential +e E.r).
struct InterfaceSpec {
    int axis = 1; ///< 0=x, 1=y, 2=z
    double depth_nm = 0.0;
};

/// Finite diamond-lattice crystal around a donor site.
class LatticeDomain {
  public:
    static LatticeDomain build(IVec3 extent_cells, IVec3 donor_coords,
                               BoxMode mode = BoxMode::Centered,
                               std::optional<InterfaceSpec> interface = std::nullopt,
                               double a0_nm = kSiLatticeConstantNm);

    const std::vector<LatticeSite>& sites() const { return sites_; }
    std::int32_t site_count() const { return static_cast<std::int32_t>(sites_.size()); }
    std::int32_t donor_index() const { return donor_index_; }
    const LatticeSite& site(std::int32_t i) const { return sites_[i]; }
    IVec3 donor_coords() const { return sites_[donor_index_].coords; }

    /// Index of the site at coords, or -1.
    std::int32_t find(IVec3 coords) const;

    /// Neighbor ids in bond-slot order (slot k of an A site is coords+offset[k],
    /// of a B site coords-offset[k]); -1 where the neighbor is outside the box.
    const std::array<std::int32_t, 4>& neighbors(std::int32_t i) const { return neighbors_[i]; }
    int neighbor_count(std::int32_t i) const;

    double a0_nm() const { return a0_nm_; }
    double quarter_nm() const { return a0_nm_ / 4.0; }

    /// Position relative to the donor, nm.
    Eigen::Vector3d position_nm(std::int32_t i) const {
        return (sites_[i].coords - donor_coords_).cast_double() * quarter_nm();
    }
    double distance_nm(std::int32_t i) const { return position_nm(i).norm(); }

    const std::optional<InterfaceSpec>& interface() const { return interface_; }
    IVec3 extent_cells() const { return extent_cells_; }
    BoxMode box_mode() const { return box_mode_; }

  private:
    std::vector<LatticeSite> sites_; // sorted lexicographically by coords
    std::vector<std::array<std::int32_t, 4>> neighbors_;
    std::int32_t donor_index_ = -1;
    IVec3 donor_coords_;
    IVec3 extent_cells_;
    BoxMode box_mode_ = BoxMode::Centered;
    std::optional<InterfaceSpec> interface_;
    double a0_nm_ = kSiLatticeConstantNm;
};

/// Error type for invalid domain or configuration input.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dmap
