#pragma once

#include <vector>

#include <Eigen/Dense>

#include "core/lattice.hpp"

namespace dmap {

/// A signed permutation acting on lattice coordinates (exact integer arithmetic).
struct SymOp {
    // m[row][col]; entries in {-1,0,1}, one nonzero per row/column.
    std::array<std::array<int, 3>, 3> m;

    IVec3 apply(IVec3 v) const {
        IVec3 r;
        for (int i = 0; i < 3; ++i)
            r[i] = m[i][0] * v.x + m[i][1] * v.y + m[i][2] * v.z;
        return r;
    }
    Eigen::Vector3d apply(const Eigen::Vector3d& v) const {
        Eigen::Vector3d r;
        for (int i = 0; i < 3; ++i)
            r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
        return r;
    }
    SymOp compose(const SymOp& other) const { // this * other
        SymOp r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int s = 0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * other.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    int det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
    Eigen::Matrix3d matrix() const {
        Eigen::Matrix3d r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = m[i][j];
        return r;
    }
    bool is_identity() const {
        return m[0][0] == 1 && m[1][1] == 1 && m[2][2] == 1 && m[0][1] == 0 && m[0][2] == 0 &&
               m[1][0] == 0 && m[1][2] == 0 && m[2][0] == 0 && m[2][1] == 0;
    }
    friend bool operator==(const SymOp& a, const SymOp& b) { return a.m == b.m; }
};

/// Point group about the donor site, stored as explicit signed permutations.
class SymmetryGroup {
  public:
    SymmetryGroup() = default;
    explicit SymmetryGroup(std::vector<SymOp> ops) : ops_(std::move(ops)) {}

    /// The 24-element Td group of the diamond lattice about an atom site:
    /// the signed permutations that map the nearest-neighbor tetrahedron to itself.
    static SymmetryGroup tetrahedral();

    /// Subgroup whose elements fix `direction` exactly. A zero vector
    /// requests the full group.
    SymmetryGroup residual(const Eigen::Vector3d& direction) const;

    const std::vector<SymOp>& ops() const { return ops_; }
    size_t order() const { return ops_.size(); }
    bool contains_identity() const;
    bool is_closed() const;

    /// Orbit of `v` (coords relative to the group center), sorted, unique.
    std::vector<IVec3> orbit(IVec3 v) const;
    /// Lexicographically greatest element of the orbit; exact shell/orbit key.
    IVec3 canonical_representative(IVec3 v) const;

  private:
    std::vector<SymOp> ops_;
};

} // namespace dmap
