#include "core/symmetry.hpp"

#include <algorithm>

namespace dmap {

namespace {

std::vector<SymOp> all_signed_permutations() {
    std::vector<SymOp> out;
    int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perm)
        for (int sx = -1; sx <= 1; sx += 2)
            for (int sy = -1; sy <= 1; sy += 2)
                for (int sz = -1; sz <= 1; sz += 2) {
                    SymOp op{};
                    int sign[3] = {sx, sy, sz};
                    for (int i = 0; i < 3; ++i) op.m[i][p[i]] = sign[i];
                    out.push_back(op);
                }
    return out;
}

bool preserves_bond_tetrahedron(const SymOp& op) {
    const auto& offs = bond_offsets();
    for (const auto& d : offs) {
        const IVec3 img = op.apply(d);
        if (std::none_of(offs.begin(), offs.end(), [&](IVec3 o) { return o == img; }))
            return false;
    }
    return true;
}

} // namespace

SymmetryGroup SymmetryGroup::tetrahedral() {
    std::vector<SymOp> ops;
    for (const auto& op : all_signed_permutations())
        if (preserves_bond_tetrahedron(op)) ops.push_back(op);
    return SymmetryGroup(std::move(ops));
}

SymmetryGroup SymmetryGroup::residual(const Eigen::Vector3d& direction) const {
    if (direction.norm() == 0.0) return *this;
    std::vector<SymOp> kept;
    for (const auto& op : ops_) {
        // Signed permutations only permute/flip components, so the comparison
        // is exact in floating point.
        const Eigen::Vector3d img = op.apply(direction);
        if (img[0] == direction[0] && img[1] == direction[1] && img[2] == direction[2])
            kept.push_back(op);
    }
    return SymmetryGroup(std::move(kept));
}

bool SymmetryGroup::contains_identity() const {
    return std::any_of(ops_.begin(), ops_.end(), [](const SymOp& o) { return o.is_identity(); });
}

bool SymmetryGroup::is_closed() const {
    for (const auto& a : ops_)
        for (const auto& b : ops_) {
            const SymOp c = a.compose(b);
            if (std::none_of(ops_.begin(), ops_.end(), [&](const SymOp& o) { return o == c; }))
                return false;
        }
    return true;
}

std::vector<IVec3> SymmetryGroup::orbit(IVec3 v) const {
    std::vector<IVec3> out;
    out.reserve(ops_.size());
    for (const auto& op : ops_) out.push_back(op.apply(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IVec3 SymmetryGroup::canonical_representative(IVec3 v) const {
    IVec3 best = v;
    for (const auto& op : ops_) {
        const IVec3 img = op.apply(v);
        if (best < img) best = img;
    }
    return best;
}

} // namespace dmap
