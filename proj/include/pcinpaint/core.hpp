#ifndef PCINPAINT_CORE_HPP
#define PCINPAINT_CORE_HPP

#include <Eigen/Core>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include <pcinpaint/errors.hpp>

namespace pcinpaint {

using Vec3 = Eigen::Vector3d;

/// Point cloud with positions and optional per-point unit normals.
struct PointCloud {
    std::vector<Vec3> positions;
    std::vector<Vec3> normals; // empty, or one unit vector per position

    // Set when normal estimation hit a degenerate neighborhood and fell back
    // to (0,0,1).
    bool normal_warning = false;

    std::size_t size() const { return positions.size(); }
    bool empty() const { return positions.empty(); }
    bool has_normals() const { return !normals.empty(); }

    // Throws ArgumentError on a violated invariant.
    void validate() const {
        if (!normals.empty()) {
            if (normals.size() != positions.size())
                throw ArgumentError("normal count does not match position count");
            for (const Vec3& n : normals) {
                if (std::abs(n.norm() - 1.0) > 1e-6)
                    throw ArgumentError("normals must have unit length");
            }
        }
    }
};

struct BoundingBox {
    Vec3 min = Vec3::Constant(std::numeric_limits<double>::max());
    Vec3 max = Vec3::Constant(std::numeric_limits<double>::lowest());

    void expand(const Vec3& p) {
        min = min.cwiseMin(p);
        max = max.cwiseMax(p);
    }

    Vec3 extent() const { return max - min; }

    bool contains(const Vec3& p) const {
        return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
    }

    static BoundingBox of(const std::vector<Vec3>& points) {
        if (points.empty())
            throw ArgumentError("bounding box of empty point set");
        BoundingBox box;
        for (const Vec3& p : points)
            box.expand(p);
        return box;
    }
};

/// Integer voxel cell index. Ordering is lexicographic, which keeps every
/// container iteration over cells deterministic.
struct CellIndex {
    int x = 0;
    int y = 0;
    int z = 0;

    auto operator<=>(const CellIndex&) const = default;

    int operator[](int dim) const { return dim == 0 ? x : dim == 1 ? y : z; }
    int& operator[](int dim) { return dim == 0 ? x : dim == 1 ? y : z; }

    Vec3 center() const { return {x + 0.5, y + 0.5, z + 0.5}; }
};

inline CellIndex cell_of(const Vec3& p) {
    return {static_cast<int>(std::floor(p.x())),
            static_cast<int>(std::floor(p.y())),
            static_cast<int>(std::floor(p.z()))};
}

} // namespace pcinpaint

#endif // PCINPAINT_CORE_HPP
