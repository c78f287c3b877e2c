#ifndef PCINPAINT_KDTREE_HPP
#define PCINPAINT_KDTREE_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <pcinpaint/core.hpp>
#include <pcinpaint/errors.hpp>

namespace pcinpaint {

struct Neighbor {
    int index = -1;
    double distance = 0.0;
};

/// Exact k-NN / radius queries over an immutable point set. Results are
/// sorted by ascending distance with ties broken by ascending point index,
/// so every downstream graph built from them is deterministic.
class KdTree {
public:
    explicit KdTree(std::vector<Vec3> points) : points_(std::move(points)) {
        if (points_.empty())
            throw ArgumentError("cannot index an empty point set");
        order_.resize(points_.size());
        std::iota(order_.begin(), order_.end(), 0);
        nodes_.reserve(points_.size());
        root_ = build(0, static_cast<int>(points_.size()));
    }

    std::size_t size() const { return points_.size(); }
    const std::vector<Vec3>& points() const { return points_; }

    /// k nearest neighbors of an arbitrary query location. If the query
    /// coincides with an indexed point, that point (the lowest-index exact
    /// match) is excluded from its own neighbor list.
    std::vector<Neighbor> knn(const Vec3& query, int k) const {
        if (k <= 0)
            throw ArgumentError("k must be positive");
        if (static_cast<std::size_t>(k) > points_.size())
            throw ArgumentError("k exceeds the number of indexed points");

        // Search one extra so an exact self-match can be dropped.
        const bool extra = static_cast<std::size_t>(k) < points_.size();
        std::vector<Neighbor> found = search(query, extra ? k + 1 : k, -1);
        if (!found.empty() && found.front().distance == 0.0)
            found.erase(found.begin());
        if (found.size() > static_cast<std::size_t>(k))
            found.resize(k);
        if (found.size() < static_cast<std::size_t>(k))
            throw ArgumentError("k exceeds the number of indexed points");
        return found;
    }

    /// k nearest neighbors of the indexed point `self`, excluding itself.
    std::vector<Neighbor> knn_of_point(int self, int k) const {
        if (self < 0 || static_cast<std::size_t>(self) >= points_.size())
            throw ArgumentError("point index out of range");
        if (k <= 0 || static_cast<std::size_t>(k) >= points_.size())
            throw ArgumentError("k must be in [1, point count)");
        return search(points_[static_cast<std::size_t>(self)], k, self);
    }

    /// All points within `radius` of the query, sorted by (distance, index).
    std::vector<Neighbor> radius(const Vec3& query, double r) const {
        if (r < 0.0)
            throw ArgumentError("radius must be nonnegative");
        std::vector<Neighbor> found;
        const double r2 = r * r;
        radius_walk(root_, query, r2, found);
        std::sort(found.begin(), found.end(), [](const Neighbor& a, const Neighbor& b) {
            return a.distance != b.distance ? a.distance < b.distance : a.index < b.index;
        });
        return found;
    }

private:
    struct Node {
        int point = -1;
        int axis = 0;
        int left = -1;
        int right = -1;
    };

    // (squared distance, index) candidate kept in a bounded max-heap.
    struct Candidate {
        double d2;
        int index;
        bool operator<(const Candidate& other) const {
            return d2 != other.d2 ? d2 < other.d2 : index < other.index;
        }
    };

    int build(int begin, int end) {
        if (begin >= end)
            return -1;
        // Split on the widest axis of the current subset.
        Vec3 lo = points_[static_cast<std::size_t>(order_[begin])];
        Vec3 hi = lo;
        for (int i = begin + 1; i < end; ++i) {
            lo = lo.cwiseMin(points_[static_cast<std::size_t>(order_[i])]);
            hi = hi.cwiseMax(points_[static_cast<std::size_t>(order_[i])]);
        }
        int axis = 0;
        (hi - lo).maxCoeff(&axis);

        const int mid = begin + (end - begin) / 2;
        std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                         [&](int a, int b) {
                             const double ca = points_[static_cast<std::size_t>(a)][axis];
                             const double cb = points_[static_cast<std::size_t>(b)][axis];
                             return ca != cb ? ca < cb : a < b;
                         });

        Node node;
        node.point = order_[mid];
        node.axis = axis;
        const int self = static_cast<int>(nodes_.size());
        nodes_.push_back(node);
        nodes_[self].left = build(begin, mid);
        nodes_[self].right = build(mid + 1, end);
        return self;
    }

    std::vector<Neighbor> search(const Vec3& query, int k, int exclude) const {
        std::vector<Candidate> heap;
        heap.reserve(static_cast<std::size_t>(k));
        knn_walk(root_, query, k, exclude, heap);
        std::sort_heap(heap.begin(), heap.end());
        std::vector<Neighbor> result(heap.size());
        for (std::size_t i = 0; i < heap.size(); ++i)
            result[i] = {heap[i].index, std::sqrt(heap[i].d2)};
        return result;
    }

    void knn_walk(int node_id, const Vec3& query, int k, int exclude,
                  std::vector<Candidate>& heap) const {
        if (node_id < 0)
            return;
        const Node& node = nodes_[static_cast<std::size_t>(node_id)];
        const Vec3& p = points_[static_cast<std::size_t>(node.point)];

        if (node.point != exclude) {
            const Candidate cand{(p - query).squaredNorm(), node.point};
            if (heap.size() < static_cast<std::size_t>(k)) {
                heap.push_back(cand);
                std::push_heap(heap.begin(), heap.end());
            } else if (cand < heap.front()) {
                std::pop_heap(heap.begin(), heap.end());
                heap.back() = cand;
                std::push_heap(heap.begin(), heap.end());
            }
        }

        const double delta = query[node.axis] - p[node.axis];
        const int near = delta <= 0.0 ? node.left : node.right;
        const int far = delta <= 0.0 ? node.right : node.left;
        knn_walk(near, query, k, exclude, heap);
        // The far side may still hold an equal-distance, lower-index point,
        // so only prune when it is strictly farther than the current worst.
        if (heap.size() < static_cast<std::size_t>(k) || delta * delta <= heap.front().d2)
            knn_walk(far, query, k, exclude, heap);
    }

    void radius_walk(int node_id, const Vec3& query, double r2,
                     std::vector<Neighbor>& found) const {
        if (node_id < 0)
            return;
        const Node& node = nodes_[static_cast<std::size_t>(node_id)];
        const Vec3& p = points_[static_cast<std::size_t>(node.point)];
        const double d2 = (p - query).squaredNorm();
        if (d2 <= r2)
            found.push_back({node.point, std::sqrt(d2)});
        const double delta = query[node.axis] - p[node.axis];
        const int near = delta <= 0.0 ? node.left : node.right;
        const int far = delta <= 0.0 ? node.right : node.left;
        radius_walk(near, query, r2, found);
        if (delta * delta <= r2)
            radius_walk(far, query, r2, found);
    }

    std::vector<Vec3> points_;
    std::vector<int> order_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

/// Spec-level query entry point: exact k nearest neighbors of `query`,
/// self-excluded when the query is an indexed point.
inline std::vector<Neighbor> knn_query(const KdTree& index, const Vec3& query, int k) {
    return index.knn(query, k);
}

} // namespace pcinpaint

#endif // PCINPAINT_KDTREE_HPP
