#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <vector>

namespace lveds {

// Sorted, duplicate-free set of vertex indices. All algorithm outputs use
// this representation so results are deterministic and diffable.
class VertexSet {
  public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> xs) : v_(xs) { normalize(); }
    explicit VertexSet(std::vector<int> xs) : v_(std::move(xs)) { normalize(); }

    // Caller guarantees xs is already sorted and duplicate-free.
    static VertexSet from_sorted(std::vector<int> xs) {
        VertexSet s;
        assert(std::is_sorted(xs.begin(), xs.end()));
        assert(std::adjacent_find(xs.begin(), xs.end()) == xs.end());
        s.v_ = std::move(xs);
        return s;
    }

    bool contains(int x) const {
        return std::binary_search(v_.begin(), v_.end(), x);
    }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    int operator[](std::size_t i) const { return v_[i]; }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<int>& values() const { return v_; }

    void insert(int x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it == v_.end() || *it != x) v_.insert(it, x);
    }
    void erase(int x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it != v_.end() && *it == x) v_.erase(it);
    }

    VertexSet unite(const VertexSet& o) const {
        std::vector<int> out;
        out.reserve(v_.size() + o.v_.size());
        std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }
    VertexSet minus(const VertexSet& o) const {
        std::vector<int> out;
        std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }
    VertexSet intersect(const VertexSet& o) const {
        std::vector<int> out;
        std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }
    bool is_subset_of(const VertexSet& o) const {
        return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
    }
    bool intersects(const VertexSet& o) const {
        auto a = v_.begin();
        auto b = o.v_.begin();
        while (a != v_.end() && b != o.v_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    bool operator==(const VertexSet& o) const = default;

  private:
    void normalize() {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }

    std::vector<int> v_;
};

}  // namespace lveds
