#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sx/error.hpp"

namespace sx {

using VertexId = std::uint32_t;

/// A nonempty set of vertices, stored strictly increasing.
///
/// Ordering is lexicographic on the vertex list, which is the per-level
/// index order used everywhere in the library.
class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
        std::sort(vertices_.begin(), vertices_.end());
        if (vertices_.empty())
            throw InputError("simplex must have at least one vertex");
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw InputError("simplex has repeated vertices");
    }

    Simplex(std::initializer_list<VertexId> vertices)
        : Simplex(std::vector<VertexId>(vertices)) {}

    /// Skips validation; caller guarantees a strictly increasing nonempty list.
    static Simplex from_sorted(std::vector<VertexId> vertices) {
        Simplex s;
        s.vertices_ = std::move(vertices);
        return s;
    }

    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(VertexId v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    bool is_face_of(const Simplex& other) const {
        return std::includes(other.vertices_.begin(), other.vertices_.end(),
                             vertices_.begin(), vertices_.end());
    }

    /// The simplex with the vertex at position `pos` removed.
    Simplex without_position(std::size_t pos) const {
        std::vector<VertexId> out;
        out.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (i != pos) out.push_back(vertices_[i]);
        return from_sorted(std::move(out));
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) {
        return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                      b.vertices_.begin(), b.vertices_.end());
    }

private:
    std::vector<VertexId> vertices_;
};

/// Number of shared vertices of two simplices.
inline std::size_t intersection_size(const Simplex& a, const Simplex& b) {
    std::size_t count = 0;
    auto ia = a.vertices().begin(), ib = b.vertices().begin();
    while (ia != a.vertices().end() && ib != b.vertices().end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

inline Simplex intersection(const Simplex& a, const Simplex& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.vertices().begin(), a.vertices().end(),
                          b.vertices().begin(), b.vertices().end(), std::back_inserter(out));
    return Simplex(std::move(out));
}

inline Simplex set_union(const Simplex& a, const Simplex& b) {
    std::vector<VertexId> out;
    std::set_union(a.vertices().begin(), a.vertices().end(),
                   b.vertices().begin(), b.vertices().end(), std::back_inserter(out));
    return Simplex::from_sorted(std::move(out));
}

/// All nonempty proper subsets of `s`, ordered by dimension then lexicographically.
/// A k-simplex has 2^(k+1) - 2 of them.
inline std::vector<Simplex> faces(const Simplex& s) {
    const std::size_t n = s.size();
    if (n > 31) throw InputError("simplex too large for face enumeration");
    std::vector<Simplex> out;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<VertexId> v;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint32_t{1} << i)) v.push_back(s[i]);
        out.push_back(Simplex::from_sorted(std::move(v)));
    }
    std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

/// The codimension-one faces of `s`, lexicographically ordered. Empty for a vertex.
inline std::vector<Simplex> facets(const Simplex& s) {
    std::vector<Simplex> out;
    if (s.size() < 2) return out;
    for (std::size_t i = s.size(); i-- > 0;)
        out.push_back(s.without_position(i));
    return out;
}

/// "{v1,v2,...}" using the supplied names, or numeric ids when `names` is empty.
inline std::string format_simplex(const Simplex& s, std::span<const std::string> names = {}) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += names.empty() ? std::to_string(s[i]) : names[s[i]];
    }
    out += '}';
    return out;
}

} // namespace sx
