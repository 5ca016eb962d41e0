// lattice.hpp: integer lattice sites, finite volumes, graph distances.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmslat {

// A site of Z^d. For chains (d = 1) use Site(x).
struct Site {
    std::vector<int> coords;

    Site() = default;
    explicit Site(int x) : coords{x} {}
    Site(std::initializer_list<int> c) : coords(c) {}
    explicit Site(std::vector<int> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const Site& a, const Site& b) { return a.coords == b.coords; }
    friend auto operator<=>(const Site& a, const Site& b) {
        return a.coords <=> b.coords;  // lexicographic total order
    }
};

inline std::string to_string(const Site& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.coords[i]);
    }
    return out + ")";
}

// Graph distance on the nearest-neighbor lattice = L1 distance.
inline int site_distance(const Site& a, const Site& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("site_distance: mixed lattice dimensions");
    int d = 0;
    for (int i = 0; i < a.dim(); ++i) d += std::abs(a.coords[i] - b.coords[i]);
    return d;
}

inline bool adjacent(const Site& a, const Site& b) { return site_distance(a, b) == 1; }

// A finite subset of the lattice, kept sorted in the global (lexicographic) order.
// Tensor factors of operators on a volume follow this order.
class Volume {
  public:
    Volume() = default;
    explicit Volume(std::vector<Site> sites) : sites_(std::move(sites)) {
        std::sort(sites_.begin(), sites_.end());
        sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
        for (size_t i = 1; i < sites_.size(); ++i)
            if (sites_[i].dim() != sites_[0].dim())
                throw std::invalid_argument("Volume: mixed lattice dimensions");
    }
    Volume(std::initializer_list<Site> sites) : Volume(std::vector<Site>(sites)) {}

    // Contiguous 1d chain {from, ..., to}.
    static Volume chain(int from, int to) {
        if (to < from) throw std::invalid_argument("Volume::chain: to < from");
        std::vector<Site> s;
        for (int x = from; x <= to; ++x) s.emplace_back(x);
        return Volume(std::move(s));
    }

    const std::vector<Site>& sites() const { return sites_; }
    int size() const { return static_cast<int>(sites_.size()); }
    bool empty() const { return sites_.empty(); }

    bool contains(const Site& s) const {
        return std::binary_search(sites_.begin(), sites_.end(), s);
    }
    bool contains(const Volume& other) const {
        return std::includes(sites_.begin(), sites_.end(), other.sites_.begin(), other.sites_.end());
    }
    // Position of s in the sorted site list; throws if absent.
    int index_of(const Site& s) const {
        auto it = std::lower_bound(sites_.begin(), sites_.end(), s);
        if (it == sites_.end() || !(*it == s)) throw std::invalid_argument("Volume::index_of: site not in volume");
        return static_cast<int>(it - sites_.begin());
    }

    friend Volume operator|(const Volume& a, const Volume& b) {
        std::vector<Site> s;
        std::set_union(a.sites_.begin(), a.sites_.end(), b.sites_.begin(), b.sites_.end(), std::back_inserter(s));
        return Volume(std::move(s));
    }
    friend Volume operator&(const Volume& a, const Volume& b) {
        std::vector<Site> s;
        std::set_intersection(a.sites_.begin(), a.sites_.end(), b.sites_.begin(), b.sites_.end(), std::back_inserter(s));
        return Volume(std::move(s));
    }
    // Set difference a \ b.
    friend Volume operator-(const Volume& a, const Volume& b) {
        std::vector<Site> s;
        std::set_difference(a.sites_.begin(), a.sites_.end(), b.sites_.begin(), b.sites_.end(), std::back_inserter(s));
        return Volume(std::move(s));
    }
    friend bool operator==(const Volume& a, const Volume& b) { return a.sites_ == b.sites_; }
    friend bool operator<(const Volume& a, const Volume& b) { return a.sites_ < b.sites_; }

  private:
    std::vector<Site> sites_;
};

inline std::string to_string(const Volume& v) {
    std::string out = "{";
    for (int i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v.sites()[i]);
    }
    return out + "}";
}

// Minimal pairwise L1 distance between two nonempty volumes.
inline int distance(const Volume& a, const Volume& b) {
    if (a.empty() || b.empty()) return std::numeric_limits<int>::max();
    int best = std::numeric_limits<int>::max();
    for (const auto& s : a.sites())
        for (const auto& t : b.sites()) best = std::min(best, site_distance(s, t));
    return best;
}

// Distance from a volume to the complement of an enclosing volume (the nearest
// lattice site outside `enclosing`). Both arguments nonempty, a inside enclosing.
inline int distance_to_complement(const Volume& a, const Volume& enclosing) {
    if (a.empty() || enclosing.empty()) throw std::invalid_argument("distance_to_complement: empty volume");
    int best = std::numeric_limits<int>::max();
    const int d = enclosing.sites()[0].dim();
    for (const auto& b : enclosing.sites()) {
        for (int axis = 0; axis < d; ++axis) {
            for (int step : {-1, +1}) {
                Site nb = b;
                nb.coords[axis] += step;
                if (enclosing.contains(nb)) continue;
                for (const auto& s : a.sites()) best = std::min(best, site_distance(s, nb));
            }
        }
    }
    return best;
}

// Connectivity in the nearest-neighbor graph. Empty and singleton volumes count
// as connected.
inline bool connected(const Volume& v) {
    if (v.size() <= 1) return true;
    std::vector<char> seen(v.size(), 0);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!todo.empty()) {
        int i = todo.front();
        todo.pop();
        for (int j = 0; j < v.size(); ++j) {
            if (!seen[j] && adjacent(v.sites()[i], v.sites()[j])) {
                seen[j] = 1;
                ++reached;
                todo.push(j);
            }
        }
    }
    return reached == v.size();
}

inline Volume translate(const Volume& v, const Site& shift) {
    std::vector<Site> out;
    out.reserve(v.size());
    for (auto s : v.sites()) {
        if (s.dim() != shift.dim()) throw std::invalid_argument("translate: dimension mismatch");
        for (int i = 0; i < s.dim(); ++i) s.coords[i] += shift.coords[i];
        out.push_back(std::move(s));
    }
    return Volume(std::move(out));
}

}  // namespace qmslat
