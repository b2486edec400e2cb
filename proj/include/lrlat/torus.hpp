#ifndef LRLAT_TORUS_HPP
#define LRLAT_TORUS_HPP

#include <cstddef>
#include <vector>

namespace lrlat {

using Site = std::vector<int>;        // per-axis coordinates in {-L/2+1, ..., L/2}
using Momentum = std::vector<double>; // per-axis components 2*pi*n/L

// Finite periodic torus Lambda subset Z^nu with even side length L.
// Sites are addressed either by coordinates or by a flat index; the flat
// index runs row-major over the wrapped per-axis index m = c mod L in
// {0,...,L-1}, axis 0 slowest (matches the FFT layout).
class Torus {
public:
    Torus(int nu, int side);

    int nu() const { return nu_; }
    int side() const { return side_; }
    std::size_t size() const { return size_; }

    bool operator==(const Torus& other) const {
        return nu_ == other.nu_ && side_ == other.side_;
    }

    // Coordinate validity: every component in {-L/2+1, ..., L/2}.
    bool valid(const Site& x) const;

    std::size_t index_of(const Site& x) const; // throws NumericError if invalid
    Site site_of(std::size_t index) const;

    // Flat index of x shifted by delta (wraps; delta unrestricted).
    std::size_t wrapped_index(const Site& x, const Site& delta) const;

    // Periodic l1 (graph) distance.
    int distance(const Site& x, const Site& y) const;
    int distance(std::size_t i, std::size_t j) const;

    // Dual momentum grid {2*pi*n/L : n in {-L/2+1,...,L/2}}^nu in flat order.
    std::vector<Momentum> dual_grid() const;

    // Momentum for a single flat dual index (same layout as sites).
    Momentum momentum_of(std::size_t index) const;

private:
    int nu_;
    int side_;
    std::size_t size_;
};

int periodic_distance(const Site& x, const Site& y, const Torus& torus);

} // namespace lrlat

#endif
