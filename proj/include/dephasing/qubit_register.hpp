// qubit_register.hpp — Register geometry and difference vectors

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dephasing/errors.hpp"

namespace dephasing {

// Difference vector d = i - j between two computational-basis states.
// Entries are restricted to {-1, 0, +1}.
class DifferenceVector {
public:
    explicit DifferenceVector(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw std::invalid_argument("DifferenceVector: needs at least one entry");
        }
        for (int e : entries_) {
            if (e < -1 || e > 1) {
                throw std::invalid_argument("DifferenceVector: entries must be in {-1, 0, +1}");
            }
        }
    }

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const noexcept { return entries_[i]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    int norm_squared() const noexcept {
        int s = 0;
        for (int e : entries_) s += e * e;
        return s;
    }

    int sum() const noexcept {
        int s = 0;
        for (int e : entries_) s += e;
        return s;
    }

private:
    std::vector<int> entries_;
};

// Real-space qubit positions. For the linear-array constructor the layout
// carries the spacing a; arbitrary layouts have no lattice structure.
class QubitLayout {
public:
    static QubitLayout linear_array(std::size_t L, double a) {
        if (L == 0) throw std::invalid_argument("linear_array: L must be >= 1");
        if (!(a > 0.0)) throw std::invalid_argument("linear_array: spacing a must be > 0");
        QubitLayout layout;
        layout.dim_ = 1;
        layout.spacing_ = a;
        layout.unit_cell_volume_ = a;
        layout.is_lattice_ = true;
        layout.positions_.reserve(L);
        for (std::size_t l = 0; l < L; ++l) {
            layout.positions_.push_back({a * static_cast<double>(l)});
        }
        return layout;
    }

    static QubitLayout from_positions(std::vector<std::vector<double>> positions) {
        if (positions.empty()) {
            throw std::invalid_argument("from_positions: needs at least one position");
        }
        const std::size_t dim = positions.front().size();
        if (dim == 0) throw std::invalid_argument("from_positions: zero-dimensional positions");
        for (const auto& p : positions) {
            if (p.size() != dim) {
                throw dimension_mismatch("from_positions: inconsistent spatial dimensions");
            }
        }
        QubitLayout layout;
        layout.dim_ = dim;
        layout.positions_ = std::move(positions);
        layout.is_lattice_ = false;
        return layout;
    }

    std::size_t size() const noexcept { return positions_.size(); }
    std::size_t spatial_dim() const noexcept { return dim_; }
    bool is_lattice() const noexcept { return is_lattice_; }

    double spacing() const {
        if (!is_lattice_) throw unsupported_layout("spacing: layout is not a lattice");
        return spacing_;
    }

    double unit_cell_volume() const {
        if (!is_lattice_) throw unsupported_layout("unit_cell_volume: layout is not a lattice");
        return unit_cell_volume_;
    }

    const std::vector<double>& position(std::size_t l) const noexcept { return positions_[l]; }

private:
    QubitLayout() = default;

    std::vector<std::vector<double>> positions_;
    std::size_t dim_ = 0;
    double spacing_ = 0.0;
    double unit_cell_volume_ = 0.0;
    bool is_lattice_ = false;
};

// d = (1, 1, ..., 1), the off-diagonal element of the GHZ state.
inline DifferenceVector ghz_difference(std::size_t L) {
    if (L < 2 || L % 2 != 0) {
        throw std::invalid_argument("ghz_difference: L must be even and >= 2");
    }
    return DifferenceVector(std::vector<int>(L, 1));
}

// d = (1, -1, 1, -1, ...), the off-diagonal element of the staggered GHZ' state.
inline DifferenceVector ghz_prime_difference(std::size_t L) {
    if (L < 2 || L % 2 != 0) {
        throw std::invalid_argument("ghz_prime_difference: L must be even and >= 2");
    }
    std::vector<int> d(L);
    for (std::size_t l = 0; l < L; ++l) d[l] = (l % 2 == 0) ? 1 : -1;
    return DifferenceVector(std::move(d));
}

// Any-length variants used by figure presets that sweep over odd L as well.
inline DifferenceVector uniform_difference(std::size_t L) {
    if (L < 1) throw std::invalid_argument("uniform_difference: L must be >= 1");
    return DifferenceVector(std::vector<int>(L, 1));
}

inline DifferenceVector alternating_difference(std::size_t L) {
    if (L < 1) throw std::invalid_argument("alternating_difference: L must be >= 1");
    std::vector<int> d(L);
    for (std::size_t l = 0; l < L; ++l) d[l] = (l % 2 == 0) ? 1 : -1;
    return DifferenceVector(std::move(d));
}

// Autocorrelation f_r = (2 - delta_{0r}) sum_m d_m d_{m+r}. The susceptibility
// is its cosine transform: gamma(w) = sum_r f_r cos(a w r).
inline std::vector<double> autocorrelation(const DifferenceVector& d) {
    const std::size_t L = d.size();
    std::vector<double> f(L, 0.0);
    f[0] = static_cast<double>(d.norm_squared());
    for (std::size_t r = 1; r < L; ++r) {
        int s = 0;
        for (std::size_t m = 0; m + r < L; ++m) s += d[m] * d[m + r];
        f[r] = 2.0 * static_cast<double>(s);
    }
    return f;
}

}  // namespace dephasing
