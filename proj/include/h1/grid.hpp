#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "h1/errors.hpp"

namespace h1 {

/// Sign selector for the ±k (or ±p) families.
enum class Branch { plus, minus };

/// Symmetry label of a sampled state.
enum class Parity { even, odd, half_line };

enum class CoordinateLabel { tau, alpha, x };

inline constexpr double sign_of(Branch b) noexcept { return b == Branch::plus ? 1.0 : -1.0; }

inline constexpr std::string_view to_string(Branch b) noexcept {
    return b == Branch::plus ? "plus" : "minus";
}

inline constexpr std::string_view to_string(Parity p) noexcept {
    switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::half_line: return "half-line";
    }
    return "half-line";
}

inline constexpr std::string_view to_string(CoordinateLabel c) noexcept {
    switch (c) {
    case CoordinateLabel::tau: return "tau";
    case CoordinateLabel::alpha: return "alpha";
    case CoordinateLabel::x: return "x";
    }
    return "tau";
}

/// Uniformly spaced sample locations `start + i*step`, `i < count`.
struct UniformGrid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 0;
    CoordinateLabel label = CoordinateLabel::tau;

    UniformGrid() = default;
    UniformGrid(double start_, double step_, std::size_t count_,
                CoordinateLabel label_ = CoordinateLabel::tau)
        : start(start_), step(step_), count(count_), label(label_) {
        if (!(step > 0.0))
            throw DomainError("UniformGrid: step must be positive");
        if (count == 0)
            throw DomainError("UniformGrid: empty grid");
    }

    /// Grid with `points` samples spanning [lo, hi] inclusive.
    static UniformGrid spanning(double lo, double hi, std::size_t points,
                                CoordinateLabel label = CoordinateLabel::tau) {
        if (points < 2 || !(hi > lo))
            throw DomainError("UniformGrid::spanning: need points >= 2 and hi > lo");
        return UniformGrid(lo, (hi - lo) / static_cast<double>(points - 1), points, label);
    }

    double operator[](std::size_t i) const noexcept {
        return start + static_cast<double>(i) * step;
    }
    double back() const noexcept { return (*this)[count - 1]; }
};

/// Real function sampled on a uniform grid.
struct GridFunction {
    double coordinate_start = 0.0;
    double coordinate_step = 1.0;
    std::vector<double> values;
    CoordinateLabel coordinate_label = CoordinateLabel::tau;

    GridFunction() = default;
    GridFunction(const UniformGrid& grid, std::vector<double> vals)
        : coordinate_start(grid.start), coordinate_step(grid.step), values(std::move(vals)),
          coordinate_label(grid.label) {
        if (values.empty())
            throw DomainError("GridFunction: no samples");
    }

    std::size_t size() const noexcept { return values.size(); }
    double coordinate(std::size_t i) const noexcept {
        return coordinate_start + static_cast<double>(i) * coordinate_step;
    }
};

/// Samples `f` at every grid point.
template <class F>
GridFunction sample(const UniformGrid& grid, F&& f) {
    std::vector<double> v;
    v.reserve(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i)
        v.push_back(f(grid[i]));
    return GridFunction(grid, std::move(v));
}

} // namespace h1
