#include "exchange/gridmath.hpp"

#include <cmath>

namespace exchange {

namespace {

// Iterates lines along `axis`: calls fn(base, stride, npts) for every 1-D line
// of the lattice.
template <typename F>
void for_each_line(const ConfigGrid& grid, int axis, F&& fn) {
    const int D = grid.dims();
    const int n = grid.axis(axis).points;
    std::int64_t stride = 1;
    for (int a = D - 1; a > axis; --a) stride *= grid.axis(a).points;
    const std::int64_t nlines = grid.size() / n;

    // Split each flat "line id" into (outer, inner) parts around the axis.
    std::int64_t inner = stride;
    parallel_for(0, nlines, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t line = lo; line < hi; ++line) {
            const std::int64_t outer = line / inner;
            const std::int64_t rem = line % inner;
            const std::int64_t base = outer * (inner * n) + rem;
            fn(base, stride, n);
        }
    });
}

}  // namespace

template <typename T>
void fd_derivative(const ConfigGrid& grid, std::span<const T> in, int axis, int order,
                   std::span<T> out) {
    if (in.size() != static_cast<std::size_t>(grid.size()) || out.size() != in.size())
        throw ConfigError("fd_derivative: field size mismatch");
    if (order != 4 && order != 6) throw ConfigError("fd_derivative: order must be 4 or 6");
    const double h = grid.spacing(axis);
    for_each_line(grid, axis, [&](std::int64_t base, std::int64_t stride, int n) {
        auto at = [&](int i) -> const T& {
            int j = i % n;
            if (j < 0) j += n;
            return in[static_cast<std::size_t>(base + j * stride)];
        };
        for (int i = 0; i < n; ++i) {
            T v;
            if (order == 4) {
                v = (8.0 * (at(i + 1) - at(i - 1)) - (at(i + 2) - at(i - 2))) / (12.0 * h);
            } else {
                v = (45.0 * (at(i + 1) - at(i - 1)) - 9.0 * (at(i + 2) - at(i - 2)) +
                     (at(i + 3) - at(i - 3))) /
                    (60.0 * h);
            }
            out[static_cast<std::size_t>(base + i * stride)] = v;
        }
    });
}

template <typename T>
void fd_second_derivative(const ConfigGrid& grid, std::span<const T> in, int axis, int order,
                          std::span<T> out) {
    if (in.size() != static_cast<std::size_t>(grid.size()) || out.size() != in.size())
        throw ConfigError("fd_second_derivative: field size mismatch");
    if (order != 4 && order != 6) throw ConfigError("fd_second_derivative: order must be 4 or 6");
    const double h2 = grid.spacing(axis) * grid.spacing(axis);
    for_each_line(grid, axis, [&](std::int64_t base, std::int64_t stride, int n) {
        auto at = [&](int i) -> const T& {
            int j = i % n;
            if (j < 0) j += n;
            return in[static_cast<std::size_t>(base + j * stride)];
        };
        for (int i = 0; i < n; ++i) {
            T v;
            if (order == 4) {
                v = (-30.0 * at(i) + 16.0 * (at(i + 1) + at(i - 1)) - (at(i + 2) + at(i - 2))) /
                    (12.0 * h2);
            } else {
                v = (-490.0 * at(i) + 270.0 * (at(i + 1) + at(i - 1)) -
                     27.0 * (at(i + 2) + at(i - 2)) + 2.0 * (at(i + 3) + at(i - 3))) /
                    (180.0 * h2);
            }
            out[static_cast<std::size_t>(base + i * stride)] = v;
        }
    });
}

template void fd_derivative<double>(const ConfigGrid&, std::span<const double>, int, int,
                                    std::span<double>);
template void fd_derivative<cplx>(const ConfigGrid&, std::span<const cplx>, int, int,
                                  std::span<cplx>);
template void fd_second_derivative<double>(const ConfigGrid&, std::span<const double>, int, int,
                                           std::span<double>);
template void fd_second_derivative<cplx>(const ConfigGrid&, std::span<const cplx>, int, int,
                                         std::span<cplx>);

void lagrange_weights(double t, int taps, double* w) {
    const int lo = taps == 4 ? -1 : -2;
    for (int i = 0; i < taps; ++i) {
        const double ni = lo + i;
        double acc = 1.0;
        for (int j = 0; j < taps; ++j) {
            if (j == i) continue;
            const double nj = lo + j;
            acc *= (t - nj) / (ni - nj);
        }
        w[i] = acc;
    }
}

Interpolator::Interpolator(const ConfigGrid& grid, int order) : grid_(&grid), order_(order) {
    if (order != 3 && order != 5) throw ConfigError("interpolator order must be 3 or 5");
    taps_ = order + 1;
}

template <typename T>
T Interpolator::interp(std::span<const T> field, const double* pt) const {
    const int D = grid_->dims();
    const int lo_off = taps_ == 4 ? -1 : -2;
    int idx[kMaxDims][6];
    double wts[kMaxDims][6];
    for (int a = 0; a < D; ++a) {
        const auto& ax = grid_->axis(a);
        const double u = (grid_->wrap(a, pt[a]) - ax.lo) / ax.spacing();
        const int i0 = static_cast<int>(std::floor(u));
        lagrange_weights(u - i0, taps_, wts[a]);
        for (int k = 0; k < taps_; ++k) idx[a][k] = grid_->wrap_index(a, i0 + lo_off + k);
    }
    // Tensor-product accumulation over the D-dimensional stencil.
    T total{};
    Index cursor{};
    const std::int64_t npts = [&] {
        std::int64_t m = 1;
        for (int a = 0; a < D; ++a) m *= taps_;
        return m;
    }();
    for (std::int64_t s = 0; s < npts; ++s) {
        std::int64_t rem = s;
        double w = 1.0;
        Index gi{};
        for (int a = D - 1; a >= 0; --a) {
            const int k = static_cast<int>(rem % taps_);
            rem /= taps_;
            w *= wts[a][k];
            gi[static_cast<std::size_t>(a)] = idx[a][k];
        }
        total += w * field[static_cast<std::size_t>(grid_->flatten(gi))];
        (void)cursor;
    }
    return total;
}

double Interpolator::operator()(std::span<const double> field, const double* pt) const {
    return interp(field, pt);
}

cplx Interpolator::operator()(std::span<const cplx> field, const double* pt) const {
    return interp(field, pt);
}

bool Interpolator::stencil_masked(std::span<const std::uint8_t> mask, const double* pt) const {
    const int D = grid_->dims();
    const int lo_off = taps_ == 4 ? -1 : -2;
    int idx[kMaxDims][6];
    for (int a = 0; a < D; ++a) {
        const auto& ax = grid_->axis(a);
        const double u = (grid_->wrap(a, pt[a]) - ax.lo) / ax.spacing();
        const int i0 = static_cast<int>(std::floor(u));
        for (int k = 0; k < taps_; ++k) idx[a][k] = grid_->wrap_index(a, i0 + lo_off + k);
    }
    std::int64_t npts = 1;
    for (int a = 0; a < D; ++a) npts *= taps_;
    for (std::int64_t s = 0; s < npts; ++s) {
        std::int64_t rem = s;
        Index gi{};
        for (int a = D - 1; a >= 0; --a) {
            gi[static_cast<std::size_t>(a)] = idx[a][static_cast<int>(rem % taps_)];
            rem /= taps_;
        }
        if (mask[static_cast<std::size_t>(grid_->flatten(gi))]) return true;
    }
    return false;
}

double Interpolator::along_axis(std::span<const double> field, std::int64_t base_flat, int axis,
                                double frac) const {
    double w[6];
    lagrange_weights(frac, taps_, w);
    const int lo_off = taps_ == 4 ? -1 : -2;
    const int n = grid_->axis(axis).points;
    std::int64_t stride = 1;
    for (int a = grid_->dims() - 1; a > axis; --a) stride *= grid_->axis(a).points;
    const Index idx = grid_->unflatten(base_flat);
    const int i0 = idx[static_cast<std::size_t>(axis)];
    const std::int64_t line_base = base_flat - static_cast<std::int64_t>(i0) * stride;
    double total = 0.0;
    for (int k = 0; k < taps_; ++k) {
        int j = (i0 + lo_off + k) % n;
        if (j < 0) j += n;
        total += w[k] * field[static_cast<std::size_t>(line_base + j * stride)];
    }
    return total;
}

}  // namespace exchange
