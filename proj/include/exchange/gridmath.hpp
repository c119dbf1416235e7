#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "exchange/configspace.hpp"

namespace exchange {

using cplx = std::complex<double>;

/// Central finite-difference first derivative along one axis, periodic wrap.
/// order must be 4 or 6.
template <typename T>
void fd_derivative(const ConfigGrid& grid, std::span<const T> in, int axis, int order,
                   std::span<T> out);

/// Central second derivative along one axis, periodic wrap (order 4 or 6).
template <typename T>
void fd_second_derivative(const ConfigGrid& grid, std::span<const T> in, int axis, int order,
                          std::span<T> out);

/// Separable Lagrange interpolation on the periodic lattice. order 3 uses a
/// 4-point stencil (cubic), order 5 a 6-point stencil (quintic).
class Interpolator {
  public:
    Interpolator(const ConfigGrid& grid, int order = 3);

    double operator()(std::span<const double> field, const double* pt) const;
    cplx operator()(std::span<const cplx> field, const double* pt) const;

    /// True when any lattice point of the interpolation stencil at pt is
    /// flagged in mask.
    bool stencil_masked(std::span<const std::uint8_t> mask, const double* pt) const;

    /// Interpolates along a single axis with all other coordinates on-lattice
    /// (used for edge midpoints). base is the flat index of the lattice point
    /// whose axis coordinate is floor(u).
    double along_axis(std::span<const double> field, std::int64_t base_flat, int axis,
                      double frac) const;

    int order() const { return order_; }

  private:
    template <typename T>
    T interp(std::span<const T> field, const double* pt) const;

    const ConfigGrid* grid_;
    int order_;
    int taps_;
};

/// Weights for 1-D Lagrange interpolation at fractional offset t in [0,1)
/// relative to the stencil's anchor node. For taps=4 nodes are {-1,0,1,2},
/// for taps=6 {-2,...,3}.
void lagrange_weights(double t, int taps, double* w);

}  // namespace exchange
