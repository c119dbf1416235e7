#pragma once

#include <vector>

#include "exchange/wavefield.hpp"

namespace exchange {

/// 1-D harmonic-oscillator eigenfunction (m = omega = hbar = 1), evaluated by
/// Hermite recurrence. Normalized on the real line.
double harmonic_mode(int n, double x);

/// Product of per-particle harmonic modes, optionally boosted: particle i gets
/// mode modes[i] and plane-wave factor exp(i k_i . x_i). Normalized.
WaveField harmonic_product_state(const ConfigGrid& grid, const std::vector<int>& modes,
                                 const std::vector<double>& boost = {});

/// Gaussian packet product state: particle i centered at centers[i] with width
/// sigma and momentum boost[i]. Normalized.
WaveField gaussian_packet_state(const ConfigGrid& grid,
                                const std::vector<std::vector<double>>& centers, double sigma,
                                const std::vector<std::vector<double>>& boost = {});

/// Two particles in two dimensions: relative p-wave (x_rel + i y_rel) times
/// Gaussians in center-of-mass and relative coordinates. Antisymmetric, with
/// unit winding of the relative phase about the coincidence set. Normalized.
WaveField pwave_two_particle_2d(const ConfigGrid& grid);

/// Relative-coordinate view of the same state on a plain 2-D grid (N=1, d=2):
/// (x + i y) exp(-r^2/4). Used for loop studies in relative space.
WaveField pwave_relative_2d(const ConfigGrid& grid);

}  // namespace exchange
