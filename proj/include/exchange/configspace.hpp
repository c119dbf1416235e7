#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "exchange/common.hpp"

namespace exchange {

/// Hard cap on configuration-space dimension D = N*d. Dense grids beyond
/// 4 axes are not desk-scale.
inline constexpr int kMaxDims = 4;

using Index = std::array<int, kMaxDims>;

/// A bijection on particle slots {0..N-1}. map[i] names the input slot whose
/// block lands in output slot i.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> map);

    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& map() const { return map_; }

    /// +1 for even, -1 for odd.
    int parity() const;
    Permutation inverse() const;
    /// (a.compose(b))(i) applies b first, then a.
    Permutation compose(const Permutation& other) const;

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> map_;
};

std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> all_transpositions(int n);

/// An ordered tuple of N particle positions in d spatial dimensions,
/// flattened block-major: coords[i*d + a] is coordinate a of particle i.
struct ParticleConfig {
    int n_particles = 0;
    int dim = 0;
    std::vector<double> coords;

    ParticleConfig() = default;
    ParticleConfig(int n, int d) : n_particles(n), dim(d), coords(static_cast<std::size_t>(n) * d, 0.0) {}
    ParticleConfig(int n, int d, std::vector<double> c);

    int dims() const { return n_particles * dim; }
    double* block(int i) { return coords.data() + static_cast<std::size_t>(i) * dim; }
    const double* block(int i) const { return coords.data() + static_cast<std::size_t>(i) * dim; }

    bool operator==(const ParticleConfig&) const = default;
};

ParticleConfig permute(const ParticleConfig& config, const Permutation& sigma);

/// All distinct permuted images (N! when positions are pairwise distinct,
/// fewer when some coincide).
std::vector<ParticleConfig> orbit(const ParticleConfig& config);

struct CmRel {
    std::vector<double> cm;
    std::vector<double> rel;
};

/// Two-particle center-of-mass / relative split: cm = (x1+x2)/2, rel = x2-x1.
CmRel to_cm_rel(const ParticleConfig& config);
ParticleConfig from_cm_rel(const CmRel& cr, int dim);

struct ReducedPoint {
    ParticleConfig representative;
    int orbit_size = 0;
};

/// Lexicographically smallest orbit element; constant on orbits.
ReducedPoint canonicalize(const ParticleConfig& config);

struct AxisSpec {
    double lo = 0.0;
    double hi = 1.0;
    int points = 0;

    double spacing() const { return (hi - lo) / points; }
    bool operator==(const AxisSpec&) const = default;
};

/// Uniform periodic lattice over configuration space. Axes belonging to
/// identical particles share range and resolution, so permuting particle
/// blocks maps lattice points to lattice points exactly.
class ConfigGrid {
  public:
    ConfigGrid() = default;
    ConfigGrid(int n_particles, int dim, std::vector<AxisSpec> axes);

    /// All axes identical (the common case).
    static ConfigGrid uniform(int n_particles, int dim, double lo, double hi, int points);

    int n_particles() const { return n_particles_; }
    int dim() const { return dim_; }
    int dims() const { return n_particles_ * dim_; }
    std::int64_t size() const { return size_; }
    const AxisSpec& axis(int a) const { return axes_[static_cast<std::size_t>(a)]; }
    double spacing(int a) const { return axes_[static_cast<std::size_t>(a)].spacing(); }
    double cell_volume() const;

    double coord(int a, int i) const { return axes_[static_cast<std::size_t>(a)].lo + i * spacing(a); }

    std::int64_t flatten(const Index& idx) const;
    Index unflatten(std::int64_t flat) const;
    void point_at(std::int64_t flat, double* out) const;
    ParticleConfig config_at(std::int64_t flat) const;

    /// Lattice-exact permutation action on flat indices.
    std::int64_t permute_flat(std::int64_t flat, const Permutation& sigma) const;

    /// Wraps a physical coordinate into [lo, hi) on axis a.
    double wrap(int a, double x) const;
    /// Wraps a lattice index into [0, points).
    int wrap_index(int a, int i) const;

    bool operator==(const ConfigGrid&) const = default;

  private:
    int n_particles_ = 0;
    int dim_ = 0;
    std::vector<AxisSpec> axes_;
    std::array<std::int64_t, kMaxDims> strides_ = {};
    std::int64_t size_ = 0;
};

/// An ordered polyline through configuration space, for line integrals of
/// phase gradients and momenta. Closure in reduced space means the endpoints
/// are permuted images of each other; closure in full space implies closure
/// in reduced space.
struct PathPolyline {
    std::vector<std::vector<double>> points;  // each of size grid.dims()
    bool closed_in_full = false;
    bool closed_in_reduced = false;
};

/// Annotates closure flags from the endpoint geometry (tolerance in length
/// units).
void annotate_closure(PathPolyline& path, int n_particles, int dim, double tol = 1e-9);

}  // namespace exchange
