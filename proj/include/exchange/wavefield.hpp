#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "exchange/configspace.hpp"
#include "exchange/gridmath.hpp"

namespace exchange {

/// A complex wave field on a configuration-space lattice. Value semantics;
/// operations return new fields.
class WaveField {
  public:
    WaveField() = default;
    explicit WaveField(ConfigGrid grid)
        : grid_(std::move(grid)), amp_(static_cast<std::size_t>(grid_.size()), cplx{}) {}
    WaveField(ConfigGrid grid, std::vector<cplx> amplitudes);

    const ConfigGrid& grid() const { return grid_; }
    std::span<const cplx> amplitudes() const { return amp_; }
    std::span<cplx> amplitudes() { return amp_; }
    cplx operator[](std::int64_t i) const { return amp_[static_cast<std::size_t>(i)]; }
    cplx& operator[](std::int64_t i) { return amp_[static_cast<std::size_t>(i)]; }

    double norm() const;
    /// Scales to unit norm; throws NumericalError on an (effectively) zero field.
    void normalize();
    /// <this|other> with the cell-volume measure.
    cplx inner(const WaveField& other) const;

  private:
    ConfigGrid grid_;
    std::vector<cplx> amp_;
};

/// Polar decomposition R e^{i theta}: magnitude, per-axis phase gradients
/// computed as Im(conj(psi) grad psi)/|psi|^2, and the node mask R < eps.
/// Phase gradients are undefined (zeroed) exactly where the mask is set.
struct PolarView {
    ConfigGrid grid;
    std::vector<double> magnitude;
    std::vector<std::vector<double>> grad_theta;  // one field per axis
    std::vector<std::uint8_t> node_mask;          // 1 = node
    double eps_node = 0.0;                        // absolute threshold used
    int fd_order = 4;
};

/// eps_rel is relative to max R; fd_order 4 (default) or 6 (used where line
/// integrals need the extra accuracy).
PolarView polar(const WaveField& psi, double eps_rel = 1e-8, int fd_order = 4);

/// Pulls amplitudes back along the permutation: out(c) = in(permute(c, sigma)).
/// Exact on permutation-compatible grids and unitary.
WaveField apply_permutation(const WaveField& psi, const Permutation& sigma);

enum class SymmetryClass { Symmetric, Antisymmetric, Asymmetric };

std::string to_string(SymmetryClass c);

struct SymmetryReport {
    SymmetryClass cls = SymmetryClass::Asymmetric;
    double s_plus = 0.0;   // ||psi - P psi|| / (2||psi||), worst transposition
    double s_minus = 0.0;  // ||psi + P psi|| / (2||psi||), worst transposition
    Permutation worst;     // transposition realizing the reported residuals
};

/// Classifies against all transpositions. Residuals satisfy
/// s_plus^2 + s_minus^2 = 1 per transposition (parallelogram law).
SymmetryReport classify_symmetry(const WaveField& psi, double tol = 1e-6);

/// Normalized projection sum_sigma P_sigma psi / N (and with parity signs for
/// the antisymmetrizer). Throws NumericalError when the projection has zero
/// norm, e.g. antisymmetrizing a doubly occupied mode.
WaveField symmetrize(const WaveField& psi);
WaveField antisymmetrize(const WaveField& psi);

/// Largest pointwise |a - e^{i phi} b| after aligning the global phase
/// phi = arg<a, b>. State equality is phase equivalence.
double phase_aligned_max_difference(const WaveField& a, const WaveField& b);

struct MixedParityReport {
    double alpha_direct = 0.0;    // exchange phase of P_ij (0 or pi)
    double alpha_composed = 0.0;  // phase accumulated by P_mj P_ni P_mn P_ni P_mj
    double max_pointwise_diff = 0.0;
    bool same_sign = false;
};

/// Applies the swap of slots (i,j) directly and via the five-transposition
/// composition through (m,n); both routes must agree, forcing every
/// transposition to carry the same exchange sign. Requires psi to have
/// definite parity under each transposition the composed route touches.
MixedParityReport mixed_parity_check(const WaveField& psi, std::pair<int, int> ij,
                                     std::pair<int, int> mn, double tol = 1e-6);

/// Norm of a random field after cyclic alternating projection onto the
/// eigenspaces {P_t psi = sign_t psi} for every transposition t. Mixed sign
/// assignments admit only the zero field; uniform signs reproduce the
/// (anti)symmetrizer.
double mixed_parity_projection_norm(const ConfigGrid& grid,
                                    const std::vector<int>& transposition_signs,
                                    std::uint64_t seed = 1, int sweeps = 256);

/// Number of connected components of the unmasked region (face adjacency,
/// periodic).
int connected_components(const PolarView& view);

}  // namespace exchange
