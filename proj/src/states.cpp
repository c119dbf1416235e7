#include "exchange/states.hpp"

#include <cmath>

namespace exchange {

double harmonic_mode(int n, double x) {
    if (n < 0) throw ConfigError("harmonic mode index must be nonnegative");
    // H_n via recurrence; amplitude normalized with 1/sqrt(2^n n! sqrt(pi)).
    double h_prev = 1.0, h_cur = 2.0 * x;
    if (n == 0) h_cur = 1.0;
    for (int k = 2; k <= n; ++k) {
        const double h_next = 2.0 * x * h_cur - 2.0 * (k - 1) * h_prev;
        h_prev = h_cur;
        h_cur = h_next;
    }
    if (n == 1) h_cur = 2.0 * x;
    double log_norm = -0.25 * std::log(kPi);
    for (int k = 1; k <= n; ++k) log_norm -= 0.5 * std::log(2.0 * k);
    return h_cur * std::exp(log_norm - 0.5 * x * x);
}

WaveField harmonic_product_state(const ConfigGrid& grid, const std::vector<int>& modes,
                                 const std::vector<double>& boost) {
    const int N = grid.n_particles();
    const int d = grid.dim();
    if (static_cast<int>(modes.size()) != N * d)
        throw ConfigError("harmonic_product_state: need one mode index per particle axis");
    if (!boost.empty() && static_cast<int>(boost.size()) != N * d)
        throw ConfigError("harmonic_product_state: boost size mismatch");

    WaveField psi(grid);
    auto amp = psi.amplitudes();
    const int D = grid.dims();
    // Precompute per-axis mode tables.
    std::vector<std::vector<double>> table(static_cast<std::size_t>(D));
    for (int a = 0; a < D; ++a) {
        auto& t = table[static_cast<std::size_t>(a)];
        t.resize(static_cast<std::size_t>(grid.axis(a).points));
        for (int i = 0; i < grid.axis(a).points; ++i)
            t[static_cast<std::size_t>(i)] = harmonic_mode(modes[static_cast<std::size_t>(a)],
                                                           grid.coord(a, i));
    }
    parallel_for(0, grid.size(), [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t f = lo; f < hi; ++f) {
            const Index idx = grid.unflatten(f);
            double mag = 1.0, phase = 0.0;
            for (int a = 0; a < D; ++a) {
                mag *= table[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                    idx[static_cast<std::size_t>(a)])];
                if (!boost.empty())
                    phase += boost[static_cast<std::size_t>(a)] *
                             grid.coord(a, idx[static_cast<std::size_t>(a)]);
            }
            amp[static_cast<std::size_t>(f)] = mag * std::exp(cplx{0.0, phase});
        }
    });
    psi.normalize();
    return psi;
}

WaveField gaussian_packet_state(const ConfigGrid& grid,
                                const std::vector<std::vector<double>>& centers, double sigma,
                                const std::vector<std::vector<double>>& boost) {
    const int N = grid.n_particles();
    const int d = grid.dim();
    if (static_cast<int>(centers.size()) != N)
        throw ConfigError("gaussian_packet_state: one center per particle required");
    if (!boost.empty() && static_cast<int>(boost.size()) != N)
        throw ConfigError("gaussian_packet_state: boost size mismatch");
    if (sigma <= 0) throw ConfigError("gaussian_packet_state: sigma must be positive");

    WaveField psi(grid);
    auto amp = psi.amplitudes();
    parallel_for(0, grid.size(), [&](std::int64_t lo, std::int64_t hi) {
        std::vector<double> pt(static_cast<std::size_t>(grid.dims()));
        for (std::int64_t f = lo; f < hi; ++f) {
            grid.point_at(f, pt.data());
            double arg = 0.0, phase = 0.0;
            for (int i = 0; i < N; ++i) {
                for (int a = 0; a < d; ++a) {
                    const double dx = pt[static_cast<std::size_t>(i * d + a)] -
                                      centers[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
                    arg += dx * dx;
                    if (!boost.empty())
                        phase += boost[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                                 pt[static_cast<std::size_t>(i * d + a)];
                }
            }
            amp[static_cast<std::size_t>(f)] =
                std::exp(-arg / (4.0 * sigma * sigma)) * std::exp(cplx{0.0, phase});
        }
    });
    psi.normalize();
    return psi;
}

WaveField pwave_two_particle_2d(const ConfigGrid& grid) {
    if (grid.n_particles() != 2 || grid.dim() != 2)
        throw ConfigError("pwave state requires two particles in two dimensions");
    WaveField psi(grid);
    auto amp = psi.amplitudes();
    parallel_for(0, grid.size(), [&](std::int64_t lo, std::int64_t hi) {
        double pt[kMaxDims];
        for (std::int64_t f = lo; f < hi; ++f) {
            grid.point_at(f, pt);
            const double xr = pt[2] - pt[0];
            const double yr = pt[3] - pt[1];
            const double cx = 0.5 * (pt[0] + pt[2]);
            const double cy = 0.5 * (pt[1] + pt[3]);
            const double env = std::exp(-(cx * cx + cy * cy) - 0.25 * (xr * xr + yr * yr));
            amp[static_cast<std::size_t>(f)] = cplx{xr, yr} * env;
        }
    });
    psi.normalize();
    return psi;
}

WaveField pwave_relative_2d(const ConfigGrid& grid) {
    if (grid.n_particles() != 1 || grid.dim() != 2)
        throw ConfigError("relative pwave view requires a plain 2-D grid");
    WaveField psi(grid);
    auto amp = psi.amplitudes();
    parallel_for(0, grid.size(), [&](std::int64_t lo, std::int64_t hi) {
        double pt[kMaxDims];
        for (std::int64_t f = lo; f < hi; ++f) {
            grid.point_at(f, pt);
            const double r2 = pt[0] * pt[0] + pt[1] * pt[1];
            amp[static_cast<std::size_t>(f)] = cplx{pt[0], pt[1]} * std::exp(-0.25 * r2);
        }
    });
    psi.normalize();
    return psi;
}

}  // namespace exchange
