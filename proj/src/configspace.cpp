#include "exchange/configspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace exchange {

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
        if (v < 0 || v >= static_cast<int>(map_.size()) || seen[static_cast<std::size_t>(v)])
            throw ConfigError("permutation mapping is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw ConfigError("invalid transposition indices");
    auto p = identity(n);
    std::swap(p.map_[static_cast<std::size_t>(i)], p.map_[static_cast<std::size_t>(j)]);
    return p;
}

int Permutation::parity() const {
    std::vector<bool> seen(map_.size(), false);
    int transpositions = 0;
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(map_[j]);
            ++len;
        }
        transpositions += len - 1;
    }
    return (transpositions % 2 == 0) ? 1 : -1;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
    Permutation p;
    p.map_ = std::move(inv);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw ConfigError("permutation size mismatch in compose");
    std::vector<int> m(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        m[i] = other.map_[static_cast<std::size_t>(map_[i])];
    Permutation p;
    p.map_ = std::move(m);
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    std::vector<Permutation> out;
    do {
        Permutation p;
        p = Permutation(m);
        out.push_back(std::move(p));
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

std::vector<Permutation> all_transpositions(int n) {
    std::vector<Permutation> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(Permutation::transposition(n, i, j));
    return out;
}

ParticleConfig::ParticleConfig(int n, int d, std::vector<double> c)
    : n_particles(n), dim(d), coords(std::move(c)) {
    if (static_cast<int>(coords.size()) != n * d)
        throw ConfigError("particle config coordinate count mismatch");
}

ParticleConfig permute(const ParticleConfig& config, const Permutation& sigma) {
    if (sigma.size() != config.n_particles)
        throw ConfigError("permutation size does not match particle count");
    ParticleConfig out(config.n_particles, config.dim);
    for (int i = 0; i < config.n_particles; ++i) {
        const double* src = config.block(sigma(i));
        std::copy(src, src + config.dim, out.block(i));
    }
    return out;
}

std::vector<ParticleConfig> orbit(const ParticleConfig& config) {
    std::set<std::vector<double>> seen;
    std::vector<ParticleConfig> out;
    for (const auto& sigma : all_permutations(config.n_particles)) {
        ParticleConfig img = permute(config, sigma);
        if (seen.insert(img.coords).second) out.push_back(std::move(img));
    }
    return out;
}

CmRel to_cm_rel(const ParticleConfig& config) {
    if (config.n_particles != 2)
        throw ConfigError("cm/rel split requires exactly two particles");
    CmRel cr;
    cr.cm.resize(static_cast<std::size_t>(config.dim));
    cr.rel.resize(static_cast<std::size_t>(config.dim));
    for (int a = 0; a < config.dim; ++a) {
        cr.cm[static_cast<std::size_t>(a)] = 0.5 * (config.block(0)[a] + config.block(1)[a]);
        cr.rel[static_cast<std::size_t>(a)] = config.block(1)[a] - config.block(0)[a];
    }
    return cr;
}

ParticleConfig from_cm_rel(const CmRel& cr, int dim) {
    ParticleConfig out(2, dim);
    for (int a = 0; a < dim; ++a) {
        out.block(0)[a] = cr.cm[static_cast<std::size_t>(a)] - 0.5 * cr.rel[static_cast<std::size_t>(a)];
        out.block(1)[a] = cr.cm[static_cast<std::size_t>(a)] + 0.5 * cr.rel[static_cast<std::size_t>(a)];
    }
    return out;
}

ReducedPoint canonicalize(const ParticleConfig& config) {
    std::vector<std::vector<double>> blocks;
    blocks.reserve(static_cast<std::size_t>(config.n_particles));
    for (int i = 0; i < config.n_particles; ++i)
        blocks.emplace_back(config.block(i), config.block(i) + config.dim);
    std::sort(blocks.begin(), blocks.end());

    ReducedPoint rp;
    rp.representative = ParticleConfig(config.n_particles, config.dim);
    for (int i = 0; i < config.n_particles; ++i)
        std::copy(blocks[static_cast<std::size_t>(i)].begin(), blocks[static_cast<std::size_t>(i)].end(),
                  rp.representative.block(i));
    rp.orbit_size = static_cast<int>(orbit(config).size());
    return rp;
}

ConfigGrid::ConfigGrid(int n_particles, int dim, std::vector<AxisSpec> axes)
    : n_particles_(n_particles), dim_(dim), axes_(std::move(axes)) {
    const int D = n_particles_ * dim_;
    if (n_particles_ < 1 || dim_ < 1 || dim_ > 3)
        throw ConfigError("grid requires N >= 1 and d in {1,2,3}");
    if (D > kMaxDims)
        throw ConfigError("configuration dimension N*d exceeds the desk-scale cap of 4");
    if (static_cast<int>(axes_.size()) != D)
        throw ConfigError("grid axis count must equal N*d");
    for (const auto& ax : axes_) {
        if (ax.points < 8) throw ConfigError("grid needs at least 8 points per axis");
        if (!(ax.hi > ax.lo)) throw ConfigError("grid axis range is empty");
    }
    // Permutation compatibility: the same spatial axis of every particle must
    // share range and resolution.
    for (int i = 1; i < n_particles_; ++i)
        for (int a = 0; a < dim_; ++a)
            if (!(axes_[static_cast<std::size_t>(i * dim_ + a)] == axes_[static_cast<std::size_t>(a)]))
                throw ConfigError("grid is not permutation-compatible: particle axes differ");

    size_ = 1;
    for (int a = D - 1; a >= 0; --a) {
        strides_[static_cast<std::size_t>(a)] = size_;
        size_ *= axes_[static_cast<std::size_t>(a)].points;
    }
}

ConfigGrid ConfigGrid::uniform(int n_particles, int dim, double lo, double hi, int points) {
    std::vector<AxisSpec> axes(static_cast<std::size_t>(n_particles * dim), AxisSpec{lo, hi, points});
    return ConfigGrid(n_particles, dim, std::move(axes));
}

double ConfigGrid::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dims(); ++a) v *= spacing(a);
    return v;
}

std::int64_t ConfigGrid::flatten(const Index& idx) const {
    std::int64_t flat = 0;
    for (int a = 0; a < dims(); ++a)
        flat += strides_[static_cast<std::size_t>(a)] * idx[static_cast<std::size_t>(a)];
    return flat;
}

Index ConfigGrid::unflatten(std::int64_t flat) const {
    Index idx{};
    for (int a = 0; a < dims(); ++a) {
        idx[static_cast<std::size_t>(a)] =
            static_cast<int>(flat / strides_[static_cast<std::size_t>(a)]);
        flat %= strides_[static_cast<std::size_t>(a)];
    }
    return idx;
}

void ConfigGrid::point_at(std::int64_t flat, double* out) const {
    const Index idx = unflatten(flat);
    for (int a = 0; a < dims(); ++a) out[a] = coord(a, idx[static_cast<std::size_t>(a)]);
}

ParticleConfig ConfigGrid::config_at(std::int64_t flat) const {
    ParticleConfig c(n_particles_, dim_);
    point_at(flat, c.coords.data());
    return c;
}

std::int64_t ConfigGrid::permute_flat(std::int64_t flat, const Permutation& sigma) const {
    if (sigma.size() != n_particles_)
        throw ConfigError("permutation size does not match grid particle count");
    const Index idx = unflatten(flat);
    Index out{};
    for (int i = 0; i < n_particles_; ++i)
        for (int a = 0; a < dim_; ++a)
            out[static_cast<std::size_t>(i * dim_ + a)] =
                idx[static_cast<std::size_t>(sigma(i) * dim_ + a)];
    return flatten(out);
}

double ConfigGrid::wrap(int a, double x) const {
    const auto& ax = axes_[static_cast<std::size_t>(a)];
    const double span = ax.hi - ax.lo;
    double y = std::fmod(x - ax.lo, span);
    if (y < 0) y += span;
    return ax.lo + y;
}

int ConfigGrid::wrap_index(int a, int i) const {
    const int n = axes_[static_cast<std::size_t>(a)].points;
    int j = i % n;
    if (j < 0) j += n;
    return j;
}

void annotate_closure(PathPolyline& path, int n_particles, int dim, double tol) {
    path.closed_in_full = false;
    path.closed_in_reduced = false;
    if (path.points.size() < 2) return;
    const auto& a = path.points.front();
    const auto& b = path.points.back();
    ParticleConfig ca(n_particles, dim, a), cb(n_particles, dim, b);

    auto close = [&](const ParticleConfig& u, const ParticleConfig& v) {
        for (std::size_t k = 0; k < u.coords.size(); ++k)
            if (std::abs(u.coords[k] - v.coords[k]) > tol) return false;
        return true;
    };
    path.closed_in_full = close(ca, cb);
    for (const auto& img : orbit(ca)) {
        if (close(img, cb)) {
            path.closed_in_reduced = true;
            break;
        }
    }
}

}  // namespace exchange
