#include "exchange/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace exchange {

namespace {

constexpr const char* kMagic = "EXCHANGE-LAB WF 1";

void write_le_doubles(std::ofstream& out, const double* data, std::size_t count) {
    static_assert(sizeof(double) == 8);
    if constexpr (std::endian::native == std::endian::little) {
        out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(count * 8));
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            unsigned char b[8];
            std::memcpy(b, &data[i], 8);
            std::swap(b[0], b[7]);
            std::swap(b[1], b[6]);
            std::swap(b[2], b[5]);
            std::swap(b[3], b[4]);
            out.write(reinterpret_cast<const char*>(b), 8);
        }
    }
}

void read_le_doubles(std::ifstream& in, double* data, std::size_t count) {
    in.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(count * 8));
    if constexpr (std::endian::native != std::endian::little) {
        for (std::size_t i = 0; i < count; ++i) {
            unsigned char b[8];
            std::memcpy(b, &data[i], 8);
            std::swap(b[0], b[7]);
            std::swap(b[1], b[6]);
            std::swap(b[2], b[5]);
            std::swap(b[3], b[4]);
            std::memcpy(&data[i], b, 8);
        }
    }
}

void write_header(std::ofstream& out, const ConfigGrid& grid,
                  const std::vector<std::pair<std::string, std::string>>& extra) {
    out << kMagic << "\n";
    out << "n_particles = " << grid.n_particles() << "\n";
    out << "dim = " << grid.dim() << "\n";
    for (int a = 0; a < grid.dims(); ++a) {
        out << "axis" << a << " = " << format_double(grid.axis(a).lo) << " "
            << format_double(grid.axis(a).hi) << " " << grid.axis(a).points << "\n";
    }
    out << "layout = row-major\n";
    out << "scalar = f64-le re,im\n";
    for (const auto& [k, v] : extra) out << k << " = " << v << "\n";
    out << "\n";
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void save_wavefield(const std::string& path, const WaveField& psi,
                    const std::vector<std::pair<std::string, std::string>>& extra_header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    write_header(out, psi.grid(), extra_header);
    const auto amp = psi.amplitudes();
    write_le_doubles(out, reinterpret_cast<const double*>(amp.data()), amp.size() * 2);
    if (!out) throw ConfigError("write failed: " + path);
}

void save_real_field(const std::string& path, const ConfigGrid& grid,
                     std::span<const double> values,
                     const std::vector<std::pair<std::string, std::string>>& extra_header) {
    if (static_cast<std::int64_t>(values.size()) != grid.size())
        throw ConfigError("save_real_field: size mismatch");
    WaveField tmp(grid);
    auto amp = tmp.amplitudes();
    for (std::size_t i = 0; i < values.size(); ++i) amp[i] = cplx{values[i], 0.0};
    auto extra = extra_header;
    extra.emplace_back("real_field", "1");
    save_wavefield(path, tmp, extra);
}

LoadedWaveField load_wavefield(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) || line != kMagic)
        throw ConfigError("not an exchange-lab .wf file: " + path);

    int n_particles = 0, dim = 0;
    std::vector<AxisSpec> axes;
    std::vector<std::pair<std::string, std::string>> header;
    while (std::getline(in, line) && !line.empty()) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("malformed .wf header line: " + line);
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            while (!s.empty() && (s.front() == ' ')) s.erase(s.begin());
            while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.pop_back();
        };
        trim(key);
        trim(val);
        if (key == "n_particles") {
            n_particles = std::stoi(val);
        } else if (key == "dim") {
            dim = std::stoi(val);
        } else if (key.rfind("axis", 0) == 0) {
            std::istringstream ss(val);
            AxisSpec ax;
            ss >> ax.lo >> ax.hi >> ax.points;
            axes.push_back(ax);
        } else {
            header.emplace_back(key, val);
        }
    }
    ConfigGrid grid(n_particles, dim, axes);
    std::vector<cplx> amp(static_cast<std::size_t>(grid.size()));
    read_le_doubles(in, reinterpret_cast<double*>(amp.data()), amp.size() * 2);
    if (!in) throw ConfigError("truncated .wf payload: " + path);
    return LoadedWaveField{WaveField(grid, std::move(amp)), std::move(header)};
}

struct CsvWriter::Impl {
    std::ofstream out;
    std::size_t columns = 0;
};

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns)
    : impl_(new Impl) {
    impl_->out.open(path);
    if (!impl_->out) {
        delete impl_;
        throw ConfigError("cannot open for writing: " + path);
    }
    impl_->columns = columns.size();
    for (std::size_t i = 0; i < columns.size(); ++i)
        impl_->out << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != impl_->columns) throw ConfigError("csv row arity mismatch");
    for (std::size_t i = 0; i < values.size(); ++i)
        impl_->out << format_double(values[i]) << (i + 1 < values.size() ? "," : "\n");
}

}  // namespace exchange
