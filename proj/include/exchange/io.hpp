#pragma once

#include <string>
#include <vector>

#include "exchange/wavefield.hpp"

namespace exchange {

/// `.wf` container: a "key = value" text header describing the grid, a blank
/// line, then little-endian f64 (re, im) pairs in row-major grid order.
/// Real fields are stored with zero imaginary parts. extra_header entries are
/// appended verbatim (e.g. branch index for multi-valued fields).
void save_wavefield(const std::string& path, const WaveField& psi,
                    const std::vector<std::pair<std::string, std::string>>& extra_header = {});

struct LoadedWaveField {
    WaveField field;
    std::vector<std::pair<std::string, std::string>> header;
};

LoadedWaveField load_wavefield(const std::string& path);

/// Saves a real scalar field on a grid in the same container.
void save_real_field(const std::string& path, const ConfigGrid& grid,
                     std::span<const double> values,
                     const std::vector<std::pair<std::string, std::string>>& extra_header = {});

/// Minimal CSV writer: fixed column set, one row per record, deterministic
/// formatting ("%.12g").
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;
    void row(const std::vector<double>& values);

  private:
    struct Impl;
    Impl* impl_;
};

std::string format_double(double v);

}  // namespace exchange
