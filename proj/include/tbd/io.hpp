#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tbd/errors.hpp"

namespace tbd {

// Binary PGM (P5), 8-bit for maxval <= 255, else 16-bit big-endian.
struct PgmImage {
    int H = 0, W = 0;
    int maxval = 255;
    std::vector<uint16_t> pixels;  // row-major
};

PgmImage read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const PgmImage& img);

/// Write a binary 0/255 mask.
void write_mask_pgm(const std::filesystem::path& path, int H, int W,
                    std::span<const uint8_t> mask);

// Raw little-endian f32 container: magic "TBD1", then T,H,W as u32 LE,
// then T*H*W f32 values row-major, frame-major. Bit-exact round trips.
struct RawContainer {
    uint32_t T = 0, H = 0, W = 0;
    std::vector<float> data;
};

RawContainer read_raw_container(const std::filesystem::path& path);
void write_raw_container(const std::filesystem::path& path, const RawContainer& c);

/// Deterministic CSV writer: '.' decimal, LF endings, one header row.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    CsvWriter& field(const std::string& s);
    CsvWriter& field(int64_t v);
    CsvWriter& field(int v) { return field(static_cast<int64_t>(v)); }
    CsvWriter& field(double v);
    void end_row();

private:
    void sep();
    std::string buffer_;
    std::filesystem::path path_;
    size_t columns_ = 0;
    size_t in_row_ = 0;
};

std::string format_double(double v);

}  // namespace tbd
