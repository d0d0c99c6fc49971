#include "tbd/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace tbd {

namespace {

int pgm_token(std::istream& in) {
    // Skips whitespace and '#' comments, returns the next integer.
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c)) throw IoError("pgm: malformed header");
    int value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        c = in.get();
    }
    return value;
}

}  // namespace

PgmImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("pgm: cannot open " + path.string());
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || m1 != '5') throw IoError("pgm: not a P5 file: " + path.string());
    PgmImage img;
    img.W = pgm_token(in);
    img.H = pgm_token(in);
    img.maxval = pgm_token(in);
    if (img.W <= 0 || img.H <= 0 || img.maxval <= 0 || img.maxval > 65535)
        throw IoError("pgm: bad dimensions in " + path.string());
    const size_t n = static_cast<size_t>(img.W) * img.H;
    img.pixels.resize(n);
    if (img.maxval <= 255) {
        std::vector<uint8_t> raw(n);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
        if (!in) throw IoError("pgm: truncated data in " + path.string());
        for (size_t i = 0; i < n; ++i) img.pixels[i] = raw[i];
    } else {
        std::vector<uint8_t> raw(n * 2);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n * 2));
        if (!in) throw IoError("pgm: truncated data in " + path.string());
        for (size_t i = 0; i < n; ++i)
            img.pixels[i] = static_cast<uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1]);
    }
    return img;
}

void write_pgm(const std::filesystem::path& path, const PgmImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("pgm: cannot write " + path.string());
    out << "P5\n" << img.W << " " << img.H << "\n" << img.maxval << "\n";
    const size_t n = static_cast<size_t>(img.W) * img.H;
    if (img.maxval <= 255) {
        std::vector<uint8_t> raw(n);
        for (size_t i = 0; i < n; ++i) raw[i] = static_cast<uint8_t>(img.pixels[i]);
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(n));
    } else {
        std::vector<uint8_t> raw(n * 2);
        for (size_t i = 0; i < n; ++i) {
            raw[2 * i] = static_cast<uint8_t>(img.pixels[i] >> 8);
            raw[2 * i + 1] = static_cast<uint8_t>(img.pixels[i] & 0xff);
        }
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(n * 2));
    }
    if (!out) throw IoError("pgm: write failed for " + path.string());
}

void write_mask_pgm(const std::filesystem::path& path, int H, int W,
                    std::span<const uint8_t> mask) {
    PgmImage img;
    img.H = H;
    img.W = W;
    img.maxval = 255;
    img.pixels.resize(mask.size());
    for (size_t i = 0; i < mask.size(); ++i) img.pixels[i] = mask[i] ? 255 : 0;
    write_pgm(path, img);
}

RawContainer read_raw_container(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("raw: cannot open " + path.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "TBD1", 4) != 0)
        throw IoError("raw: bad magic in " + path.string());
    uint8_t hdr[12];
    in.read(reinterpret_cast<char*>(hdr), 12);
    if (!in) throw IoError("raw: truncated header in " + path.string());
    auto u32 = [&](int o) {
        return uint32_t(hdr[o]) | (uint32_t(hdr[o + 1]) << 8) |
               (uint32_t(hdr[o + 2]) << 16) | (uint32_t(hdr[o + 3]) << 24);
    };
    RawContainer c;
    c.T = u32(0);
    c.H = u32(4);
    c.W = u32(8);
    const uint64_t n = uint64_t(c.T) * c.H * c.W;
    if (n > (1ull << 32)) throw IoError("raw: implausible size in " + path.string());
    c.data.resize(n);
    in.read(reinterpret_cast<char*>(c.data.data()),
            static_cast<std::streamsize>(n * sizeof(float)));
    if (!in) throw IoError("raw: truncated data in " + path.string());
    return c;
}

void write_raw_container(const std::filesystem::path& path, const RawContainer& c) {
    if (uint64_t(c.T) * c.H * c.W != c.data.size())
        throw IoError("raw: header/data size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("raw: cannot write " + path.string());
    out.write("TBD1", 4);
    uint8_t hdr[12];
    auto put = [&](int o, uint32_t v) {
        hdr[o] = uint8_t(v);
        hdr[o + 1] = uint8_t(v >> 8);
        hdr[o + 2] = uint8_t(v >> 16);
        hdr[o + 3] = uint8_t(v >> 24);
    };
    put(0, c.T);
    put(4, c.H);
    put(8, c.W);
    out.write(reinterpret_cast<const char*>(hdr), 12);
    out.write(reinterpret_cast<const char*>(c.data.data()),
              static_cast<std::streamsize>(c.data.size() * sizeof(float)));
    if (!out) throw IoError("raw: write failed for " + path.string());
}

std::string format_double(double v) {
    char buf[40];
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& header)
    : path_(path), columns_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += header[i];
    }
    buffer_ += '\n';
}

CsvWriter::~CsvWriter() {
    std::ofstream out(path_, std::ios::binary);
    if (out) out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
}

void CsvWriter::sep() {
    if (in_row_) buffer_ += ',';
    ++in_row_;
}

CsvWriter& CsvWriter::field(const std::string& s) {
    sep();
    buffer_ += s;
    return *this;
}

CsvWriter& CsvWriter::field(int64_t v) {
    sep();
    buffer_ += std::to_string(v);
    return *this;
}

CsvWriter& CsvWriter::field(double v) {
    sep();
    buffer_ += format_double(v);
    return *this;
}

void CsvWriter::end_row() {
    if (in_row_ != columns_)
        throw IoError("csv: row width " + std::to_string(in_row_) + " != header width " +
                      std::to_string(columns_) + " for " + path_.string());
    buffer_ += '\n';
    in_row_ = 0;
}

}  // namespace tbd
