#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qpca {

/// Grayscale pixel grid as parsed from disk, before any normalization.
struct RawImage {
    std::size_t width = 0;
    std::size_t height = 0;
    int max_value = 255;
    std::vector<int> pixels; // row-major

    std::size_t pixel_count() const { return pixels.size(); }
    bool operator==(const RawImage&) const = default;
};

/// Netpbm PGM reader for P2 (ASCII) and P5 (binary, 1 or 2 bytes per
/// sample, big-endian). Other Netpbm types raise FormatError; malformed or
/// truncated input raises ParseError with the byte offset.
RawImage parse_pgm(std::string_view bytes);

/// Comma-separated integer grid, one row per line. `max_value` bounds the
/// admissible intensities.
RawImage parse_csv(std::string_view text, int max_value = 255);

/// Reads a PGM or CSV file, dispatching on the Netpbm magic.
RawImage load_image(const std::filesystem::path& path, int csv_max_value = 255);

void write_pgm(std::ostream& out, const RawImage& image, bool binary);
std::string pgm_bytes(const RawImage& image, bool binary);

/// Feature vector in [0,1]^n with its provenance.
struct FeatureVector {
    std::vector<double> values;
    std::string source;
};

/// Row-major flattening with every pixel divided by max_value; quotients
/// are clamped into [0,1] so float spill cannot fail the pipeline.
FeatureVector to_feature_vector(const RawImage& image, std::string source = {});

} // namespace qpca
