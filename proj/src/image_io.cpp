#include "qpca/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "qpca/errors.hpp"

namespace qpca {

namespace {

bool is_pnm_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Header tokenizer for Netpbm files: whitespace-separated tokens with
// '#'-to-end-of-line comments.
class PnmScanner {
public:
    explicit PnmScanner(std::string_view bytes) : bytes_(bytes) {}

    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return bytes_.size() - pos_; }

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (is_pnm_space(c)) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view token(const char* what) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size()) {
            throw ParseError(std::string("unexpected end of file while reading ") + what, pos_);
        }
        const std::size_t start = pos_;
        while (pos_ < bytes_.size() && !is_pnm_space(bytes_[pos_]) && bytes_[pos_] != '#') ++pos_;
        return bytes_.substr(start, pos_ - start);
    }

    long int_token(const char* what, long min, long max) {
        const std::size_t at = [&] {
            skip_space_and_comments();
            return pos_;
        }();
        const std::string_view tok = token(what);
        long value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw ParseError(std::string("invalid integer for ") + what, at);
        }
        if (value < min || value > max) {
            throw ParseError(std::string(what) + " " + std::to_string(value) + " out of range [" +
                                 std::to_string(min) + ", " + std::to_string(max) + "]",
                             at);
        }
        return value;
    }

    // One raw byte, no whitespace handling.
    unsigned char byte(const char* what) {
        if (pos_ >= bytes_.size()) {
            throw ParseError(std::string("unexpected end of file while reading ") + what, pos_);
        }
        return static_cast<unsigned char>(bytes_[pos_++]);
    }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

} // namespace

RawImage parse_pgm(std::string_view bytes) {
    PnmScanner scan(bytes);
    const std::string_view magic = scan.token("magic number");
    if (magic != "P2" && magic != "P5") {
        if (magic.size() == 2 && magic[0] == 'P' && magic[1] >= '1' && magic[1] <= '7') {
            throw FormatError("unsupported Netpbm type " + std::string(magic) +
                              " (only P2 and P5 grayscale are read)");
        }
        throw FormatError("not a PGM file");
    }
    const bool binary = magic == "P5";

    RawImage img;
    img.width = static_cast<std::size_t>(scan.int_token("width", 1, 1 << 20));
    img.height = static_cast<std::size_t>(scan.int_token("height", 1, 1 << 20));
    img.max_value = static_cast<int>(scan.int_token("maxval", 1, 65535));
    img.pixels.resize(img.width * img.height);

    if (!binary) {
        for (std::size_t i = 0; i < img.pixels.size(); ++i) {
            img.pixels[i] = static_cast<int>(scan.int_token("pixel", 0, img.max_value));
        }
        return img;
    }

    // P5: exactly one whitespace byte separates the header from the raster.
    if (!is_pnm_space(static_cast<char>(scan.byte("raster separator")))) {
        throw ParseError("P5 header must end with a single whitespace byte", scan.pos() - 1);
    }
    const bool two_byte = img.max_value > 255;
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const std::size_t at = scan.pos();
        int value = scan.byte("pixel");
        if (two_byte) value = (value << 8) | scan.byte("pixel");
        if (value > img.max_value) {
            throw ParseError("pixel value " + std::to_string(value) + " exceeds maxval " +
                                 std::to_string(img.max_value),
                             at);
        }
        img.pixels[i] = value;
    }
    return img;
}

RawImage parse_csv(std::string_view text, int max_value) {
    if (max_value < 1) throw RangeError("max value must be positive");

    RawImage img;
    img.max_value = max_value;

    std::size_t pos = 0;
    std::size_t columns = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        // Skip blank lines.
        if (line.find_first_not_of(" \t") != std::string_view::npos) {
            std::size_t cells = 0;
            std::size_t cell_start = 0;
            while (true) {
                std::size_t comma = line.find(',', cell_start);
                std::string_view cell = line.substr(
                    cell_start, comma == std::string_view::npos ? line.size() - cell_start
                                                                : comma - cell_start);
                const std::size_t cell_offset = pos + cell_start;

                // Trim surrounding blanks.
                std::size_t b = cell.find_first_not_of(" \t");
                std::size_t e = cell.find_last_not_of(" \t");
                if (b == std::string_view::npos) {
                    throw ParseError("empty CSV cell", cell_offset);
                }
                cell = cell.substr(b, e - b + 1);

                int value = 0;
                const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
                if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
                    throw ParseError("invalid CSV integer '" + std::string(cell) + "'",
                                     cell_offset + b);
                }
                if (value < 0 || value > max_value) {
                    throw ParseError("CSV value " + std::to_string(value) + " out of range [0, " +
                                         std::to_string(max_value) + "]",
                                     cell_offset + b);
                }
                img.pixels.push_back(value);
                ++cells;

                if (comma == std::string_view::npos) break;
                cell_start = comma + 1;
            }

            if (columns == 0) {
                columns = cells;
            } else if (cells != columns) {
                throw ParseError("CSV row has " + std::to_string(cells) + " cells, expected " +
                                     std::to_string(columns),
                                 pos);
            }
            ++img.height;
        }
        pos = eol + 1;
    }

    if (img.pixels.empty()) throw ParseError("CSV grid is empty", 0);
    img.width = columns;
    return img;
}

RawImage load_image(const std::filesystem::path& path, int csv_max_value) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();

    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] >= '1' && bytes[1] <= '7') {
        return parse_pgm(bytes);
    }
    return parse_csv(bytes, csv_max_value);
}

void write_pgm(std::ostream& out, const RawImage& image, bool binary) {
    if (image.width == 0 || image.height == 0 ||
        image.pixels.size() != image.width * image.height) {
        throw DimensionError("image dimensions do not match its pixel count");
    }
    out << (binary ? "P5" : "P2") << "\n"
        << image.width << " " << image.height << "\n"
        << image.max_value << "\n";
    if (binary) {
        const bool two_byte = image.max_value > 255;
        for (int value : image.pixels) {
            if (two_byte) out.put(static_cast<char>((value >> 8) & 0xff));
            out.put(static_cast<char>(value & 0xff));
        }
    } else {
        for (std::size_t r = 0; r < image.height; ++r) {
            for (std::size_t c = 0; c < image.width; ++c) {
                if (c > 0) out << ' ';
                out << image.pixels[r * image.width + c];
            }
            out << '\n';
        }
    }
}

std::string pgm_bytes(const RawImage& image, bool binary) {
    std::ostringstream out;
    write_pgm(out, image, binary);
    return out.str();
}

FeatureVector to_feature_vector(const RawImage& image, std::string source) {
    FeatureVector fv;
    fv.source = std::move(source);
    fv.values.resize(image.pixel_count());
    const double inv = 1.0 / static_cast<double>(image.max_value);
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        fv.values[i] = std::clamp(static_cast<double>(image.pixels[i]) * inv, 0.0, 1.0);
    }
    return fv;
}

} // namespace qpca
