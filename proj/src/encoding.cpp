#include "qpca/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qpca/errors.hpp"

namespace qpca {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

BlockSparseState::BlockSparseState(std::size_t block_count, std::size_t block_dim,
                                   std::vector<Entry> entries)
    : block_count_(block_count), block_dim_(block_dim), entries_(std::move(entries)) {
    if (block_count_ == 0 || block_dim_ == 0) {
        throw DimensionError("block-sparse state needs at least one block and one coordinate");
    }
    for (const Entry& e : entries_) {
        if (e.block >= block_count_ || e.coord >= block_dim_) {
            throw DimensionError("block-sparse entry out of range");
        }
    }
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.block != b.block ? a.block < b.block : a.coord < b.coord;
    });
}

StateVector BlockSparseState::to_state_vector() const {
    std::vector<Complex> amps(dim(), Complex{0.0, 0.0});
    const double scale = 1.0 / std::sqrt(static_cast<double>(block_count_));
    for (const Entry& e : entries_) {
        amps[e.block * block_dim_ + e.coord] = Complex{e.value * scale, 0.0};
    }
    return StateVector(std::move(amps));
}

double sparse_inner_product(const BlockSparseState& a, const BlockSparseState& b) {
    if (a.block_count_ != b.block_count_ || a.block_dim_ != b.block_dim_) {
        throw DimensionError("encodings have different block layout");
    }
    double sum = 0.0;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() && ib != b.entries_.end()) {
        const auto ka = std::pair{ia->block, ia->coord};
        const auto kb = std::pair{ib->block, ib->coord};
        if (ka < kb) {
            ++ia;
        } else if (kb < ka) {
            ++ib;
        } else {
            sum += ia->value * ib->value;
            ++ia;
            ++ib;
        }
    }
    return sum / static_cast<double>(a.block_count_);
}

std::array<double, 2> encode_pixel(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw RangeError("pixel value " + std::to_string(x) + " outside [0,1]");
    }
    return {x, std::sqrt(1.0 - x * x)};
}

EncodedImage encode_image(std::span<const double> x, std::size_t k) {
    if (x.empty()) throw DimensionError("cannot encode an empty feature vector");
    if (k < 2) throw DimensionError("per-pixel dimension must be at least 2");

    std::vector<BlockSparseState::Entry> entries;
    entries.reserve(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto [head, residual] = encode_pixel(x[i]);
        if (head != 0.0) entries.push_back({i, 0, head});
        if (residual != 0.0) entries.push_back({i, 1, residual});
    }
    return EncodedImage(BlockSparseState(x.size(), k, std::move(entries)));
}

EncodedComponent encode_component(std::span<const double> v, std::size_t l, std::size_t k) {
    if (v.empty()) throw DimensionError("cannot encode an empty component");
    if (l < 1) throw DimensionError("component index starts at 1");
    if (k < l + 2) {
        throw DimensionError("per-pixel dimension " + std::to_string(k) +
                             " too small for component index " + std::to_string(l));
    }

    std::vector<BlockSparseState::Entry> entries;
    entries.reserve(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double value = v[i];
        if (!(value >= -1.0 && value <= 1.0)) {
            throw RangeError("component entry " + std::to_string(value) + " outside [-1,1]");
        }
        const double residual = std::sqrt(1.0 - value * value);
        if (value != 0.0) entries.push_back({i, 0, value});
        if (residual != 0.0) entries.push_back({i, l + 1, residual});
    }
    return EncodedComponent(BlockSparseState(v.size(), k, std::move(entries)), l);
}

double representation_inner_product(const EncodedImage& a, const EncodedImage& b) {
    return sparse_inner_product(a.sparse(), b.sparse());
}
double representation_inner_product(const EncodedImage& a, const EncodedComponent& b) {
    return sparse_inner_product(a.sparse(), b.sparse());
}
double representation_inner_product(const EncodedComponent& a, const EncodedImage& b) {
    return sparse_inner_product(a.sparse(), b.sparse());
}
double representation_inner_product(const EncodedComponent& a, const EncodedComponent& b) {
    return sparse_inner_product(a.sparse(), b.sparse());
}

FrqiImage encode_frqi(std::span<const double> thetas) {
    const std::size_t count = thetas.size();
    std::size_t positions = 1;
    std::size_t side_exp = 0;
    while (positions < count) {
        positions <<= 2;
        ++side_exp;
    }
    if (positions != count) {
        throw DimensionError("FRQI needs 4^n angles, got " + std::to_string(count));
    }

    constexpr double half_pi = std::numbers::pi / 2.0;
    for (double t : thetas) {
        if (!(t >= 0.0 && t <= half_pi)) {
            throw RangeError("FRQI angle " + std::to_string(t) + " outside [0, pi/2]");
        }
    }

    const double scale = 1.0 / static_cast<double>(std::size_t{1} << side_exp); // 1/2^n
    std::vector<Complex> amps(2 * count, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < count; ++i) {
        amps[i] = Complex{std::cos(thetas[i]) * scale, 0.0};
        amps[count + i] = Complex{std::sin(thetas[i]) * scale, 0.0};
    }
    return FrqiImage(StateVector(std::move(amps)),
                     std::vector<double>(thetas.begin(), thetas.end()));
}

std::vector<double> frqi_angles(std::span<const double> intensities) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    std::vector<double> thetas(intensities.size());
    for (std::size_t i = 0; i < intensities.size(); ++i) {
        const double x = intensities[i];
        if (!(x >= 0.0 && x <= 1.0)) {
            throw RangeError("intensity " + std::to_string(x) + " outside [0,1]");
        }
        thetas[i] = half_pi * x;
    }
    return thetas;
}

NeqrImage encode_neqr(std::span<const int> grid, std::size_t side, std::size_t q) {
    if (side < 2 || !is_power_of_two(side)) {
        throw DimensionError("NEQR needs a 2^n x 2^n grid with side >= 2");
    }
    if (grid.size() != side * side) {
        throw DimensionError("NEQR grid size does not match its side length");
    }
    if (q == 0 || q > 16) throw RangeError("NEQR bit depth must be in [1, 16]");

    const std::size_t positions = side * side;
    const std::size_t dim = (std::size_t{1} << q) * positions;
    if (dim > (std::size_t{1} << 26)) {
        throw DimensionError("NEQR state dimension too large to materialize");
    }

    const int max_intensity = static_cast<int>((std::size_t{1} << q) - 1);
    std::size_t n = 0;
    while ((std::size_t{1} << n) < side) ++n;

    const double amp = 1.0 / static_cast<double>(std::size_t{1} << n); // 1/2^n
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    for (std::size_t y = 0; y < side; ++y) {
        for (std::size_t x = 0; x < side; ++x) {
            const int value = grid[y * side + x];
            if (value < 0 || value > max_intensity) {
                throw RangeError("NEQR intensity " + std::to_string(value) + " outside [0, " +
                                 std::to_string(max_intensity) + "]");
            }
            const std::size_t index =
                (static_cast<std::size_t>(value) << (2 * n)) | (y << n) | x;
            amps[index] = Complex{amp, 0.0};
        }
    }
    return NeqrImage(StateVector(std::move(amps)), side, q);
}

std::vector<int> decode_neqr(const NeqrImage& image) {
    const std::size_t side = image.side();
    std::size_t n = 0;
    while ((std::size_t{1} << n) < side) ++n;
    const std::size_t positions = side * side;
    const std::size_t levels = std::size_t{1} << image.bit_depth();

    std::vector<int> grid(positions, -1);
    for (std::size_t y = 0; y < side; ++y) {
        for (std::size_t x = 0; x < side; ++x) {
            for (std::size_t c = 0; c < levels; ++c) {
                const std::size_t index = (c << (2 * n)) | (y << n) | x;
                if (image.state().amplitude(index) != Complex{0.0, 0.0}) {
                    grid[y * side + x] = static_cast<int>(c);
                    break;
                }
            }
            if (grid[y * side + x] < 0) {
                throw NumericalError("NEQR state has no amplitude for a position");
            }
        }
    }
    return grid;
}

} // namespace qpca
