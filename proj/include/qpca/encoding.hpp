#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qpca/state_vector.hpp"

namespace qpca {

/// State over (C^k)^{oplus n} with at most two nonzero coordinates per
/// block and an overall 1/sqrt(n) factor. Entries hold the unscaled block
/// amplitudes; the scale is applied on materialization and once (as 1/n)
/// per inner product, which keeps the classical identities exact instead
/// of accumulating sqrt roundoff.
class BlockSparseState {
public:
    struct Entry {
        std::size_t block;
        std::size_t coord;
        double value;
    };

    BlockSparseState(std::size_t block_count, std::size_t block_dim,
                     std::vector<Entry> entries);

    std::size_t block_count() const { return block_count_; }
    std::size_t block_dim() const { return block_dim_; }
    std::size_t dim() const { return block_count_ * block_dim_; }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Dense materialization with the 1/sqrt(n) factor applied.
    StateVector to_state_vector() const;

    /// (1/n) * sum of products over matching (block, coord) pairs.
    friend double sparse_inner_product(const BlockSparseState& a, const BlockSparseState& b);

private:
    std::size_t block_count_;
    std::size_t block_dim_;
    std::vector<Entry> entries_; // sorted by (block, coord)
};

/// Direct-sum representation of a feature vector: block i carries
/// (x_i, sqrt(1 - x_i^2)) at coordinates 0 and 1.
class EncodedImage {
public:
    EncodedImage(BlockSparseState state) : state_(std::move(state)) {}

    std::size_t pixel_count() const { return state_.block_count(); }
    std::size_t block_dim() const { return state_.block_dim(); }
    const BlockSparseState& sparse() const { return state_; }
    StateVector state() const { return state_.to_state_vector(); }

private:
    BlockSparseState state_;
};

/// Direct-sum representation of principal component l: block i carries
/// v_{l,i} at coordinate 0 and sqrt(1 - v_{l,i}^2) at coordinate l+1.
class EncodedComponent {
public:
    EncodedComponent(BlockSparseState state, std::size_t component_index)
        : state_(std::move(state)), component_index_(component_index) {}

    std::size_t pixel_count() const { return state_.block_count(); }
    std::size_t block_dim() const { return state_.block_dim(); }
    std::size_t component_index() const { return component_index_; }
    const BlockSparseState& sparse() const { return state_; }
    StateVector state() const { return state_.to_state_vector(); }

private:
    BlockSparseState state_;
    std::size_t component_index_;
};

/// (x, sqrt(1 - x^2)) for x in [0,1]. Throws RangeError outside the interval.
std::array<double, 2> encode_pixel(double x);

/// Throws RangeError if any entry leaves [0,1], DimensionError for k < 2.
EncodedImage encode_image(std::span<const double> x, std::size_t k);

/// Component index l >= 1 puts residuals at coordinate l+1, so k must be at
/// least l+2. Entries must lie in [-1,1].
EncodedComponent encode_component(std::span<const double> v, std::size_t l, std::size_t k);

/// Inner product of two direct-sum encodings (real by construction).
/// Equals (1/n) * <classical a | classical b> whenever the residual
/// coordinates of the two encodings are disjoint.
double representation_inner_product(const EncodedImage& a, const EncodedImage& b);
double representation_inner_product(const EncodedImage& a, const EncodedComponent& b);
double representation_inner_product(const EncodedComponent& a, const EncodedImage& b);
double representation_inner_product(const EncodedComponent& a, const EncodedComponent& b);

/// Angle-encoded image: per position i the color qubit holds
/// cos(theta_i)|0> + sin(theta_i)|1>, tensored with the position register.
class FrqiImage {
public:
    FrqiImage(StateVector state, std::vector<double> thetas)
        : state_(std::move(state)), thetas_(std::move(thetas)) {}

    const StateVector& state() const { return state_; }
    const std::vector<double>& thetas() const { return thetas_; }
    std::size_t position_count() const { return thetas_.size(); }

private:
    StateVector state_;
    std::vector<double> thetas_;
};

/// The grid must hold 4^n angles, each in [0, pi/2].
FrqiImage encode_frqi(std::span<const double> thetas);

/// theta = (pi/2) * x for intensities x in [0,1].
std::vector<double> frqi_angles(std::span<const double> intensities);

/// Basis-state image encoding: amplitude 1/2^n at index
/// (intensity << 2n) | (y << n) | x for a 2^n x 2^n grid.
class NeqrImage {
public:
    NeqrImage(StateVector state, std::size_t side, std::size_t bit_depth)
        : state_(std::move(state)), side_(side), bit_depth_(bit_depth) {}

    const StateVector& state() const { return state_; }
    std::size_t side() const { return side_; }
    std::size_t bit_depth() const { return bit_depth_; }

private:
    StateVector state_;
    std::size_t side_;
    std::size_t bit_depth_;
};

/// Grid is row-major with `side` a power of two, at least 2. Intensities
/// must lie in [0, 2^q - 1].
NeqrImage encode_neqr(std::span<const int> grid, std::size_t side, std::size_t q);

/// Exact readout of the encoded grid (row-major).
std::vector<int> decode_neqr(const NeqrImage& image);

} // namespace qpca
