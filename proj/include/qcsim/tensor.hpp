// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qcsim/rng.hpp"

namespace qcsim {

using complex_t = std::complex<double>;

// Dense complex tensor, row-major. Shared currency of the state-vector and
// MPS backends. Values are immutable by convention once a tensor has been
// handed off; all operations below return new tensors.
class ComplexTensor {
public:
  ComplexTensor() = default;

  // Zero-filled tensor with the given extents.
  explicit ComplexTensor(std::vector<std::size_t> shape);

  ComplexTensor(std::vector<std::size_t> shape, std::vector<complex_t> data);

  static ComplexTensor matrix(std::size_t rows, std::size_t cols,
                              std::vector<complex_t> data);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t extent(std::size_t axis) const { return shape_[axis]; }
  bool is_matrix() const { return shape_.size() == 2; }

  const std::vector<complex_t>& data() const { return data_; }
  std::vector<complex_t>& data() { return data_; }
  const complex_t* raw() const { return data_.data(); }
  complex_t* raw() { return data_.data(); }

  complex_t& operator[](std::size_t flat) { return data_[flat]; }
  const complex_t& operator[](std::size_t flat) const { return data_[flat]; }

  complex_t at(std::initializer_list<std::size_t> idx) const;

  // Same data sequence under new extents; total size must match.
  ComplexTensor reshaped(std::vector<std::size_t> new_shape) const;

  // Axis permutation: result axis k is input axis perm[k].
  ComplexTensor transposed(const std::vector<std::size_t>& perm) const;

  ComplexTensor conjugated() const;

  double frobenius_norm() const;

private:
  std::vector<std::size_t> shape_;
  std::vector<complex_t> data_;
};

// Truncation controls for svd_truncate. A singular value s_i is kept when
// i < max_bond, s_i >= abs_cutoff and s_i >= rel_cutoff * s_0; the largest
// value is always retained so a state never collapses to rank zero.
struct TruncationConfig {
  std::size_t max_bond = 64;
  double abs_cutoff = 1e-5;
  double rel_cutoff = 1e-5;
};

struct TruncatedSVDResult {
  ComplexTensor u;                      // rows x kept_rank
  std::vector<double> singular_values;  // descending, kept values only
  ComplexTensor v;                      // kept_rank x cols, u*diag(s)*v ~ m
  std::size_t kept_rank = 0;
  double discarded_weight = 0.0;        // sum of squares of dropped values
};

// Pairwise tensor contraction. paired_axes lists (axis in a, axis in b);
// the result carries the free axes of a followed by the free axes of b.
ComplexTensor contract(const ComplexTensor& a, const ComplexTensor& b,
                       const std::vector<std::pair<std::size_t, std::size_t>>&
                           paired_axes);

TruncatedSVDResult svd_truncate(const ComplexTensor& m,
                                const TruncationConfig& cfg);

// Haar-distributed dim x dim unitary: QR of a complex Gaussian matrix with
// the R diagonal phases folded into Q. Deterministic for a fixed rng state.
ComplexTensor random_unitary(std::size_t dim, Rng& rng);

} // namespace qcsim
