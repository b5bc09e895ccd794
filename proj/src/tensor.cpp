// SPDX-License-Identifier: Apache-2.0
#include "qcsim/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace qcsim {

namespace {

using RowMatrixXcd =
    Eigen::Matrix<complex_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMatrixMap = Eigen::Map<const RowMatrixXcd>;
using MatrixMap = Eigen::Map<RowMatrixXcd>;

std::size_t shape_product(const std::vector<std::size_t>& shape) {
  std::size_t total = 1;
  for (std::size_t e : shape) {
    total *= e;
  }
  return total;
}

std::vector<std::size_t> row_major_strides(
    const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t i = shape.size(); i-- > 1;) {
    strides[i - 1] = strides[i] * shape[i];
  }
  return strides;
}

} // namespace

ComplexTensor::ComplexTensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(shape_product(shape_)) {
  for (std::size_t e : shape_) {
    if (e == 0) {
      throw std::invalid_argument("tensor extents must be positive");
    }
  }
}

ComplexTensor::ComplexTensor(std::vector<std::size_t> shape,
                             std::vector<complex_t> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  for (std::size_t e : shape_) {
    if (e == 0) {
      throw std::invalid_argument("tensor extents must be positive");
    }
  }
  if (shape_product(shape_) != data_.size()) {
    throw std::invalid_argument("tensor data size does not match shape");
  }
}

ComplexTensor ComplexTensor::matrix(std::size_t rows, std::size_t cols,
                                    std::vector<complex_t> data) {
  return ComplexTensor({rows, cols}, std::move(data));
}

complex_t ComplexTensor::at(std::initializer_list<std::size_t> idx) const {
  if (idx.size() != shape_.size()) {
    throw std::invalid_argument("index rank does not match tensor rank");
  }
  const auto strides = row_major_strides(shape_);
  std::size_t flat = 0;
  std::size_t axis = 0;
  for (std::size_t i : idx) {
    if (i >= shape_[axis]) {
      throw std::out_of_range("tensor index out of range");
    }
    flat += i * strides[axis];
    ++axis;
  }
  return data_[flat];
}

ComplexTensor ComplexTensor::reshaped(
    std::vector<std::size_t> new_shape) const {
  if (shape_product(new_shape) != data_.size()) {
    throw std::invalid_argument("reshape changes total element count");
  }
  return ComplexTensor(std::move(new_shape), data_);
}

ComplexTensor ComplexTensor::transposed(
    const std::vector<std::size_t>& perm) const {
  if (perm.size() != shape_.size()) {
    throw std::invalid_argument("permutation rank mismatch");
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) {
      throw std::invalid_argument("invalid axis permutation");
    }
    seen[p] = true;
  }

  std::vector<std::size_t> new_shape(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    new_shape[k] = shape_[perm[k]];
  }
  ComplexTensor out(new_shape);

  const auto in_strides = row_major_strides(shape_);
  const auto out_strides = row_major_strides(new_shape);

  // Walk the output in order, mapping each multi-index back to the input.
  std::vector<std::size_t> idx(perm.size(), 0);
  const std::size_t total = data_.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t src = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      src += idx[k] * in_strides[perm[k]];
    }
    out.data_[flat] = data_[src];
    for (std::size_t k = perm.size(); k-- > 0;) {
      if (++idx[k] < new_shape[k]) {
        break;
      }
      idx[k] = 0;
    }
  }
  return out;
}

ComplexTensor ComplexTensor::conjugated() const {
  ComplexTensor out = *this;
  for (complex_t& v : out.data_) {
    v = std::conj(v);
  }
  return out;
}

double ComplexTensor::frobenius_norm() const {
  double sum = 0.0;
  for (const complex_t& v : data_) {
    sum += std::norm(v);
  }
  return std::sqrt(sum);
}

ComplexTensor contract(const ComplexTensor& a, const ComplexTensor& b,
                       const std::vector<std::pair<std::size_t, std::size_t>>&
                           paired_axes) {
  std::vector<bool> a_paired(a.rank(), false);
  std::vector<bool> b_paired(b.rank(), false);
  for (const auto& [ax, bx] : paired_axes) {
    if (ax >= a.rank() || bx >= b.rank()) {
      throw std::invalid_argument("contraction axis out of range");
    }
    if (a_paired[ax] || b_paired[bx]) {
      throw std::invalid_argument("contraction axis listed twice");
    }
    if (a.extent(ax) != b.extent(bx)) {
      throw std::invalid_argument(
          "extent mismatch on paired axes: " + std::to_string(a.extent(ax)) +
          " vs " + std::to_string(b.extent(bx)));
    }
    a_paired[ax] = true;
    b_paired[bx] = true;
  }

  std::vector<std::size_t> a_free;
  std::vector<std::size_t> b_free;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (!a_paired[i]) {
      a_free.push_back(i);
    }
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    if (!b_paired[i]) {
      b_free.push_back(i);
    }
  }

  // Permute so the contracted axes are trailing in a and leading in b, then
  // the contraction is a single matrix product.
  std::vector<std::size_t> a_perm = a_free;
  std::vector<std::size_t> b_perm;
  for (const auto& [ax, bx] : paired_axes) {
    a_perm.push_back(ax);
    b_perm.push_back(bx);
  }
  b_perm.insert(b_perm.end(), b_free.begin(), b_free.end());

  std::size_t m = 1;
  std::size_t k = 1;
  std::size_t n = 1;
  std::vector<std::size_t> out_shape;
  for (std::size_t i : a_free) {
    m *= a.extent(i);
    out_shape.push_back(a.extent(i));
  }
  for (const auto& [ax, bx] : paired_axes) {
    (void)bx;
    k *= a.extent(ax);
  }
  for (std::size_t i : b_free) {
    n *= b.extent(i);
    out_shape.push_back(b.extent(i));
  }

  const ComplexTensor at = a.transposed(a_perm);
  const ComplexTensor bt = b.transposed(b_perm);

  ComplexTensor out(out_shape);
  ConstMatrixMap am(at.raw(), static_cast<Eigen::Index>(m),
                    static_cast<Eigen::Index>(k));
  ConstMatrixMap bm(bt.raw(), static_cast<Eigen::Index>(k),
                    static_cast<Eigen::Index>(n));
  MatrixMap om(out.raw(), static_cast<Eigen::Index>(m),
               static_cast<Eigen::Index>(n));
  om.noalias() = am * bm;
  return out;
}

TruncatedSVDResult svd_truncate(const ComplexTensor& m,
                                const TruncationConfig& cfg) {
  if (!m.is_matrix()) {
    throw std::invalid_argument("svd_truncate expects a rank-2 tensor");
  }
  if (cfg.max_bond == 0) {
    throw std::invalid_argument("max_bond must be positive");
  }

  const std::size_t rows = m.extent(0);
  const std::size_t cols = m.extent(1);
  ConstMatrixMap mm(m.raw(), static_cast<Eigen::Index>(rows),
                    static_cast<Eigen::Index>(cols));

  Eigen::MatrixXcd thin_u;
  Eigen::MatrixXcd thin_v;
  Eigen::VectorXd sigma;
  // Jacobi is the more accurate choice for the small splits that dominate
  // MPS evolution; divide-and-conquer takes over for larger blocks.
  if (std::min(rows, cols) <= 16) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        mm, Eigen::ComputeThinU | Eigen::ComputeThinV);
    thin_u = svd.matrixU();
    thin_v = svd.matrixV();
    sigma = svd.singularValues();
  } else {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(
        mm, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
      throw std::runtime_error("SVD failed to converge");
    }
    thin_u = svd.matrixU();
    thin_v = svd.matrixV();
    sigma = svd.singularValues();
  }

  const std::size_t full_rank = static_cast<std::size_t>(sigma.size());
  const double s0 = full_rank > 0 ? sigma(0) : 0.0;
  std::size_t kept = 0;
  for (std::size_t i = 0; i < full_rank; ++i) {
    const double s = sigma(static_cast<Eigen::Index>(i));
    if (i >= cfg.max_bond || s < cfg.abs_cutoff || s < cfg.rel_cutoff * s0) {
      break;
    }
    ++kept;
  }
  if (kept == 0) {
    kept = 1;
  }

  double discarded = 0.0;
  for (std::size_t i = kept; i < full_rank; ++i) {
    const double s = sigma(static_cast<Eigen::Index>(i));
    discarded += s * s;
  }

  TruncatedSVDResult result;
  result.kept_rank = kept;
  result.discarded_weight = discarded;
  result.singular_values.assign(sigma.data(), sigma.data() + kept);

  ComplexTensor u({rows, kept});
  MatrixMap um(u.raw(), static_cast<Eigen::Index>(rows),
               static_cast<Eigen::Index>(kept));
  um = thin_u.leftCols(static_cast<Eigen::Index>(kept));

  // Eigen factors m = U * diag(s) * V^H; we hand back V^H directly so that
  // u * diag(s) * v reconstructs the input.
  ComplexTensor v({kept, cols});
  MatrixMap vm(v.raw(), static_cast<Eigen::Index>(kept),
               static_cast<Eigen::Index>(cols));
  vm = thin_v.leftCols(static_cast<Eigen::Index>(kept)).adjoint();

  result.u = std::move(u);
  result.v = std::move(v);
  return result;
}

ComplexTensor random_unitary(std::size_t dim, Rng& rng) {
  if (dim < 2) {
    throw std::invalid_argument("random_unitary requires dim >= 2");
  }
  Eigen::MatrixXcd gauss(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      gauss(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_t(re, im);
    }
  }

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gauss);
  Eigen::MatrixXcd q = qr.householderQ() *
                       Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();

  // Fold the R diagonal phases into Q; this is what makes the QR output
  // Haar-distributed rather than merely unitary.
  for (std::size_t i = 0; i < dim; ++i) {
    complex_t d = r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    const double mag = std::abs(d);
    const complex_t phase = mag > 0.0 ? d / mag : complex_t(1.0, 0.0);
    q.col(static_cast<Eigen::Index>(i)) *= phase;
  }

  ComplexTensor out({dim, dim});
  MatrixMap om(out.raw(), static_cast<Eigen::Index>(dim),
               static_cast<Eigen::Index>(dim));
  om = q;
  return out;
}

} // namespace qcsim
