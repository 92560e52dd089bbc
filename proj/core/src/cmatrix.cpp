#include "causal/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace causal {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("CMatrix: zero dimension");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("CMatrix: zero dimension");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("CMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

CMatrix CMatrix::operator+(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix+: size mismatch");
  CMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix-: size mismatch");
  CMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("CMatrix*: size mismatch");
  CMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx a = (*this)(i, k);
      if (a == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

CMatrix CMatrix::operator*(cplx s) const {
  CMatrix r = *this;
  for (auto& e : r.data_) e *= s;
  return r;
}

CMatrix CMatrix::dagger() const {
  CMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

cplx CMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

cplx CMatrix::determinant() const {
  if (rows_ != 2 || cols_ != 2) throw std::invalid_argument("determinant: 2x2 only");
  return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : data_) m = std::max(m, std::abs(e));
  return m;
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - o.data_[i]));
  return m;
}

bool CMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

bool CMatrix::is_finite() const {
  for (const auto& e : data_)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

CMatrix outer(std::span<const cplx, 2> u, std::span<const cplx, 2> v) {
  CMatrix m(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

CMatrix pauli(int j) {
  switch (j) {
    case 0: return CMatrix::identity(2);
    case 1: return CMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case 2: return CMatrix{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
    case 3: return CMatrix{{1.0, 0.0}, {0.0, -1.0}};
    default: throw std::invalid_argument("pauli: index must be 0..3");
  }
}

std::array<cplx, 4> pauli_expand(const CMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("pauli_expand: 2x2 only");
  std::array<cplx, 4> c;
  for (int j = 0; j < 4; ++j) c[j] = (m * pauli(j)).trace() * 0.5;
  return c;
}

CMatrix pauli_assemble(const std::array<cplx, 4>& coeffs) {
  CMatrix m(2, 2);
  for (int j = 0; j < 4; ++j) m = m + coeffs[j] * pauli(j);
  return m;
}

EigenResult eig2(const CMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("eig2: 2x2 only");
  const cplx tr = m.trace();
  const cplx det = m.determinant();
  const cplx disc = std::sqrt(tr * tr - 4.0 * det);
  cplx l0 = 0.5 * (tr + disc);
  cplx l1 = 0.5 * (tr - disc);

  EigenResult res;
  res.values = {l0, l1};
  std::sort(res.values.begin(), res.values.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  if (m.is_hermitian()) {
    res.all_real = true;
    for (auto& v : res.values) {
      // closed form leaves only rounding-level imaginary residue here
      res.real_values.push_back(v.real());
      v = cplx(v.real(), 0.0);
    }
  }
  return res;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx av = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = av * b(k, l);
    }
  return r;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
  return tensor(tensor(a, b), c);
}

CMatrix partial_trace(const CMatrix& m, std::span<const char> labels,
                      std::span<const char> keep) {
  const std::size_t n = labels.size();
  if (m.rows() != m.cols() || m.rows() != (std::size_t{1} << n))
    throw std::invalid_argument("partial_trace: dimension is not 2^#labels");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) throw std::invalid_argument("partial_trace: duplicate label");

  std::vector<std::size_t> kept;  // slot positions, original order
  for (char k : keep) {
    auto it = std::find(labels.begin(), labels.end(), k);
    if (it == labels.end()) throw std::invalid_argument("partial_trace: unknown label");
    kept.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  std::sort(kept.begin(), kept.end());
  std::vector<std::size_t> traced;
  for (std::size_t s = 0; s < n; ++s)
    if (std::find(kept.begin(), kept.end(), s) == kept.end()) traced.push_back(s);

  const std::size_t nk = kept.size(), nt = traced.size();
  // bit position of slot s in a full index (slot 0 is the slowest)
  auto bit = [n](std::size_t s) { return n - 1 - s; };

  CMatrix r(std::size_t{1} << nk, std::size_t{1} << nk);
  for (std::size_t i = 0; i < (std::size_t{1} << nk); ++i)
    for (std::size_t j = 0; j < (std::size_t{1} << nk); ++j) {
      cplx sum = 0.0;
      for (std::size_t t = 0; t < (std::size_t{1} << nt); ++t) {
        std::size_t fi = 0, fj = 0;
        for (std::size_t s = 0; s < nk; ++s) {
          fi |= ((i >> (nk - 1 - s)) & 1u) << bit(kept[s]);
          fj |= ((j >> (nk - 1 - s)) & 1u) << bit(kept[s]);
        }
        for (std::size_t s = 0; s < nt; ++s) {
          const std::size_t b = ((t >> (nt - 1 - s)) & 1u) << bit(traced[s]);
          fi |= b;
          fj |= b;
        }
        sum += m(fi, fj);
      }
      r(i, j) = sum;
    }
  return r;
}

}  // namespace causal
