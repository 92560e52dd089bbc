#ifndef CAUSAL_CMATRIX_HPP
#define CAUSAL_CMATRIX_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace causal {

using cplx = std::complex<double>;

// Max entrywise |m - m^dagger| below which a matrix counts as Hermitian.
inline constexpr double kHermitianTol = 1e-10;

/// Dense row-major complex matrix. Dimensions in this project never exceed 8.
class CMatrix {
 public:
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> entries() const { return data_; }

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(cplx s) const;
  friend CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

  CMatrix dagger() const;
  cplx trace() const;
  cplx determinant() const;  // 2x2 only

  double max_abs() const;
  double max_abs_diff(const CMatrix& o) const;
  bool is_hermitian(double tol = kHermitianTol) const;
  bool is_finite() const;

 private:
  std::size_t rows_, cols_;
  std::vector<cplx> data_;
};

/// |u><v| for two 2-component kets (bra entries conjugated).
CMatrix outer(std::span<const cplx, 2> u, std::span<const cplx, 2> v);

/// Identity (j = 0) and Pauli matrices (j = 1, 2, 3).
CMatrix pauli(int j);

/// Coefficients c_j = tr(m sigma^j)/2 so that m = sum_j c_j sigma^j.
std::array<cplx, 4> pauli_expand(const CMatrix& m);
CMatrix pauli_assemble(const std::array<cplx, 4>& coeffs);

/// Eigenvalues of a 2x2 (or, Hermitian-only, larger) matrix.
struct EigenResult {
  // Sorted by descending real part, ties by descending imaginary part.
  std::vector<cplx> values;
  bool all_real = false;
  std::vector<double> real_values;  // filled when all_real
};

/// Closed-form (quadratic) eigenvalues of a 2x2 matrix. Hermitian inputs get
/// their sub-1e-12 imaginary residue truncated and all_real set.
EigenResult eig2(const CMatrix& m);

/// Kronecker product, left factor is the slow index.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CMatrix tensor(const CMatrix& a, const CMatrix& b, const CMatrix& c);

/// Trace out every qubit slot whose label is not in `keep`. `labels` names
/// the slots of a 2^n-dimensional matrix from slowest to fastest index;
/// kept slots retain their relative order.
CMatrix partial_trace(const CMatrix& m, std::span<const char> labels,
                      std::span<const char> keep);

}  // namespace causal

#endif
