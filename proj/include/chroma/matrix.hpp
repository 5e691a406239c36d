#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "chroma/cyclo.hpp"

namespace chroma {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<CycloNum>;
using FloatMatrix = Matrix<ApproxNum>;

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix conj_transpose(const ExactMatrix& m);
ExactMatrix identity_matrix(std::size_t n);
FloatMatrix to_approx(const ExactMatrix& m);

// Column vector / row vector helpers for building oracles.
ExactMatrix ket(const std::vector<CycloNum>& entries);
ExactMatrix outer(const ExactMatrix& ket, const ExactMatrix& bra_ket);  // |a><b|
ExactMatrix scale(const ExactMatrix& m, const CycloNum& z);
ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b);

bool equal_up_to_scalar(const ExactMatrix& m, const ExactMatrix& n);
bool equal_up_to_scalar(const FloatMatrix& m, const FloatMatrix& n, double tol = 1e-9);
bool is_zero(const ExactMatrix& m);

std::string to_string(const ExactMatrix& m);
std::string to_string(const FloatMatrix& m);

}  // namespace chroma
