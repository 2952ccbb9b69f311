#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparsereg/graph.hpp"

namespace sparsereg {

// Finite probability space: nonnegative vertex weights summing to one.
class ProbabilitySpace {
 public:
  ProbabilitySpace() = default;
  // Throws std::invalid_argument unless weights are finite, nonnegative and
  // sum to 1 within 1e-12.
  explicit ProbabilitySpace(std::vector<double> weights);

  static ProbabilitySpace uniform(std::size_t n);

  std::size_t size() const noexcept { return weights_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const noexcept { return weights_; }

  double measure(std::span<const int> points) const;

  friend bool operator==(const ProbabilitySpace&, const ProbabilitySpace&) = default;

 private:
  std::vector<double> weights_;
};

// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> data() const noexcept { return data_; }

  Matrix transposed() const;

  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double s, const Matrix& a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// E_{x,y} m(x,y) under the product of the two spaces.
double product_mean(const ProbabilitySpace& rows, const ProbabilitySpace& cols, const Matrix& m);

// Symmetric nonnegative function on a finite probability space.
class Kernel {
 public:
  Kernel() = default;
  // Throws std::invalid_argument if the matrix is not square over the space,
  // not symmetric, negative somewhere, or non-finite.
  Kernel(ProbabilitySpace space, Matrix values);

  static Kernel constant(std::size_t n, double c);

  const ProbabilitySpace& space() const noexcept { return space_; }
  const Matrix& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return space_.size(); }
  double operator()(std::size_t x, std::size_t y) const { return values_(x, y); }

  double mean() const { return product_mean(space_, space_, values_); }
  Kernel scaled(double factor) const;

 private:
  ProbabilitySpace space_;
  Matrix values_;
};

// Nonnegative function on a product of two finite probability spaces.
class BipartiteKernel {
 public:
  BipartiteKernel() = default;
  BipartiteKernel(ProbabilitySpace left, ProbabilitySpace right, Matrix values);

  static BipartiteKernel constant(const ProbabilitySpace& left, const ProbabilitySpace& right,
                                  double c);

  const ProbabilitySpace& left() const noexcept { return left_; }
  const ProbabilitySpace& right() const noexcept { return right_; }
  const Matrix& values() const noexcept { return values_; }
  double operator()(std::size_t x, std::size_t y) const { return values_(x, y); }

  double mean() const { return product_mean(left_, right_, values_); }
  double max_value() const;
  // Same function viewed on right x left.
  BipartiteKernel transposed() const;

 private:
  ProbabilitySpace left_;
  ProbabilitySpace right_;
  Matrix values_;
};

// Normalised edge indicator p^{-1} 1_G over the uniform measure.
// Throws std::domain_error when p <= 0.
Kernel graph_to_kernel(const Graph& g, double p);

}  // namespace sparsereg
