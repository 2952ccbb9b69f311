#include "sparsereg/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsereg {

ProbabilitySpace::ProbabilitySpace(std::vector<double> weights) : weights_(std::move(weights)) {
  double total = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("probability weights must be finite and nonnegative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("probability weights sum to " + std::to_string(total) +
                                ", expected 1");
  }
}

ProbabilitySpace ProbabilitySpace::uniform(std::size_t n) {
  if (n == 0) return ProbabilitySpace();
  return ProbabilitySpace(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double ProbabilitySpace::measure(std::span<const int> points) const {
  double m = 0.0;
  for (int p : points) m += weights_[static_cast<std::size_t>(p)];
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
  return out;
}

double product_mean(const ProbabilitySpace& rows, const ProbabilitySpace& cols, const Matrix& m) {
  if (m.rows() != rows.size() || m.cols() != cols.size()) {
    throw std::invalid_argument("matrix does not match its probability spaces");
  }
  double total = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double acc = 0.0;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) acc += cols.weight(c) * row[c];
    total += rows.weight(r) * acc;
  }
  return total;
}

namespace {

void check_entries(const Matrix& m) {
  for (double v : m.data()) {
    if (!std::isfinite(v)) throw std::invalid_argument("kernel entries must be finite");
    if (v < 0.0) throw std::invalid_argument("kernel entries must be nonnegative");
  }
}

}  // namespace

Kernel::Kernel(ProbabilitySpace space, Matrix values) : space_(std::move(space)), values_(std::move(values)) {
  const std::size_t n = space_.size();
  if (values_.rows() != n || values_.cols() != n) {
    throw std::invalid_argument("kernel matrix must be square over its space");
  }
  check_entries(values_);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (values_(x, y) != values_(y, x)) throw std::invalid_argument("kernel must be symmetric");
}

Kernel Kernel::constant(std::size_t n, double c) {
  return Kernel(ProbabilitySpace::uniform(n), Matrix(n, n, c));
}

Kernel Kernel::scaled(double factor) const {
  if (!(factor >= 0.0)) throw std::invalid_argument("kernel scale factor must be nonnegative");
  return Kernel(space_, factor * values_);
}

BipartiteKernel::BipartiteKernel(ProbabilitySpace left, ProbabilitySpace right, Matrix values)
    : left_(std::move(left)), right_(std::move(right)), values_(std::move(values)) {
  if (values_.rows() != left_.size() || values_.cols() != right_.size()) {
    throw std::invalid_argument("bipartite kernel matrix does not match its spaces");
  }
  check_entries(values_);
}

BipartiteKernel BipartiteKernel::constant(const ProbabilitySpace& left, const ProbabilitySpace& right,
                                          double c) {
  return BipartiteKernel(left, right, Matrix(left.size(), right.size(), c));
}

double BipartiteKernel::max_value() const {
  double m = 0.0;
  for (double v : values_.data()) m = std::max(m, v);
  return m;
}

BipartiteKernel BipartiteKernel::transposed() const {
  return BipartiteKernel(right_, left_, values_.transposed());
}

Kernel graph_to_kernel(const Graph& g, double p) {
  if (!(p > 0.0)) throw std::domain_error("density scale p must be positive");
  const std::size_t n = g.vertex_count();
  Matrix m(n, n, 0.0);
  const double value = 1.0 / p;
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = value;
    m(e.v, e.u) = value;
  }
  return Kernel(ProbabilitySpace::uniform(n), std::move(m));
}

}  // namespace sparsereg
