#include "sparsereg/regularity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsereg {

double phi(double x) {
  if (!(x >= 0.0)) throw std::domain_error("phi is defined for nonnegative arguments");
  return x <= 2.0 ? x * x : 4.0 * x - 4.0;
}

BlockAverages block_averages(const Kernel& f, const Partition& p) {
  if (p.ground_size() != f.size()) throw std::invalid_argument("partition does not cover the kernel's space");
  const std::size_t m = p.size();
  BlockAverages out{Matrix(m, m), std::vector<double>(m, 0.0)};
  for (std::size_t i = 0; i < m; ++i) out.measure[i] = f.space().measure(p.block(i));
  Matrix mass(m, m);
  for (std::size_t x = 0; x < f.size(); ++x) {
    const int bx = p.block_of(x);
    const double wx = f.space().weight(x);
    for (std::size_t y = 0; y < f.size(); ++y) {
      mass(bx, p.block_of(y)) += wx * f.space().weight(y) * f(x, y);
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double w = out.measure[i] * out.measure[j];
      out.values(i, j) = w > 0.0 ? mass(i, j) / w : 0.0;
    }
  // Symmetrise to remove rounding asymmetry from the two summation orders.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.values(j, i) = out.values(i, j);
  return out;
}

Kernel average_over(const Kernel& f, const Partition& p) {
  const BlockAverages avg = block_averages(f, p);
  Matrix v(f.size(), f.size());
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y) v(x, y) = avg.values(p.block_of(x), p.block_of(y));
  return Kernel(f.space(), std::move(v));
}

double energy(const Kernel& f, const Partition& p) {
  const BlockAverages avg = block_averages(f, p);
  double e = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      e += avg.measure[i] * avg.measure[j] * phi(avg.values(i, j));
  return e;
}

Matrix regularity_residual(const Kernel& f, const Partition& p) {
  const BlockAverages avg = block_averages(f, p);
  Matrix r(f.size(), f.size());
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y) {
      const double fp = avg.values(p.block_of(x), p.block_of(y));
      if (fp <= 1.0) r(x, y) = f(x, y) - fp;
    }
  return r;
}

void to_json(nlohmann::json& j, const RegularityOutcome& r) {
  j = nlohmann::json{{"parts", r.partition.size()},
                     {"blocks", r.partition.blocks()},
                     {"residual", r.residual},
                     {"iterations", r.iterations},
                     {"energy_trace", r.energy_trace},
                     {"converged", r.converged},
                     {"epsilon", r.epsilon},
                     {"mean", r.mean}};
}

RegularityOutcome weak_regularity(const Kernel& f, double eps, const RegularityOptions& opts) {
  if (!(eps > 0.0)) throw std::invalid_argument("regularity accuracy must be positive");
  RegularityOutcome out;
  out.epsilon = eps;
  out.mean = f.mean();
  out.partition = Partition::trivial(f.size());
  out.energy_trace.push_back(energy(f, out.partition));
  const std::size_t n = f.size();
  while (true) {
    const Matrix r = regularity_residual(f, out.partition);
    out.residual = cut_norm_auto(f.space(), f.space(), r, opts.restarts,
                                 mix_seed(opts.seed, out.iterations));
    if (out.residual.value <= eps) {
      out.converged = true;
      break;
    }
    if (out.iterations >= opts.budget) break;
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int x : out.residual.a) in_a[x] = 1;
    for (int y : out.residual.b) in_b[y] = 1;
    out.partition = out.partition.refine(in_a, in_b);
    const double e = energy(f, out.partition);
    const double gain = e - out.energy_trace.back();
    if (gain < eps * eps / 4.0 - kDensityTolerance) {
      throw std::logic_error("energy increment " + std::to_string(gain) + " below eps^2/4");
    }
    out.energy_trace.push_back(e);
    ++out.iterations;
  }
  return out;
}

RegularityOutcome weak_regularity_scaled(const Kernel& f, double k, double accuracy,
                                         const RegularityOptions& opts) {
  if (!(k > 0.0)) throw std::invalid_argument("scale K must be positive");
  return weak_regularity(f.scaled(1.0 / k), accuracy / k, opts);
}

bool within_regularity_bounds(const RegularityOutcome& r) {
  const double budget = r.mean / (r.epsilon * r.epsilon);
  const double log_parts = std::log2(static_cast<double>(r.partition.size()));
  return log_parts <= 32.0 * budget + kDensityTolerance &&
         static_cast<double>(r.iterations) <= 16.0 * budget + kDensityTolerance;
}

DefectSides defect_check(const std::vector<std::pair<double, double>>& distribution) {
  double total = 0.0, mean = 0.0;
  for (const auto& [x, q] : distribution) {
    if (x < 0.0 || q < 0.0) throw PreconditionError("defect_check needs nonnegative values and probabilities");
    total += q;
    mean += q * x;
  }
  if (std::abs(total - 1.0) > 1e-12) throw PreconditionError("probabilities must sum to 1");
  if (mean > 1.0 + 1e-12) throw PreconditionError("defect_check needs mean at most 1");
  double abs_dev = 0.0, e_phi = 0.0;
  for (const auto& [x, q] : distribution) {
    abs_dev += q * std::abs(x - mean);
    e_phi += q * phi(x);
  }
  return {abs_dev * abs_dev / 4.0, e_phi - phi(mean)};
}

}  // namespace sparsereg
