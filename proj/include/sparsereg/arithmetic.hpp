#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparsereg/common.hpp"

namespace sparsereg {

// Sorted distinct integers in [1, n].
class IntegerSet {
 public:
  IntegerSet() = default;
  // Throws std::invalid_argument for repeated or out-of-range elements.
  IntegerSet(long long n, std::vector<long long> elements);

  static IntegerSet full(long long n);

  long long bound() const noexcept { return n_; }
  const std::vector<long long>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(long long x) const;

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  long long n_ = 0;
  std::vector<long long> elements_;
};

// Linear equation a_1 x_1 + ... + a_k x_k = 0 together with its trivial
// solution shapes. A pattern is a k-letter word; a solution matches it when
// positions carrying the same letter hold equal values (different letters
// may still coincide).
struct EquationSpec {
  std::vector<long long> coefficients;
  std::vector<std::string> trivial_patterns;

  // Throws std::invalid_argument on zero coefficients or patterns whose
  // length differs from the number of variables.
  void validate() const;
  std::size_t arity() const { return coefficients.size(); }
  bool translation_invariant() const;

  // x_1 + x_2 = x_3 + x_4, trivial when {x_1, x_2} = {x_3, x_4}.
  static EquationSpec sidon();
  // x_1 + x_2 + 2 x_3 = x_4 + 3 x_5 with trivial shapes (x,y,y,x,y), (y,x,y,x,y).
  static EquationSpec five_term_example();
  // a (x_1 - x_2) = b (x_3 - x_4); trivial when x_1 = x_2 and x_3 = x_4, and
  // also when (x_1, x_2) = (x_3, x_4) if a = b.
  static EquationSpec scaled_difference(long long a, long long b);
  // a_1 x_1 + ... + a_m x_m = (a_1 + ... + a_m) x_{m+1}; trivial only when
  // all variables agree.
  static EquationSpec weighted_average(const std::vector<long long>& weights);
};

void to_json(nlohmann::json& j, const EquationSpec& e);

enum class SolutionFilter { All, Nontrivial, DistinctVariables };

std::string to_string(SolutionFilter f);
SolutionFilter parse_filter(const std::string& name);

enum class CountEngine { MeetInTheMiddle, Convolution };

// Number of (x_1, ..., x_k) in sets[0] x ... x sets[k-1] solving the
// equation, restricted by the filter. With cross_check both engines run and a
// disagreement throws std::logic_error.
BigInt count_solutions(const EquationSpec& eq, const std::vector<IntegerSet>& sets,
                       SolutionFilter filter, bool cross_check = false,
                       CountEngine engine = CountEngine::MeetInTheMiddle);

// Same set for every variable.
BigInt count_solutions(const EquationSpec& eq, const IntegerSet& x, SolutionFilter filter,
                       bool cross_check = false, CountEngine engine = CountEngine::MeetInTheMiddle);

bool is_sidon(const IntegerSet& x);
// Number of (x_1, x_2, x_3, x_4) in X^4 with x_1 + x_2 = x_3 + x_4.
BigInt additive_energy(const IntegerSet& x);

bool is_prime(long long p);

// {2 p i + (i^2 mod p) + 1 : 0 <= i < p} inside [1, 2 p^2]. Throws
// std::invalid_argument for non-prime p.
IntegerSet erdos_turan_sidon(long long p);

// Digit-sphere set in [1, n] with no non-constant solution of a weighted
// average equation (see EquationSpec::weighted_average). Throws
// std::invalid_argument when eq is not of that form.
IntegerSet behrend_avoiding(long long n, const EquationSpec& eq);

struct Constraint {
  EquationSpec equation;
  SolutionFilter filter = SolutionFilter::Nontrivial;
};

// Scans 1..n and keeps y whenever X + {y} still has no solution counted by
// any constraint.
IntegerSet greedy_avoider(long long n, const std::vector<Constraint>& constraints);

// True when X has no solution counted by any constraint.
bool satisfies(const IntegerSet& x, const std::vector<Constraint>& constraints);

// The two requirements on X in the explicit C5 construction: no nontrivial
// solution of a(x_1 - x_2) = b(x_3 - x_4) for a, b in {1, 2, 3, 4, 10}, and no
// solution of x_1 + 2x_2 + 3x_3 + 4x_4 = 10x_5 other than x_1 = ... = x_5.
std::vector<Constraint> c5_construction_constraints();

}  // namespace sparsereg
