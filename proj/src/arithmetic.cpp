#include "sparsereg/arithmetic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace sparsereg {

IntegerSet::IntegerSet(long long n, std::vector<long long> elements)
    : n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > n_) {
      throw std::invalid_argument("element " + std::to_string(elements_[i]) + " outside [1, " +
                                  std::to_string(n_) + "]");
    }
    if (i > 0 && elements_[i] == elements_[i - 1]) {
      throw std::invalid_argument("repeated element " + std::to_string(elements_[i]));
    }
  }
}

IntegerSet IntegerSet::full(long long n) {
  std::vector<long long> all(static_cast<std::size_t>(std::max(0LL, n)));
  std::iota(all.begin(), all.end(), 1LL);
  return IntegerSet(n, std::move(all));
}

bool IntegerSet::contains(long long x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

void EquationSpec::validate() const {
  if (coefficients.empty()) throw std::invalid_argument("equation needs at least one variable");
  for (long long a : coefficients)
    if (a == 0) throw std::invalid_argument("equation coefficients must be nonzero");
  for (const auto& p : trivial_patterns) {
    if (p.size() != coefficients.size()) {
      throw std::invalid_argument("pattern '" + p + "' does not match the " +
                                  std::to_string(coefficients.size()) + " variables");
    }
  }
}

bool EquationSpec::translation_invariant() const {
  return std::accumulate(coefficients.begin(), coefficients.end(), 0LL) == 0;
}

EquationSpec EquationSpec::sidon() { return {{1, 1, -1, -1}, {"xyxy", "xyyx"}}; }

EquationSpec EquationSpec::five_term_example() {
  return {{1, 1, 2, -1, -3}, {"xyyxy", "yxyxy"}};
}

EquationSpec EquationSpec::scaled_difference(long long a, long long b) {
  EquationSpec e{{a, -a, -b, b}, {"xxyy"}};
  if (a == b) e.trivial_patterns.push_back("xyxy");
  return e;
}

EquationSpec EquationSpec::weighted_average(const std::vector<long long>& weights) {
  EquationSpec e;
  e.coefficients = weights;
  e.coefficients.push_back(-std::accumulate(weights.begin(), weights.end(), 0LL));
  e.trivial_patterns.push_back(std::string(e.coefficients.size(), 'x'));
  return e;
}

void to_json(nlohmann::json& j, const EquationSpec& e) {
  j = nlohmann::json{{"coefficients", e.coefficients}, {"trivial_patterns", e.trivial_patterns}};
}

std::string to_string(SolutionFilter f) {
  switch (f) {
    case SolutionFilter::All: return "all";
    case SolutionFilter::Nontrivial: return "nontrivial";
    case SolutionFilter::DistinctVariables: return "distinct-variables";
  }
  return "unknown";
}

SolutionFilter parse_filter(const std::string& name) {
  if (name == "all") return SolutionFilter::All;
  if (name == "nontrivial") return SolutionFilter::Nontrivial;
  if (name == "distinct-variables" || name == "distinct") return SolutionFilter::DistinctVariables;
  throw std::invalid_argument("unknown solution filter: " + name);
}

namespace {

using u128 = unsigned __int128;

BigInt to_big(u128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(x);
}

// A variable after merging: coefficient (possibly zero) and its value set.
struct Term {
  long long coefficient;
  std::vector<long long> values;
};

void enumerate_sums(const std::vector<const Term*>& terms, std::size_t i, long long acc,
                    const std::function<void(long long)>& out) {
  if (i == terms.size()) {
    out(acc);
    return;
  }
  for (long long x : terms[i]->values) enumerate_sums(terms, i + 1, acc + terms[i]->coefficient * x, out);
}

u128 count_mitm(const std::vector<const Term*>& terms) {
  const std::size_t half = terms.size() / 2;
  std::vector<const Term*> left(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<const Term*> right(terms.begin() + static_cast<std::ptrdiff_t>(half), terms.end());
  std::unordered_map<long long, std::uint64_t> table;
  enumerate_sums(left, 0, 0, [&](long long s) { ++table[s]; });
  u128 total = 0;
  enumerate_sums(right, 0, 0, [&](long long s) {
    auto it = table.find(-s);
    if (it != table.end()) total += it->second;
  });
  return total;
}

// Product of the dilated indicator polynomials sum_x z^{a x}; the answer is
// the coefficient of z^0. Negative coefficients reflect the indicator.
u128 count_convolution(const std::vector<const Term*>& terms) {
  long long offset = 0;  // exponent of poly[0]
  std::vector<u128> poly{1};
  for (const Term* t : terms) {
    long long lo = t->coefficient * t->values.front();
    long long hi = t->coefficient * t->values.back();
    if (lo > hi) std::swap(lo, hi);
    std::vector<u128> next(poly.size() + static_cast<std::size_t>(hi - lo), 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      for (long long x : t->values) next[i + static_cast<std::size_t>(t->coefficient * x - lo)] += poly[i];
    }
    poly = std::move(next);
    offset += lo;
  }
  if (offset > 0 || -offset >= static_cast<long long>(poly.size())) return 0;
  return poly[static_cast<std::size_t>(-offset)];
}

BigInt count_terms(const std::vector<Term>& terms, CountEngine engine, bool cross_check) {
  BigInt factor = 1;
  std::vector<const Term*> active;
  for (const auto& t : terms) {
    if (t.values.empty()) return 0;
    if (t.coefficient == 0) {
      factor *= t.values.size();
    } else {
      active.push_back(&t);
    }
  }
  if (active.empty()) return factor;
  const u128 primary = engine == CountEngine::MeetInTheMiddle ? count_mitm(active) : count_convolution(active);
  if (cross_check) {
    const u128 other = engine == CountEngine::MeetInTheMiddle ? count_convolution(active) : count_mitm(active);
    if (other != primary) throw std::logic_error("solution-count engines disagree");
  }
  return factor * to_big(primary);
}

// Counts solutions with x_i = x_j whenever block[i] == block[j].
BigInt count_merged(const EquationSpec& eq, const std::vector<IntegerSet>& sets,
                    const std::vector<int>& block, CountEngine engine, bool cross_check) {
  std::map<int, Term> merged;
  for (std::size_t i = 0; i < block.size(); ++i) {
    auto [it, fresh] = merged.try_emplace(block[i], Term{0, sets[i].elements()});
    Term& t = it->second;
    t.coefficient += eq.coefficients[i];
    if (!fresh) {
      std::vector<long long> both;
      std::set_intersection(t.values.begin(), t.values.end(), sets[i].elements().begin(),
                            sets[i].elements().end(), std::back_inserter(both));
      t.values = std::move(both);
    }
  }
  std::vector<Term> terms;
  for (auto& [b, t] : merged) terms.push_back(std::move(t));
  return count_terms(terms, engine, cross_check);
}

std::vector<int> pattern_blocks(const std::string& pattern) {
  std::vector<int> block(pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i) block[i] = static_cast<unsigned char>(pattern[i]);
  return block;
}

// Finest partition coarser than every given labelling.
std::vector<int> join_blocks(const std::vector<std::vector<int>>& labellings, std::size_t k) {
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& lab : labellings)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (lab[i] == lab[j]) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::vector<int> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = find(static_cast<int>(i));
  return out;
}

// Restricted growth strings enumerate the set partitions of {0, ..., k-1}.
void for_each_set_partition(std::size_t k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> rgs(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int max_label) {
    if (i == k) {
      visit(rgs);
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      rgs[i] = l;
      rec(i + 1, std::max(max_label, l));
    }
  };
  if (k == 0) {
    visit(rgs);
    return;
  }
  rgs[0] = 0;
  rec(1, 0);
}

BigInt factorial(long long m) {
  BigInt f = 1;
  for (long long i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

BigInt count_solutions(const EquationSpec& eq, const std::vector<IntegerSet>& sets,
                       SolutionFilter filter, bool cross_check, CountEngine engine) {
  eq.validate();
  if (sets.size() != eq.arity()) {
    throw std::invalid_argument("expected " + std::to_string(eq.arity()) + " sets, got " +
                                std::to_string(sets.size()));
  }
  const std::size_t k = eq.arity();
  std::vector<int> identity(k);
  std::iota(identity.begin(), identity.end(), 0);
  const BigInt all = count_merged(eq, sets, identity, engine, cross_check);
  switch (filter) {
    case SolutionFilter::All:
      return all;
    case SolutionFilter::Nontrivial: {
      // Inclusion-exclusion over the union of the trivial shapes.
      const std::size_t m = eq.trivial_patterns.size();
      if (m > 20) throw std::invalid_argument("too many trivial patterns");
      BigInt trivial = 0;
      for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<std::vector<int>> chosen;
        for (std::size_t i = 0; i < m; ++i)
          if (mask >> i & 1U) chosen.push_back(pattern_blocks(eq.trivial_patterns[i]));
        const BigInt c = count_merged(eq, sets, join_blocks(chosen, k), engine, cross_check);
        if (chosen.size() % 2 == 1) trivial += c; else trivial -= c;
      }
      return all - trivial;
    }
    case SolutionFilter::DistinctVariables: {
      // Moebius inversion on the partition lattice: mu(0, pi) is the product
      // over blocks B of (-1)^{|B|-1} (|B|-1)!.
      BigInt total = 0;
      for_each_set_partition(k, [&](const std::vector<int>& rgs) {
        std::map<int, long long> sizes;
        for (int b : rgs) ++sizes[b];
        BigInt mu = 1;
        for (auto [b, s] : sizes) {
          mu *= factorial(s - 1);
          if ((s - 1) % 2 == 1) mu = -mu;
        }
        total += mu * count_merged(eq, sets, rgs, engine, cross_check);
      });
      return total;
    }
  }
  return all;
}

BigInt count_solutions(const EquationSpec& eq, const IntegerSet& x, SolutionFilter filter,
                       bool cross_check, CountEngine engine) {
  return count_solutions(eq, std::vector<IntegerSet>(eq.arity(), x), filter, cross_check, engine);
}

bool is_sidon(const IntegerSet& x) {
  std::set<long long> sums;
  const auto& e = x.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j)
      if (!sums.insert(e[i] + e[j]).second) return false;
  return true;
}

BigInt additive_energy(const IntegerSet& x) {
  std::unordered_map<long long, std::uint64_t> r;
  for (long long a : x.elements())
    for (long long b : x.elements()) ++r[a + b];
  BigInt total = 0;
  for (const auto& [s, c] : r) total += BigInt(c) * c;
  return total;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

IntegerSet erdos_turan_sidon(long long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::vector<long long> out;
  for (long long i = 0; i < p; ++i) out.push_back(2 * p * i + (i * i) % p + 1);
  return IntegerSet(2 * p * p, std::move(out));
}

IntegerSet behrend_avoiding(long long n, const EquationSpec& eq) {
  eq.validate();
  const std::size_t k = eq.arity();
  long long s = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (eq.coefficients[i] <= 0) {
      throw std::invalid_argument("Behrend construction needs positive left-hand coefficients");
    }
    s += eq.coefficients[i];
  }
  if (k < 3 || eq.coefficients[k - 1] != -s) {
    throw std::invalid_argument(
        "Behrend construction needs a_1 x_1 + ... + a_m x_m = (a_1 + ... + a_m) x_{m+1}");
  }
  if (n < 1) return IntegerSet(n, {});
  // Digits below `m` in base B = s(m-1)+1 add without carries, so an
  // equation between elements becomes the same equation on digit vectors.
  // Vectors on a common sphere then force all variables to agree.
  std::vector<long long> best{1};
  for (long long m = 2;; ++m) {
    const long long base = s * (m - 1) + 1;
    if (base > n) break;
    for (int d = 2;; ++d) {
      // Smallest value with d digits is base^{d-1}.
      long long lowest = 1;
      bool too_big = false;
      for (int j = 0; j + 1 < d; ++j) {
        if (lowest > n / base) { too_big = true; break; }
        lowest *= base;
      }
      if (too_big || lowest + 1 > n) break;
      std::map<long long, std::vector<long long>> spheres;
      std::function<void(int, long long, long long, long long)> rec =
          [&](int pos, long long value, long long place, long long radius) {
            if (pos == d) {
              spheres[radius].push_back(value + 1);
              return;
            }
            for (long long digit = 0; digit < m; ++digit) {
              const long long v = value + digit * place;
              if (v + 1 > n) break;
              rec(pos + 1, v, pos + 1 < d ? place * base : place, radius + digit * digit);
            }
          };
      rec(0, 0, 1, 0);
      for (auto& [r, pts] : spheres) {
        if (pts.size() > best.size()) best = pts;
      }
    }
  }
  return IntegerSet(n, std::move(best));
}

bool satisfies(const IntegerSet& x, const std::vector<Constraint>& constraints) {
  for (const auto& c : constraints)
    if (count_solutions(c.equation, x, c.filter) != 0) return false;
  return true;
}

IntegerSet greedy_avoider(long long n, const std::vector<Constraint>& constraints) {
  std::vector<long long> chosen;
  for (long long y = 1; y <= n; ++y) {
    chosen.push_back(y);
    if (!satisfies(IntegerSet(n, chosen), constraints)) chosen.pop_back();
  }
  return IntegerSet(n, std::move(chosen));
}

std::vector<Constraint> c5_construction_constraints() {
  const long long scales[] = {1, 2, 3, 4, 10};
  std::vector<Constraint> out;
  // (a, b) and (b, a) give the same equation up to renaming variables.
  for (long long a : scales)
    for (long long b : scales)
      if (a <= b) out.push_back({EquationSpec::scaled_difference(a, b), SolutionFilter::Nontrivial});
  out.push_back({EquationSpec::weighted_average({1, 2, 3, 4}), SolutionFilter::Nontrivial});
  return out;
}

}  // namespace sparsereg
