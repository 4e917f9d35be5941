#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "greynoise/rational.hpp"

namespace greynoise {

// Finitely supported sequence of nonnegative integers. Trailing zeros are
// trimmed so that equal multi-indices compare equal regardless of how they
// were built. Variable positions are 0-based in code.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);

  // index with a single 1 at position j
  static MultiIndex unit(int j);

  int operator[](std::size_t j) const {
    return j < entries_.size() ? entries_[j] : 0;
  }
  const std::vector<int>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  int degree() const;
  bool empty() const { return entries_.empty(); }

  MultiIndex plus(const MultiIndex& other) const;
  // component-wise difference; returns false if any entry would go negative
  bool minus(const MultiIndex& other, MultiIndex& out) const;
  MultiIndex incremented(int j) const;   // gamma + e_j
  MultiIndex decremented(int j) const;   // gamma - e_j, requires gamma_j > 0

  bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
  // graded lexicographic: lower degree first, then lexicographically larger
  // leading entries first within a degree ((2,0) before (1,1) before (0,2))
  bool graded_less(const MultiIndex& o) const;

  // total order usable as a map key (same as graded_less)
  bool operator<(const MultiIndex& o) const { return graded_less(o); }

private:
  std::vector<int> entries_;
};

// All gamma with support in the first d variables and |gamma| = n, in graded
// lexicographic order. Count is C(n+d-1, d-1).
std::vector<MultiIndex> enumerate_graded(int d, int n);

// As above for all degrees 0..n (graded order across degrees).
std::vector<MultiIndex> enumerate_up_to(int d, int n);

// Symmetric assignment beta_{i,j} (i <= j stored) of pair counts solving
//   gamma_j = 2 beta_{j,j} + sum_{i != j} beta_{i,j}.
struct PairAssignment {
  // key: (i, j) with i <= j, 0-based; value: beta_{i,j} > 0
  std::map<std::pair<int, int>, int> beta;

  int total() const;                      // |beta| = sum over stored cells
  int off_diagonal_count() const;         // sum of beta_{i,j} with i < j
  bool operator==(const PairAssignment& o) const { return beta == o.beta; }
};

// Exhaustive solution list of the system above; empty iff |gamma| odd.
// Every solution has total() == degree/2. Deterministic order.
std::vector<PairAssignment> solve_diophantine(const MultiIndex& gamma);

// n! / prod(parts!) as an exact integer; throws if sum(parts) != n.
BigInt multinomial(int n, const std::vector<int>& parts);

// binomial via multinomial
BigInt binomial(int n, int k);

} // namespace greynoise
