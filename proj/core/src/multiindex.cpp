#include "greynoise/multiindex.hpp"

#include <numeric>
#include <stdexcept>

namespace greynoise {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("MultiIndex: negative entry");
  }
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

MultiIndex MultiIndex::unit(int j) {
  std::vector<int> e(j + 1, 0);
  e[j] = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  std::vector<int> e(std::max(entries_.size(), other.entries_.size()), 0);
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = (*this)[j] + other[j];
  return MultiIndex(std::move(e));
}

bool MultiIndex::minus(const MultiIndex& other, MultiIndex& out) const {
  std::vector<int> e(std::max(entries_.size(), other.entries_.size()), 0);
  for (std::size_t j = 0; j < e.size(); ++j) {
    e[j] = (*this)[j] - other[j];
    if (e[j] < 0) return false;
  }
  out = MultiIndex(std::move(e));
  return true;
}

MultiIndex MultiIndex::incremented(int j) const {
  std::vector<int> e = entries_;
  if (static_cast<std::size_t>(j) >= e.size()) e.resize(j + 1, 0);
  ++e[j];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::decremented(int j) const {
  if ((*this)[j] == 0) throw std::invalid_argument("MultiIndex: entry already zero");
  std::vector<int> e = entries_;
  --e[j];
  return MultiIndex(std::move(e));
}

bool MultiIndex::graded_less(const MultiIndex& o) const {
  const int da = degree(), db = o.degree();
  if (da != db) return da < db;
  const std::size_t n = std::max(entries_.size(), o.entries_.size());
  for (std::size_t j = 0; j < n; ++j) {
    if ((*this)[j] != o[j]) return (*this)[j] > o[j];
  }
  return false;
}

namespace {

void enumerate_rec(int d, int n, std::vector<int>& acc,
                   std::vector<MultiIndex>& out) {
  if (d == 1) {
    acc.push_back(n);
    out.emplace_back(acc);
    acc.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    acc.push_back(k);
    enumerate_rec(d - 1, n - k, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<MultiIndex> enumerate_graded(int d, int n) {
  if (d < 1) throw std::invalid_argument("enumerate_graded: requires d >= 1");
  if (n < 0) throw std::invalid_argument("enumerate_graded: requires n >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> acc;
  enumerate_rec(d, n, acc, out);
  return out;
}

std::vector<MultiIndex> enumerate_up_to(int d, int n) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= n; ++k) {
    auto level = enumerate_graded(d, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

int PairAssignment::total() const {
  int t = 0;
  for (const auto& [ij, v] : beta) t += v;
  return t;
}

int PairAssignment::off_diagonal_count() const {
  int t = 0;
  for (const auto& [ij, v] : beta) {
    if (ij.first != ij.second) t += v;
  }
  return t;
}

namespace {

// Depth-first assignment over the upper triangle, row by row. Cell (i, j)
// with i < j consumes one unit of both row budgets per count; (i, i)
// consumes two of row i. After the last cell of row i the budget r_i must
// be exactly zero, which forces the final off-diagonal cell of each row and
// prunes aggressively.
void solve_rec(int d, int i, int j, std::vector<int>& budget,
               PairAssignment& current, std::vector<PairAssignment>& out) {
  if (i == d) {
    out.push_back(current);
    return;
  }
  const int next_i = (j == d - 1) ? i + 1 : i;
  const int next_j = (j == d - 1) ? next_i : j + 1;

  if (i == j) {
    if (i == d - 1) {
      // single final cell: 2 beta = budget
      if (budget[i] % 2 == 0) {
        const int v = budget[i] / 2;
        if (v > 0) current.beta[{i, j}] = v;
        budget[i] = 0;
        solve_rec(d, d, d, budget, current, out);
        budget[i] = 2 * v;
        if (v > 0) current.beta.erase({i, j});
      }
      return;
    }
    for (int v = 0; 2 * v <= budget[i]; ++v) {
      if (v > 0) current.beta[{i, j}] = v;
      budget[i] -= 2 * v;
      solve_rec(d, next_i, next_j, budget, current, out);
      budget[i] += 2 * v;
      if (v > 0) current.beta.erase({i, j});
    }
    return;
  }

  if (j == d - 1) {
    // last cell in row i: forced value
    const int v = budget[i];
    if (v <= budget[j]) {
      if (v > 0) current.beta[{i, j}] = v;
      budget[i] = 0;
      budget[j] -= v;
      solve_rec(d, next_i, next_j, budget, current, out);
      budget[j] += v;
      budget[i] = v;
      if (v > 0) current.beta.erase({i, j});
    }
    return;
  }

  const int vmax = std::min(budget[i], budget[j]);
  for (int v = 0; v <= vmax; ++v) {
    if (v > 0) current.beta[{i, j}] = v;
    budget[i] -= v;
    budget[j] -= v;
    solve_rec(d, next_i, next_j, budget, current, out);
    budget[i] += v;
    budget[j] += v;
    if (v > 0) current.beta.erase({i, j});
  }
}

} // namespace

std::vector<PairAssignment> solve_diophantine(const MultiIndex& gamma) {
  std::vector<PairAssignment> out;
  if (gamma.degree() % 2 != 0) return out;
  const int d = static_cast<int>(gamma.support_size());
  if (d == 0) {
    out.emplace_back();   // empty assignment solves the zero system
    return out;
  }
  std::vector<int> budget(gamma.entries().begin(), gamma.entries().end());
  PairAssignment current;
  if (d == 1) {
    // gamma_1 = 2 beta_{1,1}
    if (budget[0] % 2 == 0) {
      if (budget[0] > 0) current.beta[{0, 0}] = budget[0] / 2;
      out.push_back(current);
    }
    return out;
  }
  solve_rec(d, 0, 0, budget, current, out);
  return out;
}

BigInt multinomial(int n, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  BigInt r = factorial(n);
  for (int p : parts) r /= factorial(p);
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return multinomial(n, {k, n - k});
}

} // namespace greynoise
