#include "apostol/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace apostol {

namespace {

// Pascal triangle shared across threads. Rows are appended whole under the
// exclusive lock and never modified afterwards.
class BinomialTable {
 public:
  Int get(int n, int k) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(rows_.size())) return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }
    grow(n);
    std::shared_lock lock(mutex_);
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }

  void grow(int max_n) {
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= max_n) {
      const size_t n = rows_.size();
      std::vector<Int> row(n + 1, Int(1));
      for (size_t k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
      rows_.push_back(std::move(row));
    }
  }

 private:
  std::shared_mutex mutex_;
  std::deque<std::vector<Int>> rows_;
};

BinomialTable& table() {
  static BinomialTable t;
  return t;
}

}  // namespace

Rational binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return Rational(0);
  return Rational(table().get(n, k));
}

void prewarm_binomials(int max_n) {
  if (max_n >= 0) table().grow(max_n);
}

Rational falling_factorial(const Rational& x, int n) {
  if (n < 0) throw std::invalid_argument("falling_factorial: negative n");
  Rational product(1);
  for (int i = 0; i < n; ++i) product *= x - Rational(i);
  return product;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative n");
  Int product(1);
  for (int i = 2; i <= n; ++i) product *= i;
  return Rational(product);
}

}  // namespace apostol
