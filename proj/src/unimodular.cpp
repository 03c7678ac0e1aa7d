#include <cstdlib>
#include <numeric>
#include <utility>

#include "flowkit/error.hpp"
#include "flowkit/lp.hpp"

namespace flowkit {

long determinant(const IntMatrix& input) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw FlowError(ErrorCode::kMalformed, "determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<long>> a(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = input(i, j);
  long sign = 1;
  long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

/// Calls f on each k-subset of {0..n-1} in lexicographic order; stops early
/// when f returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TUResult is_totally_unimodular(const IntMatrix& m, std::uint64_t budget) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > 1) return {false, Submatrix{{i}, {j}, m(i, j)}};

  const std::size_t limit = std::min(m.rows(), m.cols());
  double total = 0;
  for (std::size_t k = 1; k <= limit; ++k) total += binomial(m.rows(), k) * binomial(m.cols(), k);
  if (total > static_cast<double>(budget))
    throw FlowError(ErrorCode::kBudgetExceeded, "too many square submatrices to enumerate");

  TUResult result;
  for (std::size_t k = 2; k <= limit && result.unimodular; ++k) {
    IntMatrix sub(k, k);
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        const long det = determinant(sub);
        if (det >= -1 && det <= 1) return false;
        result = {false, Submatrix{rows, cols, det}};
        return true;
      });
    });
  }
  return result;
}

}  // namespace flowkit
