#include "gallai/combinatorics.hpp"

#include <algorithm>
#include <vector>

#include "gallai/error.hpp"

namespace gallai {

std::string to_decimal(BigCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::uint64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigCount result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result = result * static_cast<BigCount>(a - b + i) / static_cast<BigCount>(i);
    if (result > UINT64_MAX) {
      throw GuardError("binomial overflow: C(" + std::to_string(a) + "," +
                       std::to_string(b) + ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t saturating_binomial(std::int64_t a, std::int64_t b) {
  return a < b ? 0 : binomial(a, b);
}

std::int64_t saturating_difference(std::int64_t a, std::int64_t b) {
  return a < b ? 0 : a - b;
}

BigCount factorial(int n) {
  if (n < 0) throw ValidationError("factorial of negative number");
  if (n > 34) throw GuardError("factorial guard: n = " + std::to_string(n) + " exceeds 34");
  BigCount result = 1;
  for (int i = 2; i <= n; ++i) result *= static_cast<BigCount>(i);
  return result;
}

BigCount stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (n > 64) throw GuardError("stirling guard: n = " + std::to_string(n) + " exceeds 64");
  // Row-by-row recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1).
  std::vector<BigCount> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = static_cast<BigCount>(j) * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

std::int64_t least_complete_order(std::int64_t k) {
  std::int64_t n = 1;
  while (n * (n - 1) / 2 < k) ++n;
  return n;
}

std::int64_t ceil_sqrt(std::int64_t k) {
  std::int64_t n = 1;
  while (n * n < k) ++n;
  return n;
}

}  // namespace gallai
