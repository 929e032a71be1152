#pragma once

#include <cstdint>
#include <string>

namespace gallai {

__extension__ using BigCount = unsigned __int128;

std::string to_decimal(BigCount value);

// Exact binomial coefficient; 0 when b < 0 or b > a. Throws GuardError on
// 64-bit overflow.
std::uint64_t binomial(std::int64_t a, std::int64_t b);

// Saturating forms used inside the piecewise star-count expressions: both
// evaluate to 0 whenever a < b.
std::uint64_t saturating_binomial(std::int64_t a, std::int64_t b);
std::int64_t saturating_difference(std::int64_t a, std::int64_t b);

BigCount factorial(int n);

// Stirling numbers of the second kind, S(n, k).
BigCount stirling2(int n, int k);

// Least n >= 1 with n(n-1)/2 >= k, and least n >= 1 with n*n >= k. Exact
// integer arithmetic.
std::int64_t least_complete_order(std::int64_t k);
std::int64_t ceil_sqrt(std::int64_t k);

}  // namespace gallai
