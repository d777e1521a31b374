#pragma once

#include <compare>
#include <cstdint>

namespace misbound {

/// Largest n accepted by the bound functions. g(120) = 3^40 still fits in 64 bits.
inline constexpr int kBoundGuard = 120;

/// The Moon-Moser function: the maximum number of maximal independent sets
/// over all n-vertex graphs.
///
///   n = 0 (mod 3): 3^(n/3)
///   n = 1 (mod 3): 4 * 3^((n-4)/3)
///   n = 2 (mod 3): 2 * 3^((n-2)/3)
///
/// with g(0) = g(1) = 1, the number of maximal independent sets of the null
/// graph and of K_1. Throws CapacityError for n > kBoundGuard and
/// DomainError for n < 0.
std::uint64_t moon_moser_bound(int n);

/// 4 * 3^((n-4)/3) <= g(n) <= 3^(n/3), decided by cubing all three terms.
/// Requires n >= 4.
bool sandwich_check(int n);

/// g(k) <= g(k+1) for every 0 <= k < n_max.
bool g_is_nondecreasing(int n_max);

/// (d+1) * g(n-d-1): the branching estimate for a graph whose minimum degree
/// is d. Requires 0 <= d and d + 1 <= n.
std::uint64_t branch_bound(int n, int d);

/// Largest product of positive integers summing to n, by dynamic programming.
std::uint64_t max_product_partition(int n);

// Per-case inequalities of the inductive argument. Each returns how the left
// side compares to the right side; comparisons with fractional exponents of 3
// are decided in exact integers after cubing both sides.

/// (d+1) * 3^((n-d-1)/3)  vs  4 * 3^((n-4)/3), for 3 <= d < n. Never greater.
std::strong_ordering high_degree_case(int n, int d);
/// 3 * g(n-3)  vs  g(n), n >= 3. Equal everywhere except n = 4, where
/// g(1) = 1 makes it less.
std::strong_ordering degree_two_case(int n);
/// 2 * g(n-2)  vs  g(n), n >= 2. Equal for n = 1, 2 (mod 3), less for n = 0 (mod 3).
std::strong_ordering degree_one_case(int n);

} // namespace misbound
