#include "misbound/bound.hpp"

#include "misbound/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>
#include <vector>

namespace misbound {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void check_guard(int n)
{
    if (n < 0) throw DomainError("negative vertex count " + std::to_string(n));
    if (n > kBoundGuard)
        throw CapacityError("n = " + std::to_string(n) + " exceeds the overflow guard " +
                            std::to_string(kBoundGuard));
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw CapacityError("64-bit overflow");
    return out;
}

std::uint64_t pow3(int e)
{
    std::uint64_t out = 1;
    for (int i = 0; i < e; ++i) out = checked_mul(out, 3);
    return out;
}

BigInt big_pow3(int e)
{
    return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(e));
}

// coeff * 3^(e/3), cubed: coeff^3 * 3^e.
BigInt cubed(std::uint64_t coeff, int e)
{
    BigInt c(coeff);
    return c * c * c * big_pow3(e);
}

std::strong_ordering compare(const BigInt& a, const BigInt& b)
{
    return a < b ? std::strong_ordering::less
                 : (b < a ? std::strong_ordering::greater : std::strong_ordering::equal);
}

} // namespace

std::uint64_t moon_moser_bound(int n)
{
    check_guard(n);
    if (n <= 1) return 1;
    switch (n % 3) {
    case 0: return pow3(n / 3);
    case 1: return checked_mul(4, pow3((n - 4) / 3));
    default: return checked_mul(2, pow3((n - 2) / 3));
    }
}

bool sandwich_check(int n)
{
    check_guard(n);
    if (n < 4) throw DomainError("sandwich inequality needs n >= 4");
    const BigInt lower = cubed(4, n - 4);
    const BigInt middle = cubed(moon_moser_bound(n), 0);
    const BigInt upper = big_pow3(n);
    return lower <= middle && middle <= upper;
}

bool g_is_nondecreasing(int n_max)
{
    check_guard(n_max);
    for (int k = 0; k < n_max; ++k)
        if (moon_moser_bound(k) > moon_moser_bound(k + 1)) return false;
    return true;
}

std::uint64_t branch_bound(int n, int d)
{
    check_guard(n);
    if (d < 0 || d + 1 > n)
        throw DomainError("branch bound needs 0 <= d and d + 1 <= n (n = " + std::to_string(n) +
                          ", d = " + std::to_string(d) + ")");
    return checked_mul(static_cast<std::uint64_t>(d + 1), moon_moser_bound(n - d - 1));
}

std::uint64_t max_product_partition(int n)
{
    check_guard(n);
    if (n < 1) throw DomainError("max product partition needs n >= 1");
    // best[k] is the largest product of a partition of k; best[0] = 1 is the
    // empty product so that a single part p contributes p * best[0].
    std::vector<std::uint64_t> best(static_cast<std::size_t>(n) + 1, 0);
    best[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int part = 1; part <= k; ++part) {
            const auto candidate =
                checked_mul(static_cast<std::uint64_t>(part), best[static_cast<std::size_t>(k - part)]);
            if (candidate > best[static_cast<std::size_t>(k)]) best[static_cast<std::size_t>(k)] = candidate;
        }
    return best[static_cast<std::size_t>(n)];
}

std::strong_ordering high_degree_case(int n, int d)
{
    check_guard(n);
    if (d < 3 || d >= n) throw DomainError("high-degree case needs 3 <= d < n");
    return compare(cubed(static_cast<std::uint64_t>(d + 1), n - d - 1), cubed(4, n - 4));
}

std::strong_ordering degree_two_case(int n)
{
    check_guard(n);
    if (n < 3) throw DomainError("degree-two case needs n >= 3");
    return compare(BigInt(3) * moon_moser_bound(n - 3), BigInt(moon_moser_bound(n)));
}

std::strong_ordering degree_one_case(int n)
{
    check_guard(n);
    if (n < 2) throw DomainError("degree-one case needs n >= 2");
    return compare(BigInt(2) * moon_moser_bound(n - 2), BigInt(moon_moser_bound(n)));
}

} // namespace misbound
