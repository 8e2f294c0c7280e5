// Sieved Euler totient and Moebius functions, their divisor-sum identities,
// and the coprime power sums S_l = sum of m^p over m <= l coprime to l.
#pragma once

#include <cstdint>
#include <vector>

#include "hcb/numeric.hpp"

namespace hcb {

struct SieveTable {
    long long N = 0;
    std::vector<long long> phi;  // phi[1..N]
    std::vector<int> mu;         // mu[1..N]
};

/// Linear sieve producing exact phi and mu up to N.
SieveTable build_sieve(long long N);

struct MobiusIdentityReport {
    bool divisor_sum_ok = false;  // sum_{d|n} mu(d) == [n == 1]
    bool totient_ok = false;      // phi(n)/n == sum_{d|n} mu(d)/d, exact rationals
};

MobiusIdentityReport mobius_identity_check(const SieveTable& table, long long n);

/// Direct scan: sum of m^p over m <= l with gcd(m, l) = 1.
BigInt coprime_power_sum_scan(long long l, int p);

/// Moebius-inversion route: sum_{d|l} mu(d) d^p sum_{k <= l/d} k^p.
BigInt coprime_power_sum_mobius(long long l, int p);

/// Computes both routes and requires exact agreement.
BigInt coprime_power_sum(long long l, int p);

struct PartialSumRatio {
    BigInt sum;      // sum_{l<=n} S_l
    Rational ratio;  // sum / n^{p+2}, reduced
    double approx = 0.0;
};

PartialSumRatio partial_sum_ratio(long long n, int p);

}  // namespace hcb
