#include "hcb/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace hcb {

SieveTable build_sieve(long long N) {
    if (N < 1) throw std::invalid_argument("sieve bound must be >= 1");
    SieveTable t;
    t.N = N;
    t.phi.assign(static_cast<std::size_t>(N) + 1, 0);
    t.mu.assign(static_cast<std::size_t>(N) + 1, 0);
    std::vector<long long> primes;
    t.phi[1] = 1;
    t.mu[1] = 1;
    for (long long i = 2; i <= N; ++i) {
        std::size_t ui = static_cast<std::size_t>(i);
        if (t.phi[ui] == 0) {
            primes.push_back(i);
            t.phi[ui] = i - 1;
            t.mu[ui] = -1;
        }
        for (long long p : primes) {
            if (p * i > N) break;
            std::size_t pi = static_cast<std::size_t>(p * i);
            if (i % p == 0) {
                t.phi[pi] = t.phi[ui] * p;
                t.mu[pi] = 0;
                break;
            }
            t.phi[pi] = t.phi[ui] * (p - 1);
            t.mu[pi] = -t.mu[ui];
        }
    }
    return t;
}

namespace {

std::vector<long long> divisors(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

BigInt int_pow(long long base, int exp) {
    BigInt r = 1, b = base;
    for (int i = 0; i < exp; ++i) r *= b;
    return r;
}

BigInt power_sum(long long k, int p) {
    BigInt s = 0;
    for (long long j = 1; j <= k; ++j) s += int_pow(j, p);
    return s;
}

}  // namespace

MobiusIdentityReport mobius_identity_check(const SieveTable& table, long long n) {
    if (n < 1 || n > table.N) throw std::invalid_argument("n outside sieve range");
    long long divisor_sum = 0;
    Rational weighted = 0;
    for (long long d : divisors(n)) {
        int mu = table.mu[static_cast<std::size_t>(d)];
        divisor_sum += mu;
        weighted += Rational(mu, d);
    }
    MobiusIdentityReport r;
    r.divisor_sum_ok = divisor_sum == (n == 1 ? 1 : 0);
    r.totient_ok = Rational(table.phi[static_cast<std::size_t>(n)], n) == weighted;
    return r;
}

BigInt coprime_power_sum_scan(long long l, int p) {
    if (l < 1 || p < 0) throw std::invalid_argument("bad coprime power sum arguments");
    BigInt s = 0;
    for (long long m = 1; m <= l; ++m)
        if (std::gcd(m, l) == 1) s += int_pow(m, p);
    return s;
}

BigInt coprime_power_sum_mobius(long long l, int p) {
    if (l < 1 || p < 0) throw std::invalid_argument("bad coprime power sum arguments");
    // mu restricted to divisors of l, via the squarefree part of each divisor
    BigInt s = 0;
    for (long long d : divisors(l)) {
        long long rest = d;
        int mu = 1;
        for (long long q = 2; q * q <= rest; ++q) {
            if (rest % q != 0) continue;
            rest /= q;
            if (rest % q == 0) {
                mu = 0;
                break;
            }
            mu = -mu;
        }
        if (mu == 0) continue;
        if (rest > 1) mu = -mu;
        s += BigInt(mu) * int_pow(d, p) * power_sum(l / d, p);
    }
    return s;
}

BigInt coprime_power_sum(long long l, int p) {
    BigInt scan = coprime_power_sum_scan(l, p);
    BigInt inv = coprime_power_sum_mobius(l, p);
    if (scan != inv) throw std::logic_error("coprime power sum routes disagree");
    return scan;
}

PartialSumRatio partial_sum_ratio(long long n, int p) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    // sum_{l<=n} S_l = sum_{d<=n} mu(d) d^p sum_{k<=n/d} (sum_{j<=k} j^p),
    // from S_l = sum_{d|l} mu(d) d^p PS(l/d) and swapping summation order.
    SieveTable t = build_sieve(n);
    std::vector<BigInt> pps(static_cast<std::size_t>(n) + 1);  // prefix of prefix power sums
    {
        BigInt ps = 0, total = 0;
        pps[0] = 0;
        for (long long k = 1; k <= n; ++k) {
            ps += int_pow(k, p);
            total += ps;
            pps[static_cast<std::size_t>(k)] = total;
        }
    }
    PartialSumRatio r;
    r.sum = 0;
    for (long long d = 1; d <= n; ++d) {
        int mu = t.mu[static_cast<std::size_t>(d)];
        if (mu == 0) continue;
        r.sum += BigInt(mu) * int_pow(d, p) * pps[static_cast<std::size_t>(n / d)];
    }
    r.ratio = Rational(r.sum, int_pow(n, p + 2));
    r.approx = r.ratio.convert_to<double>();
    return r;
}

}  // namespace hcb
