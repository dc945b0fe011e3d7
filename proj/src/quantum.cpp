#include "mont/quantum.hpp"

#include <algorithm>
#include <mutex>

namespace mont {

bool is_admissible_triple(long long a, long long b, long long c) {
    if (a < 0 || b < 0 || c < 0) return false;
    if ((a + b + c) % 2 != 0) return false;
    return std::abs(a - b) <= c && c <= a + b;
}

LaurentPoly qint(long long k) {
    // [k] = sum_{i=0}^{k-1} v^{2k-2-4i}
    LaurentPoly p;
    for (long long i = 0; i < k; ++i) p += LaurentPoly::monomial(1, 2 * k - 2 - 4 * i);
    return p;
}

LaurentPoly qfact(long long k) {
    static std::vector<LaurentPoly> cache{LaurentPoly(BigInt(1))};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long long>(cache.size()) <= k)
        cache.push_back(cache.back() * qint(static_cast<long long>(cache.size())));
    return cache[k];
}

LaurentPoly qmultinomial(const std::vector<long long>& parts) {
    long long total = 0;
    for (long long a : parts) {
        if (a < 0) throw std::invalid_argument("negative multinomial part");
        total += a;
    }
    LaurentPoly r = qfact(total);
    for (long long a : parts) r = r.exact_div(qfact(a));
    return r;
}

LaurentPoly qbinomial(long long n, long long k) {
    if (k < 0 || k > n) return {};
    return qmultinomial({k, n - k});
}

LaurentPoly framing_power(long long a, long long w) {
    if ((a * w) % 2 != 0) throw OddFraming();
    // (sqrt(-1))^{-aw} = (-1)^{aw/2}; v-exponent -w*a*(a+2)/2 is integral here.
    const BigInt sign = (a * w / 2) % 2 == 0 ? 1 : -1;
    return LaurentPoly::monomial(sign, -w * a * (a + 2) / 2);
}

LaurentPoly unknot_value(long long k) {
    LaurentPoly p = qint(k + 1);
    return k % 2 == 0 ? p : -p;
}

LaurentPoly theta(long long a, long long b, long long c) {
    if (!is_admissible_triple(a, b, c)) throw Inadmissible();
    const long long h = (a + b + c) / 2;
    return unknot_value(h) * qmultinomial({(-a + b + c) / 2, (a - b + c) / 2, (a + b - c) / 2});
}

LaurentPoly delta6j(long long a, long long b, long long c, long long alpha, long long beta,
                    long long gamma) {
    const long long sums[4] = {a + b + c, a + beta + gamma, alpha + b + gamma, alpha + beta + c};
    for (long long s : sums)
        if (s % 2 != 0) throw Inadmissible();
    // z must keep each binomial's lower argument inside [0, upper].
    long long zmin = 0, zmax = 0;
    zmin = std::max({sums[0] / 2, sums[1] / 2, sums[2] / 2, sums[3] / 2});
    zmax = std::min({(b + c + beta + gamma) / 2, (a + c + alpha + gamma) / 2,
                     (a + b + alpha + beta) / 2});
    LaurentPoly total;
    for (long long z = zmin; z <= zmax; ++z) {
        LaurentPoly term = qbinomial(z + 1, sums[0] / 2 + 1);
        term = term * qbinomial((-a + b + c) / 2, z - sums[1] / 2);
        term = term * qbinomial((a - b + c) / 2, z - sums[2] / 2);
        term = term * qbinomial((a + b - c) / 2, z - sums[3] / 2);
        if ((z - sums[0] / 2) % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

long long d2_plus_f(long long a) { return -a * (a + 2); }

long long d2_plus_O(long long a) { return 4 * a; }

long long d2_plus_theta(long long a, long long b, long long c) {
    const long long s = a + b + c;
    return 2 * (a * (1 - a) + b * (1 - b) + c * (1 - c)) + s * s;
}

long long d2_plus_delta(long long a, long long b, long long c, long long alpha, long long beta,
                        long long gamma) {
    const long long twoM =
        a + b + c + alpha + beta + gamma - std::max({a + alpha, b + beta, c + gamma});
    // doubled g(n,k) = 2k(n-k) is (2k)(2n-2k)/2*... expressed on doubled args
    auto gg = [](long long twoN, long long twoK) { return twoK * (twoN - twoK); };
    return gg(twoM + 2, a + b + c + 2) + gg(-a + b + c, twoM - (a + beta + gamma)) +
           gg(a - b + c, twoM - (alpha + b + gamma)) + gg(a + b - c, twoM - (alpha + beta + c));
}

}  // namespace mont
