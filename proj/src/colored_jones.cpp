#include "mont/colored_jones.hpp"

#include <map>
#include <tuple>

#include "mont/quantum.hpp"

namespace mont {

unsigned long long domain_size(const MontesinosKnot& k, long long n) {
    const unsigned long long per = static_cast<unsigned long long>(n + 1);
    unsigned long long triples = 0;
    for (long long a0 = 0; a0 <= 2 * n; a0 += 2)
        for (long long b0 = 0; b0 <= 2 * n; b0 += 2)
            for (long long c0 = 0; c0 <= 2 * n; c0 += 2)
                if (is_admissible_triple(a0, b0, c0)) ++triples;
    unsigned long long tails = 1;
    for (int i = 0; i < k.m() + k.p() + k.q(); ++i) tails *= per;
    return triples * tails;
}

void enumerate_domain(const MontesinosKnot& k, long long n,
                      const std::function<void(const ColorAssignment&)>& visit) {
    ColorAssignment asg;
    asg.n = n;
    asg.a.assign(k.m() + 1, 0);
    asg.b.assign(k.p() + 1, 0);
    asg.c.assign(k.q() + 1, 0);
    // Odometer over all entries, lexicographic with the head colors outermost.
    std::vector<long long*> slots;
    for (auto* v : {&asg.a, &asg.b, &asg.c})
        for (auto& x : *v) slots.push_back(&x);
    while (true) {
        if (is_admissible_triple(asg.a[0], asg.b[0], asg.c[0])) visit(asg);
        size_t i = slots.size();
        while (true) {
            if (i == 0) return;
            --i;
            *slots[i] += 2;
            if (*slots[i] <= 2 * n) break;
            *slots[i] = 0;
        }
    }
}

namespace {

// Per-n caches; the same theta / 6j-quotient values recur across D_n.
struct Caches {
    std::map<std::tuple<long long, long long, long long>, LaurentPoly> theta3;
    std::map<std::tuple<long long, long long>, LaurentPoly> chain;  // delta(x,n,n,y,n,n)
    std::map<long long, LaurentPoly> theta_nn, delta_head_sq, ovalue;
    long long n;

    const LaurentPoly& theta_head(long long a, long long b, long long c) {
        auto key = std::make_tuple(a, b, c);
        auto it = theta3.find(key);
        if (it == theta3.end()) it = theta3.emplace(key, theta(a, b, c)).first;
        return it->second;
    }
    const LaurentPoly& delta_head2(long long a, long long b, long long c) {
        // only used keyed on (a,b,c); squares delta(a,b,c,n,n,n)
        auto key = a * 1000000 + b * 1000 + c;
        auto it = delta_head_sq.find(key);
        if (it == delta_head_sq.end()) {
            LaurentPoly d = delta6j(a, b, c, n, n, n);
            it = delta_head_sq.emplace(key, d * d).first;
        }
        return it->second;
    }
    const LaurentPoly& chain_delta(long long x, long long y) {
        auto key = std::make_tuple(x, y);
        auto it = chain.find(key);
        if (it == chain.end()) it = chain.emplace(key, delta6j(x, n, n, y, n, n)).first;
        return it->second;
    }
    const LaurentPoly& theta_with_nn(long long x) {
        auto it = theta_nn.find(x);
        if (it == theta_nn.end()) it = theta_nn.emplace(x, theta(x, n, n)).first;
        return it->second;
    }
    const LaurentPoly& o_value(long long x) {
        auto it = ovalue.find(x);
        if (it == ovalue.end()) it = ovalue.emplace(x, unknot_value(x)).first;
        return it->second;
    }
};

// Numerator of one assignment: everything in the summand except the
// theta(x, n, n)^{-1} factors. Individual summands are honest rational
// functions (e.g. the all-zero assignment contributes 1/[2]^{#entries} up
// to units); only the full sum is a Laurent polynomial. The caller tracks
// how many theta(x, n, n) factors each assignment owes and clears them
// with a single exact division of the common-denominator sum.
LaurentPoly assignment_numerator(const MontesinosKnot& k, const ColorAssignment& asg,
                                 Caches& cc) {
    LaurentPoly num = cc.theta_head(asg.a[0], asg.b[0], asg.c[0]);
    num = num * cc.delta_head2(asg.a[0], asg.b[0], asg.c[0]);
    if (num.is_zero()) return num;

    const std::vector<long long>* tails[3] = {&asg.a, &asg.b, &asg.c};
    const std::vector<long long>* coeffs[3] = {&k.r.entries, &k.s.entries, &k.t.entries};
    for (int w = 0; w < 3; ++w) {
        const auto& xs = *tails[w];
        const auto& ts = *coeffs[w];
        for (size_t i = 0; i + 1 < xs.size(); ++i) {
            num = num * cc.chain_delta(xs[i], xs[i + 1]);
            if (num.is_zero()) return num;
        }
        for (size_t i = 0; i < xs.size(); ++i) {
            num = num * framing_power(xs[i], ts[i]);
            num = num * cc.o_value(xs[i]);
        }
    }
    return num;
}

}  // namespace

LaurentPoly state_sum(const MontesinosKnot& k, long long n, const StateSumOptions& opts) {
    const unsigned long long size = domain_size(k, n);
    if (size > opts.max_assignments) throw BudgetExceeded(size);

    Caches cc;
    cc.n = n;

    // Common denominator: each of the (m+p+q+3) tail entries contributes one
    // theta(x, n, n)^{-1} with x in {0, 2, ..., 2n}. Scale every numerator by
    // the cofactor powers so all terms sit over D = prod_x theta(x,n,n)^E,
    // then divide the sum once at the end (exactly, by Costantino's
    // integrality of KTG evaluations).
    const int entries = k.m() + k.p() + k.q() + 3;
    std::vector<std::vector<LaurentPoly>> theta_pow(n + 1);
    for (long long h = 0; h <= n; ++h) {
        theta_pow[h].assign(entries + 1, LaurentPoly(BigInt(1)));
        for (int e = 1; e <= entries; ++e)
            theta_pow[h][e] = theta_pow[h][e - 1] * cc.theta_with_nn(2 * h);
    }

    // Partial sums per block, merged at the end; the block size must not
    // affect the result (associative merge).
    std::vector<LaurentPoly> blocks(1);
    unsigned long long count = 0;
    const unsigned long long bs = opts.block_size;
    std::vector<int> uses(n + 1);
    enumerate_domain(k, n, [&](const ColorAssignment& asg) {
        if (bs != 0 && count > 0 && count % bs == 0) blocks.emplace_back();
        ++count;
        LaurentPoly num = assignment_numerator(k, asg, cc);
        if (num.is_zero()) return;
        std::fill(uses.begin(), uses.end(), 0);
        for (const auto* tail : {&asg.a, &asg.b, &asg.c})
            for (long long x : *tail) ++uses[x / 2];
        for (long long h = 0; h <= n; ++h)
            if (uses[h] < entries) num = num * theta_pow[h][entries - uses[h]];
        blocks.back() += num;
    });
    LaurentPoly total;
    for (const auto& b : blocks) total += b;
    if (!total.is_zero()) {
        LaurentPoly denom(BigInt(1));
        for (long long h = 0; h <= n; ++h) denom = denom * theta_pow[h][entries];
        total = total.exact_div(denom);
    }

    const WritheFraming wf = writhe_and_framing(k);
    total = total * framing_power(n, wf.correction_exponent);
    if (n % 2 != 0) total = -total;
    return total;
}

}  // namespace mont
