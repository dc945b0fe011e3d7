#include "mont/jones_slope.hpp"

#include <algorithm>

#include "mont/quantum.hpp"

namespace mont {

namespace {

// Doubled-value degree tables for one (knot, n) pair; keeps the inner loop of
// the lattice maximization in plain integers.
struct PhiTables {
    long long n;
    long long base;                                        // W * d2f(n)
    std::vector<std::vector<std::vector<long long>>> term; // [string][index][x/2]
    std::vector<std::vector<long long>> chain;             // [x/2][y/2]
    const MontesinosKnot* k;

    PhiTables(const MontesinosKnot& knot, long long n_) : n(n_), k(&knot) {
        const WritheFraming wf = writhe_and_framing(knot);
        base = wf.correction_exponent * d2_plus_f(n);
        const size_t vals = static_cast<size_t>(n) + 1;
        chain.assign(vals, std::vector<long long>(vals));
        for (size_t x = 0; x < vals; ++x)
            for (size_t y = 0; y < vals; ++y)
                chain[x][y] = d2_plus_delta(2 * x, n, n, 2 * y, n, n);
        const std::vector<long long>* coeffs[3] = {&knot.r.entries, &knot.s.entries,
                                                   &knot.t.entries};
        term.resize(3);
        for (int w = 0; w < 3; ++w) {
            term[w].resize(coeffs[w]->size());
            for (size_t i = 0; i < coeffs[w]->size(); ++i) {
                term[w][i].resize(vals);
                for (size_t x = 0; x < vals; ++x) {
                    const long long col = 2 * static_cast<long long>(x);
                    term[w][i][x] = (*coeffs[w])[i] * d2_plus_f(col) + d2_plus_O(col) -
                                    d2_plus_theta(col, n, n);
                }
            }
        }
    }

    long long phi2(const ColorAssignment& asg) const {
        long long v = base + d2_plus_theta(asg.a[0], asg.b[0], asg.c[0]) +
                      2 * d2_plus_delta(asg.a[0], asg.b[0], asg.c[0], n, n, n);
        const std::vector<long long>* tails[3] = {&asg.a, &asg.b, &asg.c};
        for (int w = 0; w < 3; ++w) {
            const auto& xs = *tails[w];
            for (size_t i = 0; i + 1 < xs.size(); ++i) v += chain[xs[i] / 2][xs[i + 1] / 2];
            for (size_t i = 0; i < xs.size(); ++i) v += term[w][i][xs[i] / 2];
        }
        return v;
    }
};

}  // namespace

Rational phi(const MontesinosKnot& k, const ColorAssignment& asg) {
    for (const auto* xs : {&asg.a, &asg.b, &asg.c})
        for (long long x : *xs)
            if (x < 0 || x > 2 * asg.n || x % 2 != 0)
                throw std::invalid_argument("color outside D_n");
    if (!is_admissible_triple(asg.a[0], asg.b[0], asg.c[0]))
        throw std::invalid_argument("head triple not triangle-admissible");
    PhiTables tab(k, asg.n);
    return Rational(tab.phi2(asg), 2);
}

MaxResult brute_force_max_phi(const MontesinosKnot& k, long long n,
                              unsigned long long max_assignments) {
    if (domain_size(k, n) > max_assignments) throw BudgetExceeded(domain_size(k, n));
    PhiTables tab(k, n);
    bool have = false;
    long long best = 0;
    MaxResult res;
    ColorAssignment asg;
    asg.n = n;
    asg.a.assign(k.m() + 1, 0);
    asg.b.assign(k.p() + 1, 0);
    asg.c.assign(k.q() + 1, 0);
    std::vector<long long*> slots;
    for (auto* v : {&asg.a, &asg.b, &asg.c})
        for (auto& x : *v) slots.push_back(&x);
    while (true) {
        if (is_admissible_triple(asg.a[0], asg.b[0], asg.c[0])) {
            const long long v = tab.phi2(asg);
            if (!have || v > best) {
                have = true;
                best = v;
                res.argmax.clear();
                res.argmax.push_back(asg);
            } else if (v == best) {
                res.argmax.push_back(asg);
            }
        }
        size_t i = slots.size();
        while (true) {
            if (i == 0) {
                res.max = Rational(best, 2);
                return res;
            }
            --i;
            *slots[i] += 2;
            if (*slots[i] <= 2 * n) break;
            *slots[i] = 0;
        }
    }
}

namespace {

MaxResult triangle_scan(const MontesinosKnot& k, long long n, bool line_only) {
    PhiTables tab(k, n);
    ColorAssignment asg;
    asg.n = n;
    asg.a.assign(k.m() + 1, 2 * n);
    asg.b.assign(k.p() + 1, 2 * n);
    asg.c.assign(k.q() + 1, 2 * n);
    bool have = false;
    long long best = 0;
    MaxResult res;
    for (long long b0 = 0; b0 <= 2 * n; b0 += 2) {
        for (long long c0 = line_only ? 2 * n - b0 : 0; b0 + c0 <= 2 * n; c0 += 2) {
            asg.a[0] = b0 + c0;
            asg.b[0] = b0;
            asg.c[0] = c0;
            const long long v = tab.phi2(asg);
            if (!have || v > best) {
                have = true;
                best = v;
                res.argmax.clear();
                res.argmax.push_back(asg);
            } else if (v == best) {
                res.argmax.push_back(asg);
            }
            if (line_only) break;
        }
    }
    res.max = Rational(best, 2);
    return res;
}

}  // namespace

MaxResult reduced_max_R(const MontesinosKnot& k, long long n) { return triangle_scan(k, n, false); }
MaxResult line_max_Q(const MontesinosKnot& k, long long n) { return triangle_scan(k, n, true); }

BigInt nearest_odd(const Rational& x) {
    BigInt f = rfloor(x);
    BigInt lo = (f % 2 != 0) ? f : f - 1;  // works for negative f: parity test
    BigInt hi = lo + 2;
    const Rational dlo = x - Rational(lo);
    const Rational dhi = Rational(hi) - x;
    if (dlo < dhi) return lo;
    return hi;  // ties resolved upward
}

QuasiQuadratic closed_form_degree(const MontesinosKnot& k) {
    QuasiQuadratic qq;
    const long long mpq = k.m() + k.p() + k.q();
    const long long se = k.sum_even_index();
    const long long so = k.sum_odd_index();
    const long long s1 = k.sum_from_one();
    const long long s0 = k.s0(), t0 = k.t0(), r0 = k.r0();
    if (k.case_tag == CaseTag::NegDisc) {
        qq.period = (s0 + t0) / 2;
        qq.a = Rational(2 * t0 * t0, s0 + t0) - 2 * (r0 + t0 + 2) + 6 - 2 * mpq - 2 * se;
        qq.b = r0 + 2 * mpq + s1;
        for (long long l = 0; l < qq.period; ++l) {
            const Rational x = Rational(2 * t0 * l, s0 + t0);
            const Rational alpha = -x + Rational(nearest_odd(x)) - 1;
            qq.c.push_back(-Rational(s0 + t0, 2) * alpha * alpha - (s0 + t0) * alpha - 2 * mpq -
                           2 - 2 * so);
        }
    } else {
        qq.period = 1;
        qq.a = 6 - 2 * mpq - 2 * se;
        qq.b = 2 * mpq - 4 + s1;
        qq.c.push_back(2 - 2 * mpq - 2 * so);
    }
    return qq;
}

bool cancellation_parity_check(const MontesinosKnot& k, const MaxResult& maxima) {
    if (maxima.argmax.size() <= 1) return true;
    // Sign exponent of the leading coefficient of a maximizing term, up to
    // factors shared by all maximizers.
    auto exponent = [&](const ColorAssignment& asg) {
        const long long e =
            (k.r0() - 1) * asg.a[0] + (k.s0() - 1) * asg.b[0] + (k.t0() - 1) * asg.c[0];
        return (e / 2) % 2;
    };
    const auto first = exponent(maxima.argmax.front());
    return std::all_of(maxima.argmax.begin(), maxima.argmax.end(),
                       [&](const ColorAssignment& a) { return exponent(a) == first; });
}

}  // namespace mont
