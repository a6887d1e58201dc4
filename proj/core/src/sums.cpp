#include "qmhs/sums.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmhs {

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e == 0) throw std::invalid_argument("Composition: exponents must be nonzero");
    }
}

Composition Composition::reversed() const {
    std::vector<int> r(entries_.rbegin(), entries_.rend());
    return Composition(std::move(r));
}

MultisetIndex::MultisetIndex(const std::map<int, int>& counts) {
    for (const auto& [exponent, count] : counts) {
        if (count < 0) throw std::invalid_argument("MultisetIndex: negative multiplicity");
        if (count == 0) continue;
        if (exponent == 0) throw std::invalid_argument("MultisetIndex: exponents must be nonzero");
        counts_[exponent] = count;
    }
}

int MultisetIndex::depth() const {
    int d = 0;
    for (const auto& [exponent, count] : counts_) d += count;
    return d;
}

namespace {

// u_i^{s_t} for every level t and index i, so the summation loops touch
// nothing heavier than lookups.
std::vector<std::vector<Cyclotomic>> level_factors(const UnitTable& units,
                                                   const std::vector<int>& exps) {
    std::vector<std::vector<Cyclotomic>> w;
    w.reserve(exps.size());
    for (int s : exps) {
        std::vector<Cyclotomic> row;
        row.reserve(static_cast<size_t>(units.order() - 1));
        for (int i = 1; i < units.order(); ++i) row.push_back(units.power(i, s));
        w.push_back(std::move(row));
    }
    return w;
}

}  // namespace

Cyclotomic z_direct(const UnitTable& units, const Composition& s) {
    const int n = units.order();
    const int m = s.depth();
    if (m == 0) return Cyclotomic::one(n);
    if (m > n - 1) return Cyclotomic::zero(n);
    auto w = level_factors(units, s.entries());
    Cyclotomic acc = Cyclotomic::zero(n);
    auto walk = [&](auto&& self, int t, int lo, const Cyclotomic& prod) -> void {
        if (t == m) {
            acc += prod;
            return;
        }
        for (int i = lo; i <= n - m + t; ++i) {
            self(self, t + 1, i + 1, prod * w[static_cast<size_t>(t)][static_cast<size_t>(i - 1)]);
        }
    };
    walk(walk, 0, 1, Cyclotomic::one(n));
    return acc;
}

Cyclotomic z_dp(const UnitTable& units, const Composition& s) {
    const int n = units.order();
    const int m = s.depth();
    if (m == 0) return Cyclotomic::one(n);
    if (m > n - 1) return Cyclotomic::zero(n);
    auto w = level_factors(units, s.entries());

    // F_t(i) = partial sum over chains inside 1..i ending at level t;
    // F_t(i) = F_t(i-1) + u_i^{s_t} F_{t-1}(i-1).
    std::vector<Cyclotomic> prev(static_cast<size_t>(n), Cyclotomic::one(n));
    std::vector<Cyclotomic> cur(static_cast<size_t>(n), Cyclotomic::zero(n));
    for (int t = 1; t <= m; ++t) {
        cur[0] = Cyclotomic::zero(n);
        for (int i = 1; i <= n - 1; ++i) {
            cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)]
                + w[static_cast<size_t>(t - 1)][static_cast<size_t>(i - 1)]
                      * prev[static_cast<size_t>(i - 1)];
        }
        std::swap(prev, cur);
    }
    return prev[static_cast<size_t>(n - 1)];
}

Cyclotomic z_direct(int n, const Composition& s) {
    UnitTable units(n);
    return z_direct(units, s);
}

Cyclotomic z_dp(int n, const Composition& s) {
    UnitTable units(n);
    return z_dp(units, s);
}

Rational y_oracle(const UnitTable& units, const MultisetIndex& s) {
    if (s.empty()) return Rational(0);
    std::vector<int> entries;
    for (const auto& [exponent, count] : s.counts()) {
        entries.insert(entries.end(), static_cast<size_t>(count), exponent);
    }
    std::sort(entries.begin(), entries.end());
    Cyclotomic acc = Cyclotomic::zero(units.order());
    do {
        acc += z_dp(units, Composition(entries));
    } while (std::next_permutation(entries.begin(), entries.end()));
    return as_rational(acc);
}

Rational y_dp(const UnitTable& units, const MultisetIndex& s) {
    if (s.empty()) return Rational(0);
    const int n = units.order();
    if (s.depth() > n - 1) return Rational(0);

    std::vector<int> exps, mult;
    for (const auto& [exponent, count] : s.counts()) {
        exps.push_back(exponent);
        mult.push_back(count);
    }
    const size_t k = exps.size();
    auto w = level_factors(units, exps);

    // State = how many copies of each exponent are already placed, flattened
    // in mixed radix.  One descending sweep per index i lets i extend any
    // state by one placement without being used twice.
    std::vector<size_t> stride(k);
    size_t states = 1;
    for (size_t j = 0; j < k; ++j) {
        stride[j] = states;
        states *= static_cast<size_t>(mult[j]) + 1;
    }
    std::vector<Cyclotomic> g(states, Cyclotomic::zero(n));
    g[0] = Cyclotomic::one(n);

    std::vector<int> digit(k);
    for (int i = 1; i <= n - 1; ++i) {
        std::fill(digit.begin(), digit.end(), 0);
        size_t flat = states;
        while (flat-- > 0) {
            // digits of flat, maintained by countdown
            size_t rem = flat;
            for (size_t j = 0; j < k; ++j) {
                digit[j] = static_cast<int>(rem % (static_cast<size_t>(mult[j]) + 1));
                rem /= static_cast<size_t>(mult[j]) + 1;
            }
            for (size_t j = 0; j < k; ++j) {
                if (digit[j] == 0) continue;
                g[flat] += w[j][static_cast<size_t>(i - 1)] * g[flat - stride[j]];
            }
        }
    }
    return as_rational(g[states - 1]);
}

Rational y_oracle(int n, const MultisetIndex& s) {
    UnitTable units(n);
    return y_oracle(units, s);
}

Rational y_dp(int n, const MultisetIndex& s) {
    UnitTable units(n);
    return y_dp(units, s);
}

Rational power_sum(const UnitTable& units, int s) {
    const int n = units.order();
    Cyclotomic acc = Cyclotomic::zero(n);
    for (int i = 1; i <= n - 1; ++i) acc += units.power(i, s);
    return as_rational(acc);
}

Rational power_sum(int n, int s) {
    UnitTable units(n);
    return power_sum(units, s);
}

Cyclotomic elem_sym_of_powers(const UnitTable& units, int s, int l) {
    if (l < 0) throw std::invalid_argument("elem_sym_of_powers: negative index");
    const int n = units.order();
    std::vector<Cyclotomic> e(static_cast<size_t>(l) + 1, Cyclotomic::zero(n));
    e[0] = Cyclotomic::one(n);
    for (int r = 1; r <= n - 1; ++r) {
        Cyclotomic v = units.power(r, -s);  // (1 - zeta^r)^s
        for (int t = std::min(l, r); t >= 1; --t) {
            e[static_cast<size_t>(t)] += v * e[static_cast<size_t>(t - 1)];
        }
    }
    return e[static_cast<size_t>(l)];
}

}  // namespace qmhs
