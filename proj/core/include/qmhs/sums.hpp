#pragma once

#include <map>
#include <vector>

#include "qmhs/cyclotomic.hpp"
#include "qmhs/rational.hpp"

namespace qmhs {

// Exponent list (s_1, ..., s_m) of a nested sum.  Entries are nonzero
// integers of either sign; the empty composition is allowed and denotes the
// empty product, so its sum is 1.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> entries);

    int depth() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    Composition reversed() const;

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<int> entries_;
};

// Multiset of exponents {s^count, ...} for the symmetrized sum.  Exponents
// are nonzero, counts positive; the total count is the depth.
class MultisetIndex {
public:
    MultisetIndex() = default;
    explicit MultisetIndex(const std::map<int, int>& counts);

    int depth() const;
    bool empty() const { return counts_.empty(); }
    const std::map<int, int>& counts() const { return counts_; }

    friend bool operator==(const MultisetIndex& a, const MultisetIndex& b) {
        return a.counts_ == b.counts_;
    }

private:
    std::map<int, int> counts_;  // exponent -> multiplicity
};

// z(n; s) = sum over 1 <= i_1 < ... < i_m <= n-1 of prod u_{i_t}^{s_t},
// where u_i = 1/(1 - zeta_n^i).  Depth above n-1 gives zero, depth zero
// gives one.
//
// z_direct enumerates the index chains.  z_dp runs the forward recurrence
// F_t(i) = F_t(i-1) + u_i^{s_t} F_{t-1}(i-1) in O(depth * n) field ops.
// Both stay available so either can audit the other.
Cyclotomic z_direct(const UnitTable& units, const Composition& s);
Cyclotomic z_dp(const UnitTable& units, const Composition& s);
Cyclotomic z_direct(int n, const Composition& s);
Cyclotomic z_dp(int n, const Composition& s);

// y(n; S) = sum of z(n; s) over every distinct ordering s of the multiset S.
// The empty multiset gives zero by convention, not one.
//
// y_oracle literally walks the distinct permutations.  y_dp shares the
// computation across orderings: one pass over i = 1..n-1 updates a count
// vector indexed by how many copies of each exponent are already placed, so
// the cost is n times the number of sub-multisets instead of a factor of
// depth!.  Every y value lies in Q, hence the Rational return type.
Rational y_oracle(const UnitTable& units, const MultisetIndex& s);
Rational y_dp(const UnitTable& units, const MultisetIndex& s);
Rational y_oracle(int n, const MultisetIndex& s);
Rational y_dp(int n, const MultisetIndex& s);

// p_s(n) = sum_{i=1}^{n-1} u_i^s, the depth-one sum, rational for every s.
Rational power_sum(const UnitTable& units, int s);
Rational power_sum(int n, int s);

// Elementary symmetric polynomial e_l of the n-1 values (1 - zeta_n^r)^s,
// r = 1..n-1.  Equals z(n; (-s)^l), which is how the tests pin it down.
Cyclotomic elem_sym_of_powers(const UnitTable& units, int s, int l);

}  // namespace qmhs
