// Lattice data for the rank-two sums: the quadratic form
// Q(x) = 3x1^2 + 3x1x2 + x2^2, the six-element shift list S with weights
// eps (for the unweighted sums) and eta (for the n2-weighted sums), and the
// paired-down three-element list S* used after folding n -> reflected n.
//
// The weights are attached to list positions; for p = 2 several shifts
// coincide mod Z^2 but carry different weights and different N_0^2 offsets,
// so the list (not the set of classes) is the primary object.
#ifndef FALSETHETA_SHIFTS_HPP
#define FALSETHETA_SHIFTS_HPP

#include <array>
#include <vector>

#include "types.hpp"

namespace ft {

inline double quad_Q(double x1, double x2) {
    return 3 * x1 * x1 + 3 * x1 * x2 + x2 * x2;
}
inline Frac quad_Q(const Frac& x1, const Frac& x2) {
    return Frac(3) * x1 * x1 + Frac(3) * x1 * x2 + x2 * x2;
}
// Off-diagonal pairing x^T A0 y with A0 = [[6,3],[3,2]] (Hessian of Q).
inline double quad_B0(double x1, double x2, double y1, double y2) {
    return 6 * x1 * y1 + 3 * (x1 * y2 + x2 * y1) + 2 * x2 * y2;
}

struct ShiftEntry {
    Frac a1, a2;   // the shift alpha
    int eps;       // weight for the unweighted lattice sums
    int eta;       // weight for the n2-weighted lattice sums
};

struct ShiftTable {
    long long p;
    std::array<ShiftEntry, 6> S;
    // S* = positions {0, 3, 4} of S with eps weights (-2, 1, 1).
    std::array<int, 3> star_idx{0, 3, 4};

    explicit ShiftTable(long long p_) : p(p_) {
        if (p < 2) throw std::invalid_argument("ShiftTable: p >= 2 required");
        Frac ip(1, p);
        S[0] = {Frac(1) - ip, Frac(2, p), -2, +1};
        S[1] = {ip, Frac(1) - Frac(2, p), -2, -1};
        S[2] = {Frac(1), ip, +1, -1};
        S[3] = {Frac(0), Frac(1) - ip, +1, +1};
        S[4] = {ip, Frac(1) - ip, +1, +1};
        S[5] = {Frac(1) - ip, ip, +1, -1};
    }

    // eps as a function on classes mod Z^2 (used by the Shimura-set
    // bookkeeping, where shifts arrive in un-normalized representatives).
    int eps_class(Frac a1, Frac a2) const {
        a1 = a1.mod1();
        a2 = a2.mod1();
        Frac ip(1, p);
        Frac c1 = (Frac(1) - ip).mod1(), c2 = Frac(2, p).mod1();
        Frac d1 = ip.mod1(), d2 = (Frac(1) - Frac(2, p)).mod1();
        if ((a1 == c1 && a2 == c2) || (a1 == d1 && a2 == d2)) return -2;
        return 1;
    }
};

}  // namespace ft

#endif
