#pragma once

#include <optional>

#include "reflectk/matrix.hpp"

namespace reflectk {

/// Everything built from the trigonometric A-type R-matrix at a given N,
/// symbolic in s (with q = -s^2) and the spectral parameter u.
struct RBundle {
    int N = 0;
    Mat P;              // permutation operator on C^N ⊗ C^N
    Mat R_q;            // constant R-matrix
    Mat R_qbar;         // R_q with s -> 1/s
    Mat R_of_u;         // R(u)
    Mat Rcheck_of_u;    // P·R(u)
    Mat Rcheck_q;       // P·R_q
    Mat C;              // charge conjugation, sum over i of (-q)^i E_{bar i, i}
    Mat C_inv;
    Mat RC_of_u;        // C-conjugated R-matrix R^vee(u)
    Mat RCcheck_of_u;   // P·R^vee(u)
    Mat RC_q;           // constant R^vee_q
    Mat RCcheck_q;      // P·R^vee_q

    RBundle() : P(1), R_q(1), R_qbar(1), R_of_u(1), Rcheck_of_u(1), Rcheck_q(1),
                C(1), C_inv(1), RC_of_u(1), RCcheck_of_u(1), RC_q(1), RCcheck_q(1) {}

    Scalar q() const;    // -s^2
    Scalar tq() const;   // (-q)^{N/2} = s^N

    /// R(x): the spectral parameter substituted with an arbitrary scalar.
    Mat R_at(const Scalar& x) const;
    Mat RC_at(const Scalar& x) const;
    Mat R21_at(const Scalar& x) const;
    Mat RC21_at(const Scalar& x) const;
};

RBundle build_R(int N);

/// Z^rho(u): the cyclic symmetry generator.
Mat build_Zrho(int N);

/// Exact check of [R(u/v), Z(u) ⊗ Z(v)] = 0 for Z given as a matrix in u.
bool is_symmetry(const RBundle& bundle, const Mat& Z);

struct EntryWitness {
    int row = 0;
    int col = 0;
    Scalar residual;
};

struct CheckResult {
    bool ok = false;
    std::optional<EntryWitness> witness;  // first failing entry when !ok
    explicit operator bool() const { return ok; }
};

/// Verifies M == 0; on failure reports the row-major first nonzero entry.
CheckResult residual_check(const Mat& residual);

// Structural identities of R: conjugation by antidiagonal matrices, the
// q -> 1/q reversals and their w-transposed versions. All exact.
CheckResult check_R21(const RBundle& bundle);
CheckResult check_Rbar(const RBundle& bundle);
CheckResult check_wR(const RBundle& bundle);
CheckResult check_wRC(const RBundle& bundle);

}  // namespace reflectk
