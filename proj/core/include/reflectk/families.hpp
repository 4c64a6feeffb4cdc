#pragma once

#include <set>
#include <string>
#include <vector>

#include "reflectk/rmatrix.hpp"

namespace reflectk {

/// Involution of {1..N}, stored as the image sequence (1-based).
struct Involution {
    std::vector<int> img;

    static Involution identity(int N);
    int N() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img.at(static_cast<std::size_t>(i - 1)); }
    bool is_identity() const;
    void validate() const;  // throws InvariantError unless sigma∘sigma = id
    bool operator==(const Involution& o) const { return img == o.img; }
    bool operator<(const Involution& o) const { return img < o.img; }
};

/// Label of a symmetric family: 0 <= l < r <= (N+l)/2; sigma is determined
/// by sigma(i) = N+l-i+1 on (l, r].
struct SymClass {
    int N = 0;
    int l = 0;
    int r = 0;

    void validate() const;
    Involution sigma() const;
    bool operator==(const SymClass& o) const = default;
};

/// Label of a triangular family: N/2 <= m <= N, involution pairs map (m, N]
/// strictly decreasingly into [1, m], and eps picks one matrix position per
/// pair (the pair with the smallest small-side index is forced to the upper
/// position).
struct TriClass {
    int N = 0;
    int m = 0;
    Involution sigma;
    std::set<std::pair<int, int>> eps;  // positions carrying epsilon = 1

    void validate() const;
    bool operator==(const TriClass& o) const = default;
};

enum class TwistedKind { QOnsager, AntiDiag, PairSwap, HalfShift };

std::string to_string(TwistedKind k);
TwistedKind twisted_kind_from_string(const std::string& name);

struct TwistedClass {
    int N = 0;
    TwistedKind kind = TwistedKind::QOnsager;

    void validate() const;  // PairSwap / HalfShift require even N
    bool operator==(const TwistedClass& o) const = default;
};

/// Constant solution data (G, Q) a symmetric family affinizes from.
struct ConstPair {
    Mat G;
    Mat Q;
    int l = 0;
    Scalar lambda;  // the symbol (or value) occupying the lambda slot

    ConstPair() : G(1), Q(1) {}
    ConstPair(Mat g, Mat q, int l_, Scalar lam)
        : G(std::move(g)), Q(std::move(q)), l(l_), lambda(std::move(lam)) {}
    void validate() const;  // Q^2 = Q, GQ = QG = 0, and the l>0 identity
};

// --- enumeration -----------------------------------------------------------

std::vector<SymClass> enum_sym_classes(int N);

/// All (m, sigma, eps) classes with the related-involution quotient applied
/// at m = N/2 for even N (lexicographically smallest sigma kept).
std::vector<TriClass> enum_tri_classes(int N);

std::vector<TwistedClass> enum_twisted_classes(int N);

// --- canonical builders ----------------------------------------------------

/// Canonical symmetric solution, symbolic in u, lambda, mu.
Mat build_KS(const SymClass& c);

/// The lambda = mu = 1 specialization: the generalized involution matrix.
Mat build_KP(const SymClass& c);

/// Canonical triangular solution, symbolic in u, alpha.
Mat build_KT(const TriClass& c);

/// Constant (G, Q) pair for a symmetric class, symbolic in lambda.
ConstPair build_const_GQ(const SymClass& c);

/// K(u) = I + (u-u^-1) / ((lambda^-1 mu^-1 + u^-1)(lambda - mu u)) (lambda I - mu u Q - G)
Mat affinize_sym(const ConstPair& p);

/// K(u) = I + (u-u^-1)/(alpha-u) Q for an idempotent Q.
Mat affinize_tri(const Mat& Q);

/// Canonical twisted solutions, symbolic in s and u.
Mat build_twisted(const TwistedClass& c);

/// Constant non-invertible solutions: the eps-part of a triangular class.
Mat build_noninvertible_tri(const TriClass& c);

// --- orbit families --------------------------------------------------------

/// (l, r, t) family equivalent to build_KS: 0 <= l < r, 2r <= l+t, t <= N.
/// c maps pair indices i in (l, r] to coefficients; missing entries default
/// to the symbols c_i. g scales the whole matrix.
Mat build_orbit_KS1(int N, int l, int r, int t,
                    const std::map<int, Scalar>& c = {}, const Scalar& g = Scalar(1));

/// (l, m, r) family equivalent to build_KS: l >= 1, 2l <= m <= r, 2r <= N+m.
/// c maps i in [1, l] and i in (m, r] to coefficients (default symbols c_i).
Mat build_orbit_KS2(int N, int l, int m, int r,
                    const std::map<int, Scalar>& c = {}, const Scalar& g = Scalar(1));

/// One off-diagonal choice of the triangular orbit family.
struct KT1Pair {
    int i = 0;          // sum index in (l, r]
    int sigma_i = 0;    // its partner
    bool at_i_sigma = true;  // coefficient sits at (i, sigma_i) if true, else (sigma_i, i)
    Scalar coeff;       // the nonzero one of c_{i sigma(i)}, c_{sigma(i) i}
};

/// (l, m, r, sigma) family equivalent to build_KT; sigma is conveyed by the
/// pair list. Pairs with i in (l, m] must map into [1, l]; pairs with i in
/// (m, r] must map into (r, N]; both order-reversing. Symbolic in u, alpha.
Mat build_orbit_KT1(int N, int l, int m, int r, const std::vector<KT1Pair>& pairs,
                    const Scalar& g = Scalar(1));

/// Twisted orbit families. coeffs maps 1..N (or 1..N/2 for the paired kinds)
/// to c_i, defaulting to symbols; plus_sign selects the +/- branch where the
/// display has one; a2_alternate selects the second PairSwap shape.
Mat build_twisted_orbit(const TwistedClass& c, bool plus_sign = true,
                        const std::map<int, Scalar>& coeffs = {},
                        const Scalar& g = Scalar(1), bool a2_alternate = false);

/// Affinization of a constant solution G of the constant braided twisted
/// reflection equation (checked; throws InvariantError when G fails it):
///   - all support on or below the main antidiagonal: (1 + tq^-1 q u) J + L +
///     tq^-1 u C^-1 L^t C^t with J the antidiagonal part and L = G - J;
///   - no antidiagonal support: G + tq^-1 u C^-1 G^t C^t;
///   - otherwise G itself (already a solution of the spectral equation).
Mat affinize_twisted_const(const RBundle& bundle, const Mat& G);

}  // namespace reflectk
