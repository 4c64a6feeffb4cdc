#include "reflectk/rmatrix.hpp"

namespace reflectk {

namespace {

Scalar s_pow(int e) { return Scalar::var(names::s(), e); }

Scalar f_of(const Scalar& qq, const Scalar& x) {
    // f_q(x) = 1 / (q - x/q)
    return (qq - x * qq.inv()).inv();
}

}  // namespace

Scalar RBundle::q() const { return -s_pow(2); }
Scalar RBundle::tq() const { return s_pow(N); }

Mat RBundle::R_at(const Scalar& x) const {
    return R_of_u.subst({{names::u(), x}});
}

Mat RBundle::RC_at(const Scalar& x) const {
    return RC_of_u.subst({{names::u(), x}});
}

Mat RBundle::R21_at(const Scalar& x) const { return P * R_at(x) * P; }

Mat RBundle::RC21_at(const Scalar& x) const { return P * RC_at(x) * P; }

RBundle build_R(int N) {
    if (N < 2) throw InvariantError("build_R requires N >= 2");
    RBundle b;
    b.N = N;
    const Scalar q = -s_pow(2);
    const Scalar qinv = q.inv();

    Mat P(N * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            P = P + kron(Mat::unit(N, i, j), Mat::unit(N, j, i));
    b.P = P;

    auto build_Rq = [&](const Scalar& qq) {
        Mat m(N * N);
        Scalar diff = qq - qq.inv();
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                m = m + kron(Mat::unit(N, i, i), Mat::unit(N, j, j))
                            .scaled(i == j ? qq : Scalar(1));
                if (i < j)
                    m = m + kron(Mat::unit(N, i, j), Mat::unit(N, j, i)).scaled(diff);
            }
        return m;
    };
    b.R_q = build_Rq(q);
    b.R_qbar = build_Rq(qinv);

    const Scalar u = Scalar::var(names::u());
    b.R_of_u = b.R_q.scaled(f_of(q, u)) + (P * b.R_qbar * P).scaled(f_of(qinv, u.inv()));
    b.Rcheck_of_u = P * b.R_of_u;
    b.Rcheck_q = P * b.R_q;

    Mat C(N);
    Mat C_inv(N);
    for (int i = 1; i <= N; ++i) {
        C.set(N - i + 1, i, s_pow(2 * i));
        C_inv.set(i, N - i + 1, s_pow(-2 * i));
    }
    b.C = C;
    b.C_inv = C_inv;

    // R^vee(u) = C_2^{-1} R^{t1}(tq^2 / u) C_2 with tq = s^N.
    Mat C2 = kron(Mat::identity(N), C);
    Mat C2_inv = kron(Mat::identity(N), C_inv);
    Scalar tq2_over_u = s_pow(2 * N) * u.inv();
    b.RC_of_u = C2_inv * b.R_at(tq2_over_u).transpose_t1() * C2;
    b.RCcheck_of_u = P * b.RC_of_u;
    b.RC_q = C2_inv * b.R_q.transpose_t1() * C2;
    b.RCcheck_q = P * b.RC_q;
    return b;
}

Mat build_Zrho(int N) {
    Mat z(N);
    for (int i = 1; i < N; ++i) z.set(i, i + 1, Scalar(1));
    z.set(N, 1, Scalar::var(names::u()));
    return z;
}

bool is_symmetry(const RBundle& bundle, const Mat& Z) {
    if (Z.dim() != bundle.N) throw InvariantError("is_symmetry: Z must have dim N");
    const Scalar u = Scalar::var(names::u());
    const Scalar v = Scalar::var(names::v());
    Mat R_uv = bundle.R_at(u / v);
    Mat Zu_Zv = kron(Z, Z.subst({{names::u(), v}}));
    return (R_uv * Zu_Zv - Zu_Zv * R_uv).is_zero();
}

CheckResult residual_check(const Mat& residual) {
    CheckResult r;
    auto nz = residual.first_nonzero();
    if (!nz) {
        r.ok = true;
        return r;
    }
    r.ok = false;
    r.witness = EntryWitness{nz->first.first, nz->first.second, nz->second};
    return r;
}

CheckResult check_R21(const RBundle& b) {
    // J with symbolic antidiagonal entries d_1..d_N stands for an arbitrary
    // invertible antidiagonal matrix.
    int N = b.N;
    Mat J(N);
    Mat J_inv(N);
    for (int i = 1; i <= N; ++i) {
        Scalar di = Scalar::var(names::d(i));
        J.set(i, N - i + 1, di);
        J_inv.set(N - i + 1, i, di.inv());
    }
    Mat JJ = kron(J, J);
    Mat JJ_inv = kron(J_inv, J_inv);
    Mat lhs = JJ * b.R_of_u * JJ_inv;
    Mat r21 = b.P * b.R_of_u * b.P;
    CheckResult first = residual_check(lhs - r21);
    if (!first.ok) return first;
    return residual_check(r21 - b.R_of_u.transpose());
}

CheckResult check_Rbar(const RBundle& b) {
    const Scalar u = Scalar::var(names::u());
    Mat lhs = b.R_of_u.subst({{names::u(), u.inv()}, {names::s(), Scalar::var(names::s(), -1)}});
    return residual_check(lhs - b.P * b.R_of_u * b.P);
}

CheckResult check_wR(const RBundle& b) {
    const Scalar u = Scalar::var(names::u());
    Mat inner = b.R_at(u.inv()).transpose_w_factors();
    Mat lhs = inner.subst({{names::s(), Scalar::var(names::s(), -1)}});
    return residual_check(lhs - b.P * b.R_of_u * b.P);
}

CheckResult check_wRC(const RBundle& b) {
    const Scalar u = Scalar::var(names::u());
    Mat inner = (b.P * b.RC_at(u.inv()) * b.P).transpose_w_factors();
    Mat lhs = inner.subst({{names::s(), Scalar::var(names::s(), -1)}});
    return residual_check(lhs - b.RC_of_u);
}

}  // namespace reflectk
