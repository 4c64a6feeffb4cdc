#include "reflectk/equivalence.hpp"

#include <random>

namespace reflectk {

std::string to_string(Flavor f) { return f == Flavor::RE ? "re" : "ctre"; }

Flavor flavor_from_string(const std::string& name) {
    if (name == "re") return Flavor::RE;
    if (name == "ctre") return Flavor::CtRE;
    throw InvalidClassError("unknown flavor '" + name + "' (re|ctre)");
}

namespace {

Mat apply_negate(const Mat& K) {
    return K.subst({{names::u(), -Scalar::var(names::u())}});
}

Mat apply_scale(const Mat& K, const Scalar& g) {
    if (g.is_zero()) throw InvariantError("Scale move requires g != 0");
    return K.scaled(g);
}

Mat apply_conjugate(const RBundle& bundle, const Mat& K, const MoveConjugate& m) {
    if (m.eta.is_zero()) throw InvariantError("Conjugate move requires eta != 0");
    if (!is_symmetry(bundle, m.Z))
        throw InvariantError("Conjugate move requires Z to be a symmetry of R");
    const Scalar u = Scalar::var(names::u());
    Mat Z_eta_over_u = m.Z.subst({{names::u(), m.eta * u.inv()}});
    Mat Z_eta_u = m.Z.subst({{names::u(), m.eta * u}});
    Mat left = m.flavor == Flavor::RE ? Z_eta_over_u.inverse() : Z_eta_over_u.transpose_w();
    return left * K * Z_eta_u;
}

Mat apply_dualize(const Mat& K, Flavor flavor) {
    if (flavor == Flavor::RE) return K.transpose();
    // w-transposition, u -> u^-1 and (-q)^{1/2} -> (-q)^{-1/2} (i.e. s -> 1/s).
    Mat out = K.subst({{names::u(), Scalar::var(names::u(), -1)},
                       {names::s(), Scalar::var(names::s(), -1)}});
    return out.transpose_w();
}

}  // namespace

Mat apply_move(const RBundle& bundle, const Mat& K, const EquivMove& move) {
    if (K.dim() != bundle.N) throw InvariantError("apply_move: K must have dim N");
    return std::visit(
        [&](const auto& m) -> Mat {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, MoveNegate>) return apply_negate(K);
            if constexpr (std::is_same_v<T, MoveScale>) return apply_scale(K, m.g);
            if constexpr (std::is_same_v<T, MoveConjugate>)
                return apply_conjugate(bundle, K, m);
            if constexpr (std::is_same_v<T, MoveDualize>) return apply_dualize(K, m.flavor);
        },
        move);
}

Mat cross_conjugate(const RBundle& bundle, const Mat& Ktilde) {
    if (Ktilde.dim() != bundle.N) throw InvariantError("cross_conjugate: dim mismatch");
    const Scalar u = Scalar::var(names::u());
    Mat shifted = Ktilde.subst({{names::u(), bundle.tq().inv() * u}});
    return bundle.C_inv * shifted;
}

Mat cross_conjugate_inv(const RBundle& bundle, const Mat& K) {
    if (K.dim() != bundle.N) throw InvariantError("cross_conjugate_inv: dim mismatch");
    const Scalar u = Scalar::var(names::u());
    Mat shifted = K.subst({{names::u(), bundle.tq() * u}});
    return bundle.C * shifted;
}

ProbeResult random_orbit_probe(const RBundle& bundle, const Mat& K, Flavor flavor,
                               int depth, std::uint64_t seed) {
    if (depth < 0) throw InvariantError("random_orbit_probe: depth must be >= 0");
    std::mt19937_64 rng(seed);
    ProbeResult out;
    out.seed = seed;
    out.K = K;
    const int N = bundle.N;
    auto small_rational = [&](int lo, int hi) {
        std::uniform_int_distribution<int> dist(lo, hi);
        int val = dist(rng);
        return Scalar(val == 0 ? 1 : val);
    };
    for (int step = 0; step < depth; ++step) {
        std::uniform_int_distribution<int> pick(0, 3);
        EquivMove move;
        switch (pick(rng)) {
            case 0:
                move = MoveNegate{};
                break;
            case 1: {
                // Nonzero scale drawn from a small pool of exact rationals
                // times a power of u.
                std::uniform_int_distribution<int> ep(-1, 1);
                Scalar g = small_rational(1, 5) * Scalar::var(names::u(), ep(rng));
                move = MoveScale{g};
                break;
            }
            case 2: {
                std::uniform_int_distribution<int> zkind(0, 1);
                Mat Z(1);
                if (zkind(rng) == 0) {
                    std::uniform_int_distribution<int> kp(1, N - 1);
                    int k = kp(rng);
                    Mat zr = build_Zrho(N);
                    Z = zr;
                    for (int t = 1; t < k; ++t) Z = Z * zr;
                } else {
                    Z = Mat(N);
                    for (int i = 1; i <= N; ++i) Z.set(i, i, small_rational(1, 7));
                }
                move = MoveConjugate{Z, small_rational(1, 5), flavor};
                break;
            }
            default:
                move = MoveDualize{flavor};
                break;
        }
        out.K = apply_move(bundle, out.K, move);
        out.moves.push_back(std::move(move));
    }
    return out;
}

}  // namespace reflectk
