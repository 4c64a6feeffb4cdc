#include "reflectk/families.hpp"

#include <algorithm>

#include "reflectk/verifier.hpp"

namespace reflectk {

namespace {

Scalar sym(VarId id) { return Scalar::var(id); }
Scalar s_pow(int e) { return Scalar::var(names::s(), e); }

int bar_of(int N, int i) { return N - i + 1; }

[[noreturn]] void bad_class(const std::string& msg) { throw InvalidClassError(msg); }

}  // namespace

// ---------------------------------------------------------------------------
// Labels

Involution Involution::identity(int N) {
    Involution s;
    s.img.resize(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i) s.img[static_cast<std::size_t>(i - 1)] = i;
    return s;
}

bool Involution::is_identity() const {
    for (int i = 1; i <= N(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

void Involution::validate() const {
    for (int i = 1; i <= N(); ++i) {
        int j = (*this)(i);
        if (j < 1 || j > N() || (*this)(j) != i)
            throw InvariantError("sigma is not an involution of {1..N}");
    }
}

void SymClass::validate() const {
    if (N < 2) bad_class("sym class requires N >= 2");
    if (!(0 <= l)) bad_class("sym class requires 0 <= l");
    if (!(l < r)) bad_class("sym class requires l < r");
    if (!(2 * r <= N + l)) bad_class("sym class requires r <= (N+l)/2");
}

Involution SymClass::sigma() const {
    Involution s = Involution::identity(N);
    for (int i = l + 1; i <= r; ++i) {
        int j = N + l - i + 1;
        s.img[static_cast<std::size_t>(i - 1)] = j;
        s.img[static_cast<std::size_t>(j - 1)] = i;
    }
    return s;
}

void TriClass::validate() const {
    if (N < 2) bad_class("tri class requires N >= 2");
    if (!(2 * m >= N && m <= N)) bad_class("tri class requires N/2 <= m <= N");
    if (sigma.N() != N) bad_class("tri class sigma must act on {1..N}");
    sigma.validate();
    // Non-fixed points above m map strictly decreasingly into [1, m].
    int prev_image = 0;
    for (int i = N; i > m; --i) {
        int si = sigma(i);
        if (si == i) continue;
        if (!(1 <= si && si <= m)) bad_class("tri class requires sigma(i) <= m for i > m");
        if (!(si > prev_image))
            bad_class("tri class requires sigma(j) < sigma(i) for m < i < j");
        prev_image = si;
    }
    for (int i = 1; i <= m; ++i) {
        int si = sigma(i);
        if (si != i && si <= m) bad_class("tri class pairs must straddle m");
    }
    // eps: one position per pair, min-small-side pair forced upper.
    std::set<std::pair<int, int>> expected_pairs;
    int jmin = 0;
    for (int i = 1; i <= N; ++i) {
        int si = sigma(i);
        if (i < si) {
            expected_pairs.insert({i, si});
            if (jmin == 0) jmin = i;
        }
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : eps) {
        if (a == b) bad_class("eps_ii must be 0");
        if (sigma(a) != b) bad_class("eps position is not a sigma pair");
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        if (!seen.insert(key).second) bad_class("eps assigns both positions of a pair");
    }
    if (seen != expected_pairs) bad_class("eps must pick exactly one position per pair");
    if (jmin != 0 && !eps.count({jmin, sigma(jmin)}))
        bad_class("eps at the minimal pair must sit above the diagonal");
}

std::string to_string(TwistedKind k) {
    switch (k) {
        case TwistedKind::QOnsager: return "q-onsager";
        case TwistedKind::AntiDiag: return "antidiag";
        case TwistedKind::PairSwap: return "pair-swap";
        case TwistedKind::HalfShift: return "half-shift";
    }
    throw InvariantError("unknown twisted kind");
}

TwistedKind twisted_kind_from_string(const std::string& name) {
    if (name == "q-onsager") return TwistedKind::QOnsager;
    if (name == "antidiag") return TwistedKind::AntiDiag;
    if (name == "pair-swap") return TwistedKind::PairSwap;
    if (name == "half-shift") return TwistedKind::HalfShift;
    throw InvalidClassError("unknown twisted kind '" + name +
                            "' (q-onsager|antidiag|pair-swap|half-shift)");
}

void TwistedClass::validate() const {
    if (N < 2) bad_class("twisted class requires N >= 2");
    if ((kind == TwistedKind::PairSwap || kind == TwistedKind::HalfShift) && N % 2 != 0)
        bad_class(to_string(kind) + " is only allowed if N is even");
}

void ConstPair::validate() const {
    int n = G.dim();
    if (Q.dim() != n) throw InvariantError("ConstPair: G and Q dimensions differ");
    Mat I = Mat::identity(n);
    if (!(Q * Q).equals(Q)) throw InvariantError("ConstPair: Q is not idempotent");
    if (!(G * Q).is_zero() || !(Q * G).is_zero())
        throw InvariantError("ConstPair: GQ = QG = 0 fails");
    if (l > 0) {
        Mat rhs = I + G.scaled(lambda - lambda.inv()) - G * G;
        if (!Q.equals(rhs))
            throw InvariantError("ConstPair: Q = I + (lambda - lambda^-1) G - G^2 fails");
    }
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<SymClass> enum_sym_classes(int N) {
    if (N < 3) bad_class("enum_sym_classes requires N >= 3");
    std::vector<SymClass> out;
    for (int l = 0; l < N; ++l)
        for (int r = l + 1; 2 * r <= N + l; ++r) out.push_back(SymClass{N, l, r});
    return out;
}

namespace {

// All involutions whose non-fixed points above m map strictly decreasingly
// into [1, m]: choose k elements of (m, N] and k images in [1, m]; the
// order-reversing requirement fixes the matching.
std::vector<Involution> tri_involutions(int N, int m) {
    std::vector<Involution> out;
    std::vector<int> big;
    for (int i = m + 1; i <= N; ++i) big.push_back(i);
    int nb = static_cast<int>(big.size());
    for (int k = 0; k <= std::min(nb, m); ++k) {
        std::vector<int> selb(static_cast<std::size_t>(k)), sels(static_cast<std::size_t>(k));
        // Iterate over k-subsets of big and of [1, m] via combinations.
        std::vector<int> idxb(static_cast<std::size_t>(k)), idxs(static_cast<std::size_t>(k));
        auto combos = [](int n, int kk) {
            std::vector<std::vector<int>> all;
            std::vector<int> cur(static_cast<std::size_t>(kk));
            auto rec = [&](auto&& self, int start, int depth) -> void {
                if (depth == kk) {
                    all.push_back(cur);
                    return;
                }
                for (int x = start; x <= n; ++x) {
                    cur[static_cast<std::size_t>(depth)] = x;
                    self(self, x + 1, depth + 1);
                }
            };
            rec(rec, 1, 0);
            return all;
        };
        for (const auto& cb : combos(nb, k)) {
            for (const auto& cs : combos(m, k)) {
                Involution s = Involution::identity(N);
                for (int t = 0; t < k; ++t) {
                    int i = big[static_cast<std::size_t>(cb[static_cast<std::size_t>(t)] - 1)];
                    int target = cs[static_cast<std::size_t>(k - 1 - t)];
                    s.img[static_cast<std::size_t>(i - 1)] = target;
                    s.img[static_cast<std::size_t>(target - 1)] = i;
                }
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

Involution rho_tilde_conjugate(const Involution& s) {
    int N = s.N();
    auto rho = [N](int i) { return i <= N / 2 ? i + N / 2 : i - N / 2; };
    Involution out = Involution::identity(N);
    for (int i = 1; i <= N; ++i) out.img[static_cast<std::size_t>(rho(i) - 1)] = rho(s(i));
    return out;
}

}  // namespace

std::vector<TriClass> enum_tri_classes(int N) {
    if (N < 3) bad_class("enum_tri_classes requires N >= 3");
    std::vector<TriClass> out;
    for (int m = (N + 1) / 2; m <= N; ++m) {
        for (const auto& sg : tri_involutions(N, m)) {
            if (N % 2 == 0 && m == N / 2) {
                Involution conj = rho_tilde_conjugate(sg);
                if (conj.img < sg.img) continue;  // keep the lex-smaller representative
            }
            // Pairs written from the small side.
            std::vector<std::pair<int, int>> pairs;
            for (int i = 1; i <= N; ++i)
                if (i < sg(i)) pairs.emplace_back(i, sg(i));
            if (pairs.empty()) {
                out.push_back(TriClass{N, m, sg, {}});
                continue;
            }
            int nchoice = 1 << (pairs.size() - 1);
            for (int mask = 0; mask < nchoice; ++mask) {
                TriClass c{N, m, sg, {}};
                c.eps.insert(pairs[0]);  // minimal pair forced upper
                for (std::size_t t = 1; t < pairs.size(); ++t) {
                    if (mask & (1 << (t - 1)))
                        c.eps.insert(pairs[t]);
                    else
                        c.eps.insert({pairs[t].second, pairs[t].first});
                }
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

std::vector<TwistedClass> enum_twisted_classes(int N) {
    if (N < 3) bad_class("enum_twisted_classes requires N >= 3");
    std::vector<TwistedClass> out{{N, TwistedKind::QOnsager}, {N, TwistedKind::AntiDiag}};
    if (N % 2 == 0) {
        out.push_back({N, TwistedKind::PairSwap});
        out.push_back({N, TwistedKind::HalfShift});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical builders

Mat build_KS(const SymClass& c) {
    c.validate();
    int N = c.N;
    Involution sg = c.sigma();
    const Scalar u = sym(names::u());
    const Scalar lam = sym(names::lambda());
    const Scalar muv = sym(names::mu());
    Scalar theta = (u - u.inv()) / (lam.inv() * muv.inv() + u.inv());
    Scalar chi = (lam - muv * u).inv();
    Mat K = Mat::identity(N);
    for (int i = 1; i <= c.l; ++i) K.add_at(i, i, theta);
    Scalar tc = theta * chi;
    for (int i = c.l + 1; i <= c.r; ++i) {
        int si = sg(i);
        K.add_at(i, i, tc * lam);
        K.add_at(si, si, tc * lam.inv());
        K.add_at(i, si, -tc);
        K.add_at(si, i, -tc);
    }
    return K;
}

Mat build_KP(const SymClass& c) {
    c.validate();
    int N = c.N;
    Involution sg = c.sigma();
    const Scalar u = sym(names::u());
    Mat K(N);
    for (int i = 1; i <= c.l; ++i) K.set(i, i, u);
    for (int i = c.l + 1; i <= c.r; ++i) {
        K.set(i, sg(i), Scalar(1));
        K.set(sg(i), i, Scalar(1));
    }
    for (int i = c.r + 1; i <= N + c.l - c.r; ++i) K.set(i, i, Scalar(1));
    return K;
}

Mat build_KT(const TriClass& c) {
    c.validate();
    int N = c.N;
    const Scalar u = sym(names::u());
    const Scalar al = sym(names::alpha());
    Scalar b = (u - u.inv()) / (al - u);
    Mat K = Mat::identity(N);
    for (int i = c.m + 1; i <= N; ++i) {
        K.add_at(i, i, b);
        int si = c.sigma(i);
        if (si != i) {
            if (c.eps.count({i, si})) K.add_at(i, si, b);
            if (c.eps.count({si, i})) K.add_at(si, i, b);
        }
    }
    return K;
}

ConstPair build_const_GQ(const SymClass& c) {
    c.validate();
    int N = c.N;
    Involution sg = c.sigma();
    const Scalar lam = sym(names::lambda());
    Mat G(N);
    Mat Q(N);
    for (int i = c.r + 1; i < sg(c.r); ++i) G.add_at(i, i, lam);
    for (int i = c.l + 1; i <= c.r; ++i) {
        int si = sg(i);
        G.add_at(i, si, Scalar(1));
        G.add_at(si, i, Scalar(1));
        G.add_at(si, si, lam - lam.inv());
    }
    for (int i = 1; i <= c.l; ++i) Q.set(i, i, Scalar(1));
    return ConstPair(std::move(G), std::move(Q), c.l, lam);
}

Mat affinize_sym(const ConstPair& p) {
    p.validate();
    int N = p.G.dim();
    const Scalar u = sym(names::u());
    const Scalar lam = p.lambda;
    const Scalar muv = sym(names::mu());
    Scalar factor = (u - u.inv()) / ((lam.inv() * muv.inv() + u.inv()) * (lam - muv * u));
    Mat core = Mat::identity(N).scaled(lam) - p.Q.scaled(muv * u) - p.G;
    return Mat::identity(N) + core.scaled(factor);
}

Mat affinize_tri(const Mat& Q) {
    if (!(Q * Q).equals(Q)) throw InvariantError("affinize_tri: Q is not idempotent");
    const Scalar u = sym(names::u());
    const Scalar al = sym(names::alpha());
    return Mat::identity(Q.dim()) + Q.scaled((u - u.inv()) / (al - u));
}

Mat build_twisted(const TwistedClass& c) {
    c.validate();
    int N = c.N;
    const Scalar u = sym(names::u());
    Mat K(N);
    switch (c.kind) {
        case TwistedKind::AntiDiag: {
            for (int i = 1; i <= N; ++i) K.set(i, bar_of(N, i), Scalar(1));
            return K;
        }
        case TwistedKind::PairSwap: {
            for (int i = 1; i <= N / 2; ++i) {
                K.set(2 * i - 1, bar_of(N, 2 * i), Scalar(1));
                K.set(2 * i, bar_of(N, 2 * i) + 1, Scalar(1));
            }
            return K;
        }
        case TwistedKind::HalfShift: {
            for (int i = 1; i <= N / 2; ++i) {
                K.set(i, bar_of(N, i) - N / 2, u);
                K.set(i + N / 2, bar_of(N, i), Scalar(1));
            }
            return K;
        }
        case TwistedKind::QOnsager: {
            // q = -s^2, tq = s^N, (-q)^{(j-i)/2} = s^{j-i}.
            Scalar q = -s_pow(2);
            Scalar tq = s_pow(N);
            Scalar coef = (Scalar(1) + q) / (tq + q * u);
            for (int i = 1; i <= N; ++i) K.set(i, bar_of(N, i), Scalar(1));
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j) {
                    K.add_at(i, bar_of(N, j), coef * s_pow(j - i) * u);
                    K.add_at(j, bar_of(N, i), coef * s_pow(i - j) * tq);
                }
            return K;
        }
    }
    throw InvariantError("unknown twisted kind");
}

Mat build_noninvertible_tri(const TriClass& c) {
    c.validate();
    Mat K(c.N);
    for (int i = c.m + 1; i <= c.N; ++i) {
        int si = c.sigma(i);
        if (si == i) continue;
        if (c.eps.count({i, si})) K.set(i, si, Scalar(1));
        if (c.eps.count({si, i})) K.set(si, i, Scalar(1));
    }
    return K;
}

// ---------------------------------------------------------------------------
// Orbit families

namespace {

Scalar coeff_or_symbol(const std::map<int, Scalar>& c, int i) {
    auto it = c.find(i);
    if (it != c.end()) {
        if (it->second.is_zero()) throw InvalidClassError("orbit coefficients must be nonzero");
        return it->second;
    }
    return sym(names::c(i));
}

}  // namespace

Mat build_orbit_KS1(int N, int l, int r, int t, const std::map<int, Scalar>& c,
                    const Scalar& g) {
    if (g.is_zero()) throw InvalidClassError("scale factor g must be nonzero");
    if (!(0 <= l && l < r)) bad_class("KS1 requires 0 <= l < r");
    if (!(2 * r <= l + t)) bad_class("KS1 requires r <= (l+t)/2");
    if (!(t <= N)) bad_class("KS1 requires t <= N");
    const Scalar u = sym(names::u());
    const Scalar lam = sym(names::lambda());
    const Scalar muv = sym(names::mu());
    Scalar theta = (u - u.inv()) / (lam.inv() * muv.inv() + u.inv());
    Scalar chi = (lam - muv * u).inv();
    Mat K = Mat::identity(N);
    for (int i = 1; i <= l; ++i) K.add_at(i, i, theta);
    for (int i = t + 1; i <= N; ++i) K.add_at(i, i, -theta / (lam * muv * u));
    Scalar tc = theta * chi;
    for (int i = l + 1; i <= r; ++i) {
        int si = t + l - i + 1;
        Scalar ci = coeff_or_symbol(c, i);
        K.add_at(i, i, tc * lam);
        K.add_at(si, si, tc * lam.inv());
        K.add_at(i, si, -tc * ci);
        K.add_at(si, i, -tc * ci.inv());
    }
    return K.scaled(g);
}

Mat build_orbit_KS2(int N, int l, int m, int r, const std::map<int, Scalar>& c,
                    const Scalar& g) {
    if (g.is_zero()) throw InvalidClassError("scale factor g must be nonzero");
    if (!(1 <= l)) bad_class("KS2 requires 1 <= l");
    if (!(2 * l <= m)) bad_class("KS2 requires 2l <= m");
    if (!(m <= r)) bad_class("KS2 requires m <= r");
    if (!(2 * r <= N + m)) bad_class("KS2 requires r <= (N+m)/2");
    const Scalar u = sym(names::u());
    const Scalar lam = sym(names::lambda());
    const Scalar muv = sym(names::mu());
    Scalar theta = (u - u.inv()) / (lam.inv() * muv.inv() + u.inv());
    Scalar chi = (lam - muv * u).inv();
    Mat K = Mat::identity(N);
    for (int i = 1; i <= m - l; ++i) K.add_at(i, i, theta);
    Scalar tc = theta * chi;
    for (int i = 1; i <= l; ++i) {
        int si = m - i + 1;
        Scalar ci = coeff_or_symbol(c, i);
        K.add_at(i, i, tc * u / muv);
        K.add_at(si, si, tc * lam);
        K.add_at(i, si, -tc * ci * u);
        K.add_at(si, i, -tc * ci.inv() * u);
    }
    for (int i = m + 1; i <= r; ++i) {
        int si = N + m - i + 1;
        Scalar ci = coeff_or_symbol(c, i);
        K.add_at(i, i, tc * lam);
        K.add_at(si, si, tc * lam.inv());
        K.add_at(i, si, -tc * ci);
        K.add_at(si, i, -tc * ci.inv());
    }
    return K.scaled(g);
}

Mat build_orbit_KT1(int N, int l, int m, int r, const std::vector<KT1Pair>& pairs,
                    const Scalar& g) {
    if (g.is_zero()) throw InvalidClassError("scale factor g must be nonzero");
    if (!(0 <= l && l <= m && m <= r && r <= N)) bad_class("KT1 requires 0 <= l <= m <= r <= N");
    const Scalar u = sym(names::u());
    const Scalar al = sym(names::alpha());
    Mat K(N);
    for (int i = 1; i <= l; ++i) K.set(i, i, u);
    Scalar mid = (al - u) / (al * u - Scalar(1));
    for (int i = l + 1; i <= r; ++i) K.set(i, i, mid);
    for (int i = r + 1; i <= N; ++i) K.set(i, i, u.inv());
    // Validate the pair pattern against Sigma^tri' ordering.
    int prev_lower = 0, prev_upper = 0;
    std::vector<KT1Pair> sorted_pairs = pairs;
    std::sort(sorted_pairs.begin(), sorted_pairs.end(),
              [](const KT1Pair& a, const KT1Pair& b) { return a.i < b.i; });
    for (const auto& p : sorted_pairs) {
        if (p.coeff.is_zero()) bad_class("KT1 pair coefficient must be nonzero");
        if (p.i <= l || p.i > r) bad_class("KT1 pair index must lie in (l, r]");
        if (p.i <= m) {
            if (!(1 <= p.sigma_i && p.sigma_i <= l))
                bad_class("KT1 pair with i <= m must map into [1, l]");
            if (prev_lower && !(p.sigma_i < prev_lower))
                bad_class("KT1 pairs must be order-reversing");
            prev_lower = p.sigma_i;
        } else {
            if (!(r < p.sigma_i && p.sigma_i <= N))
                bad_class("KT1 pair with i > m must map into (r, N]");
            if (prev_upper && !(p.sigma_i < prev_upper))
                bad_class("KT1 pairs must be order-reversing");
            prev_upper = p.sigma_i;
        }
        Scalar w = (p.i <= m ? u : Scalar(1)) * (u - u.inv()) / (al * u - Scalar(1));
        if (p.at_i_sigma)
            K.add_at(p.i, p.sigma_i, w * p.coeff);
        else
            K.add_at(p.sigma_i, p.i, w * p.coeff);
    }
    return K.scaled(g);
}

Mat build_twisted_orbit(const TwistedClass& c, bool plus_sign,
                        const std::map<int, Scalar>& coeffs, const Scalar& g,
                        bool a2_alternate) {
    c.validate();
    if (g.is_zero()) throw InvalidClassError("scale factor g must be nonzero");
    int N = c.N;
    const Scalar u = sym(names::u());
    Scalar q = -s_pow(2);
    Scalar tq = s_pow(N);
    Scalar sign = plus_sign ? Scalar(1) : Scalar(-1);
    Mat K(N);
    switch (c.kind) {
        case TwistedKind::QOnsager: {
            Scalar coef = (Scalar(1) + q) / (tq + sign * q * u);
            for (int i = 1; i <= N; ++i) {
                Scalar ci = coeff_or_symbol(coeffs, bar_of(N, i));
                K.add_at(i, bar_of(N, i), ci * ci);
            }
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j) {
                    Scalar cij = coeff_or_symbol(coeffs, bar_of(N, i)) *
                                 coeff_or_symbol(coeffs, bar_of(N, j));
                    K.add_at(i, bar_of(N, j), cij * coef * sign * s_pow(j - i) * u);
                    K.add_at(j, bar_of(N, i), cij * coef * s_pow(i - j) * tq);
                }
            break;
        }
        case TwistedKind::AntiDiag: {
            for (int i = 1; i <= N; ++i)
                K.add_at(i, bar_of(N, i), coeff_or_symbol(coeffs, bar_of(N, i)));
            break;
        }
        case TwistedKind::PairSwap: {
            if (!a2_alternate) {
                for (int i = 1; i <= N / 2; ++i) {
                    Scalar ci = coeff_or_symbol(coeffs, i);
                    K.add_at(2 * i - 1, bar_of(N, 2 * i), ci);
                    K.add_at(2 * i, bar_of(N, 2 * i) + 1, ci);
                }
            } else {
                Scalar c1 = coeff_or_symbol(coeffs, 1);
                K.add_at(1, 1, c1 * u);
                K.add_at(N, N, c1 * u.inv());
                for (int i = 2; i <= N / 2; ++i) {
                    Scalar ci = coeff_or_symbol(coeffs, i);
                    K.add_at(2 * i - 1, bar_of(N, 2 * i) + 2, ci);
                    K.add_at(2 * i - 2, bar_of(N, 2 * i) + 1, ci);
                }
            }
            break;
        }
        case TwistedKind::HalfShift: {
            for (int i = 1; i <= N / 2; ++i) {
                Scalar ci = coeff_or_symbol(coeffs, i);
                K.add_at(i, bar_of(N, i) - N / 2, sign * ci * u);
                K.add_at(i + N / 2, bar_of(N, i), ci);
            }
            break;
        }
    }
    return K.scaled(g);
}

Mat affinize_twisted_const(const RBundle& bundle, const Mat& G) {
    if (G.dim() != bundle.N)
        throw InvariantError("affinize_twisted_const: G must have dim N");
    VerifyReport rep = check_const_twisted(G, bundle);
    if (!rep.pass)
        throw InvariantError(
            "affinize_twisted_const: G does not solve the constant braided twisted "
            "reflection equation");
    int N = G.dim();
    const Scalar u = sym(names::u());
    Scalar q = -s_pow(2);
    Scalar tq_inv = s_pow(-N);
    bool any_above = false, any_antidiag = false;
    for (const auto& [idx, val] : G.entries()) {
        (void)val;
        int sum = idx.first + idx.second;
        if (sum < N + 1) any_above = true;
        if (sum == N + 1) any_antidiag = true;
    }
    auto conj_t = [&](const Mat& m) {
        return bundle.C_inv * m.transpose() * bundle.C.transpose();
    };
    if (!any_above) {
        Mat J(N);
        for (const auto& [idx, val] : G.entries())
            if (idx.first + idx.second == N + 1) J.set(idx.first, idx.second, val);
        Mat L = G - J;
        return J.scaled(Scalar(1) + tq_inv * q * u) + L + conj_t(L).scaled(tq_inv * u);
    }
    if (!any_antidiag) return G + conj_t(G).scaled(tq_inv * u);
    return G;
}

}  // namespace reflectk
