#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "reflectk/rmatrix.hpp"

namespace reflectk {

enum class Flavor { RE, CtRE };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& name);

/// The four solution-preserving transformations.
struct MoveNegate {};                                    // u -> -u
struct MoveScale { Scalar g; };                          // K -> g(u) K, g != 0
struct MoveConjugate {                                   // Z-conjugation
    Mat Z;          // a symmetry of R, as a matrix in u
    Scalar eta;     // nonzero; symbolic by default
    Flavor flavor;
    MoveConjugate() : Z(1), eta(Scalar(1)), flavor(Flavor::RE) {}
    MoveConjugate(Mat z, Scalar e, Flavor f) : Z(std::move(z)), eta(std::move(e)), flavor(f) {}
};
struct MoveDualize { Flavor flavor; };                   // transposition-type

using EquivMove = std::variant<MoveNegate, MoveScale, MoveConjugate, MoveDualize>;

/// Applies one move exactly. Conjugation validates that Z is a symmetry and
/// that Z(eta/u) is invertible (RE flavor); Scale validates g != 0.
Mat apply_move(const RBundle& bundle, const Mat& K, const EquivMove& move);

/// K(u) = C^-1 Ktilde(tq^-1 u): carries solutions of the twisted reflection
/// equation to solutions of its cross-conjugated form, and back.
Mat cross_conjugate(const RBundle& bundle, const Mat& Ktilde);
Mat cross_conjugate_inv(const RBundle& bundle, const Mat& K);

struct ProbeResult {
    Mat K;
    std::vector<EquivMove> moves;
    std::uint64_t seed = 0;
    ProbeResult() : K(1) {}
};

/// Composition of `depth` moves drawn from a seeded deterministic generator.
/// The caller is responsible for K solving the flavor's equation; the output
/// then solves it as well.
ProbeResult random_orbit_probe(const RBundle& bundle, const Mat& K, Flavor flavor,
                               int depth, std::uint64_t seed);

}  // namespace reflectk
