#pragma once

#include <optional>
#include <string>

#include "reflectk/families.hpp"
#include "reflectk/rmatrix.hpp"

namespace reflectk {

enum class VerifyMode { Symbolic, Sampled };

std::string to_string(VerifyMode m);

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Symbolic;
    int samples = 3;       // exact points evaluated in sampled mode
    int max_retries = 12;  // replacement candidates when a point hits a pole
};

struct VerifyWitness {
    int row = 0;
    int col = 0;
    std::string residual;
    std::optional<std::string> sample;  // point used, sampled mode only
};

struct VerifyReport {
    std::string equation;
    VerifyMode mode = VerifyMode::Symbolic;
    bool pass = false;
    std::optional<VerifyWitness> witness;  // present whenever pass is false
    int samples_used = 0;
    int retries = 0;                    // pole-at-sample retries, logged never skipped
    std::optional<std::string> error;   // e.g. pole at u = ±1 in regularity
    std::string note;
};

/// R12(u/v) R13(u/w) R23(v/w) = R23(v/w) R13(u/w) R12(u/v), with the two
/// independent ratios realized as u and v and u/w = (u/v)(v/w).
VerifyReport check_YBE(const RBundle& bundle, const VerifyOptions& opts = {});

/// Untwisted reflection equation; the plain and braided forms are both
/// checked and must agree.
VerifyReport check_RE(const RBundle& bundle, const Mat& K, const VerifyOptions& opts = {});

/// Twisted reflection equation in its original form, for Ktilde.
VerifyReport check_tRE(const RBundle& bundle, const Mat& Ktilde,
                       const VerifyOptions& opts = {});

/// Cross-conjugated twisted reflection equation; plain and braided forms.
VerifyReport check_CtRE(const RBundle& bundle, const Mat& K,
                        const VerifyOptions& opts = {});

/// Constant-matrix identities of a (G, Q) pair: the quadratic/cubic
/// characteristic identities and the four constant exchange relations.
VerifyReport check_const_identities(const ConstPair& p, const RBundle& bundle,
                                    const VerifyOptions& opts = {});

/// Constant braided twisted reflection equation for G.
VerifyReport check_const_twisted(const Mat& G, const RBundle& bundle,
                                 const VerifyOptions& opts = {});

/// K(u) K(u^-1) = I.
VerifyReport check_unitary(const Mat& K, const VerifyOptions& opts = {});

/// K(1) = I or K(-1) = I; a pole at u = ±1 is reported distinctly.
VerifyReport check_regular(const Mat& K);

}  // namespace reflectk
