#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace reflectk {

/// Interned indeterminate. Ids are dense and stable for the process lifetime.
using VarId = std::uint32_t;

/// The fixed registry of indeterminate names:
///   s, u, v, lambda, mu, alpha, eta, c_1, c_2, ..., d_1, d_2, ...
/// `q` is not a registry name; the expression layer expands it to -s^2.
namespace names {

/// Interns a registry name, validating its shape. Throws ParseError otherwise.
VarId intern(std::string_view name);

/// True if `name` has registry shape.
bool is_registry_name(std::string_view name);

const std::string& str(VarId id);

/// Total order used for canonical (graded-lex) printing and monomial storage:
/// s < u < v < lambda < mu < alpha < eta < c_1 < c_2 < ... < d_1 < d_2 < ...
std::uint64_t rank(VarId id);

inline bool less(VarId a, VarId b) { return rank(a) < rank(b); }

VarId s();
VarId u();
VarId v();
VarId lambda();
VarId mu();
VarId alpha();
VarId eta();
VarId c(int k);
VarId d(int k);

}  // namespace names
}  // namespace reflectk
