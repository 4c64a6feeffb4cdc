#pragma once

#include <string>
#include <variant>
#include <vector>

#include "reflectk/equivalence.hpp"
#include "reflectk/families.hpp"
#include "reflectk/verifier.hpp"

namespace reflectk {

/// Matrix schema: { "dim": n, "entries": [ {"row": i, "col": j, "value": "<expr>"} ] }
/// Entries are emitted row-major; values use the canonical scalar grammar.
std::string matrix_to_json(const Mat& m);
Mat matrix_from_json(const std::string& text);

using ClassLabel = std::variant<SymClass, TriClass, TwistedClass>;

std::string label_to_json(const ClassLabel& label);
ClassLabel label_from_json(const std::string& text);

/// {"counts": {...}, "classes": [...]} for all three families at N.
std::string enumeration_to_json(int N);

std::string report_to_json(const VerifyReport& rep);

/// Moves replay format, e.g.
///   [{"move":"conjugate","z":"zrho^2","eta":"1","flavor":"re"}, ...]
/// z is "zrho", "zrho^<k>" or "diag:<expr>,...,<expr>".
std::string moves_to_json(const std::vector<EquivMove>& moves, int N);
std::vector<EquivMove> moves_from_json(const std::string& text, int N);

}  // namespace reflectk
