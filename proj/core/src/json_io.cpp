#include "reflectk/json_io.hpp"

#include <json.hpp>

#include "reflectk/expr.hpp"

namespace reflectk {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what(), e.byte);
    }
}

[[noreturn]] void schema_error(const std::string& what) {
    throw ParseError("json schema: " + what, 0);
}

}  // namespace

std::string matrix_to_json(const Mat& m) {
    ordered_json out;
    out["dim"] = m.dim();
    out["entries"] = ordered_json::array();
    for (const auto& [idx, val] : m.entries()) {
        ordered_json e;
        e["row"] = idx.first;
        e["col"] = idx.second;
        e["value"] = to_string(val);
        out["entries"].push_back(std::move(e));
    }
    return out.dump(2);
}

Mat matrix_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        schema_error("matrix object needs \"dim\" and \"entries\"");
    if (!j["dim"].is_number_integer()) schema_error("\"dim\" must be an integer");
    int dim = j["dim"].get<int>();
    Mat m(dim);
    for (const auto& e : j["entries"]) {
        if (!e.contains("row") || !e.contains("col") || !e.contains("value"))
            schema_error("entry needs \"row\", \"col\", \"value\"");
        int row = e["row"].get<int>();
        int col = e["col"].get<int>();
        Scalar val = parse_scalar(e["value"].get<std::string>());
        if (row < 1 || row > dim || col < 1 || col > dim)
            schema_error("entry index out of range");
        m.add_at(row, col, val);
    }
    return m;
}

namespace {

ordered_json label_json(const SymClass& c) {
    return ordered_json{{"family", "sym"}, {"N", c.N}, {"l", c.l}, {"r", c.r}};
}

ordered_json label_json(const TriClass& c) {
    ordered_json j{{"family", "tri"}, {"N", c.N}, {"m", c.m}};
    j["sigma"] = c.sigma.img;
    auto eps = ordered_json::array();
    for (const auto& [a, b] : c.eps) eps.push_back(ordered_json::array({a, b}));
    j["eps"] = std::move(eps);
    return j;
}

ordered_json label_json(const TwistedClass& c) {
    return ordered_json{{"family", "twisted"}, {"N", c.N}, {"kind", to_string(c.kind)}};
}

}  // namespace

std::string label_to_json(const ClassLabel& label) {
    return std::visit([](const auto& c) { return label_json(c).dump(); }, label);
}

ClassLabel label_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("family")) schema_error("label needs \"family\"");
    std::string family = j["family"].get<std::string>();
    int N = j.value("N", 0);
    if (family == "sym") {
        SymClass c{N, j.value("l", -1), j.value("r", -1)};
        c.validate();
        return c;
    }
    if (family == "tri") {
        TriClass c;
        c.N = N;
        c.m = j.value("m", -1);
        if (j.contains("sigma"))
            c.sigma.img = j["sigma"].get<std::vector<int>>();
        else
            c.sigma = Involution::identity(N);
        if (j.contains("eps"))
            for (const auto& p : j["eps"]) {
                if (!p.is_array() || p.size() != 2) schema_error("eps entries are [i, j]");
                c.eps.insert({p[0].get<int>(), p[1].get<int>()});
            }
        c.validate();
        return c;
    }
    if (family == "twisted") {
        TwistedClass c{N, twisted_kind_from_string(j.value("kind", ""))};
        c.validate();
        return c;
    }
    schema_error("unknown family '" + family + "'");
}

std::string enumeration_to_json(int N) {
    ordered_json out;
    auto sym = enum_sym_classes(N);
    auto tri = enum_tri_classes(N);
    auto twisted = enum_twisted_classes(N);
    out["N"] = N;
    out["counts"] = ordered_json{
        {"sym", sym.size()}, {"tri", tri.size()}, {"twisted", twisted.size()}};
    auto arr = ordered_json::array();
    for (const auto& c : sym) arr.push_back(label_json(c));
    for (const auto& c : tri) arr.push_back(label_json(c));
    for (const auto& c : twisted) arr.push_back(label_json(c));
    out["classes"] = std::move(arr);
    return out.dump(2);
}

std::string report_to_json(const VerifyReport& rep) {
    ordered_json out;
    out["equation"] = rep.equation;
    out["mode"] = to_string(rep.mode);
    out["pass"] = rep.pass;
    if (rep.witness) {
        ordered_json w;
        w["row"] = rep.witness->row;
        w["col"] = rep.witness->col;
        w["residual"] = rep.witness->residual;
        if (rep.witness->sample) w["sample"] = *rep.witness->sample;
        out["witness"] = std::move(w);
    }
    if (rep.mode == VerifyMode::Sampled) {
        out["samples_used"] = rep.samples_used;
        out["retries"] = rep.retries;
    }
    if (rep.error) out["error"] = *rep.error;
    if (!rep.note.empty()) out["note"] = rep.note;
    return out.dump(2);
}

namespace {

std::string z_spec_of(const Mat& Z, int N) {
    // Recognize zrho^k and diagonal matrices; anything else round-trips as
    // an inline matrix object.
    Mat zr = build_Zrho(N);
    Mat acc = zr;
    for (int k = 1; k < N; ++k) {
        if (Z.equals(acc)) return k == 1 ? "zrho" : "zrho^" + std::to_string(k);
        acc = acc * zr;
    }
    bool diag = true;
    for (const auto& [idx, val] : Z.entries())
        if (idx.first != idx.second) diag = false;
    if (diag && !Z.entries().empty()) {
        std::string out = "diag:";
        for (int i = 1; i <= N; ++i) {
            if (i > 1) out += ",";
            out += to_string(Z.at(i, i));
        }
        return out;
    }
    return "matrix:" + matrix_to_json(Z);
}

Mat z_of_spec(const std::string& spec, int N) {
    if (spec.rfind("zrho", 0) == 0) {
        int k = 1;
        if (spec.size() > 4) {
            if (spec[4] != '^') throw ParseError("bad z spec '" + spec + "'", 0);
            k = std::stoi(spec.substr(5));
        }
        if (k < 1) throw ParseError("zrho power must be >= 1", 0);
        Mat zr = build_Zrho(N);
        Mat acc = zr;
        for (int t = 1; t < k; ++t) acc = acc * zr;
        return acc;
    }
    if (spec.rfind("diag:", 0) == 0) {
        Mat Z(N);
        std::string rest = spec.substr(5);
        int i = 1;
        std::size_t pos = 0;
        while (i <= N) {
            std::size_t comma = rest.find(',', pos);
            std::string piece = comma == std::string::npos ? rest.substr(pos)
                                                           : rest.substr(pos, comma - pos);
            Z.set(i, i, parse_scalar(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
            ++i;
        }
        if (i != N) throw ParseError("diag: expected " + std::to_string(N) + " entries", 0);
        return Z;
    }
    if (spec.rfind("matrix:", 0) == 0) return matrix_from_json(spec.substr(7));
    throw ParseError("bad z spec '" + spec + "' (zrho[^k] | diag:... | matrix:...)", 0);
}

}  // namespace

std::string moves_to_json(const std::vector<EquivMove>& moves, int N) {
    ordered_json arr = ordered_json::array();
    for (const auto& mv : moves) {
        ordered_json j;
        std::visit(
            [&](const auto& m) {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, MoveNegate>) {
                    j["move"] = "negate";
                } else if constexpr (std::is_same_v<T, MoveScale>) {
                    j["move"] = "scale";
                    j["g"] = to_string(m.g);
                } else if constexpr (std::is_same_v<T, MoveConjugate>) {
                    j["move"] = "conjugate";
                    j["z"] = z_spec_of(m.Z, N);
                    j["eta"] = to_string(m.eta);
                    j["flavor"] = to_string(m.flavor);
                } else {
                    j["move"] = "dualize";
                    j["flavor"] = to_string(m.flavor);
                }
            },
            mv);
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::vector<EquivMove> moves_from_json(const std::string& text, int N) {
    json j = parse_or_throw(text);
    if (!j.is_array()) schema_error("moves file must be a json array");
    std::vector<EquivMove> out;
    for (const auto& m : j) {
        std::string kind = m.value("move", "");
        if (kind == "negate") {
            out.emplace_back(MoveNegate{});
        } else if (kind == "scale") {
            out.emplace_back(MoveScale{parse_scalar(m.value("g", ""))});
        } else if (kind == "conjugate") {
            MoveConjugate mc(z_of_spec(m.value("z", ""), N),
                             parse_scalar(m.value("eta", "1")),
                             flavor_from_string(m.value("flavor", "re")));
            out.emplace_back(std::move(mc));
        } else if (kind == "dualize") {
            out.emplace_back(MoveDualize{flavor_from_string(m.value("flavor", "re"))});
        } else {
            schema_error("unknown move '" + kind + "'");
        }
    }
    return out;
}

}  // namespace reflectk
