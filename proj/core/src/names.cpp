#include "reflectk/names.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <vector>

#include "reflectk/errors.hpp"

namespace reflectk::names {
namespace {

struct Registry {
    std::map<std::string, VarId, std::less<>> ids;
    std::vector<std::string> strs;
    std::vector<std::uint64_t> ranks;
    std::mutex mtx;
};

Registry& reg() {
    static Registry r;
    return r;
}

// Rank classes; c_k / d_k get class*2^32 + k so every c precedes every d.
constexpr std::uint64_t kIndexed = std::uint64_t(1) << 32;

bool parse_indexed(std::string_view name, char head, int& k) {
    if (name.size() < 3 || name[0] != head || name[1] != '_') return false;
    if (name[2] == '0') return false;
    long val = 0;
    for (std::size_t i = 2; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
        val = val * 10 + (name[i] - '0');
        if (val > 1'000'000) return false;
    }
    k = static_cast<int>(val);
    return true;
}

bool registry_rank(std::string_view name, std::uint64_t& rank) {
    static const std::pair<std::string_view, std::uint64_t> fixed[] = {
        {"s", 0}, {"u", 1}, {"v", 2}, {"lambda", 3},
        {"mu", 4}, {"alpha", 5}, {"eta", 6},
    };
    for (const auto& [n, r] : fixed) {
        if (name == n) {
            rank = r;
            return true;
        }
    }
    int k = 0;
    if (parse_indexed(name, 'c', k)) {
        rank = 7 * kIndexed + std::uint64_t(k);
        return true;
    }
    if (parse_indexed(name, 'd', k)) {
        rank = 8 * kIndexed + std::uint64_t(k);
        return true;
    }
    return false;
}

}  // namespace

bool is_registry_name(std::string_view name) {
    std::uint64_t r;
    return registry_rank(name, r);
}

VarId intern(std::string_view name) {
    std::uint64_t r;
    if (!registry_rank(name, r)) {
        throw ParseError("unknown indeterminate '" + std::string(name) +
                             "' (registry: s u v lambda mu alpha eta c_<k> d_<k>)",
                         0);
    }
    auto& g = reg();
    std::lock_guard<std::mutex> lock(g.mtx);
    auto it = g.ids.find(name);
    if (it != g.ids.end()) return it->second;
    VarId id = static_cast<VarId>(g.strs.size());
    g.ids.emplace(std::string(name), id);
    g.strs.emplace_back(name);
    g.ranks.push_back(r);
    return id;
}

const std::string& str(VarId id) {
    auto& g = reg();
    std::lock_guard<std::mutex> lock(g.mtx);
    return g.strs.at(id);
}

std::uint64_t rank(VarId id) {
    auto& g = reg();
    std::lock_guard<std::mutex> lock(g.mtx);
    return g.ranks.at(id);
}

VarId s() { static VarId id = intern("s"); return id; }
VarId u() { static VarId id = intern("u"); return id; }
VarId v() { static VarId id = intern("v"); return id; }
VarId lambda() { static VarId id = intern("lambda"); return id; }
VarId mu() { static VarId id = intern("mu"); return id; }
VarId alpha() { static VarId id = intern("alpha"); return id; }
VarId eta() { static VarId id = intern("eta"); return id; }
VarId c(int k) { return intern("c_" + std::to_string(k)); }
VarId d(int k) { return intern("d_" + std::to_string(k)); }

}  // namespace reflectk::names
