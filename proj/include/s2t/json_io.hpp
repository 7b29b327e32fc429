#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "s2t/group_table.hpp"
#include "s2t/near_domain.hpp"
#include "s2t/phi_system.hpp"
#include "s2t/report.hpp"
#include "s2t/two_transitive.hpp"

namespace s2t {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int expect_int(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError("missing or non-integer field \"" + key + "\"");
    return j[key].get<int>();
}

inline std::vector<int> expect_int_array(const json& j, const std::string& key, int size) {
    if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != size)
        throw ParseError("field \"" + key + "\" must be an array of " + std::to_string(size) +
                         " integers");
    std::vector<int> out;
    out.reserve(size);
    for (const auto& v : j[key]) {
        if (!v.is_number_integer())
            throw ParseError("field \"" + key + "\" must contain integers only");
        out.push_back(v.get<int>());
    }
    return out;
}

inline std::vector<std::vector<int>> expect_matrix(const json& j, const std::string& key,
                                                   int rows, int cols) {
    if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != rows)
        throw ParseError("field \"" + key + "\" must be an array of " + std::to_string(rows) +
                         " rows");
    std::vector<std::vector<int>> out;
    out.reserve(rows);
    for (const auto& row : j[key]) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("rows of \"" + key + "\" must have " + std::to_string(cols) +
                             " entries");
        std::vector<int> r;
        r.reserve(cols);
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw ParseError("field \"" + key + "\" must contain integers only");
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace detail

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Shared table schema: {"n": int, "mul": [[int]], "inv": [int]}, entries
// carrier-valued, rows/positions offset by one over B1.
inline GroupTable group_from_json(const json& j) {
    const int n = detail::expect_int(j, "n");
    if (n < 2) throw ParseError("n must be >= 2");
    return GroupTable(n, detail::expect_matrix(j, "mul", n - 1, n - 1),
                      detail::expect_int_array(j, "inv", n - 1));
}

inline json group_to_json(const GroupTable& g) {
    const int m = g.order();
    json mul = json::array(), inv = json::array();
    for (int i = 0; i < m; ++i) {
        json row = json::array();
        for (int k = 0; k < m; ++k) row.push_back(g.raw_mul(i, k));
        mul.push_back(std::move(row));
        inv.push_back(g.raw_inv(i));
    }
    return json{{"n", g.n()}, {"mul", std::move(mul)}, {"inv", std::move(inv)}};
}

inline PhiSystem phi_system_from_json(const json& j) {
    GroupTable g = group_from_json(j);
    return PhiSystem(g, detail::expect_int_array(j, "phi", g.n()));
}

inline json phi_system_to_json(const PhiSystem& s) {
    json j = group_to_json(s.group());
    j["phi"] = s.phi();
    return j;
}

inline NearDomain near_domain_from_json(const json& j) {
    GroupTable g = group_from_json(j);
    const int n = g.n();
    return NearDomain(g, detail::expect_matrix(j, "add", n, n - 1),
                      detail::expect_matrix(j, "sub", n, n - 1),
                      detail::expect_int_array(j, "L", n - 1));
}

inline json near_domain_to_json(const NearDomain& d) {
    json j = group_to_json(d.group());
    const int n = d.n();
    json add = json::array(), sub = json::array(), l = json::array();
    for (int x = 0; x < n; ++x) {
        json arow = json::array(), srow = json::array();
        for (int k = 0; k < n - 1; ++k) {
            arow.push_back(d.raw_add(x, k));
            srow.push_back(d.raw_sub(x, k));
        }
        add.push_back(std::move(arow));
        sub.push_back(std::move(srow));
    }
    for (int k = 0; k < n - 1; ++k) l.push_back(d.raw_L(k));
    j["add"] = std::move(add);
    j["sub"] = std::move(sub);
    j["L"] = std::move(l);
    return j;
}

// Permutation-group schema: {"degree": int, "perms": [[int]], "base": [e1, e2]}.
inline PermutationAction action_from_json(const json& j) {
    PermutationAction p;
    p.degree = detail::expect_int(j, "degree");
    if (p.degree < 2) throw ParseError("degree must be >= 2");
    if (!j.contains("perms") || !j["perms"].is_array() || j["perms"].empty())
        throw ParseError("field \"perms\" must be a non-empty array of image arrays");
    for (const auto& row : j["perms"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != p.degree)
            throw ParseError("each perm must list degree-many images");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError("perms must contain integers only");
            r.push_back(v.get<int>());
        }
        p.perms.push_back(std::move(r));
    }
    auto base = detail::expect_int_array(j, "base", 2);
    p.base1 = base[0];
    p.base2 = base[1];
    return p;
}

inline json action_to_json(const PermutationAction& p) {
    return json{{"degree", p.degree}, {"perms", p.perms}, {"base", {p.base1, p.base2}}};
}

inline json pair_group_to_json(const PairGroup& g, bool include_perms) {
    json pairs = json::array();
    for (int i = 0; i < g.size(); ++i)
        pairs.push_back({g.element(i).x1, g.element(i).x2});
    json j{{"n", g.n()}, {"order", g.size()}, {"pairs", std::move(pairs)}};
    if (include_perms) {
        json perms = json::array();
        for (int i = 0; i < g.size(); ++i) perms.push_back(g.perm(i));
        j["perms"] = std::move(perms);
    }
    return j;
}

inline json report_to_json(const Report& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks())
        checks.push_back({{"name", c.name},
                          {"kind", c.kind == CheckKind::structure ? "structure" : "axiom"},
                          {"passed", c.passed},
                          {"detail", c.detail}});
    return json{{"ok", rep.ok()},
                {"structural_failure", rep.structural_failure()},
                {"checks", std::move(checks)}};
}

enum class InputKind { phi_system, near_domain, permutation_action, group_table, unknown };

inline InputKind detect_kind(const json& j) {
    if (j.contains("perms") && j.contains("degree")) return InputKind::permutation_action;
    if (j.contains("add")) return InputKind::near_domain;
    if (j.contains("phi")) return InputKind::phi_system;
    if (j.contains("mul")) return InputKind::group_table;
    return InputKind::unknown;
}

} // namespace s2t
