#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "s2t/near_domain.hpp"
#include "s2t/phi_system.hpp"

namespace s2t {

struct IsoWitness {
    enum class Kind { phi_system, near_domain };
    Kind kind = Kind::phi_system;
    std::vector<int> map;  // carrier bijection, map[0] = 0, map[1] = 1
};

// phi(x) = x(0-e) + e, built from the near-domain's own tables.  For a
// validated input the result always passes validate_phi.
inline PhiSystem a_map(const NearDomain& d) {
    const int n = d.n();
    const int a = d.L(Carrier::unit);  // 0 - e
    std::vector<int> phi(n);
    for (int x = 0; x < n; ++x) phi[x] = d.add(d.mul(x, a), Carrier::unit);
    return PhiSystem(d.group(), std::move(phi));
}

// x+y = phi(x EL(y)) y and x-y = phi(x y^{-1}) L(y) for an arbitrary
// bijection L of B1.  The result satisfies A1-A7 whatever L is chosen.
inline NearDomain f_l_map(const PhiSystem& s, const std::vector<int>& lmap) {
    const int n = s.n();
    if (static_cast<int>(lmap.size()) != n - 1)
        throw std::invalid_argument("f_l_map: L must have n-1 entries");
    std::vector<bool> seen(n, false);
    for (int v : lmap) {
        if (v < 1 || v >= n || seen[v])
            throw std::invalid_argument("f_l_map: L is not a bijection of B1");
        seen[v] = true;
    }

    const GroupTable& g = s.group();
    std::vector<std::vector<int>> add(n, std::vector<int>(n - 1));
    std::vector<std::vector<int>> sub(n, std::vector<int>(n - 1));
    for (int x = 0; x < n; ++x)
        for (int y = 1; y < n; ++y) {
            const int ely = g.inv(lmap[y - 1]);
            add[x][y - 1] = s.ext_mul(s.phi_of(s.ext_mul(x, ely)), y);
            sub[x][y - 1] = s.ext_mul(s.phi_of(s.ext_mul(x, g.inv(y))), lmap[y - 1]);
        }
    return NearDomain(g, std::move(add), std::move(sub), lmap);
}

// All bijections of B1 as carrier-valued tables, in lexicographic order.
// Guarded: (n-1)! sweeps are only meant for desk-scale carriers.
inline std::vector<std::vector<int>> all_b1_bijections(int n) {
    if (n > 8)
        throw std::invalid_argument("all_b1_bijections: refusing (n-1)! sweep for n > 8");
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace detail {

// Backtracking search for a carrier bijection fixing 0 and e.  `consistent`
// is called with the partial assignment (-1 = unassigned) after each
// tentative image and must only test constraints whose values are assigned;
// `complete` does the full table comparison at a leaf.
template <typename Consistent, typename Complete>
inline bool extend_iso(std::vector<int>& sigma, std::vector<bool>& used, int next, int n,
                       const Consistent& consistent, const Complete& complete) {
    if (next == n) return complete(sigma);
    for (int img = 2; img < n; ++img) {
        if (used[img]) continue;
        sigma[next] = img;
        used[img] = true;
        if (consistent(sigma, next) &&
            extend_iso(sigma, used, next + 1, n, consistent, complete))
            return true;
        used[img] = false;
        sigma[next] = -1;
    }
    return false;
}

} // namespace detail

// Exhaustive isomorphism search between phi-systems of equal order.  Any
// isomorphism fixes the definable constants 0 and e, so the search runs
// over the remaining (n-2)! images with group-homomorphism pruning.
inline std::optional<IsoWitness> iso_check_phi(const PhiSystem& s1, const PhiSystem& s2) {
    if (s1.n() != s2.n()) return std::nullopt;
    const int n = s1.n();
    std::vector<int> sigma(n, -1);
    std::vector<bool> used(n, false);
    sigma[0] = 0;
    sigma[1] = 1;
    used[0] = used[1] = true;

    auto consistent = [&](const std::vector<int>& sg, int x) {
        if (sg[s1.phi_of(x)] != -1 && sg[s1.phi_of(x)] != s2.phi_of(sg[x])) return false;
        for (int a = 1; a < n; ++a) {
            if (sg[a] == -1) continue;
            int p = s1.group().mul(x, a), q = s1.group().mul(a, x);
            if (sg[p] != -1 && sg[p] != s2.group().mul(sg[x], sg[a])) return false;
            if (sg[q] != -1 && sg[q] != s2.group().mul(sg[a], sg[x])) return false;
        }
        return true;
    };
    auto complete = [&](const std::vector<int>& sg) {
        for (int x = 0; x < n; ++x)
            if (sg[s1.phi_of(x)] != s2.phi_of(sg[x])) return false;
        for (int x = 1; x < n; ++x) {
            if (sg[s1.group().inv(x)] != s2.group().inv(sg[x])) return false;
            for (int y = 1; y < n; ++y)
                if (sg[s1.group().mul(x, y)] != s2.group().mul(sg[x], sg[y])) return false;
        }
        return true;
    };

    if (n == 2) {
        if (complete(sigma)) return IsoWitness{IsoWitness::Kind::phi_system, sigma};
        return std::nullopt;
    }
    if (detail::extend_iso(sigma, used, 2, n, consistent, complete))
        return IsoWitness{IsoWitness::Kind::phi_system, sigma};
    return std::nullopt;
}

inline std::optional<IsoWitness> iso_check_near_domain(const NearDomain& d1,
                                                       const NearDomain& d2) {
    if (d1.n() != d2.n()) return std::nullopt;
    const int n = d1.n();
    std::vector<int> sigma(n, -1);
    std::vector<bool> used(n, false);
    sigma[0] = 0;
    sigma[1] = 1;
    used[0] = used[1] = true;

    auto consistent = [&](const std::vector<int>& sg, int x) {
        if (sg[d1.L(x)] != -1 && sg[d1.L(x)] != d2.L(sg[x])) return false;
        for (int a = 1; a < n; ++a) {
            if (sg[a] == -1) continue;
            int p = d1.group().mul(x, a);
            if (sg[p] != -1 && sg[p] != d2.group().mul(sg[x], sg[a])) return false;
            int s = d1.add(x, a);
            if (sg[s] != -1 && sg[s] != d2.add(sg[x], sg[a])) return false;
        }
        return true;
    };
    auto complete = [&](const std::vector<int>& sg) {
        for (int x = 0; x < n; ++x)
            for (int y = 1; y < n; ++y) {
                if (sg[d1.add(x, y)] != d2.add(sg[x], sg[y])) return false;
                if (sg[d1.sub(x, y)] != d2.sub(sg[x], sg[y])) return false;
            }
        for (int x = 1; x < n; ++x) {
            if (sg[d1.L(x)] != d2.L(sg[x])) return false;
            for (int y = 1; y < n; ++y)
                if (sg[d1.group().mul(x, y)] != d2.group().mul(sg[x], sg[y])) return false;
        }
        return true;
    };

    if (n == 2) {
        if (complete(sigma)) return IsoWitness{IsoWitness::Kind::near_domain, sigma};
        return std::nullopt;
    }
    if (detail::extend_iso(sigma, used, 2, n, consistent, complete))
        return IsoWitness{IsoWitness::Kind::near_domain, sigma};
    return std::nullopt;
}

// Round trip starting from a phi-system: for every bijection L, the
// constructed near-domain validates and translating back lands in the same
// isomorphism class.
inline Report roundtrip_phi_near_domain(const PhiSystem& s) {
    Report rep;
    const auto ls = all_b1_bijections(s.n());

    bool valid_ok = true, iso_ok = true;
    std::string valid_detail, iso_detail;
    for (const auto& l : ls) {
        NearDomain d = f_l_map(s, l);
        NdValidation v = validate_near_domain(d);
        if (!v.report.ok()) {
            if (valid_ok) valid_detail = "L offset " + std::to_string(&l - ls.data()) + ": " +
                                         v.report.first_failure().name;
            valid_ok = false;
            continue;
        }
        PhiSystem back = a_map(d);
        if (!iso_check_phi(s, back)) {
            if (iso_ok) iso_detail = "L offset " + std::to_string(&l - ls.data());
            iso_ok = false;
        }
    }
    rep.add("f-map validates for every L (" + std::to_string(ls.size()) + " bijections)",
            valid_ok, valid_detail);
    rep.add("a-map after f-map is isomorphic to the source for every L", iso_ok, iso_detail);
    return rep;
}

// Round trip starting from a near-domain: translate to the phi-system and
// back with every bijection L'; the tables reproduce exactly when and only
// when L' is the near-domain's own L.
inline Report roundtrip_near_domain_phi(const NearDomain& d) {
    Report rep;
    const int n = d.n();
    PhiSystem s = a_map(d);
    std::vector<int> own(n - 1);
    for (int y = 1; y < n; ++y) own[y - 1] = d.L(y);

    bool identity_ok = false, others_ok = true;
    std::string detail_str;
    for (const auto& l : all_b1_bijections(n)) {
        NearDomain back = f_l_map(s, l);
        const bool equal = back == d;
        if (l == own) {
            identity_ok = equal;
        } else if (equal) {
            others_ok = false;
            if (detail_str.empty()) {
                detail_str = "tables also reproduced at a different L";
            }
        }
    }
    rep.add("f-map at the original L reproduces the tables exactly", identity_ok, "tables differ");
    rep.add("f-map at any other L changes the tables", others_ok, detail_str);
    return rep;
}

} // namespace s2t
