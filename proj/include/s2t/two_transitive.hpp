#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "s2t/equivalence.hpp"
#include "s2t/phi_system.hpp"
#include "s2t/report.hpp"

namespace s2t {

// Ordered pair of distinct carrier elements; the elements of the
// constructed group.  A pair (y1, y2) acts on B as x -> f(x, y1, y2), and
// is itself the image of the base pair (e, 0) under that action.
struct PairElement {
    int x1 = 0;
    int x2 = 0;
    bool operator==(const PairElement& o) const { return x1 == o.x1 && x2 == o.x2; }
    bool operator!=(const PairElement& o) const { return !(*this == o); }
};

// f(x, y1, y2) = phi(x phi(y1 y2^{-1})) y2 in the extended groupoid, which
// collapses to x*y1 when y2 = 0.
inline int f_action(const PhiSystem& s, int x, int y1, int y2) {
    if (y1 == y2) throw std::invalid_argument("f_action: y1 and y2 must be distinct");
    return s.ext_mul(s.phi_of(s.ext_mul(x, s.phi_of(s.ext_mul(y1, s.ext_inv(y2))))), y2);
}

inline PairElement pair_mul(const PhiSystem& s, PairElement a, PairElement b) {
    return {f_action(s, a.x1, b.x1, b.x2), f_action(s, a.x2, b.x1, b.x2)};
}

// Two-sided inverse.  For x2 in B1 this is the closed form
// (phi(x2^{-1}) E phi(x1 x2^{-1}), E phi(x1 x2^{-1})); a pair (x1, 0) acts
// by right multiplication, so it inverts in place to (x1^{-1}, 0), where
// the closed form degenerates.
inline PairElement pair_inv(const PhiSystem& s, PairElement a) {
    if (a.x2 == Carrier::zero) return {s.ext_inv(a.x1), Carrier::zero};
    const int w = s.ext_inv(s.phi_of(s.ext_mul(a.x1, s.ext_inv(a.x2))));
    return {s.ext_mul(s.phi_of(s.ext_inv(a.x2)), w), w};
}

// The group of all n(n-1) ordered distinct pairs under componentwise f,
// fully materialized: composition and inverse tables plus the permutation
// each element induces on B.
class PairGroup {
public:
    explicit PairGroup(PhiSystem base) : base_(std::move(base)) {
        const int n = base_.n();
        index_.assign(n * n, -1);
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2) {
                if (x1 == x2) continue;
                index_[x1 * n + x2] = static_cast<int>(elems_.size());
                elems_.push_back({x1, x2});
            }
        unit_ = index_of(Carrier::unit, Carrier::zero);

        perms_.resize(elems_.size());
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            perms_[i].resize(n);
            for (int x = 0; x < n; ++x)
                perms_[i][x] = f_action(base_, x, elems_[i].x1, elems_[i].x2);
        }

        const int sz = static_cast<int>(elems_.size());
        mul_.assign(sz * sz, -1);
        inv_.assign(sz, -1);
        for (int i = 0; i < sz; ++i) {
            for (int j = 0; j < sz; ++j) {
                PairElement p = pair_mul(base_, elems_[i], elems_[j]);
                mul_[i * sz + j] = index_of(p.x1, p.x2);
            }
            PairElement q = pair_inv(base_, elems_[i]);
            inv_[i] = index_of(q.x1, q.x2);
        }
    }

    const PhiSystem& base() const { return base_; }
    int n() const { return base_.n(); }
    int size() const { return static_cast<int>(elems_.size()); }
    int unit() const { return unit_; }
    const PairElement& element(int i) const { return elems_[i]; }

    int index_of(int x1, int x2) const {
        if (x1 < 0 || x2 < 0 || x1 >= n() || x2 >= n()) return -1;
        return index_[x1 * n() + x2];
    }

    int mul(int i, int j) const { return mul_[i * size() + j]; }
    int inv(int i) const { return inv_[i]; }
    const std::vector<int>& perm(int i) const { return perms_[i]; }

private:
    PhiSystem base_;
    std::vector<PairElement> elems_;
    std::vector<int> index_;
    std::vector<int> mul_, inv_;
    std::vector<std::vector<int>> perms_;
    int unit_ = -1;
};

struct BuildResult {
    PairGroup group;
    Report report;
};

namespace detail {

inline std::string pair_str(const PairElement& p) {
    return "(" + std::to_string(p.x1) + "," + std::to_string(p.x2) + ")";
}

} // namespace detail

// Materializes the pair group of a validated phi-system and verifies the
// group axioms and the sharp 2-transitivity of its action on B.  Direct
// associativity triples are checked for n <= 5; for larger carriers the
// action-homomorphism property (checked always) implies associativity
// because the pair coordinates make the action faithful.
inline BuildResult build_group(const PhiSystem& s) {
    BuildResult out{PairGroup(s), {}};
    PairGroup& g = out.group;
    Report& rep = out.report;
    const int n = s.n();
    const int sz = g.size();

    rep.add("order n(n-1)", sz == n * (n - 1), "materialized " + std::to_string(sz));

    bool ok = true;
    for (int i = 0; i < sz && ok; ++i) {
        std::vector<bool> seen(n, false);
        for (int x = 0; x < n; ++x) {
            int y = g.perm(i)[x];
            if (y < 0 || y >= n || seen[y]) {
                rep.fail("action-injectivity", "pair " + detail::pair_str(g.element(i)) +
                                                   " does not act bijectively");
                ok = false;
                break;
            }
            seen[y] = true;
        }
    }
    if (ok) rep.pass("action-injectivity");

    ok = true;
    for (int i = 0; i < sz && ok; ++i)
        for (int j = 0; j < sz; ++j)
            if (g.mul(i, j) < 0) {
                rep.fail("closure", detail::pair_str(g.element(i)) + "*" +
                                        detail::pair_str(g.element(j)) + " left the pair set");
                ok = false;
                break;
            }
    if (ok) rep.pass("closure");

    ok = true;
    for (int i = 0; i < sz && ok; ++i)
        if (g.mul(i, g.unit()) != i || g.mul(g.unit(), i) != i) {
            rep.fail("unit (e,0)", detail::pair_str(g.element(i)));
            ok = false;
        }
    if (ok) rep.pass("unit (e,0)");

    ok = true;
    for (int i = 0; i < sz && ok; ++i) {
        int j = g.inv(i);
        if (j < 0 || g.mul(i, j) != g.unit() || g.mul(j, i) != g.unit()) {
            rep.fail("inverses (two-sided)", detail::pair_str(g.element(i)));
            ok = false;
        }
    }
    if (ok) rep.pass("inverses (two-sided)");

    ok = true;
    for (int i = 0; i < sz && ok; ++i)
        for (int j = 0; j < sz && ok; ++j) {
            int ij = g.mul(i, j);
            for (int x = 0; x < n; ++x)
                if (g.perm(ij)[x] != g.perm(j)[g.perm(i)[x]]) {
                    rep.fail("action-homomorphism",
                             detail::pair_str(g.element(i)) + "*" +
                                 detail::pair_str(g.element(j)) + " at x=" + std::to_string(x));
                    ok = false;
                    break;
                }
        }
    if (ok) rep.pass("action-homomorphism");

    if (n <= 5) {
        ok = true;
        for (int i = 0; i < sz && ok; ++i)
            for (int j = 0; j < sz && ok; ++j)
                for (int k = 0; k < sz; ++k)
                    if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) {
                        rep.fail("associativity (direct triples)",
                                 detail::pair_str(g.element(i)) + "," +
                                     detail::pair_str(g.element(j)) + "," +
                                     detail::pair_str(g.element(k)));
                        ok = false;
                        break;
                    }
        if (ok) rep.pass("associativity (direct triples)");
    }

    // exactly one group element maps each ordered distinct pair to each other
    std::vector<int> count(sz * sz, 0);
    for (int i = 0; i < sz; ++i)
        for (int src = 0; src < sz; ++src) {
            const PairElement& p = g.element(src);
            int dst = g.index_of(g.perm(i)[p.x1], g.perm(i)[p.x2]);
            if (dst >= 0) ++count[src * sz + dst];
        }
    ok = true;
    for (int src = 0; src < sz && ok; ++src)
        for (int dst = 0; dst < sz; ++dst)
            if (count[src * sz + dst] != 1) {
                rep.fail("sharply-2-transitive",
                         detail::pair_str(g.element(src)) + " -> " +
                             detail::pair_str(g.element(dst)) + ": " +
                             std::to_string(count[src * sz + dst]) + " elements");
                ok = false;
                break;
            }
    if (ok) rep.pass("sharply-2-transitive");

    return out;
}

// Externally supplied permutation group: a full element list (image
// arrays) plus a designated base pair.
struct PermutationAction {
    int degree = 0;
    std::vector<std::vector<int>> perms;
    int base1 = Carrier::unit;
    int base2 = Carrier::zero;
};

// Closes a generator list under composition (and thereby inversion, the
// set being finite); convenience for building inputs from generators.
inline std::vector<std::vector<int>> saturate(std::vector<std::vector<int>> gens) {
    if (gens.empty()) return gens;
    const int n = static_cast<int>(gens.front().size());
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> seen;
    std::vector<std::vector<int>> out{id};
    seen[id] = 0;
    for (auto& p : gens)
        if (seen.emplace(p, static_cast<int>(out.size())).second) out.push_back(p);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = out[j][out[i][x]];
            if (seen.emplace(comp, static_cast<int>(out.size())).second)
                out.push_back(std::move(comp));
        }
    return out;
}

inline PermutationAction to_action(const PairGroup& g, int e1, int e2) {
    PermutationAction p;
    p.degree = g.n();
    p.base1 = e1;
    p.base2 = e2;
    p.perms.reserve(g.size());
    for (int i = 0; i < g.size(); ++i) p.perms.push_back(g.perm(i));
    return p;
}

// Validates a permutation set as a sharply 2-transitive group: identity,
// closure, inverses, and the exactly-one-mapper requirement over all
// ordered pairs of distinct pairs.
inline Report validate_action(const PermutationAction& p) {
    Report rep;
    const int n = p.degree;

    bool ok = n >= 2 && !p.perms.empty();
    if (!ok) {
        rep.fail("shape", "degree < 2 or empty permutation list", CheckKind::structure);
        return rep;
    }
    for (std::size_t i = 0; i < p.perms.size() && ok; ++i) {
        if (static_cast<int>(p.perms[i].size()) != n) {
            rep.fail("shape", "perm " + std::to_string(i) + " has wrong length",
                     CheckKind::structure);
            ok = false;
            break;
        }
        std::vector<bool> seen(n, false);
        for (int v : p.perms[i])
            if (v < 0 || v >= n || seen[v]) {
                rep.fail("shape", "perm " + std::to_string(i) + " is not a permutation",
                         CheckKind::structure);
                ok = false;
                break;
            } else {
                seen[v] = true;
            }
    }
    if (ok && (p.base1 == p.base2 || p.base1 < 0 || p.base1 >= n || p.base2 < 0 || p.base2 >= n)) {
        rep.fail("shape", "base pair must be two distinct points", CheckKind::structure);
        ok = false;
    }
    if (!ok) return rep;
    rep.pass("shape", CheckKind::structure);

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < p.perms.size(); ++i)
        if (!index.emplace(p.perms[i], static_cast<int>(i)).second) {
            rep.fail("distinct-elements", "perm " + std::to_string(i) + " repeated",
                     CheckKind::structure);
            return rep;
        }
    rep.pass("distinct-elements", CheckKind::structure);

    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    rep.add("contains-identity", index.count(id) != 0, "");

    ok = true;
    for (std::size_t i = 0; i < p.perms.size() && ok; ++i)
        for (std::size_t j = 0; j < p.perms.size(); ++j) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = p.perms[j][p.perms[i][x]];
            if (!index.count(comp)) {
                rep.fail("closed-under-composition",
                         "perm " + std::to_string(i) + " . perm " + std::to_string(j));
                ok = false;
                break;
            }
        }
    if (ok) rep.pass("closed-under-composition");

    ok = true;
    for (std::size_t i = 0; i < p.perms.size() && ok; ++i) {
        std::vector<int> inv(n);
        for (int x = 0; x < n; ++x) inv[p.perms[i][x]] = x;
        if (!index.count(inv)) {
            rep.fail("closed-under-inverse", "perm " + std::to_string(i));
            ok = false;
        }
    }
    if (ok) rep.pass("closed-under-inverse");

    if (!rep.ok()) return rep;

    const int npairs = n * (n - 1);
    auto pair_id = [n](int a, int b) { return a * (n - 1) + (b > a ? b - 1 : b); };
    std::vector<int> count(npairs * npairs, 0);
    for (const auto& g : p.perms)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                ++count[pair_id(a, b) * npairs + pair_id(g[a], g[b])];
            }
    ok = true;
    for (int s = 0; s < npairs && ok; ++s)
        for (int t = 0; t < npairs; ++t)
            if (count[s * npairs + t] != 1) {
                rep.fail("sharply-2-transitive",
                         std::to_string(count[s * npairs + t]) +
                             " elements map pair " + std::to_string(s) + " to pair " +
                             std::to_string(t));
                ok = false;
                break;
            }
    if (ok) rep.pass("sharply-2-transitive");

    return rep;
}

// Result of coordinatizing a sharply 2-transitive group: the recovered
// phi-system on the canonical carrier, together with the relabeling that
// sent the original points there (base2 -> 0, base1 -> 1, rest ascending).
struct Recovered {
    PhiSystem system;
    std::vector<int> relabel;
    int e1 = 0, e2 = 0;
    Report report;
};

// Coordinatizes each group element g by the image pair (g(e1), g(e2)).
// The stabilizer pairs [y, e2] induce the group on B \ {e2} via
// x . y := g_y(x), the pair [e2, e1] provides phi, and after canonical
// relabeling the result is a phi-system.
inline Recovered from_group(const PermutationAction& p) {
    Report pre = validate_action(p);
    if (!pre.ok())
        throw std::invalid_argument("from_group: input is not a sharply 2-transitive group (" +
                                    pre.first_failure().name + ")");

    const int n = p.degree;
    const int e1 = p.base1, e2 = p.base2;
    Recovered out;
    out.e1 = e1;
    out.e2 = e2;
    Report& rep = out.report;

    // pair coordinates are unique by sharp 2-transitivity
    std::vector<int> by_pair(n * n, -1);
    for (std::size_t i = 0; i < p.perms.size(); ++i) {
        int x1 = p.perms[i][e1], x2 = p.perms[i][e2];
        if (by_pair[x1 * n + x2] != -1)
            throw std::logic_error("from_group: coordinatization collision");
        by_pair[x1 * n + x2] = static_cast<int>(i);
    }

    auto stab = [&](int y) { return by_pair[y * n + e2]; };  // [y, e2]
    const int w = by_pair[e2 * n + e1];                      // [e2, e1]

    auto raw_mul = [&](int x, int y) { return p.perms[stab(y)][x]; };
    auto raw_phi = [&](int x) { return p.perms[w][x]; };
    auto raw_inv = [&](int y) {
        const auto& gp = p.perms[stab(y)];
        std::vector<int> inv(n);
        for (int x = 0; x < n; ++x) inv[gp[x]] = x;
        return inv[e1];  // second coordinate stays e2, so this is the inverse's label
    };

    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
        if (raw_phi(raw_phi(x)) != x) {
            rep.fail("pair [e2,e1] is an involution", "x=" + std::to_string(x));
            ok = false;
        }
    if (ok) rep.pass("pair [e2,e1] is an involution");

    ok = true;
    for (int y = 0; y < n && ok; ++y)
        if (y != e2 && raw_mul(e2, y) != e2) {
            rep.fail("e2 is a left zero", "y=" + std::to_string(y));
            ok = false;
        }
    if (ok) rep.pass("e2 is a left zero");

    // every [x1,x2] with x2 != e2 factors as [phi(x1 x2^{-1}), e2][e2,e1][x2, e2]
    ok = true;
    for (int x1 = 0; x1 < n && ok; ++x1)
        for (int x2 = 0; x2 < n && ok; ++x2) {
            if (x1 == x2 || x2 == e2) continue;
            const int g = by_pair[x1 * n + x2];
            const int left = stab(raw_phi(raw_mul(x1, raw_inv(x2))));
            const int right = stab(x2);
            for (int t = 0; t < n; ++t)
                if (p.perms[g][t] != p.perms[right][p.perms[w][p.perms[left][t]]]) {
                    rep.fail("stabilizer factorization",
                             "pair (" + std::to_string(x1) + "," + std::to_string(x2) +
                                 ") at t=" + std::to_string(t));
                    ok = false;
                    break;
                }
        }
    if (ok) rep.pass("stabilizer factorization");

    // canonical relabeling: e2 -> 0, e1 -> 1, remaining points ascending
    std::vector<int>& rho = out.relabel;
    rho.assign(n, -1);
    rho[e2] = 0;
    rho[e1] = 1;
    int next = 2;
    for (int x = 0; x < n; ++x)
        if (x != e1 && x != e2) rho[x] = next++;
    std::vector<int> rho_inv(n);
    for (int x = 0; x < n; ++x) rho_inv[rho[x]] = x;

    std::vector<std::vector<int>> mul(n - 1, std::vector<int>(n - 1));
    std::vector<int> inv(n - 1), phi(n);
    for (int X = 1; X < n; ++X) {
        for (int Y = 1; Y < n; ++Y) mul[X - 1][Y - 1] = rho[raw_mul(rho_inv[X], rho_inv[Y])];
        inv[X - 1] = rho[raw_inv(rho_inv[X])];
    }
    for (int X = 0; X < n; ++X) phi[X] = rho[raw_phi(rho_inv[X])];

    out.system = PhiSystem(GroupTable(n, std::move(mul), std::move(inv)), std::move(phi));
    rep.absorb("recovered system validates", validate_phi(out.system));
    return out;
}

// Round trip phi-system -> pair group -> phi-system over every base pair:
// the connecting map x -> phi(x phi(e1 e2^{-1})) e2 followed by the
// canonical relabeling must carry the source tables onto the recovered
// ones exactly; for base (e, 0) the composite is the identity.
inline Report roundtrip_pair_group(const PhiSystem& s) {
    Report rep;
    BuildResult built = build_group(s);
    rep.absorb("pair group construction", built.report);
    if (!rep.ok()) return rep;

    const int n = s.n();
    bool all_ok = true, identity_ok = true;
    std::string det;
    int bases = 0;
    for (int e1 = 0; e1 < n; ++e1)
        for (int e2 = 0; e2 < n; ++e2) {
            if (e1 == e2) continue;
            ++bases;
            Recovered rec = from_group(to_action(built.group, e1, e2));
            if (!rec.report.ok()) {
                all_ok = false;
                if (det.empty())
                    det = "base (" + std::to_string(e1) + "," + std::to_string(e2) + "): " +
                          rec.report.first_failure().name;
                continue;
            }
            const int c = s.phi_of(s.ext_mul(e1, s.ext_inv(e2)));
            std::vector<int> chi(n);
            std::vector<bool> seen(n, false);
            bool match = true;
            for (int x = 0; x < n; ++x) {
                chi[x] = rec.relabel[s.ext_mul(s.phi_of(s.ext_mul(x, c)), e2)];
                match = match && !seen[chi[x]];
                seen[chi[x]] = true;
            }
            match = match && chi[Carrier::zero] == Carrier::zero &&
                    chi[Carrier::unit] == Carrier::unit;
            for (int x = 0; x < n && match; ++x)
                match = rec.system.phi_of(chi[x]) == chi[s.phi_of(x)];
            for (int x = 1; x < n && match; ++x)
                for (int y = 1; y < n && match; ++y)
                    match = rec.system.group().mul(chi[x], chi[y]) == chi[s.group().mul(x, y)];
            if (!match) {
                all_ok = false;
                if (det.empty())
                    det = "base (" + std::to_string(e1) + "," + std::to_string(e2) +
                          "): connecting map does not carry the tables";
            }
            if (e1 == Carrier::unit && e2 == Carrier::zero) {
                identity_ok = rec.system == s;
                for (int x = 0; x < n; ++x) identity_ok = identity_ok && chi[x] == x;
            }
        }
    rep.add("recovery matches through the connecting map (" + std::to_string(bases) + " bases)",
            all_ok, det);
    rep.add("base (e,0) recovery is table-identical", identity_ok, "tables or map differ");
    return rep;
}

// Round trip group -> phi-system -> group: rebuilding from the recovered
// system reproduces the input action element-by-element through the pair
// coordinatization.
inline Report roundtrip_action(const PermutationAction& p) {
    Report rep;
    rep.absorb("input action validates", validate_action(p));
    if (!rep.ok()) return rep;

    Recovered rec = from_group(p);
    rep.absorb("recovery", rec.report);
    if (!rep.ok()) return rep;

    BuildResult built = build_group(rec.system);
    rep.absorb("rebuilt pair group", built.report);
    if (!rep.ok()) return rep;

    const int n = p.degree;
    rep.add("rebuilt order matches", built.group.size() == static_cast<int>(p.perms.size()),
            std::to_string(built.group.size()) + " vs " + std::to_string(p.perms.size()));

    bool ok = true;
    std::string det;
    std::vector<bool> hit(built.group.size(), false);
    for (const auto& g : p.perms) {
        const int a = rec.relabel[g[p.base1]], b = rec.relabel[g[p.base2]];
        const int idx = built.group.index_of(a, b);
        if (idx < 0 || hit[idx]) {
            ok = false;
            det = "pair coordinates collide";
            break;
        }
        hit[idx] = true;
        for (int t = 0; t < n; ++t)
            if (rec.relabel[g[t]] != built.group.perm(idx)[rec.relabel[t]]) {
                ok = false;
                det = "element with pair (" + std::to_string(a) + "," + std::to_string(b) +
                      ") acts differently at t=" + std::to_string(t);
                break;
            }
        if (!ok) break;
    }
    rep.add("rebuilt group matches element-by-element", ok, det);
    return rep;
}

} // namespace s2t
