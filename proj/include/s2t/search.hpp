#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "s2t/equivalence.hpp"
#include "s2t/near_domain.hpp"
#include "s2t/phi_system.hpp"

namespace s2t {

// Exhaustive search for all phi-systems over a fixed group table, and the
// census of the near-domains they induce.

struct PhiLRecord {
    std::vector<int> lmap;
    bool valid = false;
    Classification flags;
};

struct SearchResult {
    GroupTable group;
    std::vector<std::vector<int>> survivors;       // every valid phi, enumeration order
    std::vector<int> representatives;              // indices into survivors, deduped by isomorphism
    std::vector<std::vector<PhiLRecord>> per_rep;  // classification of F_L per representative
};

namespace detail {

// Involutions of {2, ..., n-1}, extended by phi(0)=e, phi(e)=0.  F3 and
// the strict F4 reading force phi(0)=e and phi^2=id, so every survivor
// has this shape; the test suite cross-checks the survivor set against
// an unpruned all-maps enumeration.
inline void enumerate_involution_candidates(int n, std::vector<int>& phi, int next,
                                            std::vector<std::vector<int>>& out) {
    while (next < n && phi[next] != -1) ++next;
    if (next == n) {
        out.push_back(phi);
        return;
    }
    phi[next] = next;  // fixed point
    enumerate_involution_candidates(n, phi, next + 1, out);
    phi[next] = -1;
    for (int partner = next + 1; partner < n; ++partner) {
        if (phi[partner] != -1) continue;
        phi[next] = partner;
        phi[partner] = next;
        enumerate_involution_candidates(n, phi, next + 1, out);
        phi[next] = -1;
        phi[partner] = -1;
    }
}

} // namespace detail

inline SearchResult search_phi(const GroupTable& group, int cap = 7) {
    const int n = group.n();
    if (n > cap)
        throw std::invalid_argument(
            "search_phi: n=" + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
            "; raise the cap explicitly if the (n-1)! sweep is acceptable");
    Report grp = validate_group(group);
    if (!grp.ok())
        throw std::invalid_argument("search_phi: group table invalid (" +
                                    grp.first_failure().name + ")");

    SearchResult res{group, {}, {}, {}};

    std::vector<int> seed(n, -1);
    seed[Carrier::zero] = Carrier::unit;
    seed[Carrier::unit] = Carrier::zero;
    std::vector<std::vector<int>> candidates;
    detail::enumerate_involution_candidates(n, seed, 2, candidates);

    for (auto& phi : candidates) {
        PhiSystem s(group, phi);
        if (validate_phi(s).ok()) res.survivors.push_back(std::move(phi));
    }

    for (std::size_t i = 0; i < res.survivors.size(); ++i) {
        PhiSystem s(group, res.survivors[i]);
        bool fresh = true;
        for (int rep : res.representatives)
            if (iso_check_phi(PhiSystem(group, res.survivors[rep]), s)) {
                fresh = false;
                break;
            }
        if (fresh) res.representatives.push_back(static_cast<int>(i));
    }

    for (int rep : res.representatives) {
        PhiSystem s(group, res.survivors[rep]);
        std::vector<PhiLRecord> records;
        for (const auto& l : all_b1_bijections(n)) {
            PhiLRecord r;
            r.lmap = l;
            NearDomain d = f_l_map(s, l);
            r.valid = validate_near_domain(d).report.ok();
            if (r.valid) r.flags = classify(d);
            records.push_back(std::move(r));
        }
        res.per_rep.push_back(std::move(records));
    }
    return res;
}

// Census over all (representative phi, L) pairs.  The interesting find
// would be an induced near-domain whose flags match the stronger axioms of
// a full near-domain (loop-extendable zero, symmetric zero, right
// distributivity) while its addition fails to associate; none is expected
// at these orders, and the table reports whatever is found.
struct CensusSummary {
    int total_pairs = 0;
    int valid_pairs = 0;
    int nonassociative_pairs = 0;  // valid but addition does not associate
    std::vector<std::string> highlights;
};

inline CensusSummary nearfield_census(const SearchResult& res) {
    CensusSummary sum;
    for (std::size_t r = 0; r < res.per_rep.size(); ++r)
        for (const auto& rec : res.per_rep[r]) {
            ++sum.total_pairs;
            if (!rec.valid) continue;
            ++sum.valid_pairs;
            const Classification& c = rec.flags;
            if (!c.additive_associative) ++sum.nonassociative_pairs;
            if (!c.additive_associative && c.right_distributive && c.symmetric_zero &&
                c.zero_extension_loop) {
                std::string l = "[";
                for (std::size_t i = 0; i < rec.lmap.size(); ++i)
                    l += (i ? " " : "") + std::to_string(rec.lmap[i]);
                l += "]";
                sum.highlights.push_back("representative " + std::to_string(r) + ", L=" + l +
                                         ": near-domain flags without additive associativity");
            }
        }
    return sum;
}

inline std::string census_csv(const SearchResult& res) {
    auto vec_str = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    std::string csv =
        "phi_rep,phi,L,valid,additive_associative,right_distributive,left_distributive,"
        "symmetric_zero,L_additive,zero_extension_loop,near_field_candidate\n";
    for (std::size_t r = 0; r < res.per_rep.size(); ++r) {
        const auto& phi = res.survivors[res.representatives[r]];
        for (const auto& rec : res.per_rep[r]) {
            csv += std::to_string(r) + "," + vec_str(phi) + "," + vec_str(rec.lmap) + "," +
                   (rec.valid ? "1" : "0");
            const Classification& c = rec.flags;
            auto flag = [&](bool b) { csv += rec.valid ? (b ? ",1" : ",0") : ","; };
            flag(c.additive_associative);
            flag(c.right_distributive);
            flag(c.left_distributive);
            flag(c.symmetric_zero);
            flag(c.l_additive);
            flag(c.zero_extension_loop);
            flag(c.near_field_candidate);
            csv += "\n";
        }
    }
    return csv;
}

} // namespace s2t
