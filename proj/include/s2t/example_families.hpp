#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "s2t/galois_field.hpp"
#include "s2t/near_domain.hpp"
#include "s2t/report.hpp"

namespace s2t {

// The two families of right near-domains over GF(q) with phi(x) = 1 - x:
//   scaling:  L(x) = ax,      x(+)y = -x a^{-1} + y,   x(-)y = -xa + ay
//   inverse:  L(x) = -x^{-1}, x(+)y = x y^2 + y,       x(-)y = x y^{-2} - y^{-1}
// Finite carriers keep everything commutative, so "skew" aspects vanish.
enum class Family { scaling, inverse };

struct ExampleSpec {
    int q = 0;
    Family family = Family::scaling;
    int a = 0;  // scaling parameter, nonzero field element
};

inline GaloisField field_of(const ExampleSpec& spec) {
    auto pk = GaloisField::factor_prime_power(spec.q);
    if (!pk) throw std::invalid_argument("make_example: q=" + std::to_string(spec.q) +
                                         " is not a prime power");
    return GaloisField::make(pk->first, pk->second);
}

inline NearDomain make_example(const ExampleSpec& spec) {
    GaloisField f = field_of(spec);
    const int n = f.q();
    if (spec.family == Family::scaling && (spec.a <= 0 || spec.a >= n))
        throw std::invalid_argument("make_example: scaling family needs a nonzero field element a");

    std::vector<std::vector<int>> add(n, std::vector<int>(n - 1));
    std::vector<std::vector<int>> sub(n, std::vector<int>(n - 1));
    std::vector<int> lmap(n - 1);
    if (spec.family == Family::scaling) {
        const int a = spec.a, ainv = f.inv(spec.a);
        for (int y = 1; y < n; ++y) lmap[y - 1] = f.mul(a, y);
        for (int x = 0; x < n; ++x)
            for (int y = 1; y < n; ++y) {
                add[x][y - 1] = f.add(f.neg(f.mul(x, ainv)), y);
                sub[x][y - 1] = f.add(f.neg(f.mul(x, a)), f.mul(a, y));
            }
    } else {
        for (int y = 1; y < n; ++y) lmap[y - 1] = f.neg(f.inv(y));
        for (int x = 0; x < n; ++x)
            for (int y = 1; y < n; ++y) {
                add[x][y - 1] = f.add(f.mul(x, f.mul(y, y)), y);
                sub[x][y - 1] = f.sub(f.mul(x, f.inv(f.mul(y, y))), f.inv(y));
            }
    }
    return NearDomain(mul_group_of_field(f), std::move(add), std::move(sub), std::move(lmap));
}

// The plain field as a near-domain: x+y, x-y, L(x) = -x.  Coincides with
// the scaling family at a = -1.
inline NearDomain field_near_domain(const GaloisField& f) {
    return make_example({f.q(), Family::scaling, f.neg(1)});
}

// Checks the witness tables of an example against the family's closed
// forms, cell by cell.
//
//   scaling:  r(y,z) = -a^{-1} wherever defined, v(z) = a^{-2}
//   inverse:  h(y,z) = z^{-1} everywhere, and
//             r(y,z) = y^2 z (y(+)z)^{-1} (yz+1)^{-1}  ( = y^2 (1+yz)^{-2} )
//             wherever the witness exists; y(+)z = z(yz+1) makes the two
//             definedness conditions coincide.
inline Report verify_example_formulas(const ExampleSpec& spec, const NearDomain& d,
                                      const WitnessTables& w) {
    Report rep;
    GaloisField f = field_of(spec);
    const int n = f.q();

    if (spec.family == Family::scaling) {
        const int want_r = f.neg(f.inv(spec.a));
        const int want_v = f.inv(f.mul(spec.a, spec.a));
        bool ok = true;
        int cells = 0;
        for (int y = 1; y < n && ok; ++y)
            for (int z = 1; z < n; ++z) {
                auto rv = w.r_at(y, z);
                if (!rv) continue;
                ++cells;
                if (*rv != want_r) {
                    rep.fail("r(y,z) = -a^-1",
                             detail::triple("y", y, "z", z) + ": r=" + std::to_string(*rv) +
                                 " expected " + std::to_string(want_r));
                    ok = false;
                    break;
                }
            }
        if (ok) rep.pass("r(y,z) = -a^-1 (" + std::to_string(cells) + " defined cells)");

        ok = true;
        for (int z = 1; z < n && ok; ++z)
            if (w.v_at(z) != want_v) {
                rep.fail("v(z) = a^-2", "z=" + std::to_string(z) + ": v=" +
                                            std::to_string(w.v_at(z)) + " expected " +
                                            std::to_string(want_v));
                ok = false;
            }
        if (ok) rep.pass("v(z) = a^-2");
        return rep;
    }

    bool ok = true;
    for (int y = 1; y < n && ok; ++y)
        for (int z = 1; z < n; ++z)
            if (w.h_at(y, z) != f.inv(z)) {
                rep.fail("h(y,z) = z^-1",
                         detail::triple("y", y, "z", z) + ": h=" + std::to_string(w.h_at(y, z)));
                ok = false;
                break;
            }
    if (ok) rep.pass("h(y,z) = z^-1 (all " + std::to_string((n - 1) * (n - 1)) + " cells)");

    ok = true;
    int cells = 0;
    for (int y = 1; y < n && ok; ++y)
        for (int z = 1; z < n; ++z) {
            auto rv = w.r_at(y, z);
            if (!rv) continue;
            ++cells;
            const int loop_sum = d.add(y, z);              // z(yz+1), nonzero here
            const int yz1 = f.add(f.mul(y, z), 1);         // nonzero iff loop_sum nonzero
            const int expect =
                f.mul(f.mul(f.mul(y, y), z), f.mul(f.inv(loop_sum), f.inv(yz1)));
            if (*rv != expect) {
                rep.fail("r(y,z) = y^2 z (y+z)^-1 (yz+1)^-1",
                         detail::triple("y", y, "z", z) + ": r=" + std::to_string(*rv) +
                             " expected " + std::to_string(expect));
                ok = false;
                break;
            }
        }
    if (ok)
        rep.pass("r(y,z) = y^2 z (y+z)^-1 (yz+1)^-1 (" + std::to_string(cells) +
                 " defined cells)");
    return rep;
}

} // namespace s2t
