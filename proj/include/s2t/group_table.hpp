#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "s2t/report.hpp"

namespace s2t {

// Carrier B = {0, ..., n-1}.  Index 0 is the additive zero and index 1 the
// multiplicative unit e, for every structure in this library; B1 = B \ {0}.
// Tables over B1 are arrays of length n-1 whose position i stands for the
// carrier element i+1, so elements keep a single numbering throughout.
struct Carrier {
    int n = 0;
    static constexpr int zero = 0;
    static constexpr int unit = 1;

    bool contains(int x) const { return 0 <= x && x < n; }
    bool in_b1(int x) const { return 1 <= x && x < n; }
};

// Dense multiplication table of a finite group on B1.  Entries are carrier
// values in 1..n-1.  Construction checks shapes only; entry ranges and the
// group axioms are the validator's job, so a GroupTable can hold a broken
// table long enough to report what is wrong with it.
class GroupTable {
public:
    GroupTable() = default;

    GroupTable(int n, std::vector<std::vector<int>> mul_rows, std::vector<int> inv)
        : n_(n), order_(n - 1), inv_(std::move(inv)) {
        if (n < 2) throw std::invalid_argument("GroupTable: carrier needs n >= 2");
        if (static_cast<int>(mul_rows.size()) != order_)
            throw std::invalid_argument("GroupTable: mul must have n-1 rows");
        if (static_cast<int>(inv_.size()) != order_)
            throw std::invalid_argument("GroupTable: inv must have n-1 entries");
        mul_.reserve(order_ * order_);
        for (const auto& row : mul_rows) {
            if (static_cast<int>(row.size()) != order_)
                throw std::invalid_argument("GroupTable: mul rows must have n-1 entries");
            mul_.insert(mul_.end(), row.begin(), row.end());
        }
    }

    int n() const { return n_; }
    int order() const { return order_; }
    int unit() const { return Carrier::unit; }
    Carrier carrier() const { return Carrier{n_}; }

    // Carrier-valued product; arguments and entries must be in 1..n-1.
    int mul(int x, int y) const {
        assert(1 <= x && x < n_ && 1 <= y && y < n_);
        return mul_[(x - 1) * order_ + (y - 1)];
    }

    int inv(int x) const {
        assert(1 <= x && x < n_);
        return inv_[x - 1];
    }

    // Position-indexed access for validation and serialization; may return
    // out-of-range entries.
    int raw_mul(int i, int j) const { return mul_[i * order_ + j]; }
    int raw_inv(int i) const { return inv_[i]; }

    bool operator==(const GroupTable& other) const {
        return n_ == other.n_ && mul_ == other.mul_ && inv_ == other.inv_;
    }

private:
    int n_ = 0;
    int order_ = 0;
    std::vector<int> mul_;  // (n-1) x (n-1), row-major over B1 positions
    std::vector<int> inv_;  // n-1
};

namespace detail {

inline std::string triple(const char* a, int x, const char* b, int y) {
    return std::string(a) + "=" + std::to_string(x) + " " + b + "=" + std::to_string(y);
}

inline std::string triple(const char* a, int x, const char* b, int y, const char* c, int z) {
    return triple(a, x, b, y) + " " + c + "=" + std::to_string(z);
}

} // namespace detail

// Checks the group axioms on B1 exhaustively: entry ranges (structural),
// unit laws, two-sided inverses, associativity over all (n-1)^3 triples,
// and the Latin-square property of rows and columns.
inline Report validate_group(const GroupTable& g) {
    Report rep;
    const int m = g.order();
    const int n = g.n();

    bool ranges_ok = true;
    for (int i = 0; i < m && ranges_ok; ++i) {
        for (int j = 0; j < m; ++j) {
            int v = g.raw_mul(i, j);
            if (v < 1 || v >= n) {
                rep.fail("entry-range",
                         "mul(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ")=" + std::to_string(v) + " outside B1",
                         CheckKind::structure);
                ranges_ok = false;
                break;
            }
        }
    }
    for (int i = 0; i < m && ranges_ok; ++i) {
        int v = g.raw_inv(i);
        if (v < 1 || v >= n) {
            rep.fail("entry-range",
                     "inv(" + std::to_string(i + 1) + ")=" + std::to_string(v) + " outside B1",
                     CheckKind::structure);
            ranges_ok = false;
        }
    }
    if (!ranges_ok) return rep;
    rep.pass("entry-range", CheckKind::structure);

    const int e = g.unit();
    bool ok = true;
    for (int x = 1; x < n && ok; ++x) {
        if (g.mul(e, x) != x || g.mul(x, e) != x) {
            rep.fail("unit-element", "x=" + std::to_string(x) + ": e*x or x*e != x");
            ok = false;
        }
    }
    if (ok) rep.pass("unit-element");

    ok = true;
    for (int x = 1; x < n && ok; ++x) {
        if (g.mul(g.inv(x), x) != e || g.mul(x, g.inv(x)) != e) {
            rep.fail("inverses", "x=" + std::to_string(x) + ": inv(x)*x or x*inv(x) != e");
            ok = false;
        }
    }
    if (ok) rep.pass("inverses");

    ok = true;
    for (int x = 1; x < n && ok; ++x)
        for (int y = 1; y < n && ok; ++y)
            for (int z = 1; z < n; ++z) {
                if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
                    rep.fail("associativity",
                             detail::triple("x", x, "y", y, "z", z) +
                                 ": (xy)z=" + std::to_string(g.mul(g.mul(x, y), z)) +
                                 " x(yz)=" + std::to_string(g.mul(x, g.mul(y, z))));
                    ok = false;
                    break;
                }
            }
    if (ok) rep.pass("associativity");

    ok = true;
    for (int x = 1; x < n && ok; ++x) {
        std::vector<bool> row(n, false), col(n, false);
        for (int y = 1; y < n; ++y) {
            row[g.mul(x, y)] = true;
            col[g.mul(y, x)] = true;
        }
        for (int v = 1; v < n; ++v)
            if (!row[v] || !col[v]) {
                rep.fail("latin-square",
                         "x=" + std::to_string(x) + ": row or column misses " + std::to_string(v));
                ok = false;
                break;
            }
    }
    if (ok) rep.pass("latin-square");

    return rep;
}

} // namespace s2t
