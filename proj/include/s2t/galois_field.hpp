#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "s2t/group_table.hpp"

namespace s2t {

// Table-backed arithmetic for GF(p^k), q = p^k <= 64.  Elements are the
// integers 0..q-1; for k > 1 the value encodes a polynomial over GF(p) in
// base-p digits (value = c0 + c1*p + ... + c_{k-1}*p^{k-1}), reduced by a
// fixed irreducible modulus per (p, k).  The zero polynomial is 0 and the
// constant 1 is 1, so field elements double as carrier indices.
class GaloisField {
public:
    static constexpr int max_q = 64;

    static bool is_prime(int p) {
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    // Pinned irreducible moduli (coefficients low to high, monic) for every
    // prime power p^k <= 64 with k > 1.
    static std::vector<int> modulus_for(int p, int k) {
        struct Entry { int p, k; std::vector<int> coeffs; };
        static const std::vector<Entry> table = {
            {2, 2, {1, 1, 1}},           // x^2 + x + 1
            {2, 3, {1, 1, 0, 1}},        // x^3 + x + 1
            {2, 4, {1, 1, 0, 0, 1}},     // x^4 + x + 1
            {2, 5, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
            {2, 6, {1, 1, 0, 0, 0, 0, 1}},  // x^6 + x + 1
            {3, 2, {1, 0, 1}},           // x^2 + 1
            {3, 3, {1, 2, 0, 1}},        // x^3 + 2x + 1
            {5, 2, {2, 0, 1}},           // x^2 + 2
            {7, 2, {1, 0, 1}},           // x^2 + 1
        };
        for (const auto& t : table)
            if (t.p == p && t.k == k) return t.coeffs;
        throw std::invalid_argument("GaloisField: no irreducible modulus configured for p=" +
                                    std::to_string(p) + " k=" + std::to_string(k));
    }

    static GaloisField make(int p, int k = 1) {
        if (!is_prime(p))
            throw std::invalid_argument("GaloisField: p=" + std::to_string(p) + " is not prime");
        if (k < 1) throw std::invalid_argument("GaloisField: k must be >= 1");
        long long q = 1;
        for (int i = 0; i < k; ++i) {
            q *= p;
            if (q > max_q)
                throw std::invalid_argument("GaloisField: p^k exceeds the table cap of " +
                                            std::to_string(max_q));
        }
        return GaloisField(p, k, static_cast<int>(q));
    }

    // Splits q into (p, k) when q is a prime power.
    static std::optional<std::pair<int, int>> factor_prime_power(int q) {
        if (q < 2) return std::nullopt;
        int p = 2;
        while (q % p != 0) ++p;
        int k = 0, rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        if (rest != 1) return std::nullopt;
        return std::make_pair(p, k);
    }

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[check(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    int inv(int a) const {
        check(a);
        if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
        return inv_[a];
    }

    int pow(int a, int e) const {
        if (e < 0) return pow(inv(a), -e);
        int r = 1, base = check(a);
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

private:
    GaloisField(int p, int k, int q) : p_(p), k_(k), q_(q) {
        if (k_ > 1) modulus_ = modulus_for(p_, k_);
        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                add_[idx(a, b)] = add_values(a, b);
                mul_[idx(a, b)] = mul_values(a, b);
            }
        }
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b)
                if (add_[idx(a, b)] == 0) neg_[a] = b;
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[idx(a, b)] == 1) {
                    inv_[a] = b;
                    break;
                }
    }

    int idx(int a, int b) const { return check(a) * q_ + check(b); }

    int check(int a) const {
        if (a < 0 || a >= q_) throw std::out_of_range("GaloisField: element out of range");
        return a;
    }

    std::vector<int> digits(int v) const {
        std::vector<int> d(k_);
        for (int i = 0; i < k_; ++i) {
            d[i] = v % p_;
            v /= p_;
        }
        return d;
    }

    int value(const std::vector<int>& d) const {
        int v = 0;
        for (int i = k_ - 1; i >= 0; --i) v = v * p_ + d[i];
        return v;
    }

    int add_values(int a, int b) const {
        if (k_ == 1) return (a + b) % p_;
        auto da = digits(a), db = digits(b);
        for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
        return value(da);
    }

    int mul_values(int a, int b) const {
        if (k_ == 1) return (a * b) % p_;
        auto da = digits(a), db = digits(b);
        std::vector<int> prod(2 * k_ - 1, 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        // reduce modulo the monic modulus
        for (int d = 2 * k_ - 2; d >= k_; --d) {
            int c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < k_; ++i) {
                int t = prod[d - k_ + i] - c * modulus_[i];
                prod[d - k_ + i] = ((t % p_) + p_) % p_;
            }
        }
        prod.resize(k_);
        return value(prod);
    }

    int p_, k_, q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

// Multiplicative group of GF(q) as a GroupTable; field elements already sit
// at their carrier indices (0 at 0, 1 at 1).
inline GroupTable mul_group_of_field(const GaloisField& f) {
    const int n = f.q();
    std::vector<std::vector<int>> mul(n - 1, std::vector<int>(n - 1));
    std::vector<int> inv(n - 1);
    for (int x = 1; x < n; ++x) {
        for (int y = 1; y < n; ++y) mul[x - 1][y - 1] = f.mul(x, y);
        inv[x - 1] = f.inv(x);
    }
    return GroupTable(n, std::move(mul), std::move(inv));
}

} // namespace s2t
