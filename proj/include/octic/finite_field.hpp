/*
   Copyright 2026 the octic-verify authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OCTIC_FINITE_FIELD_HPP
#define OCTIC_FINITE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace octic {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Odd primes in [5, pmax], ascending.
inline std::vector<std::uint32_t> primes_up_to(std::uint32_t pmax) {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t p = 5; p <= pmax; ++p)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

/**
 * The prime field F_p, p an odd prime ≥ 5, elements encoded as residues 0..p−1.
 *
 * The quadratic character and canonical square roots are precomputed tables
 * (the projective scans are character-bound, so χ must be a lookup); products
 * go through a Barrett reduction so no runtime division appears in kernels.
 * Immutable after construction; safe to share across threads.
 */
class PrimeField {
  public:
    static constexpr std::uint32_t kMaxP = 10000;  // table guard

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 5 || p > kMaxP || !is_prime(p))
            throw std::invalid_argument("PrimeField: p must be a prime in [5, 10^4], got " +
                                        std::to_string(p));
        magic_ = (~std::uint64_t{0}) / p + 1;  // ceil(2^64 / p), p not a power of 2
        chi_.assign(p, -1);
        chi_[0] = 0;
        sqrt_.assign(p, kNoRoot);
        sqrt_[0] = 0;
        for (std::uint32_t r = 1; r <= (p - 1) / 2; ++r) {
            std::uint32_t s = std::uint32_t((std::uint64_t(r) * r) % p);
            chi_[s] = 1;
            sqrt_[s] = r;  // r ≤ p−r, so this is the lexicographically smaller root
        }
    }

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return reduce(std::uint64_t(a) * b);
    }

    /// Barrett reduction of any x < 2^63 modulo p.
    std::uint32_t reduce(std::uint64_t x) const {
        using u128 = unsigned __int128;
        std::uint64_t q = std::uint64_t((u128(x) * magic_) >> 64);
        std::int64_t r = std::int64_t(x) - std::int64_t(q * p_);
        if (r < 0) r += p_;
        if (r >= std::int64_t(p_)) r -= p_;
        return std::uint32_t(r);
    }

    /// Reduce an arbitrary signed integer.
    std::uint32_t from_int(std::int64_t v) const {
        std::int64_t r = v % std::int64_t(p_);
        if (r < 0) r += p_;
        return std::uint32_t(r);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeField::inv(0)");
        return pow(a, p_ - 2);
    }

    /// Quadratic character: 0 at 0, +1 on nonzero squares, −1 otherwise.
    int chi(std::uint32_t a) const { return chi_[a]; }

    /// Same value computed by the Euler criterion a^((p−1)/2); used to audit the table.
    int chi_euler(std::uint32_t a) const {
        if (a == 0) return 0;
        std::uint32_t e = pow(a, (p_ - 1) / 2);
        return e == 1 ? 1 : -1;
    }

    /// Canonical square root (the smaller residue), or nullopt for non-squares.
    std::optional<std::uint32_t> sqrt(std::uint32_t a) const {
        if (sqrt_[a] == kNoRoot) return std::nullopt;
        return sqrt_[a];
    }

    /// Smallest positive quadratic non-residue.
    std::uint32_t smallest_nonresidue() const {
        for (std::uint32_t a = 2; a < p_; ++a)
            if (chi_[a] == -1) return a;
        throw std::logic_error("PrimeField: no non-residue found");
    }

  private:
    static constexpr std::uint32_t kNoRoot = ~std::uint32_t{0};
    std::uint32_t p_;
    std::uint64_t magic_;
    std::vector<std::int8_t> chi_;
    std::vector<std::uint32_t> sqrt_;
};

/// Element of F_{p²} = F_p(α), α² = d.  Pair (a, b) encodes a + b·α.
struct Fp2 {
    std::uint32_t a = 0, b = 0;
    bool operator==(const Fp2&) const = default;
};

/// Element of F_{p⁴} = F_{p²}(γ), γ² = e.  Pair (x, y) encodes x + y·γ.
struct Fp4 {
    Fp2 x, y;
    bool operator==(const Fp4&) const = default;
};

/**
 * Field contexts for the tower F_p ⊂ F_{p²} ⊂ F_{p⁴}.
 *
 * d is the smallest positive non-residue mod p; e is the first non-square of
 * F_{p²} in the lexicographic order of encodings (a, b).  Both scans are
 * deterministic, so the tower is reproducible across runs.  The tower
 * embeddings a ↦ (a,0) ↦ ((a,0),(0,0)) are ring homomorphisms.
 */
class FieldTower {
  public:
    explicit FieldTower(std::uint32_t p) : f_(p), d_(f_.smallest_nonresidue()) {
        // first non-square of F_{p²} in lexicographic (a, b) order
        bool found = false;
        for (std::uint32_t a = 0; a < p && !found; ++a)
            for (std::uint32_t b = 0; b < p && !found; ++b) {
                Fp2 c{a, b};
                if (!(a == 0 && b == 0) && chi2(c) == -1) {
                    e_ = c;
                    found = true;
                }
            }
        if (!found) throw std::logic_error("FieldTower: no non-square in F_p^2");
        kappa_ = pow2(e_, (p - 1) / 2);  // γ^p = κ·γ
        // Tonelli–Shanks setup for q = p²: q − 1 = 2^s · t with t odd
        std::uint64_t q1 = std::uint64_t(p) * p - 1;
        ts_s_ = 0;
        while ((q1 & 1) == 0) {
            q1 >>= 1;
            ++ts_s_;
        }
        ts_t_ = q1;
        ts_z_ = pow2(e_, ts_t_);  // generator of the 2-Sylow of F_{p²}^*
    }

    const PrimeField& fp() const { return f_; }
    std::uint32_t p() const { return f_.p(); }
    std::uint32_t d() const { return d_; }
    Fp2 e() const { return e_; }

    // ---- F_{p²} arithmetic ----
    Fp2 embed2(std::uint32_t a) const { return Fp2{a, 0}; }
    bool is_zero(const Fp2& x) const { return x.a == 0 && x.b == 0; }

    Fp2 add2(const Fp2& x, const Fp2& y) const { return {f_.add(x.a, y.a), f_.add(x.b, y.b)}; }
    Fp2 sub2(const Fp2& x, const Fp2& y) const { return {f_.sub(x.a, y.a), f_.sub(x.b, y.b)}; }
    Fp2 neg2(const Fp2& x) const { return {f_.neg(x.a), f_.neg(x.b)}; }

    Fp2 mul2(const Fp2& x, const Fp2& y) const {
        // (a + bα)(c + eα) = ac + d·be + (ae + bc)α
        std::uint64_t ac = std::uint64_t(x.a) * y.a;
        std::uint64_t bd = std::uint64_t(x.b) * y.b;
        std::uint64_t cross = std::uint64_t(x.a) * y.b + std::uint64_t(x.b) * y.a;
        return {f_.reduce(ac + std::uint64_t(d_) * f_.reduce(bd)), f_.reduce(cross)};
    }

    Fp2 scale2(std::uint32_t c, const Fp2& x) const { return {f_.mul(c, x.a), f_.mul(c, x.b)}; }

    Fp2 pow2(Fp2 x, std::uint64_t e) const {
        Fp2 r = embed2(1);
        while (e) {
            if (e & 1) r = mul2(r, x);
            x = mul2(x, x);
            e >>= 1;
        }
        return r;
    }

    /// Norm to F_p: x · x^p = a² − d·b².
    std::uint32_t norm2(const Fp2& x) const {
        std::uint32_t a2 = f_.mul(x.a, x.a);
        std::uint32_t db2 = f_.mul(d_, f_.mul(x.b, x.b));
        return f_.sub(a2, db2);
    }

    /// Frobenius x ↦ x^p on F_{p²}; α^p = −α since d is a non-residue.
    Fp2 frob2(const Fp2& x) const { return {x.a, f_.neg(x.b)}; }

    Fp2 inv2(const Fp2& x) const {
        std::uint32_t n = norm2(x);
        if (n == 0) throw std::domain_error("FieldTower::inv2(0)");
        std::uint32_t ni = f_.inv(n);
        return {f_.mul(x.a, ni), f_.mul(f_.neg(x.b), ni)};
    }

    /// Quadratic character of F_{p²} via the norm: χ_{p²}(x) = χ_p(N(x)).
    int chi2(const Fp2& x) const { return f_.chi(norm2(x)); }

    /// Canonical square root in F_{p²} (Tonelli–Shanks), smaller encoding of the two.
    std::optional<Fp2> sqrt2(const Fp2& x) const {
        if (is_zero(x)) return Fp2{0, 0};
        if (chi2(x) == -1) return std::nullopt;
        // Tonelli–Shanks in F_{p²}^* with q − 1 = 2^s t
        Fp2 m = pow2(x, (ts_t_ + 1) / 2);  // candidate root of x^t
        Fp2 c = ts_z_;
        Fp2 t = pow2(x, ts_t_);
        std::uint32_t s = ts_s_;
        while (!(t == embed2(1))) {
            // find least i with t^(2^i) = 1
            std::uint32_t i = 0;
            Fp2 t2 = t;
            while (!(t2 == embed2(1))) {
                t2 = mul2(t2, t2);
                ++i;
            }
            Fp2 b = c;
            for (std::uint32_t j = 0; j + i + 1 < s; ++j) b = mul2(b, b);
            m = mul2(m, b);
            c = mul2(b, b);
            t = mul2(t, c);
            s = i;
        }
        Fp2 other = neg2(m);
        return lex_less(m, other) ? m : other;
    }

    // ---- F_{p⁴} arithmetic ----
    Fp4 embed4(const Fp2& x) const { return Fp4{x, Fp2{0, 0}}; }
    bool is_zero(const Fp4& x) const { return is_zero(x.x) && is_zero(x.y); }

    Fp4 mul4(const Fp4& u, const Fp4& v) const {
        // (x + yγ)(x' + y'γ) = xx' + e·yy' + (xy' + yx')γ
        Fp2 xx = mul2(u.x, v.x);
        Fp2 yy = mul2(u.y, v.y);
        Fp2 cross = add2(mul2(u.x, v.y), mul2(u.y, v.x));
        return {add2(xx, mul2(e_, yy)), cross};
    }

    Fp4 add4(const Fp4& u, const Fp4& v) const { return {add2(u.x, v.x), add2(u.y, v.y)}; }
    Fp4 neg4(const Fp4& u) const { return {neg2(u.x), neg2(u.y)}; }

    /// Frobenius x ↦ x^p on F_{p⁴}: γ^p = κγ with κ = e^((p−1)/2).
    Fp4 frob4(const Fp4& u) const { return {frob2(u.x), mul2(kappa_, frob2(u.y))}; }

    /// Canonical square root in F_{p⁴} of v ∈ F_{p²}; always exists
    /// (index-2 extension: if v is a non-square of F_{p²} then v/e is a square).
    Fp4 sqrt4_of_quad(const Fp2& v) const {
        if (is_zero(v)) return Fp4{};
        if (chi2(v) >= 0) {
            Fp2 w = *sqrt2(v);
            Fp4 r{w, Fp2{0, 0}}, o = neg4(r);
            return lex_less4(r, o) ? r : o;
        }
        Fp2 w = *sqrt2(mul2(v, inv2(e_)));
        Fp4 r{Fp2{0, 0}, w}, o = neg4(r);
        return lex_less4(r, o) ? r : o;
    }

    static bool lex_less(const Fp2& x, const Fp2& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
    static bool lex_less4(const Fp4& x, const Fp4& y) {
        if (!(x.x == y.x)) return lex_less(x.x, y.x);
        return lex_less(x.y, y.y);
    }

    Fp2 kappa() const { return kappa_; }

  private:
    PrimeField f_;
    std::uint32_t d_;
    Fp2 e_;
    Fp2 kappa_;
    std::uint32_t ts_s_ = 0;
    std::uint64_t ts_t_ = 0;
    Fp2 ts_z_;
};

/// Spec operation: build the tower contexts for F_p ⊂ F_{p²} ⊂ F_{p⁴}.
inline FieldTower field_tower(std::uint32_t p) { return FieldTower(p); }

/// Small value-semantics wrapper so the generic exact linear algebra runs over F_p.
class Zp {
  public:
    Zp() : f_(nullptr), v_(0) {}
    Zp(int v) : f_(nullptr), v_(v) {}  // NOLINT: implicit from literals 0/1 in templates
    Zp(const PrimeField& f, std::uint32_t v) : f_(&f), v_(v) {}

    std::uint32_t value() const { return v_; }

    friend Zp operator+(Zp a, Zp b) { return bin(a, b, /*op=*/0); }
    friend Zp operator-(Zp a, Zp b) { return bin(a, b, 1); }
    friend Zp operator*(Zp a, Zp b) { return bin(a, b, 2); }
    friend Zp operator/(Zp a, Zp b) { return bin(a, b, 3); }
    friend bool operator==(const Zp& a, const Zp& b) {
        return normal(a, b.f_).v_ == normal(b, a.f_).v_;
    }

  private:
    static Zp normal(Zp x, const PrimeField* hint) {
        if (!x.f_ && hint) {
            x.f_ = hint;
            x.v_ = hint->from_int(std::int64_t(std::int32_t(x.v_)));
        }
        return x;
    }
    static Zp bin(Zp a, Zp b, int op) {
        const PrimeField* f = a.f_ ? a.f_ : b.f_;
        if (!f) throw std::logic_error("Zp: unbound arithmetic");
        a = normal(a, f);
        b = normal(b, f);
        switch (op) {
            case 0: return Zp(*f, f->add(a.v_, b.v_));
            case 1: return Zp(*f, f->sub(a.v_, b.v_));
            case 2: return Zp(*f, f->mul(a.v_, b.v_));
            default: return Zp(*f, f->mul(a.v_, f->inv(b.v_)));
        }
    }

    const PrimeField* f_;
    std::uint32_t v_;
};

}  // namespace octic

#endif  // OCTIC_FINITE_FIELD_HPP
