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

#ifndef OCTIC_RATIONAL_HPP
#define OCTIC_RATIONAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace octic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Exact integer square root; nullopt when n is not a perfect square.
inline std::optional<Int> perfect_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Exact rational square root; nullopt when r is not a square in Q.
inline std::optional<Rat> perfect_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto n = perfect_sqrt(rat_num(r));
    auto d = perfect_sqrt(rat_den(r));
    if (!n || !d) return std::nullopt;
    return Rat(*n, *d);
}

/// A point of Q ∪ {∞}, the base coordinate for pencils of P¹.
class ProjQ {
  public:
    ProjQ() : inf_(false), v_(0) {}
    ProjQ(Rat v) : inf_(false), v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    ProjQ(long v) : inf_(false), v_(v) {}            // NOLINT(google-explicit-constructor)
    static ProjQ infinity() {
        ProjQ q;
        q.inf_ = true;
        return q;
    }

    bool is_infinity() const { return inf_; }
    const Rat& value() const {
        if (inf_) throw std::logic_error("ProjQ: value() of infinity");
        return v_;
    }

    bool operator==(const ProjQ& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }
    bool operator!=(const ProjQ& o) const { return !(*this == o); }
    // Total order with ∞ last; used only to make reports and maps deterministic.
    bool operator<(const ProjQ& o) const {
        if (inf_ != o.inf_) return !inf_;
        if (inf_) return false;
        return v_ < o.v_;
    }

    std::string str() const;

  private:
    bool inf_;
    Rat v_;
};

inline std::string rat_str(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

inline std::string ProjQ::str() const { return inf_ ? "oo" : rat_str(v_); }

/// Fractional-linear map t ↦ (a t + b) / (c t + d), ad − bc ≠ 0, acting on Q ∪ {∞}.
struct Moebius {
    Rat a, b, c, d;

    void validate() const {
        if (a * d - b * c == 0) throw std::invalid_argument("Moebius: singular map");
    }

    ProjQ apply(const ProjQ& t) const {
        if (t.is_infinity()) {
            if (c == 0) return ProjQ::infinity();
            return ProjQ(a / c);
        }
        Rat num = a * t.value() + b;
        Rat den = c * t.value() + d;
        if (den == 0) return ProjQ::infinity();
        return ProjQ(num / den);
    }

    /// The unique Moebius map sending (t1, t2, t3) to (0, 1, ∞).
    static Moebius to_standard(const ProjQ& t1, const ProjQ& t2, const ProjQ& t3);

    /// The unique Moebius map sending (s1,s2,s3) to (t1,t2,t3).
    static Moebius through(const ProjQ& s1, const ProjQ& s2, const ProjQ& s3,
                           const ProjQ& t1, const ProjQ& t2, const ProjQ& t3);

    Moebius inverse() const { return Moebius{d, -b, -c, a}; }

    Moebius compose(const Moebius& o) const {  // (*this) ∘ o
        return Moebius{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

inline Moebius Moebius::to_standard(const ProjQ& t1, const ProjQ& t2, const ProjQ& t3) {
    // Rows built so that t1 ↦ 0, t3 ↦ ∞, then scaled so t2 ↦ 1.
    Rat a, b, c, d;
    if (t1.is_infinity()) {
        a = 0;
        b = 1;
    } else {
        a = 1;
        b = -t1.value();
    }
    if (t3.is_infinity()) {
        c = 0;
        d = 1;
    } else {
        c = 1;
        d = -t3.value();
    }
    Moebius m{a, b, c, d};
    ProjQ img = m.apply(t2);
    if (img.is_infinity() || img.value() == 0)
        throw std::invalid_argument("Moebius::to_standard: points not distinct");
    m.a /= img.value();
    m.b /= img.value();
    return m;
}

inline Moebius Moebius::through(const ProjQ& s1, const ProjQ& s2, const ProjQ& s3,
                                const ProjQ& t1, const ProjQ& t2, const ProjQ& t3) {
    Moebius f = to_standard(s1, s2, s3);
    Moebius g = to_standard(t1, t2, t3);
    Moebius m = g.inverse().compose(f);
    m.validate();
    return m;
}

}  // namespace octic

#endif  // OCTIC_RATIONAL_HPP
