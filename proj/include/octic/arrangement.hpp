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

#ifndef OCTIC_ARRANGEMENT_HPP
#define OCTIC_ARRANGEMENT_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "octic/finite_field.hpp"
#include "octic/linalg.hpp"
#include "octic/rational.hpp"

namespace octic {

// ---------------------------------------------------------------------------
// Linear forms
// ---------------------------------------------------------------------------

/// A plane in P³: integer-normalized linear form in x, y, z, t
/// (denominators cleared, gcd 1, first nonzero coefficient positive).
struct LinearForm {
    std::array<Int, 4> c{};

    static LinearForm from_rationals(const std::array<Rat, 4>& r) {
        Int lcm = 1;
        for (const auto& v : r) lcm = boost::multiprecision::lcm(lcm, rat_den(v));
        LinearForm f;
        Int g = 0;
        for (int i = 0; i < 4; ++i) {
            f.c[i] = rat_num(r[i]) * (lcm / rat_den(r[i]));
            g = boost::multiprecision::gcd(g, f.c[i]);
        }
        if (g == 0) throw std::invalid_argument("LinearForm: zero form");
        for (auto& v : f.c) v /= g;
        for (const auto& v : f.c) {
            if (v == 0) continue;
            if (v < 0)
                for (auto& w : f.c) w = -w;
            break;
        }
        return f;
    }

    bool operator==(const LinearForm&) const = default;
    bool operator<(const LinearForm& o) const { return c < o.c; }

    Rat evaluate(const std::array<Rat, 4>& x) const {
        Rat s = 0;
        for (int i = 0; i < 4; ++i) s += Rat(c[i]) * x[i];
        return s;
    }

    std::string str() const {
        static const char* vars[4] = {"x", "y", "z", "t"};
        std::string s;
        for (int i = 0; i < 4; ++i) {
            if (c[i] == 0) continue;
            if (!s.empty() && c[i] > 0) s += "+";
            if (c[i] == -1)
                s += "-";
            else if (c[i] != 1)
                s += c[i].str();
            s += vars[i];
        }
        return s.empty() ? "0" : s;
    }
};

/// Parses "2x+3y-z+2t", "t+x", "x", "-z+t", with optional rational coefficients.
inline std::array<Rat, 4> parse_linear_expr(const std::string& text) {
    std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty linear factor");
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("dangling sign in: " + text);
        std::string digits;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            digits += s[i++];
        Rat coef = 1;
        if (!digits.empty()) {
            auto slash = digits.find('/');
            if (slash == std::string::npos)
                coef = Rat(Int(digits));
            else
                coef = Rat(Int(digits.substr(0, slash)), Int(digits.substr(slash + 1)));
        }
        if (i < s.size() && std::string("xyzt").find(s[i]) != std::string::npos) {
            int var = int(std::string("xyzt").find(s[i]));
            if (i + 1 < s.size() && s[i + 1] == '^')
                throw std::invalid_argument("nonlinear factor: " + text);
            c[var] += Rat(sign) * coef;
            ++i;
            any = true;
        } else if (!digits.empty()) {
            throw std::invalid_argument("constant term inside linear factor: " + text);
        } else {
            throw std::invalid_argument("cannot parse factor: " + text);
        }
    }
    if (!any) throw std::invalid_argument("no variables in factor: " + text);
    return c;
}

// ---------------------------------------------------------------------------
// Q(√μ): coefficients a + b√μ, used for branch octics that split only after
// adjoining a square root.
// ---------------------------------------------------------------------------

class QuadExtQ {
  public:
    QuadExtQ() : a_(0), b_(0), mu_(0), bound_(false) {}
    QuadExtQ(int v) : a_(v), b_(0), mu_(0), bound_(false) {}  // NOLINT: template literals
    QuadExtQ(Rat a, Rat b, Rat mu) : a_(std::move(a)), b_(std::move(b)), mu_(std::move(mu)), bound_(true) {}

    const Rat& re() const { return a_; }
    const Rat& im() const { return b_; }
    bool is_rational() const { return b_ == 0; }

    friend QuadExtQ operator+(const QuadExtQ& x, const QuadExtQ& y) {
        auto [u, v] = bind(x, y);
        return QuadExtQ(u.a_ + v.a_, u.b_ + v.b_, u.mu_);
    }
    friend QuadExtQ operator-(const QuadExtQ& x, const QuadExtQ& y) {
        auto [u, v] = bind(x, y);
        return QuadExtQ(u.a_ - v.a_, u.b_ - v.b_, u.mu_);
    }
    friend QuadExtQ operator*(const QuadExtQ& x, const QuadExtQ& y) {
        auto [u, v] = bind(x, y);
        return QuadExtQ(u.a_ * v.a_ + u.mu_ * u.b_ * v.b_, u.a_ * v.b_ + u.b_ * v.a_, u.mu_);
    }
    friend QuadExtQ operator/(const QuadExtQ& x, const QuadExtQ& y) {
        auto [u, v] = bind(x, y);
        Rat n = v.a_ * v.a_ - u.mu_ * v.b_ * v.b_;
        if (n == 0) throw std::domain_error("QuadExtQ: division by zero");
        return QuadExtQ((u.a_ * v.a_ - u.mu_ * u.b_ * v.b_) / n, (u.b_ * v.a_ - u.a_ * v.b_) / n,
                        u.mu_);
    }
    friend bool operator==(const QuadExtQ& x, const QuadExtQ& y) {
        auto [u, v] = bind(x, y);
        return u.a_ == v.a_ && u.b_ == v.b_;
    }

  private:
    static std::pair<QuadExtQ, QuadExtQ> bind(QuadExtQ x, QuadExtQ y) {
        if (!x.bound_ && y.bound_) {
            x.mu_ = y.mu_;
            x.bound_ = true;
        }
        if (!y.bound_ && x.bound_) {
            y.mu_ = x.mu_;
            y.bound_ = true;
        }
        return {x, y};
    }
    Rat a_, b_, mu_;
    bool bound_;
};

// ---------------------------------------------------------------------------
// Arrangements
// ---------------------------------------------------------------------------

using InvolutionMatrix = Matrix<Rat>;

struct PlaneArrangement {
    std::string id;
    std::vector<LinearForm> forms;  // exactly 8, pairwise non-proportional
    Rat constant = 1;               // overall scalar of the octic (e.g. the "2" of arr 4c)
    int h11 = -1;
    int h12 = -1;
    std::string wt4_label;
    std::string wt2_label;
    std::vector<InvolutionMatrix> involutions;
    std::optional<std::string> skew_picard_character;  // e.g. "mod4" for the contact-plane class

    void validate() const {
        if (forms.size() != 8)
            throw std::invalid_argument("arrangement needs exactly 8 planes, got " +
                                        std::to_string(forms.size()));
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i + 1; j < 8; ++j)
                if (forms[i] == forms[j])
                    throw std::invalid_argument("proportional forms at positions " +
                                                std::to_string(i) + "," + std::to_string(j));
        if (constant == 0) throw std::invalid_argument("zero constant factor");
    }
};

/// Octic equation text → arrangement (metadata left unset).
/// Accepts "xyzt(x+y)(y+z)..." and "2 (x+y)(y+z)..." shapes.
inline PlaneArrangement parse_octic_equation(const std::string& text) {
    PlaneArrangement arr;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (!s.empty() && s.back() == '0' && s.size() >= 2 && s[s.size() - 2] == '=')
        s = s.substr(0, s.size() - 2);
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '(') {
            auto close = s.find(')', i);
            if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis");
            arr.forms.push_back(LinearForm::from_rationals(parse_linear_expr(s.substr(i + 1, close - i - 1))));
            i = close + 1;
        } else if (std::string("xyzt").find(s[i]) != std::string::npos) {
            arr.forms.push_back(LinearForm::from_rationals(parse_linear_expr(s.substr(i, 1))));
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
            arr.constant *= Rat(Int(digits));
        } else if (s[i] == '*') {
            ++i;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + s[i] + "' in octic");
        }
    }
    arr.validate();
    return arr;
}

// ---------------------------------------------------------------------------
// Singularity inventory
// ---------------------------------------------------------------------------

struct SingularLine {
    std::vector<int> planes;  // indices of all planes through the line
};

struct SingularPoint {
    std::vector<int> planes;           // indices of all planes through the point
    std::array<Rat, 4> coords;         // canonical homogeneous coordinates (Q-rational runs only)
    bool coords_known = false;
    bool not_on_triple_line = true;    // the §-order flag for fourfold points
    int triple_lines_through = 0;
};

struct SingularityInventory {
    std::vector<SingularLine> double_lines;
    std::vector<SingularLine> triple_lines;
    std::vector<SingularPoint> fourfold_points;
    std::vector<SingularPoint> fivefold_points;
    bool line_with_four_planes = false;
    bool point_with_six_planes = false;

    int n_double() const { return int(double_lines.size()); }
    int n_triple() const { return int(triple_lines.size()); }
    int n4_off_triple() const {
        int n = 0;
        for (const auto& p : fourfold_points) n += p.not_on_triple_line ? 1 : 0;
        return n;
    }
    int n4_on_triple() const { return int(fourfold_points.size()) - n4_off_triple(); }
    int n5() const { return int(fivefold_points.size()); }
    int n5_triple_incidences() const {
        int n = 0;
        for (const auto& p : fivefold_points) n += p.triple_lines_through;
        return n;
    }

    /// Cardinality signature used for reduction-stability checks.
    std::array<int, 6> signature() const {
        return {n_double(), n_triple(), n4_off_triple(), n4_on_triple(), n5(),
                n5_triple_incidences()};
    }
};

namespace detail {

template <class T>
std::vector<int> planes_through_line(const std::vector<std::array<T, 4>>& forms, int i, int j) {
    std::vector<int> out;
    for (int k = 0; k < int(forms.size()); ++k) {
        Matrix<T> m = {{forms[i][0], forms[i][1], forms[i][2], forms[i][3]},
                       {forms[j][0], forms[j][1], forms[j][2], forms[j][3]},
                       {forms[k][0], forms[k][1], forms[k][2], forms[k][3]}};
        if (rank(std::move(m)) == 2) out.push_back(k);
    }
    return out;
}

template <class T>
bool proportional(const std::array<T, 4>& a, const std::array<T, 4>& b) {
    Matrix<T> m = {{a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]}};
    return rank(std::move(m)) < 2;
}

}  // namespace detail

/**
 * Classifies all multiple lines and ≥4-fold points of 8 planes by exact rank
 * computations, over any exact field type T (Q, Q(√μ), or F_p).
 */
template <class T>
SingularityInventory singularity_inventory_over(const std::vector<std::array<T, 4>>& forms) {
    SingularityInventory inv;
    const int n = int(forms.size());

    // multiple lines, grouped by the full set of incident planes
    std::set<std::vector<int>> seen_lines;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto planes = detail::planes_through_line(forms, i, j);
            if (!seen_lines.insert(planes).second) continue;
            if (planes.size() == 2)
                inv.double_lines.push_back({planes});
            else if (planes.size() == 3)
                inv.triple_lines.push_back({planes});
            else
                inv.line_with_four_planes = true;
        }

    // ≥4-fold points, grouped by the full set of incident planes
    std::set<std::vector<int>> seen_points;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Matrix<T> m = {{forms[i][0], forms[i][1], forms[i][2], forms[i][3]},
                               {forms[j][0], forms[j][1], forms[j][2], forms[j][3]},
                               {forms[k][0], forms[k][1], forms[k][2], forms[k][3]}};
                auto ker = kernel_basis(m);
                if (ker.size() != 1) continue;  // triple shares a line or is degenerate
                const auto& pt = ker[0];
                std::vector<int> planes;
                for (int m2 = 0; m2 < n; ++m2) {
                    T acc(0);
                    for (int c = 0; c < 4; ++c) acc = acc + forms[m2][c] * pt[c];
                    if (acc == T(0)) planes.push_back(m2);
                }
                if (planes.size() < 4) continue;
                if (!seen_points.insert(planes).second) continue;

                SingularPoint sp;
                sp.planes = planes;
                int incident_triples = 0;
                for (const auto& tl : inv.triple_lines)
                    if (std::includes(planes.begin(), planes.end(), tl.planes.begin(),
                                      tl.planes.end()))
                        ++incident_triples;
                sp.triple_lines_through = incident_triples;
                sp.not_on_triple_line = (incident_triples == 0);
                if (planes.size() == 4)
                    inv.fourfold_points.push_back(std::move(sp));
                else if (planes.size() == 5)
                    inv.fivefold_points.push_back(std::move(sp));
                else
                    inv.point_with_six_planes = true;
            }
    return inv;
}

inline std::vector<std::array<Rat, 4>> rational_forms(const PlaneArrangement& arr) {
    std::vector<std::array<Rat, 4>> out;
    for (const auto& f : arr.forms)
        out.push_back({Rat(f.c[0]), Rat(f.c[1]), Rat(f.c[2]), Rat(f.c[3])});
    return out;
}

/// Inventory over Q, with point coordinates attached.
inline SingularityInventory singularity_inventory(const PlaneArrangement& arr) {
    auto forms = rational_forms(arr);
    auto inv = singularity_inventory_over<Rat>(forms);
    auto fill_coords = [&](SingularPoint& sp) {
        Matrix<Rat> m;
        for (int idx : {sp.planes[0], sp.planes[1], sp.planes[2]}) m.push_back(
            {forms[idx][0], forms[idx][1], forms[idx][2], forms[idx][3]});
        auto ker = kernel_basis(m);
        if (ker.size() != 1) throw std::logic_error("inventory: bad point kernel");
        std::array<Rat, 4> pt{ker[0][0], ker[0][1], ker[0][2], ker[0][3]};
        for (int i = 0; i < 4; ++i)
            if (pt[i] != 0) {
                Rat lead = pt[i];
                for (auto& v : pt) v /= lead;
                break;
            }
        sp.coords = pt;
        sp.coords_known = true;
    };
    for (auto& sp : inv.fourfold_points) fill_coords(sp);
    for (auto& sp : inv.fivefold_points) fill_coords(sp);
    return inv;
}

/// True iff no point lies on ≥6 planes and no line on ≥4 planes.
inline bool cy_admissible(const SingularityInventory& inv) {
    return !inv.line_with_four_planes && !inv.point_with_six_planes;
}

/// Mod-p coefficient vectors; throws if some form vanishes mod p.
inline std::vector<std::array<Zp, 4>> forms_mod_p(const PlaneArrangement& arr,
                                                  const PrimeField& f) {
    std::vector<std::array<Zp, 4>> out;
    for (const auto& form : arr.forms) {
        std::array<Zp, 4> r;
        bool nonzero = false;
        for (int i = 0; i < 4; ++i) {
            Int m = form.c[i] % f.p();
            auto v = f.from_int(std::int64_t(m.convert_to<long long>()));
            r[i] = Zp(f, v);
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) throw std::domain_error("form vanishes mod p");
        out.push_back(r);
    }
    return out;
}

/**
 * Primes 5 ≤ p ≤ pmax where the mod-p reduction keeps all 8 forms pairwise
 * non-proportional and reproduces the rational singularity signature.
 */
inline std::vector<std::uint32_t> good_primes(const PlaneArrangement& arr, std::uint32_t pmax) {
    auto geometric = singularity_inventory(arr).signature();
    std::vector<std::uint32_t> out;
    for (auto p : primes_up_to(pmax)) {
        PrimeField f(p);
        std::vector<std::array<Zp, 4>> forms;
        try {
            forms = forms_mod_p(arr, f);
        } catch (const std::domain_error&) {
            continue;
        }
        bool prop = false;
        for (std::size_t i = 0; i < forms.size() && !prop; ++i)
            for (std::size_t j = i + 1; j < forms.size() && !prop; ++j)
                prop = detail::proportional(forms[i], forms[j]);
        if (prop) continue;
        if (singularity_inventory_over<Zp>(forms).signature() == geometric) out.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cross-ratios
// ---------------------------------------------------------------------------

/// (q1−q3)(q2−q4) / ((q1−q4)(q2−q3)) on Q ∪ {∞}; limits handle ∞ entries.
inline Rat cross_ratio(const ProjQ& q1, const ProjQ& q2, const ProjQ& q3, const ProjQ& q4) {
    std::array<ProjQ, 4> q{q1, q2, q3, q4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (q[i] == q[j]) throw std::invalid_argument("cross_ratio: repeated value");
    // factor (a − b), with an ∞ in either slot cancelling against the partner factor
    auto diff = [](const ProjQ& a, const ProjQ& b) -> std::optional<Rat> {
        if (a.is_infinity() || b.is_infinity()) return std::nullopt;  // handled by cancellation
        return a.value() - b.value();
    };
    auto n1 = diff(q1, q3), n2 = diff(q2, q4), d1 = diff(q1, q4), d2 = diff(q2, q3);
    // An infinite entry appears in exactly one numerator factor and one
    // denominator factor; the pair cancels to 1.
    Rat num = 1, den = 1;
    if (q1.is_infinity()) {  // (q1−q3)/(q1−q4) → 1
        num *= *n2;
        den *= *d2;
    } else if (q2.is_infinity()) {  // (q2−q4)/(q2−q3) → 1
        num *= *n1;
        den *= *d1;
    } else if (q3.is_infinity()) {  // (q1−q3)/(q2−q3) → 1
        num *= *n2;
        den *= *d1;
    } else if (q4.is_infinity()) {  // (q2−q4)/(q1−q4) → 1
        num *= *n1;
        den *= *d2;
    } else {
        num = *n1 * *n2;
        den = *d1 * *d2;
    }
    if (den == 0) throw std::invalid_argument("cross_ratio: degenerate quadruple");
    return num / den;
}

/// Affine-linear function a + b·y + c·z of two parameters.
struct LinearFunc2 {
    Rat a, b, c;
    friend LinearFunc2 operator-(const LinearFunc2& u, const LinearFunc2& v) {
        return {u.a - v.a, u.b - v.b, u.c - v.c};
    }
};

/// Quadratic polynomial in y, z (the product of two LinearFunc2).
struct Quad2 {
    // coefficients of 1, y, z, y², yz, z²
    std::array<Rat, 6> k{};
    static Quad2 product(const LinearFunc2& u, const LinearFunc2& v) {
        Quad2 q;
        q.k = {u.a * v.a,           u.a * v.b + u.b * v.a, u.a * v.c + u.c * v.a,
               u.b * v.b,           u.b * v.c + u.c * v.b, u.c * v.c};
        return q;
    }
};

/// Cross-ratio of four affine-linear functions, as the (num, den) pair of quadratics.
inline std::pair<Quad2, Quad2> cross_ratio_functions(const LinearFunc2& q1, const LinearFunc2& q2,
                                                     const LinearFunc2& q3, const LinearFunc2& q4) {
    return {Quad2::product(q1 - q3, q2 - q4), Quad2::product(q1 - q4, q2 - q3)};
}

/// Equality of the two cross-ratios as rational functions (cross multiplication).
inline bool cross_ratios_equal(const std::pair<Quad2, Quad2>& r1,
                               const std::pair<Quad2, Quad2>& r2) {
    // num1·den2 and num2·den1 are quartic; compare coefficientwise via the
    // bilinear convolution of the quadratic coefficient vectors.
    auto mul = [](const Quad2& a, const Quad2& b) {
        // exponent vectors of the 6 quadratic monomials in (y, z)
        static const int ey[6] = {0, 1, 0, 2, 1, 0};
        static const int ez[6] = {0, 0, 1, 0, 1, 2};
        std::map<std::pair<int, int>, Rat> out;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                out[{ey[i] + ey[j], ez[i] + ez[j]}] += a.k[i] * b.k[j];
        return out;
    };
    auto lhs = mul(r1.first, r2.second), rhs = mul(r2.first, r1.second);
    for (auto& [mono, coef] : lhs)
        if (coef != rhs[mono]) return false;
    for (auto& [mono, coef] : rhs)
        if (coef != lhs[mono]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Structure finders
// ---------------------------------------------------------------------------

/**
 * Planes S containing two double lines of the arrangement such that the four
 * planes not involved in those lines meet in a single point lying on S.
 * The search space is the (finite) set of planes spanned by pairs of double
 * lines; arrangement planes themselves are excluded.
 */
inline std::vector<LinearForm> find_ruled_planes(const PlaneArrangement& arr,
                                                 const SingularityInventory& inv) {
    auto forms = rational_forms(arr);
    std::vector<LinearForm> found;
    const auto& dls = inv.double_lines;
    for (std::size_t a = 0; a < dls.size(); ++a)
        for (std::size_t b = a + 1; b < dls.size(); ++b) {
            std::array<int, 4> idx{dls[a].planes[0], dls[a].planes[1], dls[b].planes[0],
                                   dls[b].planes[1]};
            std::set<int> uniq(idx.begin(), idx.end());
            if (uniq.size() != 4) continue;
            // common plane of the two pencils: kernel of the 4×4 with the four forms as columns
            Matrix<Rat> m(4, std::vector<Rat>(4));
            for (int col = 0; col < 4; ++col)
                for (int row = 0; row < 4; ++row) m[row][col] = forms[idx[col]][row];
            auto ker = kernel_basis(m);
            if (ker.size() != 1) continue;  // lines not coplanar (or identical pencils)
            std::array<Rat, 4> s{};
            for (int i = 0; i < 4; ++i)
                for (int r = 0; r < 4; ++r) s[r] += ker[0][i] * (i < 2 ? forms[idx[i]][r] : Rat(0));
            if (s == std::array<Rat, 4>{0, 0, 0, 0}) continue;
            LinearForm S = LinearForm::from_rationals(s);
            bool is_arrangement_plane = false;
            for (const auto& f : arr.forms) is_arrangement_plane |= (f == S);
            if (is_arrangement_plane) continue;

            // the other four planes must meet in one point, and that point must lie on S
            std::vector<int> rest;
            for (int i = 0; i < 8; ++i)
                if (!uniq.count(i)) rest.push_back(i);
            Matrix<Rat> rm;
            for (int i : rest)
                rm.push_back({forms[i][0], forms[i][1], forms[i][2], forms[i][3]});
            auto pker = kernel_basis(rm);
            if (pker.size() != 1) continue;
            Rat at = 0;
            for (int r = 0; r < 4; ++r) at += Rat(S.c[r]) * pker[0][r];
            if (at != 0) continue;
            if (std::find(found.begin(), found.end(), S) == found.end()) found.push_back(S);
        }
    std::sort(found.begin(), found.end());
    return found;
}

/// One partition of the 8 planes into two concurrent quadruples, plus the
/// coordinate change carrying their common points to (0,0,0,1) and (1,0,0,0).
struct KummerSplit {
    std::array<int, 4> first;                // plane indices through P1 → (0,0,0,1)
    std::array<int, 4> second;               // plane indices through P2 → (1,0,0,0)
    std::array<Rat, 4> point1, point2;       // the common points, original coordinates
    Matrix<Rat> new_from_old;                // T with x_new = T · x_old
    // transformed forms: quadruple one in (x,y,z), quadruple two in (y,z,t)
    std::vector<std::array<Rat, 3>> lines_first;
    std::vector<std::array<Rat, 3>> lines_second;
};

inline std::vector<KummerSplit> find_kummer_splits(const PlaneArrangement& arr) {
    auto forms = rational_forms(arr);
    std::vector<KummerSplit> splits;

    auto common_point = [&](const std::vector<int>& quad) -> std::optional<std::vector<Rat>> {
        Matrix<Rat> m;
        for (int i : quad) m.push_back({forms[i][0], forms[i][1], forms[i][2], forms[i][3]});
        auto ker = kernel_basis(m);
        if (ker.size() != 1) return std::nullopt;
        return ker[0];
    };

    std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
    // subsets of size 4 containing plane 0 (each unordered partition once)
    for (int mask = 0; mask < 256; ++mask) {
        if (!(mask & 1) || __builtin_popcount(mask) != 4) continue;
        std::vector<int> quadA, quadB;
        for (int i = 0; i < 8; ++i) ((mask >> i) & 1 ? quadA : quadB).push_back(i);
        auto p1 = common_point(quadA);
        auto p2 = common_point(quadB);
        if (!p1 || !p2) continue;

        // reject degenerate pencils: at most one plane per quadruple may
        // contain the opposite point (it becomes a branch line through the
        // pencil point; two would leave no elliptic fibration)
        auto eval = [&](int i, const std::vector<Rat>& pt) {
            Rat s = 0;
            for (int c = 0; c < 4; ++c) s += forms[i][c] * pt[c];
            return s;
        };
        int a_through = 0, b_through = 0;
        for (int i : quadA) a_through += (eval(i, *p2) == 0) ? 1 : 0;
        for (int i : quadB) b_through += (eval(i, *p1) == 0) ? 1 : 0;
        if (a_through > 1 || b_through > 1) continue;

        // coordinate change: columns P2, u, v, P1 with deterministic completion
        Matrix<Rat> basis(4, std::vector<Rat>(4, Rat(0)));
        for (int r = 0; r < 4; ++r) {
            basis[r][0] = (*p2)[r];
            basis[r][3] = (*p1)[r];
        }
        // fill columns 1 and 2 with the first unit vectors keeping full rank
        int placed = 1;
        for (int e = 0; e < 4 && placed < 3; ++e) {
            std::vector<int> usecols{0, 3};
            for (int k = 1; k < placed; ++k) usecols.push_back(k);
            Matrix<Rat> sub(4);
            for (int r = 0; r < 4; ++r) {
                for (int c : usecols) sub[r].push_back(basis[r][c]);
                sub[r].push_back(Rat(e == r ? 1 : 0));
            }
            if (rank(sub) == usecols.size() + 1) {
                basis[e][placed] = 1;
                ++placed;
            }
        }
        if (placed != 3) continue;  // cannot happen for distinct points
        Matrix<Rat> T = mat_inverse(basis);

        KummerSplit ks;
        std::copy(quadA.begin(), quadA.end(), ks.first.begin());
        std::copy(quadB.begin(), quadB.end(), ks.second.begin());
        for (int r = 0; r < 4; ++r) {
            ks.point1[r] = (*p1)[r];
            ks.point2[r] = (*p2)[r];
        }
        ks.new_from_old = T;
        // transformed form g(x_new) = f(old(x_new)) = f(basis · x_new): coefficients fᵀ·basis
        auto transform = [&](int i) {
            std::array<Rat, 4> g{};
            for (int c = 0; c < 4; ++c)
                for (int r = 0; r < 4; ++r) g[c] += forms[i][r] * basis[r][c];
            return g;
        };
        for (int i : quadA) {
            auto g = transform(i);
            if (g[3] != 0) throw std::logic_error("kummer split: quadruple A not t-free");
            ks.lines_first.push_back({g[0], g[1], g[2]});
        }
        for (int i : quadB) {
            auto g = transform(i);
            if (g[0] != 0) throw std::logic_error("kummer split: quadruple B not x-free");
            ks.lines_second.push_back({g[1], g[2], g[3]});
        }
        splits.push_back(std::move(ks));
    }
    return splits;
}

/// Result of verifying a projective involution against an arrangement.
struct InvolutionCheck {
    Rat msquared_scalar;          // c′ with M² = c′·Id
    Rat octic_scalar;             // c with f(Mx) = c·f(x)
    std::vector<int> permutation; // induced permutation of the 8 forms
};

inline InvolutionCheck check_involution(const PlaneArrangement& arr, const InvolutionMatrix& M) {
    if (det(M) == 0) throw std::invalid_argument("involution: singular matrix");
    auto m2 = mat_mul(M, M);
    Rat cprime = m2[0][0];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m2[i][j] != (i == j ? cprime : Rat(0)))
                throw std::invalid_argument("involution: M^2 is not a scalar matrix");
    if (cprime == 0) throw std::invalid_argument("involution: M^2 = 0");

    auto forms = rational_forms(arr);
    InvolutionCheck out;
    out.msquared_scalar = cprime;
    out.permutation.assign(8, -1);
    Rat scalar_product = 1;
    for (int i = 0; i < 8; ++i) {
        // composed form g(x) = f_i(Mx): coefficients Mᵀ · c_i
        std::array<Rat, 4> g{};
        for (int c = 0; c < 4; ++c)
            for (int r = 0; r < 4; ++r) g[c] += forms[i][r] * M[r][c];
        int target = -1;
        Rat s;
        for (int j = 0; j < 8 && target < 0; ++j) {
            // g ∝ f_j?
            Rat ratio;
            bool ok = true, have = false;
            for (int c = 0; c < 4 && ok; ++c) {
                if (forms[j][c] == 0) {
                    ok = g[c] == 0;
                } else if (!have) {
                    ratio = g[c] / forms[j][c];
                    have = true;
                } else {
                    ok = g[c] == ratio * forms[j][c];
                }
            }
            if (ok && have && ratio != 0) {
                target = j;
                s = ratio;
            }
        }
        if (target < 0)
            throw std::invalid_argument("involution does not preserve the arrangement (form " +
                                        std::to_string(i) + ")");
        out.permutation[i] = target;
        scalar_product *= s;
    }
    std::vector<int> seen(8, 0);
    for (int v : out.permutation) seen[v]++;
    for (int v : seen)
        if (v != 1) throw std::invalid_argument("involution: form map is not a permutation");
    out.octic_scalar = scalar_product;
    return out;
}

}  // namespace octic

#endif  // OCTIC_ARRANGEMENT_HPP
