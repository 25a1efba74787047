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

#ifndef OCTIC_CATALOG_HPP
#define OCTIC_CATALOG_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "octic/arrangement.hpp"

namespace octic {

// Catalog records, one per line:
//   id | factor;factor;... | h11 | h12 | wt4_label | wt2_label | involution(16 rationals) | skew
// A leading pure-number factor is an overall constant of the octic.  h11 = ?
// marks values the toolkit derives numerically (rigid arrangements and the
// h12 = 2 auxiliary threefold); the derivations are pinned by consistency
// checks across all good primes.  Fields 7 and 8 are optional.
inline const char* kCatalogText = R"CAT(
4a   | x;y;z;t;x+y;y+z;x-y-z-t;x+y-z-t        | 61 | 1 | 32k4A1 | 32A1 | |
4b   | x;y;z;t;x+y;y+z;x+2y+2z-t;x+y+2z-t     | 61 | 1 | 32k4A1 | 32A1 | |
4c   | 2;x;y;z;t;x+y;y+z;2x+y+z-2t;2x+2y+z-2t | 61 | 1 | 32k4A1 | 32A1 | |
8    | x;y;z;t;x+y;y+z;-z+t;3x-y-z+t          | 61 | 1 | 24k4A1 | 24A1 | |
13a  | x;y;z;t;x+y;y+z;x-z-t;x-z-2t           | 61 | 1 | 32k4A1 | 32A1 | |
13b  | x;y;z;t;x+y;y+z;x-z-t;x-z+t            | 61 | 1 | 32k4A1 | 32A1 | |
13c  | x;y;z;t;x+y;y+z;x-z-t;2x-2z-t          | 61 | 1 | 32k4A1 | 32A1 | |
21   | x;y;z;t;x+y;y+z;2x+y-t;2x-z-2t         | 53 | 1 | 32k4B1 | 32A1 | |
53   | x;y;z;t;x+y;z+t;x-y-z-t;x+y-z+t        | 53 | 1 | 32k4B1 | 32A1 | 0 1 0 0 1 0 0 0 0 0 0 -1 0 0 -1 0 |
154  | x;y;z;t;x+y+z;x+y+z-t;-2x+y-3z+3t;2x+3z-2t | 41 | 1 | 8k4A1 | 72A1 | |
244  | x;y;z;t;x+y+z+t;x+y-z-t;y-z+t;x-z+t    | 39 | 1 | 12k4A1 | 48A1 | 0 1 0 0 1 0 0 0 0 0 0 -1 0 0 -1 0 | mod4
249a | x;y;z;t;x+y+z;x+z+t;2x+3y-z+2t;y-z+2t  | 37 | 1 | 24k4A1 | 24A1 | |
249b | x;y;z;t;x+y+z;x+z+t;2x-y+3z+2t;-3y+3z+2t | 37 | 1 | 24k4A1 | 24A1 | |
267a | x;y;z;t;x+y-2z;x-y-z+t;2y-z+t;x+y+z+t  | 37 | 1 | 96k4B1 | 96B1 | 0 0 0 1 0 0 -1 0 0 -1 0 0 1 0 0 0 |
267b | x;y;z;t;x+y+z;x+2y-z+t;-y+2z-2t;2x+2y-z+2t | 37 | 1 | 96k4B1 | 96B1 | |
267c | x;y;z;t;2x+2y-z;2x+y-2z+2t;y+z-t;x+y-2z+t | 37 | 1 | 96k4B1 | 96B1 | |
274  | x;y;z;t;x+y+z;-x-z+t;x+2y-z+t;x+y-z+2t | 37 | 1 | 96k4E1 | 96B1 | 0 0 1 0 0 0 0 -1 1 0 0 0 0 -1 0 0 |
275  | x;y;z;t;x+y+z;2x-2z-t;8y+4z+t;2x+4y+t  | 37 | 1 | 96k4B1 | 96B1 | |
3    | x;y;z;t;x+y;y+z;z+t;t+x                | ?  | 0 | 32k4B1 | -    | |
19   | x;y;z;t;x+y;y+z;x-z-t;x+y+z-t          | ?  | 0 | 32k4A1 | -    | |
239  | x;y;z;t;x+y+z;x+y+t;x+z+t;y+z+t        | ?  | 0 | 12k4A1 | -    | |
269  | x;y;z;t;x+y+z;x+2y-z+t;y+z-t;x+y-2z+t  | ?  | 2 | 24k4A1 | 24A1 | |
287  | x;y;z;t;x+y+z-3t;x+y-3z+t;x-3y+z+t;-3x+y+z+t | 37 | 3 | 6k4A1 | 24A1 | |
)CAT";

struct Catalog {
    std::vector<PlaneArrangement> entries;

    const PlaneArrangement& by_id(const std::string& raw) const {
        std::string id = raw;
        if (id.rfind("X_", 0) == 0) id = id.substr(2);
        for (const auto& a : entries)
            if (a.id == id) return a;
        // bare family numbers resolve to the first row of the group
        for (const auto& a : entries)
            if (a.id.rfind(id, 0) == 0 && a.id.size() == id.size() + 1 &&
                std::isalpha(static_cast<unsigned char>(a.id.back())))
                return a;
        throw std::invalid_argument("unknown arrangement id: " + raw);
    }

    std::vector<const PlaneArrangement*> group(const std::string& number) const {
        std::vector<const PlaneArrangement*> out;
        for (const auto& a : entries) {
            std::string stem = a.id;
            while (!stem.empty() && std::isalpha(static_cast<unsigned char>(stem.back())))
                stem.pop_back();
            if (stem == number) out.push_back(&a);
        }
        return out;
    }
};

namespace detail {
inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}
inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}
}  // namespace detail

inline PlaneArrangement parse_catalog_line(const std::string& line) {
    auto fields = detail::split(line, '|');
    if (fields.size() < 6) throw std::invalid_argument("catalog line needs 6+ fields: " + line);
    PlaneArrangement arr;
    arr.id = detail::trim(fields[0]);
    for (const auto& tok : detail::split(detail::trim(fields[1]), ';')) {
        std::string f = detail::trim(tok);
        if (f.empty()) throw std::invalid_argument("empty factor in: " + line);
        if (f.find_first_of("xyzt") == std::string::npos) {
            // pure constant factor
            auto slash = f.find('/');
            if (slash == std::string::npos)
                arr.constant *= Rat(Int(f));
            else
                arr.constant *= Rat(Int(f.substr(0, slash)), Int(f.substr(slash + 1)));
        } else {
            arr.forms.push_back(LinearForm::from_rationals(parse_linear_expr(f)));
        }
    }
    std::string h11 = detail::trim(fields[2]);
    arr.h11 = (h11 == "?") ? -1 : std::stoi(h11);
    arr.h12 = std::stoi(detail::trim(fields[3]));
    arr.wt4_label = detail::trim(fields[4]);
    arr.wt2_label = detail::trim(fields[5]);
    if (arr.wt2_label == "-") arr.wt2_label.clear();
    if (fields.size() >= 7) {
        std::string inv = detail::trim(fields[6]);
        if (!inv.empty()) {
            std::istringstream is(inv);
            std::vector<Rat> vals;
            std::string tok;
            while (is >> tok) {
                auto slash = tok.find('/');
                vals.push_back(slash == std::string::npos
                                   ? Rat(Int(tok))
                                   : Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1))));
            }
            if (vals.size() % 16 != 0)
                throw std::invalid_argument("involution needs 16 rationals per matrix");
            for (std::size_t k = 0; k < vals.size(); k += 16) {
                InvolutionMatrix m(4, std::vector<Rat>(4));
                for (int i = 0; i < 16; ++i) m[i / 4][i % 4] = vals[k + i];
                arr.involutions.push_back(std::move(m));
            }
        }
    }
    if (fields.size() >= 8) {
        std::string skew = detail::trim(fields[7]);
        if (!skew.empty()) arr.skew_picard_character = skew;
    }
    arr.validate();
    return arr;
}

inline Catalog load_catalog_text(const std::string& text) {
    Catalog cat;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        line = detail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        cat.entries.push_back(parse_catalog_line(line));
    }
    return cat;
}

inline const Catalog& builtin_catalog() {
    static const Catalog cat = load_catalog_text(kCatalogText);
    return cat;
}

/// Spec operation: catalog id ("X_53", "53", "13b") or raw equation text → arrangement.
inline PlaneArrangement parse_arrangement(const std::string& source) {
    if (source.find('(') != std::string::npos || source.find_first_of("xyzt") == 0)
        return parse_octic_equation(source);
    return builtin_catalog().by_id(source);
}

// ---------------------------------------------------------------------------
// The two-parameter octic family (x−t)(x²−μt²)·y·z·(y+t)(z+t)(y+λz).
// Splits into 8 rational planes exactly when μ is a rational square.
// ---------------------------------------------------------------------------

struct KummerFamily {
    Rat lambda, mu;

    void validate() const {
        if (lambda == 0) throw std::invalid_argument("family: lambda must avoid {0}");
        if (mu == 0 || mu == 1) throw std::invalid_argument("family: mu must avoid {0, 1}");
    }

    /// The 7 factor coefficient vectors over Q(√μ) (the quadratic factor split).
    std::vector<std::array<QuadExtQ, 4>> split_forms() const {
        auto q = [&](Rat a) { return QuadExtQ(std::move(a), 0, mu); };
        QuadExtQ root(0, 1, mu);  // √μ
        std::vector<std::array<QuadExtQ, 4>> f;
        f.push_back({q(1), q(0), q(0), q(-1)});                  // x − t
        f.push_back({q(1), q(0), q(0), QuadExtQ(0, -1, mu)});    // x − √μ t
        f.push_back({q(1), q(0), q(0), QuadExtQ(0, 1, mu)});     // x + √μ t
        f.push_back({q(0), q(1), q(0), q(0)});                   // y
        f.push_back({q(0), q(0), q(1), q(0)});                   // z
        f.push_back({q(0), q(1), q(0), q(1)});                   // y + t
        f.push_back({q(0), q(0), q(1), q(1)});                   // z + t
        f.push_back({q(0), q(1), q(lambda), q(0)});              // y + λz
        return f;
    }

    /// Rational 8-plane arrangement when √μ ∈ Q.
    std::optional<PlaneArrangement> rational_split() const {
        auto root = perfect_sqrt(mu);
        if (!root) return std::nullopt;
        PlaneArrangement arr;
        arr.id = "D(" + rat_str(lambda) + "," + rat_str(mu) + ")";
        arr.forms.push_back(LinearForm::from_rationals({Rat(1), Rat(0), Rat(0), Rat(-1)}));
        arr.forms.push_back(LinearForm::from_rationals({Rat(1), Rat(0), Rat(0), -*root}));
        arr.forms.push_back(LinearForm::from_rationals({Rat(1), Rat(0), Rat(0), *root}));
        arr.forms.push_back(LinearForm::from_rationals({Rat(0), Rat(1), Rat(0), Rat(0)}));
        arr.forms.push_back(LinearForm::from_rationals({Rat(0), Rat(0), Rat(1), Rat(0)}));
        arr.forms.push_back(LinearForm::from_rationals({Rat(0), Rat(1), Rat(0), Rat(1)}));
        arr.forms.push_back(LinearForm::from_rationals({Rat(0), Rat(0), Rat(1), Rat(1)}));
        arr.forms.push_back(LinearForm::from_rationals({Rat(0), Rat(1), lambda, Rat(0)}));
        // (x−√μ t)(x+√μ t) = x² − μt²; normalizing both factors to integer forms
        // divides the octic by the square (lead·lead)… recover the exact constant.
        Rat c = 1;
        {
            // product of normalization scalars relating the raw factors to arr.forms
            std::vector<std::array<Rat, 4>> raw = {
                {Rat(1), Rat(0), Rat(0), Rat(-1)}, {Rat(1), Rat(0), Rat(0), -*root},
                {Rat(1), Rat(0), Rat(0), *root},   {Rat(0), Rat(1), Rat(0), Rat(0)},
                {Rat(0), Rat(0), Rat(1), Rat(0)},  {Rat(0), Rat(1), Rat(0), Rat(1)},
                {Rat(0), Rat(0), Rat(1), Rat(1)},  {Rat(0), Rat(1), lambda, Rat(0)}};
            for (int i = 0; i < 8; ++i) {
                // scalar with raw = scalar · normalized
                const auto& nf = arr.forms[i];
                for (int j = 0; j < 4; ++j)
                    if (raw[i][j] != 0) {
                        c *= raw[i][j] / Rat(nf.c[j]);
                        break;
                    }
            }
        }
        arr.constant = c;
        arr.h11 = (lambda == -1) ? 61 : 56;
        arr.h12 = (lambda == -1) ? 1 : 2;
        arr.validate();
        return arr;
    }
};

// ---------------------------------------------------------------------------
// Newform labels
// ---------------------------------------------------------------------------

struct NewformRef {
    int level = 0;
    int weight = 0;
    std::string label;  // normalized: letter(s) + index, e.g. "A1", "B1", "D1"

    bool operator<(const NewformRef& o) const {
        return std::tie(level, weight, label) < std::tie(o.level, o.weight, o.label);
    }
    bool operator==(const NewformRef&) const = default;

    std::string str() const {
        return std::to_string(level) + "k" + std::to_string(weight) + label;
    }
};

/// Accepts "32k4B1", "32A1" (weight-2 shorthand), "32k2A", "96B1", "8k3A[1,1]".
inline NewformRef normalize_form_label(const std::string& raw) {
    std::string s;
    for (char c : raw) {
        if (c == '[') break;  // character decorations are not part of the key
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty form label");
    NewformRef ref;
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0) throw std::invalid_argument("form label needs a level: " + raw);
    ref.level = std::stoi(s.substr(0, i));
    if (i < s.size() && (s[i] == 'k' || s[i] == 'K')) {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("missing weight in label: " + raw);
        ref.weight = std::stoi(s.substr(i, j - i));
        i = j;
    } else {
        ref.weight = 2;  // bare "32A1" style labels are the weight-2 forms
    }
    std::string rest = s.substr(i);
    if (rest.empty()) throw std::invalid_argument("missing letter in label: " + raw);
    std::string letter, index;
    for (char c : rest) {
        if (std::isalpha(static_cast<unsigned char>(c)) && index.empty())
            letter += std::toupper(c);
        else if (std::isdigit(static_cast<unsigned char>(c)))
            index += c;
        else
            throw std::invalid_argument("bad form label: " + raw);
    }
    if (letter.empty()) throw std::invalid_argument("bad form label: " + raw);
    ref.label = letter + (index.empty() ? std::string("1") : index);
    return ref;
}

}  // namespace octic

#endif  // OCTIC_CATALOG_HPP
