#pragma once

// Words and finite linear combinations over the fixed generator registry,
// plus the graded tensor square with the Koszul sign rule.

#include "glpq/generators.hpp"
#include "glpq/scalar.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

namespace glpq {

struct UnsupportedGenerator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Word = std::vector<Gen>;

inline int grade(const Word& w) {
    int s = 0;
    for (Gen g : w) s += grade(g);
    return s & 1;
}

inline int form_degree(const Word& w) {
    int s = 0;
    for (Gen g : w) s += form_degree(g);
    return s;
}

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline std::string word_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += std::string(name(w[i]));
    }
    return s;
}

// Alphabetical position of each generator's symbol; the canonical term order
// is lexicographic on symbols, not on the rewrite rank.
inline int symbol_order(Gen g) {
    static const std::array<int, kGenCount> table = [] {
        std::array<int, kGenCount> t{};
        std::vector<std::size_t> idx(kGenCount);
        for (std::size_t i = 0; i < kGenCount; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [](std::size_t l, std::size_t r) {
            return name(static_cast<Gen>(l)) < name(static_cast<Gen>(r));
        });
        for (std::size_t pos = 0; pos < idx.size(); ++pos) t[idx[pos]] = static_cast<int>(pos);
        return t;
    }();
    return table[static_cast<std::size_t>(g)];
}

// Canonical term order: form degree, then length, then lex on symbols.
inline bool word_less(const Word& a, const Word& b) {
    const int fa = form_degree(a), fb = form_degree(b);
    if (fa != fb) return fa < fb;
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](Gen l, Gen r) { return symbol_order(l) < symbol_order(r); });
}

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

class Element {
public:
    Element() = default;
    Element(const Scalar& c) { add(Word{}, c); }
    Element(const Word& w, Scalar c = Scalar(1)) { add(w, std::move(c)); }
    static Element unit() { return Element(Scalar(1)); }
    static Element zero() { return Element(); }
    static Element gen(Gen g) { return Element(Word{g}); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }

    void add(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a) {
        Element r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend Element operator*(const Scalar& s, const Element& e) {
        Element r;
        for (const auto& [w, c] : e.terms_) r.add(w, s * c);
        return r;
    }
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    Element substitute(const std::optional<Scalar>& vp, const std::optional<Scalar>& vq) const {
        Element r;
        for (const auto& [w, c] : terms_) r.add(w, c.substitute(vp, vq));
        return r;
    }

    // Parity flip tau(w) = (-1)^grade(w) w, a degree-zero linear map.
    Element parity_flip() const {
        Element r;
        for (const auto& [w, c] : terms_) r.add(w, grade(w) ? -c : c);
        return r;
    }

    std::string to_string() const;

private:
    std::map<Word, Scalar, WordLess> terms_;
};

// Free-algebra concatenation product; no reordering happens here.
inline Element mul(const Element& x, const Element& y) {
    Element r;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) r.add(concat(wx, wy), cx * cy);
    return r;
}

inline Element mul(const Element& x, const Element& y, const Element& z) {
    return mul(mul(x, y), z);
}

inline std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string body;
        bool negative = false;
        if (c.is_monomial()) {
            const auto& [e, coeff] = *c.terms().begin();
            Scalar abs = Scalar::monomial(coeff < 0 ? -coeff : coeff, e.p, e.q);
            negative = coeff < 0;
            if (abs.is_one()) {
                body = word_string(w);
            } else if (w.empty()) {
                body = abs.to_string();
            } else {
                body = abs.to_string() + "*" + word_string(w);
            }
        } else {
            body = w.empty() ? "(" + c.to_string() + ")"
                             : "(" + c.to_string() + ")*" + word_string(w);
        }
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        out += body;
    }
    return out;
}

// Elements of the graded tensor square. Legs are plain words; products carry
// the Koszul sign (A ox B)(C ox D) = (-1)^{grade(B) grade(C)} AC ox BD.
class TensorElement {
public:
    TensorElement() = default;
    TensorElement(const Word& l, const Word& r, Scalar c = Scalar(1)) { add(l, r, std::move(c)); }
    static TensorElement tensor(const Element& x, const Element& y) {
        TensorElement t;
        for (const auto& [wx, cx] : x.terms())
            for (const auto& [wy, cy] : y.terms()) t.add(wx, wy, cx * cy);
        return t;
    }

    bool is_zero() const { return terms_.empty(); }
    const auto& terms() const { return terms_; }

    void add(const Word& l, const Word& r, const Scalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(l, r);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Scalar& s, const TensorElement& t) {
        TensorElement r;
        for (const auto& [k, c] : t.terms_) r.add(k.first, k.second, s * c);
        return r;
    }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            std::string cs = c.to_string();
            if (cs != "1") out += "(" + cs + ")*";
            out += word_string(k.first) + " (x) " + word_string(k.second);
        }
        return out;
    }

private:
    struct PairLess {
        bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
            if (word_less(a.first, b.first)) return true;
            if (word_less(b.first, a.first)) return false;
            return word_less(a.second, b.second);
        }
    };
    std::map<std::pair<Word, Word>, Scalar, PairLess> terms_;
};

enum class SignRule { koszul, plain };

inline TensorElement tensor_mul(const TensorElement& x, const TensorElement& y,
                                SignRule sr = SignRule::koszul) {
    TensorElement r;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            Scalar c = cx * cy;
            if (sr == SignRule::koszul && (grade(kx.second) & grade(ky.first))) c = -c;
            r.add(concat(kx.first, ky.first), concat(kx.second, ky.second), c);
        }
    return r;
}

}  // namespace glpq
