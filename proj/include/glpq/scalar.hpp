#pragma once

// Exact arithmetic in the commutative coefficient ring Q[p, p^-1, q, q^-1].
// Everything downstream (elements, rewrite rules, reports) is built over this
// ring; there is no floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <climits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glpq {

using Rational = boost::multiprecision::cpp_rational;

struct NonUnitSubstitution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent pair (i, j) of a monomial p^i q^j.
struct Exps {
    int p = 0;
    int q = 0;
    friend bool operator==(const Exps&, const Exps&) = default;
};

// Term order used for canonical storage and printing: small total support
// first, ties broken by descending lex so "1 - p*q" and "p - q^-1" come out
// in the customary reading order.
inline bool term_order_less(const Exps& a, const Exps& b) {
    const int wa = std::abs(a.p) + std::abs(a.q);
    const int wb = std::abs(b.p) + std::abs(b.q);
    if (wa != wb) return wa < wb;
    if (a.p != b.p) return a.p > b.p;
    return a.q > b.q;
}

struct ExpsLess {
    bool operator()(const Exps& a, const Exps& b) const { return term_order_less(a, b); }
};

class Scalar {
public:
    Scalar() = default;
    Scalar(int n) { if (n != 0) terms_[Exps{0, 0}] = n; }
    Scalar(const Rational& r) { if (r != 0) terms_[Exps{0, 0}] = r; }

    static Scalar monomial(Rational c, int ip, int iq) {
        Scalar s;
        if (c != 0) s.terms_[Exps{ip, iq}] = std::move(c);
        return s;
    }
    static Scalar p(int k = 1) { return monomial(1, k, 0); }
    static Scalar q(int k = 1) { return monomial(1, 0, k); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exps{0, 0} &&
               terms_.begin()->second == 1;
    }
    std::size_t term_count() const { return terms_.size(); }

    // Single-term test; such scalars are the invertible elements of the ring.
    bool is_monomial() const { return terms_.size() == 1; }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(Exps{ea.p + eb.p, ea.q + eb.q}, ca * cb);
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    // Multiplicative inverse, defined for monomials only.
    Scalar inverse() const {
        if (!is_monomial())
            throw NonUnitSubstitution("scalar is not an invertible monomial: " + to_string());
        const auto& [e, c] = *terms_.begin();
        return monomial(Rational(1) / c, -e.p, -e.q);
    }

    Scalar pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        Scalar r(1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    // Homomorphic substitution p := vp, q := vq (either may be absent).
    // Values must be invertible monomials so Laurent exponents stay integral.
    Scalar substitute(const std::optional<Scalar>& vp, const std::optional<Scalar>& vq) const {
        if (vp && !vp->is_monomial())
            throw NonUnitSubstitution("value for p is not an invertible monomial");
        if (vq && !vq->is_monomial())
            throw NonUnitSubstitution("value for q is not an invertible monomial");
        Scalar out;
        for (const auto& [e, c] : terms_) {
            Scalar t = monomial(c, vp ? 0 : e.p, vq ? 0 : e.q);
            if (vp) t = t * vp->pow(e.p);
            if (vq) t = t * vq->pow(e.q);
            out += t;
        }
        return out;
    }
    Scalar classical_limit() const { return substitute(Scalar(1), Scalar(1)); }

    const std::map<Exps, Rational, ExpsLess>& terms() const { return terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            os << term_string(e, a);
        }
        return os.str();
    }

private:
    static std::string term_string(const Exps& e, const Rational& abs_coeff) {
        std::vector<std::string> parts;
        if (abs_coeff != 1 || (e.p == 0 && e.q == 0)) {
            std::ostringstream cs;
            cs << abs_coeff;
            parts.push_back(cs.str());
        }
        if (e.p != 0) parts.push_back(e.p == 1 ? "p" : "p^" + std::to_string(e.p));
        if (e.q != 0) parts.push_back(e.q == 1 ? "q" : "q^" + std::to_string(e.q));
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += "*";
            out += parts[i];
        }
        return out;
    }

    void add_term(const Exps& e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Exps, Rational, ExpsLess> terms_;
};

// Exact division f / g in the Laurent ring. Returns nothing when g does not
// divide f. Both are shifted to honest polynomials first so the leading-term
// reduction below terminates.
inline std::optional<Scalar> exact_divide(const Scalar& f, const Scalar& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return Scalar(0);
    // shift both operands so their minimal exponents are exactly zero
    int fshift_p = INT_MAX, fshift_q = INT_MAX, gshift_p = INT_MAX, gshift_q = INT_MAX;
    for (const auto& [e, c] : f.terms()) {
        fshift_p = std::min(fshift_p, e.p);
        fshift_q = std::min(fshift_q, e.q);
    }
    for (const auto& [e, c] : g.terms()) {
        gshift_p = std::min(gshift_p, e.p);
        gshift_q = std::min(gshift_q, e.q);
    }
    auto lead = [](const Scalar& s) {
        // plain descending lex leading term
        const Exps* best = nullptr;
        const Rational* bc = nullptr;
        for (const auto& [e, c] : s.terms()) {
            if (!best || e.p > best->p || (e.p == best->p && e.q > best->q)) {
                best = &e;
                bc = &c;
            }
        }
        return std::pair<Exps, Rational>(*best, *bc);
    };
    Scalar fp = f * Scalar::monomial(1, -fshift_p, -fshift_q);
    Scalar gp = g * Scalar::monomial(1, -gshift_p, -gshift_q);
    auto [gl, glc] = lead(gp);
    Scalar quot;
    while (!fp.is_zero()) {
        auto [fl, flc] = lead(fp);
        if (fl.p < gl.p || fl.q < gl.q) return std::nullopt;
        Scalar t = Scalar::monomial(flc / glc, fl.p - gl.p, fl.q - gl.q);
        quot += t;
        fp -= t * gp;
    }
    return quot * Scalar::monomial(1, fshift_p - gshift_p, fshift_q - gshift_q);
}

}  // namespace glpq
