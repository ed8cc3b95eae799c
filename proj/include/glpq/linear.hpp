#pragma once

// Exact linear algebra over the Laurent coefficient ring, used to decide
// span membership of relations among matrix entries and to solve for
// relation coefficients. Internally works with num/den pairs of Scalars;
// every reported solution is re-verified by a denominator-cleared symbolic
// identity, so the fractions never leak into results.

#include "glpq/element.hpp"

#include <optional>
#include <vector>

namespace glpq {

struct ScalarFrac {
    Scalar num = Scalar(0);
    Scalar den = Scalar(1);

    bool is_zero() const { return num.is_zero(); }
    void reduce() {
        if (num.is_zero()) {
            den = Scalar(1);
            return;
        }
        if (auto q = exact_divide(num, den)) {
            num = *q;
            den = Scalar(1);
        }
    }
    friend ScalarFrac operator+(const ScalarFrac& a, const ScalarFrac& b) {
        ScalarFrac r{a.num * b.den + b.num * a.den, a.den * b.den};
        r.reduce();
        return r;
    }
    friend ScalarFrac operator-(const ScalarFrac& a, const ScalarFrac& b) {
        ScalarFrac r{a.num * b.den - b.num * a.den, a.den * b.den};
        r.reduce();
        return r;
    }
    friend ScalarFrac operator*(const ScalarFrac& a, const ScalarFrac& b) {
        ScalarFrac r{a.num * b.num, a.den * b.den};
        r.reduce();
        return r;
    }
    friend ScalarFrac operator/(const ScalarFrac& a, const ScalarFrac& b) {
        ScalarFrac r{a.num * b.den, a.den * b.num};
        r.reduce();
        return r;
    }
    std::string to_string() const {
        if (den.is_one()) return num.to_string();
        return "(" + num.to_string() + ")/(" + den.to_string() + ")";
    }
};

// Solves target = sum_j c_j basis_j in the free module spanned by words.
// Returns the coefficients when the system is consistent. The solution is
// verified exactly before being returned.
inline std::optional<std::vector<ScalarFrac>> solve_in_span(
    const Element& target, const std::vector<Element>& basis) {
    // collect the word support
    std::map<Word, std::size_t, WordLess> index;
    auto index_words = [&](const Element& e) {
        for (const auto& [w, c] : e.terms())
            if (!index.count(w)) {
                std::size_t next = index.size();
                index.emplace(w, next);
            }
    };
    index_words(target);
    for (const auto& b : basis) index_words(b);
    const std::size_t rows = index.size(), cols = basis.size();

    // augmented system A c = t
    std::vector<std::vector<ScalarFrac>> A(rows, std::vector<ScalarFrac>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [w, c] : basis[j].terms()) A[index.at(w)][j] = ScalarFrac{c, Scalar(1)};
    for (const auto& [w, c] : target.terms()) A[index.at(w)][cols] = ScalarFrac{c, Scalar(1)};

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && A[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(A[pr], A[row]);
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == row || A[r2][col].is_zero()) continue;
            ScalarFrac f = A[r2][col] / A[row][col];
            for (std::size_t c2 = col; c2 <= cols; ++c2)
                A[r2][c2] = A[r2][c2] - f * A[row][c2];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    // consistency: no row of the form (0 ... 0 | nonzero)
    for (std::size_t r2 = row; r2 < rows; ++r2)
        if (!A[r2][cols].is_zero()) return std::nullopt;

    std::vector<ScalarFrac> sol(cols);
    for (std::size_t r2 = 0; r2 < row; ++r2) {
        std::size_t col = pivot_col_of_row[r2];
        sol[col] = A[r2][cols] / A[r2][col];
    }
    // symbolic verification with cleared denominators
    Scalar common(1);
    for (const auto& s : sol) common = common * s.den;
    Element check;
    for (std::size_t j = 0; j < cols; ++j) {
        Scalar cj = sol[j].num * (*exact_divide(common, sol[j].den));
        for (const auto& [w, c] : basis[j].terms()) check.add(w, cj * c);
    }
    Element expect;
    for (const auto& [w, c] : target.terms()) expect.add(w, common * c);
    if (!(check == expect)) return std::nullopt;
    return sol;
}

}  // namespace glpq
