#pragma once

// Fixed, closed registry of the noncommutative generators. The enum order is
// the global rank order used by every rewrite rule set: a two-letter redex is
// always (higher rank)(lower rank) and normal-form words read in ascending
// rank. Inverse units sit directly below the generator they invert so that
// the unit rules a*ai -> 1 etc. stay confluent when other letters intervene.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace glpq {

enum class Gen : std::uint8_t {
    // right differentials (normal form: left of everything else they meet)
    dRg, dRb, dRd, dRa,
    // left partial derivatives (normal form: left of matrix elements)
    pLg, pLb, pLd, pLa,
    // matrix elements and their inverse units, interleaved
    g, b, di, d, ai, a,
    // right partial derivatives (normal form: right of matrix elements)
    pg, pb, pd, pa,
    // left differentials (normal form: right of matrix elements)
    dLg, dLb, dLd, dLa,
    // Cartan-Maurer one-forms (no rewrite rules; expanded via composites)
    th1, th2, u1, u2, w1, w2, v1, v2,
    // quantum Lie algebra generators (expanded via composites)
    T1, T2, Np, Nm, TL1, TL2, NLp, NLm,
    // superplane and dual superplane coordinates
    y, ph, th, x,
    COUNT
};

inline constexpr std::size_t kGenCount = static_cast<std::size_t>(Gen::COUNT);

enum class Family : std::uint8_t {
    matrix,
    matrixInverse,
    inverseUnit,  // alias kept distinct from matrixInverse for table output
    leftDifferential,
    rightDifferential,
    leftOneForm,
    rightOneForm,
    rightDerivative,
    leftDerivative,
    vectorField,
    planeCoordinate,
};

struct GeneratorInfo {
    std::string_view symbol;
    std::uint8_t parity;      // intrinsic super-parity
    std::uint8_t formDegree;  // 1 for differentials and one-forms
    Family family;
};

inline const GeneratorInfo& info(Gen g) {
    static const std::array<GeneratorInfo, kGenCount> table = {{
        {"dRg", 1, 1, Family::rightDifferential},
        {"dRb", 1, 1, Family::rightDifferential},
        {"dRd", 0, 1, Family::rightDifferential},
        {"dRa", 0, 1, Family::rightDifferential},
        {"pLg", 1, 0, Family::leftDerivative},
        {"pLb", 1, 0, Family::leftDerivative},
        {"pLd", 0, 0, Family::leftDerivative},
        {"pLa", 0, 0, Family::leftDerivative},
        {"g", 1, 0, Family::matrix},
        {"b", 1, 0, Family::matrix},
        {"di", 0, 0, Family::inverseUnit},
        {"d", 0, 0, Family::matrix},
        {"ai", 0, 0, Family::inverseUnit},
        {"a", 0, 0, Family::matrix},
        {"pg", 1, 0, Family::rightDerivative},
        {"pb", 1, 0, Family::rightDerivative},
        {"pd", 0, 0, Family::rightDerivative},
        {"pa", 0, 0, Family::rightDerivative},
        {"dLg", 1, 1, Family::leftDifferential},
        {"dLb", 1, 1, Family::leftDifferential},
        {"dLd", 0, 1, Family::leftDifferential},
        {"dLa", 0, 1, Family::leftDifferential},
        {"th1", 0, 1, Family::leftOneForm},
        {"th2", 0, 1, Family::leftOneForm},
        {"u1", 1, 1, Family::leftOneForm},
        {"u2", 1, 1, Family::leftOneForm},
        {"w1", 0, 1, Family::rightOneForm},
        {"w2", 0, 1, Family::rightOneForm},
        {"v1", 1, 1, Family::rightOneForm},
        {"v2", 1, 1, Family::rightOneForm},
        {"T1", 0, 0, Family::vectorField},
        {"T2", 0, 0, Family::vectorField},
        {"Np", 1, 0, Family::vectorField},
        {"Nm", 1, 0, Family::vectorField},
        {"TL1", 0, 0, Family::vectorField},
        {"TL2", 0, 0, Family::vectorField},
        {"NLp", 1, 0, Family::vectorField},
        {"NLm", 1, 0, Family::vectorField},
        {"y", 0, 0, Family::planeCoordinate},
        {"ph", 1, 0, Family::planeCoordinate},
        {"th", 1, 0, Family::planeCoordinate},
        {"x", 0, 0, Family::planeCoordinate},
    }};
    return table[static_cast<std::size_t>(g)];
}

inline int rank(Gen g) { return static_cast<int>(g); }
inline std::string_view name(Gen g) { return info(g).symbol; }

// Total Z2-grade entering every sign rule.
inline int grade(Gen g) { return (info(g).parity + info(g).formDegree) & 1; }
inline int form_degree(Gen g) { return info(g).formDegree; }

inline std::optional<Gen> gen_by_name(std::string_view s) {
    for (std::size_t i = 0; i < kGenCount; ++i) {
        Gen g = static_cast<Gen>(i);
        if (info(g).symbol == s) return g;
    }
    return std::nullopt;
}

// Partner maps for the invertible diagonal elements.
inline std::optional<Gen> inverse_of(Gen g) {
    switch (g) {
        case Gen::a: return Gen::ai;
        case Gen::d: return Gen::di;
        case Gen::ai: return Gen::a;
        case Gen::di: return Gen::d;
        default: return std::nullopt;
    }
}

inline bool is_inverse_unit(Gen g) { return g == Gen::ai || g == Gen::di; }

}  // namespace glpq
