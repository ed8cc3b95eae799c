#pragma once

// The derived relation catalog. Everything here is a verification target:
// each relation is recomputed from the axiom rule sets and the composite
// dictionaries, never used as a rewrite input. Table tags follow the shipped
// catalog numbering.

#include "glpq/calculus.hpp"

#include <vector>

namespace glpq {

struct Relation {
    const char* id;
    const char* lhs;
    const char* rhs;
};

struct BuiltRelation {
    std::string id;
    std::string display;
    Element lhs, rhs;
};

inline std::vector<BuiltRelation> build_relations(const std::vector<Relation>& raw,
                                                  const Parser::SymbolTable* syms = nullptr,
                                                  const std::map<Gen, Element>* expansion = nullptr) {
    std::vector<BuiltRelation> out;
    out.reserve(raw.size());
    for (const auto& r : raw) {
        Element l = parse(r.lhs, syms);
        Element rr = parse(r.rhs, syms);
        if (expansion) {
            l = expand(l, *expansion);
            rr = expand(rr, *expansion);
        }
        out.push_back({r.id, std::string(r.lhs) + " = " + r.rhs, std::move(l), std::move(rr)});
    }
    return out;
}

// T vs T^-1 commutation relations.
inline const std::vector<Relation>& table_31() {
    static const std::vector<Relation> t = {
        {"(31).1", "a*A", "p*q*A*a + 1 - p*q"},
        {"(31).2", "d*A", "A*d"},
        {"(31).3", "a*D", "D*a"},
        {"(31).4", "d*D", "p*q*D*d + 1 - p*q"},
        {"(31).5", "a*B", "q*B*a"},
        {"(31).6", "d*B", "q*B*d"},
        {"(31).7", "a*C", "p*C*a"},
        {"(31).8", "d*C", "p*C*d"},
        {"(31).9", "b*A", "q*A*b"},
        {"(31).10", "g*A", "p*A*g"},
        {"(31).11", "b*D", "q*D*b"},
        {"(31).12", "g*D", "p*D*g"},
        {"(31).13", "b*B", "B*b"},
        {"(31).14", "g*B", "-p*q*B*g"},
        {"(31).15", "b*C", "-p*q*C*b"},
        {"(31).16", "g*C", "C*g"},
    };
    return t;
}

// T vs Omega_L commutation relations.
inline const std::vector<Relation>& table_32() {
    static const std::vector<Relation> t = {
        {"(32).1", "th1*a", "p*q*a*th1 + (p*q - 1)*b*u2"},
        {"(32).2", "th1*b", "-b*th1 + (1 - p*q)*a*u1 - p^-1*q^-1*(p*q - 1)^2*b*th2"},
        {"(32).3", "th1*g", "-p*q*g*th1 + (1 - p*q)*d*u2"},
        {"(32).4", "th1*d", "d*th1 + (p*q - 1)*g*u1 + p^-1*q^-1*(p*q - 1)^2*d*th2"},
        {"(32).5", "u1*a", "p*a*u1 + (p - q^-1)*b*th2"},
        {"(32).6", "u1*b", "q^-1*b*u1"},
        {"(32).7", "u1*d", "q^-1*d*u1"},
        {"(32).8", "u1*g", "p*g*u1 + (p - q^-1)*d*th2"},
        {"(32).9", "u2*a", "q*a*u2"},
        {"(32).10", "u2*g", "q*g*u2"},
        {"(32).11", "u2*b", "p^-1*b*u2 + (p^-1 - q)*a*th2"},
        {"(32).12", "u2*d", "p^-1*d*u2 + (p^-1 - q)*g*th2"},
        {"(32).13", "th2*a", "a*th2"},
        {"(32).14", "th2*b", "-p^-1*q^-1*b*th2"},
        {"(32).15", "th2*g", "-g*th2"},
        {"(32).16", "th2*d", "p^-1*q^-1*d*th2"},
    };
    return t;
}

// T^-1 vs left differentials.
inline const std::vector<Relation>& table_33() {
    static const std::vector<Relation> t = {
        {"(33).1", "dLa*A",
         "p^-1*q^-1*A*dLa + (p^-1*q^-1 - 1)*B*dLg - (p^-1*q^-1 - 1)*C*dLb"
         " + (p^-1*q^-1 - 1)*(p*q - 1)*D*dLd"},
        {"(33).2", "dLa*B", "-p^-1*B*dLa + (q - p^-1)*D*dLb"},
        {"(33).3", "dLa*C", "-q^-1*C*dLa + (p - q^-1)*D*dLg"},
        {"(33).4", "dLa*D", "D*dLa"},
        {"(33).5", "dLb*A", "p^-1*A*dLb + (p^-1 - q)*B*dLd"},
        {"(33).6", "dLb*B", "q*p^-1*B*dLb"},
        {"(33).7", "dLb*D", "q*D*dLb"},
        {"(33).8", "dLb*C", "C*dLb + (1 - p*q)*D*dLd"},
        {"(33).9", "dLg*A", "q^-1*A*dLg + (q^-1 - p)*C*dLd"},
        {"(33).10", "dLg*B", "B*dLg + (1 - p*q)*D*dLd"},
        {"(33).11", "dLg*C", "p*q^-1*C*dLg"},
        {"(33).12", "dLg*D", "p*D*dLg"},
        {"(33).13", "dLd*A", "A*dLd"},
        {"(33).14", "dLd*B", "-q*B*dLd"},
        {"(33).15", "dLd*C", "-p*C*dLd"},
        {"(33).16", "dLd*D", "p*q*D*dLd"},
    };
    return t;
}

// Omega_L vs left differentials.
inline const std::vector<Relation>& table_34() {
    static const std::vector<Relation> t = {
        {"(34).1", "th1*dLa", "-dLa*th1 + (1 - p^-1*q^-1)*dLb*u2"},
        {"(34).2", "th1*dLd", "-dLd*th1"},
        {"(34).3", "th1*dLb", "dLb*th1"},
        {"(34).4", "th1*dLg", "dLg*th1 + (p^-1*q^-1 - 1)*dLd*u2"},
        {"(34).5", "u1*dLa", "q^-1*dLa*u1 + (p - q^-1)*dLb*th1 - (p - q^-1)*dLb*th2"},
        {"(34).6", "u1*dLb", "p*dLb*u1"},
        {"(34).7", "u1*dLd", "p*dLd*u1"},
        {"(34).8", "u1*dLg", "p*dLg*u1 + (p - q^-1)*dLd*th1 - (p - q^-1)*dLd*th2"},
        {"(34).9", "u2*dLa", "p^-1*dLa*u2"},
        {"(34).10", "u2*dLb", "p^-1*dLb*u2"},
        {"(34).11", "u2*dLg", "p^-1*dLg*u2"},
        {"(34).12", "u2*dLd", "p^-1*dLd*u2"},
        {"(34).13", "th2*dLa", "-dLa*th2 + (1 - p^-1*q^-1)*dLb*u2"},
        {"(34).14", "th2*dLg", "dLg*th2 + (p^-1*q^-1 - 1)*dLd*u2"},
        {"(34).15", "th2*dLb", "dLb*th2"},
        {"(34).16", "th2*dLd", "-dLd*th2"},
    };
    return t;
}

// Relations among the left Cartan-Maurer forms.
inline const std::vector<Relation>& table_35() {
    static const std::vector<Relation> t = {
        {"(35).1", "u1*th1", "p*q*th1*u1 + (1 - p*q)*th2*u1"},
        {"(35).2", "u1*th2", "th2*u1"},
        {"(35).3", "th1*u2", "p*q*u2*th1 + (1 - p*q)*u2*th2"},
        {"(35).4", "u2*th2", "th2*u2"},
        {"(35).5", "th1^2", "(p*q - 1)*u2*u1"},
        {"(35).6", "th2^2", "0"},
        {"(35).7", "u1*u2", "p*q*u2*u1"},
        {"(35).8", "th1*th2 + th2*th1", "(p*q - 1)*u2*u1"},
    };
    return t;
}

// T vs Omega_R.
inline const std::vector<Relation>& table_50() {
    static const std::vector<Relation> t = {
        {"(50).1", "a*w1", "p*q*w1*a"},
        {"(50).2", "a*v1", "q*v1*a"},
        {"(50).3", "a*v2", "p*v2*a + (p - q^-1)*w1*g"},
        {"(50).4", "a*w2", "w2*a + p*q^-1*(q - p^-1)^2*w1*a + (p^-1*q^-1 - 1)*v1*g"},
        {"(50).5", "b*w1", "-p*q*w1*b"},
        {"(50).6", "b*v1", "q*v1*b"},
        {"(50).7", "b*v2", "p*v2*b + (p - q^-1)*w1*d"},
        {"(50).8", "b*w2", "-w2*b - p*q^-1*(q - p^-1)^2*w1*b + (1 - p^-1*q^-1)*v1*d"},
        {"(50).9", "g*w1", "-w1*g"},
        {"(50).10", "g*v1", "p^-1*v1*g + (p^-1 - q)*w1*a"},
        {"(50).11", "g*v2", "q^-1*v2*g"},
        {"(50).12", "g*w2", "-p^-1*q^-1*w2*g + (1 - p^-1*q^-1)*v2*a"},
        {"(50).13", "d*w1", "w1*d"},
        {"(50).14", "d*v2", "q^-1*v2*d"},
        {"(50).15", "d*v1", "p^-1*v1*d + (p^-1 - q)*w1*b"},
        {"(50).16", "d*w2", "p^-1*q^-1*w2*d + (p^-1*q^-1 - 1)*v2*b"},
    };
    return t;
}

// T^-1 vs right differentials.
inline const std::vector<Relation>& table_51() {
    static const std::vector<Relation> t = {
        {"(51).1", "A*dRa", "p^-1*q^-1*dRa*A"},
        {"(51).2", "A*dRd", "dRd*A"},
        {"(51).3", "A*dRb", "q^-1*dRb*A"},
        {"(51).4", "A*dRg", "p^-1*dRg*A"},
        {"(51).5", "D*dRa", "dRa*D"},
        {"(51).6", "D*dRd",
         "p*q*dRd*D + (1 - p*q)*dRb*C - (1 - p*q)*dRg*B"
         " + (1 - p*q)*(1 - p^-1*q^-1)*dRa*A"},
        {"(51).7", "D*dRb", "p*dRb*D + (p - q^-1)*dRa*B"},
        {"(51).8", "D*dRg", "q*dRg*D + (p - p^-1)*dRa*C"},
        {"(51).9", "B*dRa", "-q^-1*dRa*B"},
        {"(51).10", "B*dRg", "dRg*B + (p^-1*q^-1 - 1)*dRa*A"},
        {"(51).11", "B*dRb", "p*q^-1*dRb*B"},
        {"(51).12", "B*dRd", "-p*dRd*B + (q^-1 - p)*dRb*A"},
        {"(51).13", "C*dRa", "-p^-1*dRa*C"},
        {"(51).14", "C*dRb", "dRb*C + (1 - p^-1*q^-1)*dRa*A"},
        {"(51).15", "C*dRg", "q*p^-1*dRg*C"},
        {"(51).16", "C*dRd", "-q*dRd*C + (p^-1 - q)*dRg*A"},
    };
    return t;
}

// Omega_R vs right differentials.
inline const std::vector<Relation>& table_52() {
    static const std::vector<Relation> t = {
        {"(52).1", "w1*dRa", "-dRa*w1"},
        {"(52).2", "w1*dRg", "dRg*w1"},
        {"(52).3", "w1*dRb", "dRb*w1 + (1 - p^-1*q^-1)*dRa*v1"},
        {"(52).4", "w1*dRd", "-dRd*w1 + (p^-1*q^-1 - 1)*dRg*v1"},
        {"(52).5", "v1*dRa", "q^-1*dRa*v1"},
        {"(52).6", "v1*dRb", "q^-1*dRb*v1"},
        {"(52).7", "v1*dRg", "q^-1*dRg*v1"},
        {"(52).8", "v1*dRd", "q^-1*dRd*v1"},
        {"(52).9", "v2*dRa", "q*dRa*v2"},
        {"(52).10", "v2*dRg", "q*dRg*v2"},
        {"(52).11", "v2*dRb", "q*dRb*v2 + (q - p^-1)*dRa*w2 - (q - p^-1)*dRa*w1"},
        {"(52).12", "v2*dRd", "q*dRd*v2 + (q - p^-1)*dRg*w1"},
        {"(52).13", "w2*dRa", "-dRa*w2"},
        {"(52).14", "w2*dRb", "dRb*w2 + (1 - p^-1*q^-1)*dRa*v1"},
        {"(52).15", "w2*dRg", "dRg*w2 + p^-1*q^-1*(p*q - 1)^2*dRg*w1"},
        {"(52).16", "w2*dRd",
         "-p*q*dRd*w2 + (p*q - 1)*dRd*w1 + p^-1*q^-1*(p*q - 1)^2*dRg*v1"},
    };
    return t;
}

// Relations among the right Cartan-Maurer forms.
inline const std::vector<Relation>& table_53() {
    static const std::vector<Relation> t = {
        {"(53).1", "w1*v1", "v1*w1"},
        {"(53).2", "v1*w2", "p*q*w2*v1 + (1 - p*q)*v1*w1"},
        {"(53).3", "w1*v2", "v2*w1"},
        {"(53).4", "w2*v2", "p*q*v2*w2 + (1 - p*q)*w1*v2"},
        {"(53).5", "w1^2", "0"},
        {"(53).6", "w2^2", "(1 - p*q)*v2*v1"},
        {"(53).7", "v1*v2", "p*q*v2*v1"},
        {"(53).8", "w1*w2 + w2*w1", "(1 - p*q)*v2*v1"},
    };
    return t;
}

// Quantum Lie superalgebra, left generators.
inline const std::vector<Relation>& table_42() {
    static const std::vector<Relation> t = {
        {"(42).1", "TL1*NLp - NLp*TL1", "-NLp + (1 - p*q)*TL1*NLp"},
        {"(42).2", "TL2*NLp - NLp*TL2", "NLp - (1 - p*q)*TL1*NLp"},
        {"(42).3", "TL1*NLm - NLm*TL1", "NLm - (1 - p*q)*NLm*TL1"},
        {"(42).4", "TL2*NLm - NLm*TL2", "-NLm + (1 - p*q)*NLm*TL1"},
        {"(42).5", "NLp*NLm + p*q*NLm*NLp", "TL1 + TL2 + (1 - p*q)*TL1*(TL1 - TL2)"},
        {"(42).6", "TL1*TL2 - TL2*TL1", "0"},
        {"(42).7", "NLp^2", "0"},
        {"(42).8", "NLm^2", "0"},
    };
    return t;
}

// Same algebra in the basis XL = TL1 + TL2, YL = TL1 - TL2.
inline const std::vector<Relation>& table_43() {
    static const std::vector<Relation> t = {
        {"(43).1", "XL*NLp - NLp*XL", "0"},
        {"(43).2", "XL*NLm - NLm*XL", "0"},
        {"(43).3", "XL*YL - YL*XL", "0"},
        {"(43).4", "NLp^2", "0"},
        {"(43).5", "NLm^2", "0"},
        {"(43).6", "YL*NLp - NLp*YL", "-2*NLp + (1 - p*q)*(XL + YL)*NLp"},
        {"(43).7", "YL*NLm - NLm*YL", "2*NLm - (1 - p*q)*NLm*(XL + YL)"},
        {"(43).8", "NLp*NLm + p*q*NLm*NLp", "XL + 1/2*(1 - p*q)*(XL + YL)*YL"},
    };
    return t;
}

// Left generators vs matrix elements.
inline const std::vector<Relation>& table_45() {
    static const std::vector<Relation> t = {
        {"(45).1", "a*TL1", "a + p*q*TL1*a"},
        {"(45).2", "a*NLp", "p*NLp*a"},
        {"(45).3", "a*TL2", "TL2*a + (p - q^-1)*NLp*b"},
        {"(45).4", "a*NLm", "b + q*NLm*a + (p*q - 1)*TL1*b"},
        {"(45).5", "b*TL1", "TL1*b"},
        {"(45).6", "b*NLm", "-p^-1*NLm*b"},
        {"(45).7", "b*TL2",
         "b + p^-1*q^-1*TL2*b + (q - p^-1)*NLm*a + (q - p^-1)*(p - q^-1)*TL1*b"},
        {"(45).8", "b*NLp", "a - q^-1*NLp*b + (p*q - 1)*TL1*a"},
        {"(45).9", "g*TL1", "g + p*q*TL1*g"},
        {"(45).10", "g*NLp", "-p*NLp*g"},
        {"(45).11", "g*TL2", "TL2*g + (q^-1 - p)*NLp*d"},
        {"(45).12", "g*NLm", "d - q*NLm*g + (p*q - 1)*TL1*d"},
        {"(45).13", "d*TL1", "TL1*d"},
        {"(45).14", "d*NLm", "p^-1*NLm*d"},
        {"(45).15", "d*TL2",
         "d + p^-1*q^-1*TL2*d + (q - p^-1)*(p - q^-1)*TL1*d - (q - p^-1)*NLm*g"},
        {"(45).16", "d*NLp", "g + q^-1*NLp*d + (p*q - 1)*TL1*g"},
    };
    return t;
}

// Quantum Lie superalgebra, right generators.
inline const std::vector<Relation>& table_60() {
    static const std::vector<Relation> t = {
        {"(60).1", "T1*Np - Np*T1", "-p*q*Np + (p*q - 1)*T2*Np"},
        {"(60).2", "T2*Np - Np*T2", "p*q*Np - (p*q - 1)*T2*Np"},
        {"(60).3", "T1*Nm - Nm*T1", "p*q*Nm - (p*q - 1)*Nm*T2"},
        {"(60).4", "T2*Nm - Nm*T2", "-p*q*Nm + (p*q - 1)*Nm*T2"},
        {"(60).5", "T1*T2 - T2*T1", "0"},
        {"(60).6", "Np^2", "0"},
        {"(60).7", "Nm^2", "0"},
        {"(60).8", "Nm*Np + p^-1*q^-1*Np*Nm",
         "T1 + T2 + (p^-1*q^-1 - 1)*(T2*T2 + T1*T2)"},
    };
    return t;
}

// Same algebra in the basis X = T1 + T2, Y = T1 - T2.
inline const std::vector<Relation>& table_61() {
    static const std::vector<Relation> t = {
        {"(61).1", "X*Np - Np*X", "0"},
        {"(61).2", "X*Nm - Nm*X", "0"},
        {"(61).3", "X*Y - Y*X", "0"},
        {"(61).4", "Np^2", "0"},
        {"(61).5", "Nm^2", "0"},
        {"(61).6", "Y*Np - Np*Y", "-2*p*q*Np + (p*q - 1)*(X - Y)*Np"},
        {"(61).7", "Y*Nm - Nm*Y", "2*p*q*Nm - (p*q - 1)*Nm*(X - Y)"},
        {"(61).8", "Np*Nm + p*q*Nm*Np", "p*q*X + 1/2*(1 - p*q)*(X*X - X*Y)"},
    };
    return t;
}

// Right generators vs matrix elements.
inline const std::vector<Relation>& table_63() {
    static const std::vector<Relation> t = {
        {"(63).1", "T1*a", "a + p*q*a*T1 + (p - q^-1)*(q - p^-1)*a*T2 + (p - q^-1)*g*Nm"},
        {"(63).2", "T1*b", "b + p*q*b*T1 + (p - q^-1)*(q - p^-1)*b*T2 - (p - q^-1)*d*Nm"},
        {"(63).3", "T1*g", "g*T1 + (p^-1 - q)*a*Np"},
        {"(63).4", "T1*d", "d*T1 + (p^-1 - q)*b*Np"},
        {"(63).5", "T2*a", "a*T2"},
        {"(63).6", "T2*g", "g + p^-1*q^-1*g*T2"},
        {"(63).7", "T2*b", "b*T2"},
        {"(63).8", "T2*d", "d + p^-1*q^-1*d*T2"},
        {"(63).9", "Np*a", "g + q*a*Np + (p^-1*q^-1 - 1)*g*T2"},
        {"(63).10", "Np*b", "d - q*b*Np + (p^-1*q^-1 - 1)*d*T2"},
        {"(63).11", "Np*g", "-p^-1*g*Np"},
        {"(63).12", "Np*d", "p^-1*d*Np"},
        {"(63).13", "Nm*a", "p*a*Nm"},
        {"(63).14", "Nm*b", "-p*b*Nm"},
        {"(63).15", "Nm*g", "a - q^-1*g*Nm + (p^-1*q^-1 - 1)*a*T2"},
        {"(63).16", "Nm*d", "b + q^-1*d*Nm + (p^-1*q^-1 - 1)*b*T2"},
    };
    return t;
}

// Nilpotency consistency identities quoted alongside (45) and (63).
inline const std::vector<Relation>& table_nilpotency_consistency() {
    static const std::vector<Relation> t = {
        {"(nil).L+", "NLp*NLp*a", "p^-2*a*NLp*NLp"},
        {"(nil).L-", "NLm*NLm*a", "q^-2*a*NLm*NLm"},
        {"(nil).R-", "Nm*Nm*a", "p^2*a*Nm*Nm"},
        {"(nil).R+", "Np*Np*a", "q^2*a*Np*Np"},
    };
    return t;
}

// Printed coinverse table for the left differentials; the recomputation from
// the defining property decides which printed lines are sound.
inline const std::vector<Relation>& table_27() {
    static const std::vector<Relation> t = {
        {"(27).1", "Shat(dLa)", "(-A*dLa + B*dLg)*A - (A*dLb - B*dLd)*C"},
        {"(27).2", "Shat(dLb)", "(-A*dLa + B*dLg)*A - (A*dLb - B*dLd)*D"},
        {"(27).3", "Shat(dLg)", "(C*dLa - D*dLg)*A + (C*dLb - D*dLd)*C"},
        {"(27).4", "Shat(dLd)", "(C*dLa - D*dLg)*B + (C*dLb - D*dLd)*D"},
    };
    return t;
}

}  // namespace glpq
