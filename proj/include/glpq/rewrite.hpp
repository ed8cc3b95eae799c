#pragma once

// Oriented rewrite rules, exhaustive normalization, bounded-degree local
// confluence auditing, and adjunction of the inverse units ai, di.

#include "glpq/element.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace glpq {

struct StepLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsolvableRule : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadRule : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultStepLimit = 1'000'000;

struct RewriteRule {
    std::string id;  // tag naming the source relation, e.g. "(2).1"
    Word lhs;        // length 1 or 2
    Element rhs;
};

inline bool word_rank_sorted(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (rank(w[i - 1]) > rank(w[i])) return false;
    return true;
}

class RuleSet {
public:
    RuleSet() = default;
    explicit RuleSet(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    // Constructor invariant: the lhs is a 1- or 2-letter word; lhs - rhs is
    // homogeneous in grade and form degree; the lhs never reappears inside
    // the rhs; every rhs word is rank-sorted or strictly shorter than the
    // lhs. A descending lhs with this discipline witnesses termination; the
    // unit rules ai*a -> 1, di*d -> 1 have an ascending lhs but strictly
    // shrink, which is just as good.
    void add(RewriteRule r) {
        if (r.lhs.empty() || r.lhs.size() > 2)
            throw BadRule(r.id + ": lhs must have length 1 or 2");
        const int lg = grade(r.lhs), lf = form_degree(r.lhs);
        bool all_shorter = true;
        for (const auto& [w, c] : r.rhs.terms()) {
            if (grade(w) != lg || form_degree(w) != lf)
                throw BadRule(r.id + ": lhs - rhs is not homogeneous");
            if (w.size() >= r.lhs.size()) {
                all_shorter = false;
                if (!word_rank_sorted(w))
                    throw BadRule(r.id + ": rhs word " + word_string(w) + " is not rank-sorted");
                if (std::search(w.begin(), w.end(), r.lhs.begin(), r.lhs.end()) != w.end())
                    throw BadRule(r.id + ": lhs appears inside rhs");
            }
        }
        if (r.lhs.size() == 2 && rank(r.lhs[0]) <= rank(r.lhs[1]) && !all_shorter)
            throw BadRule(r.id + ": ascending lhs requires a strictly shorter rhs");
        for (Gen g : r.lhs) scope_.insert(g);
        for (const auto& [w, c] : r.rhs.terms())
            for (Gen g : w) scope_.insert(g);
        index_[r.lhs[0]].push_back(rules_.size());
        rules_.push_back(std::move(r));
    }

    void add(const std::string& id, Word lhs, Element rhs) {
        add(RewriteRule{id, std::move(lhs), std::move(rhs)});
    }

    // All generators mentioned by some rule.
    const std::set<Gen>& scope() const { return scope_; }

    const RewriteRule* find_lhs(const Word& lhs) const {
        for (const auto& r : rules_)
            if (r.lhs == lhs) return &r;
        return nullptr;
    }

    // First matching rule at position pos, in id (insertion) order.
    const RewriteRule* match_at(const Word& w, std::size_t pos) const {
        auto it = index_.find(w[pos]);
        if (it == index_.end()) return nullptr;
        for (std::size_t ri : it->second) {
            const RewriteRule& r = rules_[ri];
            if (pos + r.lhs.size() > w.size()) continue;
            if (r.lhs.size() == 1 || w[pos + 1] == r.lhs[1]) return &r;
        }
        return nullptr;
    }

    // Every (position, rule) redex of a word, in scan order.
    std::vector<std::pair<std::size_t, const RewriteRule*>> redexes(const Word& w) const {
        std::vector<std::pair<std::size_t, const RewriteRule*>> out;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            auto it = index_.find(w[pos]);
            if (it == index_.end()) continue;
            for (std::size_t ri : it->second) {
                const RewriteRule& r = rules_[ri];
                if (pos + r.lhs.size() > w.size()) continue;
                if (r.lhs.size() == 1 || w[pos + 1] == r.lhs[1]) out.push_back({pos, &r});
            }
        }
        return out;
    }

    RuleSet merged(const RuleSet& other, const std::string& new_name) const {
        RuleSet out(new_name);
        for (const auto& r : rules_) out.add(r);
        for (const auto& r : other.rules()) out.add(r);
        return out;
    }

private:
    std::string name_;
    std::vector<RewriteRule> rules_;
    std::map<Gen, std::vector<std::size_t>> index_;
    std::set<Gen> scope_;
};

inline Element rewrite_once(const Word& w, std::size_t pos, const Word& lhs, const Element& rhs,
                            const Scalar& coeff) {
    Element out;
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + lhs.size(), w.end());
    for (const auto& [rw, rc] : rhs.terms()) {
        Word nw = prefix;
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        out.add(nw, coeff * rc);
    }
    return out;
}

inline Element rewrite_once(const Word& w, std::size_t pos, const RewriteRule& rule,
                            const Scalar& coeff) {
    return rewrite_once(w, pos, rule.lhs, rule.rhs, coeff);
}

// Exhaustive normalization: leftmost redex, first matching rule in id order.
// Deterministic and idempotent; overrunning the step limit is a hard error.
inline Element normalize(const Element& e, const RuleSet& rs, long step_limit = kDefaultStepLimit) {
    Element out;
    std::vector<std::pair<Word, Scalar>> work(e.terms().begin(), e.terms().end());
    long steps = 0;
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        const RewriteRule* rule = nullptr;
        std::size_t pos = 0;
        for (; pos < w.size(); ++pos) {
            rule = rs.match_at(w, pos);
            if (rule) break;
        }
        if (!rule) {
            out.add(w, c);
            continue;
        }
        if (++steps > step_limit)
            throw StepLimitExceeded("step limit " + std::to_string(step_limit) +
                                    " exceeded in rule set " + rs.name());
        Element replaced = rewrite_once(w, pos, *rule, c);
        for (const auto& [nw, nc] : replaced.terms()) work.push_back({nw, nc});
    }
    return out;
}

inline Element normalize_mul(const Element& x, const Element& y, const RuleSet& rs,
                             long step_limit = kDefaultStepLimit) {
    return normalize(mul(x, y), rs, step_limit);
}

struct Overlap {
    Word word;
    std::string rule1, rule2;
    Element residual;
};

struct ConfluenceReport {
    std::string rule_set;
    int max_len = 0;
    std::size_t overlaps = 0;
    std::vector<Overlap> entries;  // every overlap, residual included
    bool confluent = true;
};

// Diamond-lemma style local-confluence audit: every word up to max_len over
// the rule set's scope that two overlapping redexes can reduce is pushed down
// both ways; zero residual everywhere certifies local confluence.
inline ConfluenceReport critical_pairs(const RuleSet& rs, int max_len,
                                       long step_limit = kDefaultStepLimit) {
    if (max_len < 3) throw std::invalid_argument("critical_pairs requires maxLen >= 3");
    ConfluenceReport rep;
    rep.rule_set = rs.name();
    rep.max_len = max_len;
    std::vector<Gen> alphabet(rs.scope().begin(), rs.scope().end());
    Word w;
    auto visit = [&](auto&& self) -> void {
        if (w.size() >= 2) {
            auto rx = rs.redexes(w);
            for (std::size_t i = 0; i < rx.size(); ++i)
                for (std::size_t j = i + 1; j < rx.size(); ++j) {
                    auto [p1, r1] = rx[i];
                    auto [p2, r2] = rx[j];
                    // overlapping ranges only; disjoint redexes commute trivially
                    if (p1 + r1->lhs.size() <= p2 || p2 + r2->lhs.size() <= p1) continue;
                    Element a, b;
                    try {
                        a = normalize(rewrite_once(w, p1, *r1, Scalar(1)), rs, step_limit);
                        b = normalize(rewrite_once(w, p2, *r2, Scalar(1)), rs, step_limit);
                    } catch (const StepLimitExceeded& ex) {
                        throw StepLimitExceeded(std::string(ex.what()) + " at overlap " +
                                                word_string(w));
                    }
                    ++rep.overlaps;
                    Element residual = a - b;
                    if (!residual.is_zero()) rep.confluent = false;
                    rep.entries.push_back({w, r1->id, r2->id, residual});
                }
        }
        if (static_cast<int>(w.size()) == max_len) return;
        for (Gen g : alphabet) {
            w.push_back(g);
            self(self);
            w.pop_back();
        }
    };
    visit(visit);
    return rep;
}

// Adjoins the inverse units of the invertible generators: the unit rules plus
// every commutation rule the rank order demands. Each commutation rule is
// obtained by formally solving an existing rule of the set: multiply by the
// inverse on both sides, cancel the adjacent unit pair, and normalize what
// remains. Rules whose tails mention the pair under construction are closed
// by substituting the candidate into itself until it stabilizes (the odd
// square-zero relations cut the recursion off).
inline RuleSet complete_inverses(const RuleSet& rs,
                                 const std::vector<Gen>& invertibles = {Gen::a, Gen::d},
                                 long step_limit = kDefaultStepLimit) {
    RuleSet out = rs;
    out.set_name(rs.name() + "+inv");
    for (Gen y : invertibles) {
        Gen yi = *inverse_of(y);
        out.add("inv.unit." + std::string(name(y)) + "." + std::string(name(yi)), Word{y, yi},
                Element::unit());
        out.add("inv.unit." + std::string(name(yi)) + "." + std::string(name(y)), Word{yi, y},
                Element::unit());
    }

    struct Target {
        Gen u, v;  // candidate lhs u v with rank(u) > rank(v)
    };
    std::vector<Target> targets;
    std::set<Gen> gens = rs.scope();
    std::set<Gen> inv_set;
    for (Gen y : invertibles) {
        gens.insert(*inverse_of(y));
        inv_set.insert(*inverse_of(y));
    }
    for (Gen yi : inv_set) {
        Gen y = *inverse_of(yi);
        for (Gen x : gens) {
            if (x == y || x == yi) continue;
            Gen u = rank(x) > rank(yi) ? x : yi;
            Gen v = rank(x) > rank(yi) ? yi : x;
            targets.push_back({u, v});
        }
    }
    std::sort(targets.begin(), targets.end(), [](const Target& a, const Target& b) {
        if (a.u != b.u) return rank(a.u) < rank(b.u);
        return rank(a.v) < rank(b.v);
    });
    targets.erase(std::unique(targets.begin(), targets.end(),
                              [](const Target& a, const Target& b) {
                                  return a.u == b.u && a.v == b.v;
                              }),
                  targets.end());

    auto fully_sorted = [](const Element& e) {
        for (const auto& [w, c] : e.terms())
            if (!word_rank_sorted(w)) return false;
        return true;
    };
    auto conjugate = [](Gen yi, const Element& mid) {
        return mul(Element(Word{yi}), mul(mid, Element(Word{yi})));
    };

    std::vector<Target> pending = targets;
    bool progress = true;
    while (!pending.empty() && progress) {
        progress = false;
        std::vector<Target> next;
        for (const Target& t : pending) {
            const Word target{t.u, t.v};
            // One of u, v is an inverse unit yi; conjugating by yi reduces the
            // target to the pair {other, y}, which an existing rule resolves.
            const Gen yi = is_inverse_unit(t.v) ? t.v : t.u;
            const Gen y = *inverse_of(yi);
            const Gen other = is_inverse_unit(t.v) ? t.u : t.v;
            const Word want_inner =
                is_inverse_unit(t.v) ? Word{y, t.u} : Word{t.v, y};
            const RewriteRule* base = out.find_lhs(want_inner);
            const Word flipped{want_inner[1], want_inner[0]};
            const RewriteRule* base_flip = out.find_lhs(flipped);
            Element candidate;
            if (base) {
                candidate = normalize(conjugate(yi, base->rhs), out, step_limit);
            } else if (base_flip) {
                // base_flip: (flipped) -> c * (want_inner) + tail
                Scalar c;
                Element tail;
                for (const auto& [w, coeff] : base_flip->rhs.terms()) {
                    if (w == want_inner)
                        c = coeff;
                    else
                        tail.add(w, coeff);
                }
                if (c.is_zero() || !c.is_monomial()) {
                    next.push_back(t);
                    continue;
                }
                // yi (want_inner) yi = target after cancelling the unit pair:
                //   want_inner = (y, u)  =>  yi (flipped) yi = yi u (y yi) = yi u
                //   want_inner = (v, y)  =>  yi (flipped) yi = (yi y) v yi = v yi
                Word cancelled = is_inverse_unit(t.v) ? Word{yi, other} : Word{other, yi};
                Element e0 = c.inverse() * (Element(cancelled) - conjugate(yi, tail));
                candidate = normalize(e0, out, step_limit);
            } else {
                // pair untouched by the rule set (or its base not derived yet)
                bool may_come = is_inverse_unit(other);
                if (may_come)
                    next.push_back(t);
                continue;
            }
            // Close self-references by substituting the candidate into itself.
            bool ok = fully_sorted(candidate);
            for (int iter = 0; iter < 32 && !ok; ++iter) {
                Element subst;
                bool hit = false;
                for (const auto& [w, c] : candidate.terms()) {
                    auto it = std::search(w.begin(), w.end(), target.begin(), target.end());
                    if (it == w.end()) {
                        subst.add(w, c);
                    } else {
                        hit = true;
                        subst += rewrite_once(
                            w, static_cast<std::size_t>(it - w.begin()), target, candidate, c);
                    }
                }
                if (!hit) break;  // stuck on a different pair; defer
                Element reduced = normalize(subst, out, step_limit);
                ok = fully_sorted(reduced);
                if (reduced == candidate) break;
                candidate = reduced;
            }
            if (!ok) {
                next.push_back(t);
                continue;
            }
            out.add("inv." + std::string(name(t.u)) + "." + std::string(name(t.v)), target,
                    candidate);
            progress = true;
        }
        pending = std::move(next);
    }
    if (!pending.empty()) {
        std::string missing;
        for (const Target& t : pending)
            missing += " " + std::string(name(t.u)) + "*" + std::string(name(t.v));
        throw UnsolvableRule("inverse completion stuck on:" + missing);
    }
    return out;
}

}  // namespace glpq
