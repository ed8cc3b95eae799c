#pragma once

// Per-relation verdicts: recomputed value against the catalog value, with the
// exact residual. Serialized as structured text blocks and as JSON.

#include "json.hpp"

#include <string>
#include <vector>

namespace glpq {

struct CheckEntry {
    std::string id;
    std::string expected;  // catalog form
    std::string got;       // recomputed form
    std::string residual;  // normalize(expected - got), "0" on match
    bool match = false;
};

struct Report {
    std::string suite;
    std::vector<CheckEntry> entries;
    std::vector<std::string> notes;

    std::size_t mismatches() const {
        std::size_t n = 0;
        for (const auto& e : entries)
            if (!e.match) ++n;
        return n;
    }
    bool all_match() const { return mismatches() == 0; }

    void add(std::string id, std::string expected, std::string got, std::string residual) {
        bool ok = residual == "0";
        entries.push_back({std::move(id), std::move(expected), std::move(got),
                           std::move(residual), ok});
    }

    std::string to_text() const {
        std::string out = "== suite " + suite + "\n";
        for (const auto& e : entries) {
            out += e.id + "\n";
            out += "  expected: " + e.expected + "\n";
            out += "  got:      " + e.got + "\n";
            out += "  residual: " + e.residual + "\n";
            out += std::string("  verdict:  ") + (e.match ? "match" : "mismatch") + "\n";
        }
        for (const auto& n : notes) out += "note: " + n + "\n";
        out += "summary: " + std::to_string(entries.size()) + " entries, " +
               std::to_string(mismatches()) + " mismatches\n";
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["entries"] = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            j["entries"].push_back({{"id", e.id},
                                    {"expected", e.expected},
                                    {"got", e.got},
                                    {"residual", e.residual},
                                    {"verdict", e.match ? "match" : "mismatch"}});
        }
        j["notes"] = notes;
        j["summary"] = {{"entries", entries.size()}, {"mismatches", mismatches()}};
        return j;
    }
};

}  // namespace glpq
