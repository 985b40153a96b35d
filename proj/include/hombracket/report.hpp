#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hombracket {

/// Where a condition failed: the lexicographically least failing basis tuple
/// (1-based indices) plus the residual, printed in canonical form.
struct Witness {
    std::vector<int> args;
    std::vector<std::string> residual;
    std::string note;
};

struct Condition {
    std::string name;
    bool passed = true;
    std::optional<Witness> witness;
};

/// Deterministic result of one named check. The machine-readable form is a
/// stable schema and never contains timing; elapsed_ms is shown in the text
/// rendering only.
struct Report {
    std::string check;
    std::vector<Condition> conditions;
    std::optional<uint64_t> seed;
    double elapsed_ms = 0.0;

    bool passed() const {
        for (const auto& c : conditions)
            if (!c.passed)
                return false;
        return true;
    }

    void add_pass(const std::string& name) { conditions.push_back({name, true, std::nullopt}); }
    void add_fail(const std::string& name, Witness w) { conditions.push_back({name, false, std::move(w)}); }
    void add(const std::string& name, bool ok, std::optional<Witness> w = std::nullopt) {
        conditions.push_back({name, ok, ok ? std::nullopt : std::move(w)});
    }

    nlohmann::json to_json() const;
    std::string to_text() const;
};

} // namespace hombracket
