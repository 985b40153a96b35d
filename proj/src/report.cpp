#include "hombracket/report.hpp"

#include <sstream>

namespace hombracket {

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["passed"] = passed();
    if (seed)
        j["seed"] = *seed;
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : conditions) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        if (c.witness) {
            nlohmann::json w;
            w["args"] = c.witness->args;
            w["residual"] = c.witness->residual;
            if (!c.witness->note.empty())
                w["note"] = c.witness->note;
            jc["witness"] = w;
        }
        conds.push_back(jc);
    }
    j["conditions"] = conds;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << (passed() ? "[PASS] " : "[FAIL] ") << check;
    if (seed)
        os << " (seed " << *seed << ")";
    if (elapsed_ms > 0)
        os << " (" << elapsed_ms << " ms)";
    os << "\n";
    for (const auto& c : conditions) {
        os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << "\n";
        if (c.witness) {
            os << "       witness args:";
            for (int a : c.witness->args)
                os << " " << a;
            os << "\n       residual:";
            for (const auto& r : c.witness->residual)
                os << " " << r;
            os << "\n";
            if (!c.witness->note.empty())
                os << "       " << c.witness->note << "\n";
        }
    }
    return os.str();
}

} // namespace hombracket
