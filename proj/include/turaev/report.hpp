#pragma once

#include <optional>
#include <string>
#include <vector>

namespace turaev {

/// Concrete counterexample: which identity broke, at which grades and basis
/// indices, and the two sides' values. Re-evaluating the identity at these
/// coordinates must reproduce lhs != rhs.
struct Counterexample {
    std::string identity;
    std::vector<int> grades;
    std::vector<int> basis;
    std::string where; // human-readable coordinates with grade names
    std::string lhs, rhs;
};

struct LawReport {
    std::string law;
    bool pass = true;
    long checked = 0; // identity instances evaluated
    std::optional<Counterexample> counterexample;
    std::vector<LawReport> sub;
    std::vector<std::string> notes;

    void absorb(LawReport r) {
        checked += r.checked;
        if (!r.pass && pass) {
            pass = false;
            if (!counterexample) counterexample = r.counterexample;
        }
        sub.push_back(std::move(r));
    }

    void note(std::string s) { notes.push_back(std::move(s)); }

    std::string to_text(int indent = 0) const {
        std::string pad(static_cast<size_t>(indent), ' ');
        std::string s = pad + "law " + law + ": " + (pass ? "PASS" : "FAIL") +
                        " (checked " + std::to_string(checked) + ")\n";
        for (const auto& n : notes) s += pad + "  note: " + n + "\n";
        if (counterexample) {
            const auto& c = *counterexample;
            s += pad + "  counterexample in " + c.identity + " at " + c.where + "\n";
            s += pad + "    lhs = " + c.lhs + "\n";
            s += pad + "    rhs = " + c.rhs + "\n";
        }
        for (const auto& r : sub) s += r.to_text(indent + 2);
        return s;
    }
};

} // namespace turaev
