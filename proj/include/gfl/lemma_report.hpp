#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfl/obstruction.hpp"

namespace gfl {

enum class CheckStatus { Pass, Fail, Skip };

struct LemmaCheck {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct LemmaReport {
    long m = 0, k = 0;
    Rational a;
    std::vector<LemmaCheck> checks;
    std::optional<long> s_cardinality;  // #S at the right interval endpoint

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

/// Runs every exact identity the certified families rest on, at the given
/// a (default: the interval center 1/(2m+1)).  Failing checks carry a
/// counterexample in `detail`.
LemmaReport lemma_report(long m, long k, const std::optional<Rational>& a = std::nullopt);

std::string render_text(const LemmaReport& report);

}  // namespace gfl
