#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dimlaw/pi.hpp"

namespace dimlaw {

/// A bundled problem with its known solution and the named power-law
/// specializations that are worth having presets for.
struct CaseStudy {
    struct Preset {
        std::string name;
        Rational p;  // exponent applied to the canonical dimensionless group
        RatVec expected_exponents;
    };

    struct DerivedMonomial {
        std::string name;
        RatVec exponents;
        RatVec expected_dim;  // over the problem's dimensions
    };

    /// Another (y, kernel) representative of the same solution family.
    struct AltForm {
        std::string label;
        RatVec y;
        std::vector<RatVec> kernel;
    };

    std::string name;
    std::string summary;
    std::string problem_text;
    RatVec expected_y;
    std::vector<RatVec> expected_kernel;
    std::size_t expected_k = 0;
    std::vector<Preset> presets;
    std::vector<DerivedMonomial> derived_monomials;
    std::vector<AltForm> equivalent_forms;
};

const std::vector<CaseStudy>& case_studies();
const CaseStudy& case_study(std::string_view name);  // throws Error when unknown

struct StudyCheck {
    std::string label;
    bool passed;
    std::string detail;  // empty when passed
};

/// Re-derives everything about one study and cross-checks the stored
/// expectations by direct exact multiplication (B y = a, B x = 0); nothing
/// stored is trusted as-is.
std::vector<StudyCheck> verify_case_study(const CaseStudy& study);

bool all_passed(const std::vector<StudyCheck>& checks);

}  // namespace dimlaw
