#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cfc/cover_analysis.hpp"
#include "cfc/superset.hpp"

namespace cfc {

struct DesignAnalysisReport {
    int s = 0;
    int l = 0;
    SupersetModel model = SupersetModel::strict;
    BigInt total = 0;
    BigInt n_bad = 0;
    BigInt n_good = 0;
    Rational epsilon;
    double epsilon_value = 0.0;
    std::vector<Superset> bad_supersets;  // capped
    bool bad_overflow = false;
};

struct DesignOptions {
    std::uint64_t superset_budget = 10'000'000;
    std::size_t bad_cap = 100'000;
};

/// Groups supersets by outcome vector; a superset is bad iff its outcome
/// collides with another superset's outcome in the same family.
DesignAnalysisReport analyze_design(const BinaryCode& code, int s, int l, SupersetModel model,
                                    const DesignOptions& opt = {});

struct Prop4Report {
    // Antecedents / consequent facts (exact analyses).
    bool code_cf = false;        // CF(s,l)-code
    bool design_cf = false;      // CF(s,l)-design over the relaxed family
    bool code_s_minus_1_cf = false;
    bool code_l_minus_1_cf = false;
    // Implications.
    bool claim1_applicable = false;  // code_cf holds
    bool claim1_holds = true;        // code_cf => design_cf
    bool claim2_applicable = false;  // design_cf holds
    bool claim2_holds = true;        // design_cf => CF(s-1,l)-code and CF(s,l-1)-code
    bool s_minus_1_checked = false;
    bool l_minus_1_checked = false;

    bool violation() const {
        return (claim1_applicable && !claim1_holds) || (claim2_applicable && !claim2_holds);
    }
};

/// Evaluates both implications of the code/design hierarchy on one instance.
Prop4Report check_prop4(const BinaryCode& code, int s, int l, const DesignOptions& dopt = {},
                        const CoverOptions& copt = {});

struct ProjectionBoundReport {
    double eps_code = 0.0;
    double factor = 0.0;         // l^s
    double bound = 0.0;          // min(1, eps_code * l^s)
    std::optional<double> eps_design;  // strict-model design fraction, if computed
    bool holds = true;
};

/// Certifies eps_design <= min(1, l^s * eps_code) (projection counting).
ProjectionBoundReport projection_bad_bound(const BinaryCode& code, int s, int l,
                                           bool also_design = true,
                                           const DesignOptions& dopt = {},
                                           const CoverOptions& copt = {});

}  // namespace cfc
