#include "cfc/design_analysis.hpp"

#include <cmath>
#include <unordered_map>

namespace cfc {

namespace {

void check_budget(int t, int s, int l, SupersetModel model, const DesignOptions& opt) {
    if (model == SupersetModel::strict) {
        const BigInt n = count_strict(t, s, l);
        if (n > BigInt(opt.superset_budget))
            throw budget_error("strict family has " + n.str() + " supersets, over budget " +
                               std::to_string(opt.superset_budget));
    } else {
        const BigInt lb = count_relaxed_lower_bound(t, s, l);
        if (lb > BigInt(opt.superset_budget))
            throw budget_error("relaxed family has at least " + lb.str() +
                               " supersets, over budget " + std::to_string(opt.superset_budget));
    }
}

void for_each_in_model(int t, int s, int l, SupersetModel model,
                       const std::function<void(const Superset&)>& fn) {
    if (model == SupersetModel::strict)
        for_each_strict(t, s, l, fn);
    else
        for_each_relaxed(t, s, l, fn);
}

}  // namespace

DesignAnalysisReport analyze_design(const BinaryCode& code, int s, int l, SupersetModel model,
                                    const DesignOptions& opt) {
    const int t = static_cast<int>(code.n_cols());
    check_budget(t, s, l, model, opt);

    // Pass 1: outcome -> multiplicity (hash grouping, exact keys).
    std::unordered_map<BitVector, std::uint64_t, BitVector::Hash> groups;
    std::uint64_t total = 0;
    for_each_in_model(t, s, l, model, [&](const Superset& p) {
        ++total;
        if (total > opt.superset_budget)
            throw budget_error("superset enumeration exceeded budget " +
                               std::to_string(opt.superset_budget));
        ++groups[outcome(code, p)];
    });

    DesignAnalysisReport rep;
    rep.s = s;
    rep.l = l;
    rep.model = model;
    rep.total = total;

    // Pass 2: classify each superset by its group's multiplicity.
    std::uint64_t n_bad = 0;
    for_each_in_model(t, s, l, model, [&](const Superset& p) {
        if (groups.at(outcome(code, p)) >= 2) {
            ++n_bad;
            if (rep.bad_supersets.size() < opt.bad_cap) rep.bad_supersets.push_back(p);
        }
    });
    rep.n_bad = n_bad;
    rep.n_good = rep.total - rep.n_bad;
    rep.bad_overflow = BigInt(rep.bad_supersets.size()) < rep.n_bad;
    rep.epsilon = Rational{rep.n_bad, rep.total};
    rep.epsilon_value = rep.epsilon.to_double();
    return rep;
}

Prop4Report check_prop4(const BinaryCode& code, int s, int l, const DesignOptions& dopt,
                        const CoverOptions& copt) {
    Prop4Report rep;
    CoverOptions co = copt;
    co.collect_bad_sets = false;

    rep.code_cf = analyze(code, s, l, co).n_bad == 0;
    rep.design_cf = analyze_design(code, s, l, SupersetModel::relaxed, dopt).n_bad == 0;

    rep.claim1_applicable = rep.code_cf;
    if (rep.claim1_applicable) rep.claim1_holds = rep.design_cf;

    rep.claim2_applicable = rep.design_cf;
    if (s >= 2) {
        rep.s_minus_1_checked = true;
        rep.code_s_minus_1_cf = analyze(code, s - 1, l, co).n_bad == 0;
    }
    if (l >= 2) {
        rep.l_minus_1_checked = true;
        rep.code_l_minus_1_cf = analyze(code, s, l - 1, co).n_bad == 0;
    }
    if (rep.claim2_applicable)
        rep.claim2_holds = (!rep.s_minus_1_checked || rep.code_s_minus_1_cf) &&
                           (!rep.l_minus_1_checked || rep.code_l_minus_1_cf);
    return rep;
}

ProjectionBoundReport projection_bad_bound(const BinaryCode& code, int s, int l,
                                           bool also_design, const DesignOptions& dopt,
                                           const CoverOptions& copt) {
    CoverOptions co = copt;
    co.collect_bad_sets = false;
    const CoverAnalysisReport cover = analyze(code, s, l, co);

    ProjectionBoundReport rep;
    rep.eps_code = cover.epsilon_value;
    rep.factor = std::pow(static_cast<double>(l), s);
    rep.bound = std::min(1.0, rep.eps_code * rep.factor);
    if (also_design) {
        const DesignAnalysisReport design =
            analyze_design(code, s, l, SupersetModel::strict, dopt);
        rep.eps_design = design.epsilon_value;
        // Exact rational comparison on both sides.
        BigInt factor = 1;
        for (int i = 0; i < s; ++i) factor *= l;
        BigRat bound = BigRat(cover.n_bad, cover.total) * factor;
        if (bound > 1) bound = 1;
        rep.holds = BigRat(design.n_bad, design.total) <= bound;
    }
    return rep;
}

}  // namespace cfc
