// cfc - command line front end for the cover-free code/design toolkit.
//
// Exit codes: 0 success, 1 domain/input errors, 2 budget refusals.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "cfc/decoder.hpp"
#include "cfc/ensemble.hpp"
#include "cfc/json_io.hpp"

namespace {

using cfc::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cfc::error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int resolved_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Json make_output(const std::string& command, Json config) {
    Json out;
    out["format_version"] = cfc::kFormatVersion;
    out["command"] = command;
    out["config"] = std::move(config);
    return out;
}

enum class Format { json, csv, text };

Format parse_format(const std::string& f) {
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    if (f == "text") return Format::text;
    throw cfc::domain_error("unknown format: " + f);
}

struct AnalyzeArgs {
    std::string code_path;
    int s = 0, l = 0;
    std::string mode = "exact";
    std::uint64_t trials = 0;
    bool have_seed = false;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000'000;
    std::uint64_t cap = 100'000;
    int threads = 0;
    std::string format = "json";
};

int cmd_analyze(const AnalyzeArgs& a) {
    const cfc::BinaryCode code = cfc::BinaryCode::parse(read_file(a.code_path));
    cfc::CoverOptions opt;
    opt.work_budget = a.budget;
    opt.bad_set_cap = a.cap;
    opt.threads = a.threads;

    cfc::CoverAnalysisReport rep;
    if (a.mode == "exact") {
        rep = cfc::analyze(code, a.s, a.l, opt);
    } else if (a.mode == "sample") {
        if (!a.have_seed) throw cfc::domain_error("sampled mode requires --seed");
        if (a.trials == 0) throw cfc::domain_error("sampled mode requires --trials >= 1");
        rep = cfc::analyze_sampled(code, a.s, a.l, a.trials, a.seed, opt);
    } else {
        throw cfc::domain_error("--mode must be exact or sample");
    }

    Json config{{"code", a.code_path},         {"s", a.s},
                {"l", a.l},                    {"mode", a.mode},
                {"budget", a.budget},          {"cap", a.cap},
                {"threads", resolved_threads(a.threads)}};
    if (a.mode == "sample") {
        config["trials"] = a.trials;
        config["seed"] = a.seed;
    }
    const Format fmt = parse_format(a.format);
    if (fmt == Format::json) {
        Json out = make_output("analyze", std::move(config));
        out["report"] = cfc::to_json(rep);
        emit(out);
    } else if (fmt == Format::text) {
        std::cout << "analyze s=" << rep.s << " l=" << rep.l << " mode=" << a.mode << "\n"
                  << "  total " << rep.total.str() << ", bad " << rep.n_bad.str() << ", good "
                  << rep.n_good.str() << "\n"
                  << "  epsilon = " << rep.epsilon.num.str() << "/" << rep.epsilon.den.str()
                  << " = " << rep.epsilon_value << "\n";
        for (const auto& b : rep.bad_sets) std::cout << "  bad " << b.to_string() << "\n";
    } else {
        throw cfc::domain_error("csv output is only available for bounds sweep");
    }
    return 0;
}

struct DesignArgs {
    std::string code_path;
    int s = 0, l = 0;
    std::string model = "strict";
    std::uint64_t budget = 10'000'000;
    std::uint64_t cap = 100'000;
    std::string format = "json";
};

int cmd_design(const DesignArgs& a) {
    const cfc::BinaryCode code = cfc::BinaryCode::parse(read_file(a.code_path));
    cfc::DesignOptions opt;
    opt.superset_budget = a.budget;
    opt.bad_cap = a.cap;
    const cfc::SupersetModel model =
        a.model == "strict" ? cfc::SupersetModel::strict : cfc::SupersetModel::relaxed;
    if (a.model != "strict" && a.model != "relaxed")
        throw cfc::domain_error("--model must be strict or relaxed");
    const cfc::DesignAnalysisReport rep = cfc::analyze_design(code, a.s, a.l, model, opt);

    Json config{{"code", a.code_path}, {"s", a.s},     {"l", a.l},
                {"model", a.model},    {"budget", a.budget}, {"cap", a.cap}};
    const Format fmt = parse_format(a.format);
    if (fmt == Format::json) {
        Json out = make_output("design", std::move(config));
        out["report"] = cfc::to_json(rep);
        emit(out);
    } else if (fmt == Format::text) {
        std::cout << "design s=" << rep.s << " l=" << rep.l << " model=" << a.model << "\n"
                  << "  total " << rep.total.str() << ", bad " << rep.n_bad.str() << ", good "
                  << rep.n_good.str() << "\n"
                  << "  epsilon = " << rep.epsilon.num.str() << "/" << rep.epsilon.den.str()
                  << " = " << rep.epsilon_value << "\n";
        for (const auto& p : rep.bad_supersets)
            std::cout << "  bad " << cfc::to_text(p) << "\n";
    } else {
        throw cfc::domain_error("csv output is only available for bounds sweep");
    }
    return 0;
}

struct DecodeArgs {
    std::string code_path;
    std::string outcome;
    int s = 0, l = 0;
    bool exhaustive = false;
    std::string model = "strict";
    std::uint64_t budget = 10'000'000;
    std::string format = "json";
};

int cmd_decode(const DecodeArgs& a) {
    const cfc::BinaryCode code = cfc::BinaryCode::parse(read_file(a.code_path));
    const cfc::BitVector r = cfc::BitVector::from_string(a.outcome);
    if (r.size() != code.n_rows())
        throw cfc::domain_error("--outcome must have exactly N=" +
                                std::to_string(code.n_rows()) + " bits");
    const cfc::DecodeResult res = cfc::decode(code, r, a.s, a.l);

    Json config{{"code", a.code_path}, {"outcome", a.outcome}, {"s", a.s}, {"l", a.l},
                {"exhaustive", a.exhaustive}};
    if (a.exhaustive) config["model"] = a.model;

    Json preimages = Json::array();
    if (a.exhaustive) {
        cfc::DesignOptions opt;
        opt.superset_budget = a.budget;
        const cfc::SupersetModel model =
            a.model == "strict" ? cfc::SupersetModel::strict : cfc::SupersetModel::relaxed;
        for (const auto& p : cfc::decode_exhaustive(code, r, a.s, a.l, model, opt))
            preimages.push_back(cfc::to_json(p));
    }

    const Format fmt = parse_format(a.format);
    if (fmt == Format::json) {
        Json out = make_output("decode", std::move(config));
        out["result"] = cfc::to_json(res);
        if (a.exhaustive) out["preimages"] = std::move(preimages);
        emit(out);
    } else if (fmt == Format::text) {
        std::cout << "decode -> " << cfc::to_text(res.decoded) << "  status="
                  << (res.status == cfc::DecodeStatus::unique ? "unique" : "not_cf_ambiguous")
                  << "  checks=" << res.acceptable_checked << "\n";
        if (a.exhaustive)
            for (const auto& p : preimages) std::cout << "  preimage " << p.dump() << "\n";
    } else {
        throw cfc::domain_error("csv output is only available for bounds sweep");
    }
    return 0;
}

struct SimulateArgs {
    int n_rows = 0, n_cols = 0;
    double q = 0.0;
    int s = 0, l = 0;
    std::uint64_t trials = 0;
    bool have_seed = false;
    std::uint64_t seed = 0;
    bool exact = false;
    std::uint64_t budget = 50'000'000;
    int threads = 0;
    std::string format = "json";
};

int cmd_simulate(const SimulateArgs& a) {
    if (!a.have_seed) throw cfc::domain_error("simulate requires --seed (no wall-clock default)");
    if (a.trials == 0) throw cfc::domain_error("simulate requires --trials >= 1");
    const cfc::EnsembleParams params = cfc::EnsembleParams::make(a.n_rows, a.n_cols, a.q);
    const cfc::McEstimate est =
        cfc::mc_bad_probability(params, a.s, a.l, a.trials, a.seed, a.threads);
    const double ub = cfc::union_bound_expectation(params, a.s, a.l);

    Json config{{"N", a.n_rows}, {"t", a.n_cols},   {"Q", a.q},
                {"w", params.weight}, {"s", a.s},   {"l", a.l},
                {"trials", a.trials}, {"seed", a.seed},
                {"exact", a.exact},   {"threads", resolved_threads(a.threads)}};
    Json out = make_output("simulate", std::move(config));
    out["estimate"] = cfc::to_json(est);
    out["union_bound"] = ub;
    if (a.exact) out["exact"] = cfc::exact_bad_probability(params, a.s, a.l, a.budget);

    const Format fmt = parse_format(a.format);
    if (fmt == Format::json) {
        emit(out);
    } else if (fmt == Format::text) {
        std::cout << "simulate N=" << a.n_rows << " t=" << a.n_cols << " Q=" << a.q
                  << " w=" << params.weight << " s=" << a.s << " l=" << a.l << "\n"
                  << "  p_hat = " << est.p_hat << " +/- " << est.std_error << "  ("
                  << est.successes << "/" << est.trials << ")\n"
                  << "  union_bound = " << ub << "\n";
        if (a.exact) std::cout << "  exact = " << out["exact"].get<double>() << "\n";
    } else {
        throw cfc::domain_error("csv output is only available for bounds sweep");
    }
    return 0;
}

struct BoundsArgs {
    int s = 2, l = 2;
    double rate = 0.0;
    int n_rows = 0;
    std::uint64_t t = 0;
    double q_from = 0.01, q_to = 0.99, q_step = 0.01;
    std::string format = "json";
};

int cmd_bounds_capacity(const BoundsArgs& a) {
    const cfc::bounds::BoundResult r = cfc::bounds::capacity_lower(a.s, a.l);
    Json out = make_output("bounds capacity", Json{{"s", a.s}, {"l", a.l}});
    out["result"] = cfc::to_json(r);
    out["capacity_upper"] = cfc::bounds::capacity_upper(a.s, a.l);
    if (parse_format(a.format) == Format::text)
        std::cout << "capacity_lower(" << a.s << "," << a.l << ") = " << r.value
                  << " at Q = " << r.argmax_q_cap << "  (upper bound "
                  << cfc::bounds::capacity_upper(a.s, a.l) << ")\n";
    else
        emit(out);
    return 0;
}

int cmd_bounds_exponent(const BoundsArgs& a) {
    if (!(a.rate > 0.0)) throw cfc::domain_error("--R must be positive");
    const cfc::bounds::BoundResult r = cfc::bounds::exponent_lower(a.s, a.l, a.rate);
    Json out = make_output("bounds exponent", Json{{"s", a.s}, {"l", a.l}, {"R", a.rate}});
    out["result"] = cfc::to_json(r);
    if (parse_format(a.format) == Format::text)
        std::cout << "exponent_lower(" << a.s << "," << a.l << ", R=" << a.rate
                  << ") = " << r.value << " at Q = " << r.argmax_q_cap << ", q = " << r.argmin_q
                  << "\n";
    else
        emit(out);
    return 0;
}

int cmd_bounds_upper(const BoundsArgs& a) {
    Json out = make_output("bounds upper", Json{{"s", a.s}, {"l", a.l}});
    out["value"] = cfc::bounds::capacity_upper(a.s, a.l);
    emit(out);
    return 0;
}

int cmd_bounds_count(const BoundsArgs& a) {
    if (a.t == 0) throw cfc::domain_error("--t is required");
    Json out = make_output("bounds count", Json{{"t", a.t}, {"s", a.s}, {"l", a.l}});
    out["value"] = cfc::big_to_json(cfc::bounds::superset_count(cfc::BigInt(a.t), a.s, a.l));
    emit(out);
    return 0;
}

int cmd_bounds_floor(const BoundsArgs& a) {
    if (a.n_rows == 0) throw cfc::domain_error("--N is required");
    if (!(a.rate > 0.0)) throw cfc::domain_error("--R must be positive");
    Json out = make_output("bounds floor",
                           Json{{"N", a.n_rows}, {"R", a.rate}, {"s", a.s}, {"l", a.l}});
    out["value"] = cfc::bounds::design_error_floor(a.n_rows, a.rate, a.s, a.l);
    emit(out);
    return 0;
}

int cmd_bounds_asym(const BoundsArgs& a) {
    Json out = make_output("bounds asym", Json{{"s", a.s}, {"l", a.l}});
    out["result"] = cfc::to_json(cfc::bounds::asymptotic_rates(a.s, a.l));
    emit(out);
    return 0;
}

int cmd_bounds_sweep(const BoundsArgs& a) {
    if (!(a.q_from > 0.0 && a.q_to < 1.0 && a.q_from <= a.q_to && a.q_step > 0.0))
        throw cfc::domain_error("sweep requires 0 < from <= to < 1 and step > 0");
    const Format fmt = parse_format(a.format);
    if (fmt == Format::csv) std::cout << "Q,q_hat,z,D,value\n";
    for (double q = a.q_from; q <= a.q_to + 1e-12; q += a.q_step) {
        const double qh = cfc::bounds::q_hat(q, a.s);
        const double z = cfc::bounds::solve_z(a.l, q, qh).value;
        const double d = cfc::bounds::d_at_qhat(a.l, q, a.s);
        if (fmt == Format::csv) {
            std::cout << q << "," << qh << "," << z << "," << d << "," << d / a.l << "\n";
        } else {
            Json row{{"Q", q}, {"q_hat", qh}, {"z", z}, {"D", d}, {"value", d / a.l}};
            emit(row);
        }
    }
    return 0;
}

// Golden examples: the 5x5 matrix analyzed throughout the library tests.
constexpr const char* kExampleCode = "5 5\n10011\n01110\n01101\n01011\n00111\n";

int cmd_selftest() {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    const cfc::BinaryCode code = cfc::BinaryCode::parse(kExampleCode);
    check("parse/emit round trip", code.emit() == kExampleCode);

    check("disjunction of columns 4,5",
          (code.column(3) | code.column(4)).to_string() == "11111");
    check("conjunction of columns 2,3",
          (code.column(2 - 1) & code.column(3 - 1)).to_string() == "01100");
    check("union {1,2} does not cover conj {4,5}",
          !cfc::covers(code.union_of(cfc::IndexSet::of({0, 1})),
                       code.conj_of(cfc::IndexSet::of({3, 4}))));

    const cfc::CoverAnalysisReport cover = cfc::analyze(code, 2, 2);
    check("cover analysis: 5 good pairs", cover.n_good == 5);
    check("cover analysis: epsilon = 1/2",
          cover.epsilon.num * 2 == cover.epsilon.den);
    const std::vector<cfc::IndexSet> expected_good = {
        cfc::IndexSet::of({0, 1}), cfc::IndexSet::of({0, 2}), cfc::IndexSet::of({0, 3}),
        cfc::IndexSet::of({0, 4}), cfc::IndexSet::of({1, 2})};
    bool good_match = true;
    for (const auto& g : expected_good)
        for (const auto& b : cover.bad_sets)
            if (g == b) good_match = false;
    check("cover analysis: good set membership", good_match);
    check("cf(2,2,1/2) accepted", cfc::is_cf_code(code, 2, 2, 0.5));
    check("cf(2,2,0.4) rejected", !cfc::is_cf_code(code, 2, 2, 0.4));

    const cfc::DesignAnalysisReport design =
        cfc::analyze_design(code, 2, 2, cfc::SupersetModel::strict);
    check("design analysis: total 15", design.total == 15);
    // Three collision classes: outcomes 10011, 11100 and 01111, two
    // supersets each.
    check("design analysis: 6 bad supersets", design.n_bad == 6);
    const std::vector<std::string> expected_bad = {"{1,2}|{4,5}", "{1,3}|{4,5}", "{1,4}|{2,3}",
                                                   "{1,5}|{2,3}", "{2,4}|{3,5}", "{2,5}|{3,4}"};
    bool bad_match = design.bad_supersets.size() == expected_bad.size();
    if (bad_match)
        for (std::size_t i = 0; i < expected_bad.size(); ++i)
            if (cfc::to_text(design.bad_supersets[i]) != expected_bad[i]) bad_match = false;
    check("design analysis: bad superset list", bad_match);

    const cfc::BitVector r1 = cfc::BitVector::from_string("10011");
    const auto pre = cfc::decode_exhaustive(code, r1, 2, 2, cfc::SupersetModel::strict);
    check("exhaustive decode of 10011 finds both strict preimages",
          pre.size() == 2 && cfc::to_text(pre[0]) == "{1,2}|{4,5}" &&
              cfc::to_text(pre[1]) == "{1,3}|{4,5}");
    check("decode of 10011 reports ambiguity",
          cfc::decode(code, r1, 2, 2).status == cfc::DecodeStatus::not_cf_ambiguous);

    check("superset_count(5,2,2) = 15",
          cfc::bounds::superset_count(cfc::BigInt(5), 2, 2) == 15);
    check("capacity_upper(2,2) = 0.25", cfc::bounds::capacity_upper(2, 2) == 0.25);

    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cfc - cover-free code and design toolkit"};
    app.require_subcommand(1);

    AnalyzeArgs an;
    auto* c_an = app.add_subcommand("analyze", "classify s-subsets as bad/good");
    c_an->add_option("--code", an.code_path, "code file")->required();
    c_an->add_option("--s", an.s, "subset size s")->required();
    c_an->add_option("--l", an.l, "conjunction size l")->required();
    c_an->add_option("--mode", an.mode, "exact|sample");
    c_an->add_option("--trials", an.trials, "sample trials");
    c_an->add_option("--seed", an.seed, "RNG seed")->each([&](const std::string&) {
        an.have_seed = true;
    });
    c_an->add_option("--budget", an.budget, "work budget (cover checks)");
    c_an->add_option("--cap", an.cap, "bad-set list cap");
    c_an->add_option("--threads", an.threads, "worker threads (0 = auto)");
    c_an->add_option("--format", an.format, "json|csv|text");

    DesignArgs de;
    auto* c_de = app.add_subcommand("design", "classify supersets by outcome collisions");
    c_de->add_option("--code", de.code_path, "code file")->required();
    c_de->add_option("--s", de.s, "max parts s")->required();
    c_de->add_option("--l", de.l, "max part size l")->required();
    c_de->add_option("--model", de.model, "strict|relaxed");
    c_de->add_option("--budget", de.budget, "superset budget");
    c_de->add_option("--cap", de.cap, "bad-superset list cap");
    c_de->add_option("--format", de.format, "json|csv|text");

    DecodeArgs dc;
    auto* c_dc = app.add_subcommand("decode", "decode an outcome vector");
    c_dc->add_option("--code", dc.code_path, "code file")->required();
    c_dc->add_option("--outcome", dc.outcome, "outcome bit string")->required();
    c_dc->add_option("--s", dc.s, "max parts s")->required();
    c_dc->add_option("--l", dc.l, "max part size l")->required();
    c_dc->add_flag("--exhaustive", dc.exhaustive, "also list all exact preimages");
    c_dc->add_option("--model", dc.model, "strict|relaxed (for --exhaustive)");
    c_dc->add_option("--budget", dc.budget, "superset budget");
    c_dc->add_option("--format", dc.format, "json|csv|text");

    SimulateArgs si;
    auto* c_si = app.add_subcommand("simulate", "Monte Carlo over the constant-weight ensemble");
    c_si->add_option("--N", si.n_rows, "code length N")->required();
    c_si->add_option("--t", si.n_cols, "code size t")->required();
    c_si->add_option("--Q", si.q, "relative weight Q in (0,1)")->required();
    c_si->add_option("--s", si.s, "subset size s")->required();
    c_si->add_option("--l", si.l, "conjunction size l")->required();
    c_si->add_option("--trials", si.trials, "Monte Carlo trials")->required();
    c_si->add_option("--seed", si.seed, "master seed")->each([&](const std::string&) {
        si.have_seed = true;
    });
    c_si->add_flag("--exact", si.exact, "also run the exhaustive mini-oracle");
    c_si->add_option("--budget", si.budget, "oracle budget");
    c_si->add_option("--threads", si.threads, "worker threads (0 = auto)");
    c_si->add_option("--format", si.format, "json|csv|text");

    BoundsArgs bo;
    auto* c_bo = app.add_subcommand("bounds", "numerical capacity/exponent bounds");
    c_bo->require_subcommand(1);
    auto add_sl = [&](CLI::App* c) {
        c->add_option("--s", bo.s, "parameter s");
        c->add_option("--l", bo.l, "parameter l");
        c->add_option("--format", bo.format, "json|csv|text");
    };
    auto* c_cap = c_bo->add_subcommand("capacity", "random-coding capacity lower bound");
    add_sl(c_cap);
    auto* c_exp = c_bo->add_subcommand("exponent", "error-exponent lower bound");
    add_sl(c_exp);
    c_exp->add_option("--R", bo.rate, "rate R")->required();
    auto* c_up = c_bo->add_subcommand("upper", "1/(s l) capacity upper bound");
    add_sl(c_up);
    auto* c_cnt = c_bo->add_subcommand("count", "strict superset family size");
    add_sl(c_cnt);
    c_cnt->add_option("--t", bo.t, "code size t")->required();
    auto* c_fl = c_bo->add_subcommand("floor", "finite-N design error floor");
    add_sl(c_fl);
    c_fl->add_option("--N", bo.n_rows, "code length N")->required();
    c_fl->add_option("--R", bo.rate, "rate R")->required();
    auto* c_as = c_bo->add_subcommand("asym", "asymptotic rate expressions");
    add_sl(c_as);
    auto* c_sw = c_bo->add_subcommand("sweep", "sweep Q for the capacity integrand");
    add_sl(c_sw);
    c_sw->add_option("--from", bo.q_from, "first Q");
    c_sw->add_option("--to", bo.q_to, "last Q");
    c_sw->add_option("--step", bo.q_step, "Q step");

    auto* c_st = app.add_subcommand("selftest", "run the built-in golden example suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (c_an->parsed()) return cmd_analyze(an);
        if (c_de->parsed()) return cmd_design(de);
        if (c_dc->parsed()) return cmd_decode(dc);
        if (c_si->parsed()) return cmd_simulate(si);
        if (c_st->parsed()) return cmd_selftest();
        if (c_bo->parsed()) {
            if (c_cap->parsed()) return cmd_bounds_capacity(bo);
            if (c_exp->parsed()) return cmd_bounds_exponent(bo);
            if (c_up->parsed()) return cmd_bounds_upper(bo);
            if (c_cnt->parsed()) return cmd_bounds_count(bo);
            if (c_fl->parsed()) return cmd_bounds_floor(bo);
            if (c_as->parsed()) return cmd_bounds_asym(bo);
            if (c_sw->parsed()) return cmd_bounds_sweep(bo);
        }
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const cfc::budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
