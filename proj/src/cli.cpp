#include "mstable/cli.hpp"

#include "mstable/error.hpp"
#include "mstable/serialize.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace mstable::cli {

namespace {

using io::json;

struct Config {
    int n = 0;
    int m = 0;
    int m_from = 0;
    int m_to = 0;
    int l = 0;
    std::string s_text;
    std::string format = "table";
    std::string in_path;
    std::string out_path;
    std::string trace_path;
    std::string class_text;
    bool stack = false;
    bool json_flag = false;
    int enum_cap = 0;
    int max_n = 8;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_s(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw UsageError("--s: " + std::string(e.what()));
    }
}

std::string read_file(const std::string& path) {
    if (path.empty()) throw UsageError("--in is required");
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

EnumLimits limits_from(const Config& cfg) {
    EnumLimits limits;
    if (const char* env = std::getenv("MSTABLE_ENUM_CAP")) {
        try {
            limits.max_n = std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError("MSTABLE_ENUM_CAP must be an integer");
        }
    }
    if (cfg.enum_cap != 0) limits.max_n = cfg.enum_cap;
    if (limits.max_n < 1) throw UsageError("enumeration cap must be >= 1");
    return limits;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// selfcheck: invariant suite over small n

struct Check {
    std::string name;
    std::function<bool(int)> run;  // false on failure
};

bool relations_hold(int n) {
    for (int m = 0; m < n; ++m) {
        Space sp(n, m);
        DivisorClass sum(sp);
        for (int i = 1; i <= n; ++i) sum += expand(sp, TautClass::psi_i(i));
        if (sum != expand(sp, TautClass::psi())) return false;
        if (expand(sp, TautClass::delta_irr()) != Rational(12) * DivisorClass::lambda_class(sp)) return false;
        DivisorClass k = Rational(13) * expand(sp, TautClass::lambda()) - Rational(2) * expand(sp, TautClass::delta()) +
                         expand(sp, TautClass::psi());
        ExpandOptions stack;
        stack.canonical = CanonicalConvention::Stack;
        if (k != expand(sp, TautClass::canonical(), stack)) return false;
    }
    return true;
}

bool discrepancy_holds(int n) {
    for (int m = 1; m < n; ++m) {
        ContractionMap phi = ContractionMap::from_mbar(n, m);
        for (Rational s : {Rational(11 - m), Rational(12 - m), Rational(25 - 2 * m, 2)}) {
            DivisorClass d = expand(phi.source(), TautClass::ds(s));
            DivisorClass diff = d - phi.pullback(phi.pushforward(d));
            DiscrepancyReport r = discrepancy_of_Ds(n, m, s);
            for (MarkSet e : phi.exceptional_divisors())
                if (diff.coefficient(e) != r.coefficient_for(e)) return false;
            if (r.section_rings_equal != (s <= Rational(12 - m))) return false;
        }
    }
    return true;
}

bool chambers_partition(int n) {
    auto table = chamber_table(n);
    for (int num = 24 * (12 - n) + 1; num <= 24 * 13; ++num) {
        Rational s(num, 24);
        int hits = 0;
        for (const auto& c : table) hits += c.contains(s) ? 1 : 0;
        if (hits != 1 || !model_at(n, s).contains(s)) return false;
    }
    return true;
}

bool fiber_curves_hold(int n) {
    for (int m = 1; m < n; ++m)
        for (int l = 1; l <= m; ++l)
            for (const auto& p : enumerate_components(n, m, l)) {
                if (p.big_parts().empty()) continue;
                TestCurve c = esigma_fiber_curve(n, m, p);
                Rational s(7, 3);
                Rational deg = c.degree(TautClass::psi()) - c.degree(TautClass::delta0()) - s * c.lambda_deg;
                if (deg != s - Rational(l)) return false;
                if (stratum_dimension(p) != n - l - 1) return false;
            }
    return true;
}

bool strata_counts(int n) {
    for (int l = 1; l < n; ++l)
        if (enumerate_components(n, n - 1, l).size() != stirling2(n, l)) return false;
    return true;
}

bool reduction_agrees(int n) {
    for (int m = 1; m < n; ++m)
        for (int size = n - m + 1; size <= n; ++size)
            for (MarkSet s : subsets_of_size(n, size)) {
                DualGraph g(n, {{"E", 1, MarkSet::full(n).minus(s)}, {"R", 0, s}}, {{0, 1, 1}});
                ReductionResult r = mstable_reduce(g, m);
                if (r.graph != phi_limit(g, n, m)) return false;
                if (!is_m_stable(r.graph, m).stable) return false;
                if (r.trace.d_lambda() != r.trace.k()) return false;
            }
    return true;
}

bool chamber_ampleness(int n) {
    auto summary = verify_chamber_ampleness(n);
    for (const auto& c : summary.chambers)
        if (!c.pushforward_matches || c.at_midpoint.verdict != PositivityVerdict::AllPositive ||
            c.at_lower_end.min_degree != Rational(0))
            return false;
    return true;
}

int selfcheck(const Config& cfg, std::ostream& out) {
    if (cfg.max_n < 3 || cfg.max_n > 10) throw UsageError("--max-n must lie in [3, 10]");
    std::vector<Check> checks = {{"relations", relations_hold},     {"discrepancy", discrepancy_holds},
                                 {"chambers", chambers_partition},  {"fiber-curves", fiber_curves_hold},
                                 {"strata-counts", strata_counts}, {"reduction", reduction_agrees},
                                 {"ampleness", chamber_ampleness}};
    bool all = true;
    out << std::left << std::setw(16) << "check";
    for (int n = 3; n <= cfg.max_n; ++n) out << " n=" << n;
    out << "\n";
    for (const auto& c : checks) {
        out << std::setw(16) << c.name;
        for (int n = 3; n <= cfg.max_n; ++n) {
            bool ok = false;
            try {
                ok = c.run(n);
            } catch (const std::exception&) {
                ok = false;
            }
            all = all && ok;
            out << (ok ? "  ok" : " FAIL");
            if (n >= 10) out << ' ';
        }
        out << "\n";
    }
    CanonicalDiscrepancy sing = smoothness_consistency(7, 5, 6);
    bool singular = sing.verdict == SmoothnessVerdict::Singular;
    out << std::setw(16) << "singular(7,5,6)" << (singular ? "  ok" : " FAIL") << "\n";
    all = all && singular;
    out << (all ? "selfcheck: PASS" : "selfcheck: FAIL") << "\n";
    return all ? kExitOk : kExitInternal;
}

// ---------------------------------------------------------------------------

std::string divisor_output(const DivisorClass& d, const Config& cfg) {
    if (cfg.format == "table") return d.to_string() + "\n";
    return dump(io::to_json(d));
}

std::string singularity_line(const CanonicalDiscrepancy& c) {
    if (c.verdict == SmoothnessVerdict::NotApplicable || !c.min_discrepancy)
        return "NOT_APPLICABLE: the contraction is not a regular point-image contraction";
    std::string d = c.min_discrepancy->to_string();
    std::string dim = std::to_string(c.dimension - 1);
    if (c.verdict == SmoothnessVerdict::Singular) return "discrepancy " + d + " < dim−1 = " + dim + " → SINGULAR";
    return "discrepancy " + d + " >= dim−1 = " + dim + " → INCONCLUSIVE";
}

std::string chambers_table_text(const std::vector<Chamber>& table) {
    std::ostringstream out;
    out << std::left << std::setw(14) << "s" << std::setw(20) << "alpha"
        << "model\n";
    for (const auto& c : table)
        out << std::setw(14) << c.interval_string() << std::setw(20) << c.alpha_interval_string() << c.model.to_string()
            << "\n";
    return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Divisor classes, chambers and stable reduction on genus-one moduli spaces"};
    app.fallthrough();
    app.name("mstable-cli");
    app.require_subcommand(1);
    app.add_option("--out", cfg.out_path, "write output to this file");
    app.add_option("--enum-cap", cfg.enum_cap, "largest n for explicit subset enumeration");

    auto nm = [&](CLI::App* sub, bool need_m) {
        sub->add_option("--n", cfg.n, "number of marked points")->required();
        auto* opt = sub->add_option("--m", cfg.m, "stability parameter");
        if (need_m) opt->required();
    };
    auto format = [&](CLI::App* sub, std::vector<std::string> choices) {
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(choices));
    };

    auto* expand_cmd = app.add_subcommand("expand", "expand a tautological class in the basis");
    nm(expand_cmd, true);
    expand_cmd->add_option("--class", cfg.class_text, "lambda, delta_irr, delta0, delta, psi, psi_i, K, delta0_S, D(s)")
        ->required();
    expand_cmd->add_flag("--stack", cfg.stack, "K = 13 lambda - 2 delta + psi (no delta_{0,[n]} correction)");
    format(expand_cmd, {"table", "json"});

    auto* push_cmd = app.add_subcommand("pushforward", "push a class forward to the m-stable model");
    push_cmd->add_option("--to", cfg.m_to, "target m")->required();
    push_cmd->add_option("--in", cfg.in_path, "DivisorClass JSON")->required();
    format(push_cmd, {"table", "json"});

    auto* pull_cmd = app.add_subcommand("pullback", "pull a class back from an m-stable model");
    pull_cmd->add_option("--from", cfg.m_from, "source m (default 0)");
    pull_cmd->add_option("--in", cfg.in_path, "DivisorClass JSON")->required();
    format(pull_cmd, {"table", "json"});

    auto* disc_cmd = app.add_subcommand("discrepancy", "discrepancy of D(s) along the exceptional divisors");
    nm(disc_cmd, true);
    disc_cmd->add_option("--s", cfg.s_text, "slope s, e.g. 19/2")->required();
    format(disc_cmd, {"table", "json"});

    auto* sing_cmd = app.add_subcommand("singularity-check", "canonical discrepancy test for singular targets");
    sing_cmd->add_option("--n", cfg.n)->required();
    sing_cmd->add_option("--from", cfg.m_from)->required();
    sing_cmd->add_option("--to", cfg.m_to)->required();
    format(sing_cmd, {"table", "json"});

    auto* ch_cmd = app.add_subcommand("chambers", "chamber decomposition in s and alpha");
    ch_cmd->add_option("--n", cfg.n)->required();
    format(ch_cmd, {"table", "json", "csv"});

    auto* strata_cmd = app.add_subcommand("strata", "components of the elliptic l-fold strata");
    nm(strata_cmd, true);
    strata_cmd->add_option("--l", cfg.l, "only this l");
    format(strata_cmd, {"table", "json"});

    auto* tc_cmd = app.add_subcommand("test-curves", "the test-curve library on the m-stable model");
    nm(tc_cmd, true);

    auto* red_cmd = app.add_subcommand("reduce", "m-stable reduction of a dual graph");
    red_cmd->add_option("--m", cfg.m)->required();
    red_cmd->add_option("--in", cfg.in_path, "graph JSON")->required();
    red_cmd->add_option("--trace", cfg.trace_path, "write the trace JSON here");

    auto* phi_cmd = app.add_subcommand("phi-limit", "limit point of a one-node curve on the m-stable model");
    nm(phi_cmd, true);
    phi_cmd->add_option("--in", cfg.in_path, "graph JSON")->required();

    auto* pos_cmd = app.add_subcommand("check-positivity", "psi - delta_0 - s lambda on the test-curve library");
    nm(pos_cmd, true);
    pos_cmd->add_option("--s", cfg.s_text)->required();
    pos_cmd->add_flag("--json", cfg.json_flag);

    auto* self_cmd = app.add_subcommand("selfcheck", "invariant suite for small n");
    self_cmd->add_option("--max-n", cfg.max_n, "largest n (default 8)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    int status = kExitOk;
    std::string text;
    try {
        EnumLimits limits = limits_from(cfg);
        ExpandOptions eo;
        eo.limits = limits;
        if (*expand_cmd) {
            if (cfg.stack) eo.canonical = CanonicalConvention::Stack;
            TautClass cls;
            try {
                cls = TautClass::parse(cfg.class_text);
            } catch (const Error& e) {
                throw UsageError(std::string("--class: ") + e.what());
            }
            text = divisor_output(expand(Space(cfg.n, cfg.m), cls, eo), cfg);
        } else if (*push_cmd) {
            DivisorClass d = io::divisor_from_json(io::parse_json(read_file(cfg.in_path)));
            ContractionMap phi(d.space(), Space(d.space().n(), cfg.m_to));
            text = divisor_output(phi.pushforward(d), cfg);
        } else if (*pull_cmd) {
            DivisorClass d = io::divisor_from_json(io::parse_json(read_file(cfg.in_path)));
            ContractionMap phi(Space(d.space().n(), cfg.m_from), d.space());
            text = divisor_output(phi.pullback(d, limits), cfg);
        } else if (*disc_cmd) {
            DiscrepancyReport r = discrepancy_of_Ds(cfg.n, cfg.m, parse_s(cfg.s_text));
            if (cfg.format == "json") {
                text = dump(io::to_json(r));
            } else {
                std::ostringstream o;
                for (const auto& e : r.by_cardinality)
                    o << "|S|=" << e.cardinality << "  coefficient " << e.coefficient << "\n";
                o << "min coefficient " << r.min_coefficient << "\n";
                o << "section rings equal: " << (r.section_rings_equal ? "yes" : "no") << "\n";
                text = o.str();
            }
        } else if (*sing_cmd) {
            CanonicalDiscrepancy c = smoothness_consistency(cfg.n, cfg.m_from, cfg.m_to, limits);
            text = cfg.format == "json" ? dump(io::to_json(c)) : singularity_line(c) + "\n";
        } else if (*ch_cmd) {
            auto table = chamber_table(cfg.n);
            if (cfg.format == "csv") {
                text = io::chambers_csv(table);
            } else if (cfg.format == "json") {
                json arr = json::array();
                for (const auto& c : table) arr.push_back(io::to_json(c));
                text = dump(arr);
            } else {
                text = chambers_table_text(table);
            }
        } else if (*strata_cmd) {
            int lo = cfg.l ? cfg.l : 1, hi = cfg.l ? cfg.l : cfg.m;
            json arr = json::array();
            std::ostringstream o;
            for (int l = lo; l <= hi; ++l) {
                auto parts = enumerate_components(cfg.n, cfg.m, l);
                json comps = json::array();
                o << "l=" << l << "  components " << parts.size() << "\n";
                for (const auto& p : parts) {
                    bool empty = p.big_parts().empty();
                    json entry = {{"partition", io::to_json(p)}};
                    if (empty) {
                        entry["dimension"] = nullptr;
                        entry["test_curve"] = nullptr;
                        o << "  " << p.to_string() << "  empty\n";
                    } else {
                        entry["dimension"] = stratum_dimension(p);
                        entry["test_curve"] = io::to_json(esigma_fiber_curve(cfg.n, cfg.m, p));
                        o << "  " << p.to_string() << "  dim " << stratum_dimension(p) << "\n";
                    }
                    comps.push_back(entry);
                }
                arr.push_back({{"l", l}, {"count", parts.size()}, {"components", comps}});
            }
            text = cfg.format == "json" ? dump(arr) : o.str();
        } else if (*tc_cmd) {
            LibraryOptions lo;
            lo.limits = limits;
            json arr = json::array();
            for (const auto& c : test_curve_library(cfg.n, cfg.m, lo)) arr.push_back(io::to_json(c));
            text = dump(arr);
        } else if (*red_cmd) {
            DualGraph g = io::graph_from_json(io::parse_json(read_file(cfg.in_path)));
            ReductionResult r = mstable_reduce(g, cfg.m);
            if (!cfg.trace_path.empty()) {
                write_file(cfg.trace_path, dump(io::to_json(r.trace)));
                text = dump(io::to_json(r.graph));
            } else {
                text = dump(json{{"graph", io::to_json(r.graph)}, {"trace", io::to_json(r.trace)}});
            }
        } else if (*phi_cmd) {
            DualGraph g = io::graph_from_json(io::parse_json(read_file(cfg.in_path)));
            text = dump(io::to_json(phi_limit(g, cfg.n, cfg.m)));
        } else if (*pos_cmd) {
            LibraryOptions lo;
            lo.limits = limits;
            PositivityReport r = verify_ample_range(cfg.n, cfg.m, parse_s(cfg.s_text), lo);
            if (cfg.json_flag) {
                text = dump(io::to_json(r));
            } else {
                std::ostringstream o;
                o << verdict_name(r.verdict) << "  min degree " << r.min_degree;
                if (!r.witness.empty()) o << " on " << r.witness;
                o << "\n" << r.note << "\n";
                text = o.str();
            }
            status = r.verdict == PositivityVerdict::AllPositive ? 0 : r.verdict == PositivityVerdict::AllNonnegative ? 1 : 2;
        } else if (*self_cmd) {
            std::ostringstream o;
            status = selfcheck(cfg, o);
            text = o.str();
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.code() == ErrorCode::InvariantBreach ? kExitInternal : kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }

    if (cfg.out_path.empty()) {
        out << text;
    } else {
        try {
            write_file(cfg.out_path, text);
        } catch (const UsageError& e) {
            err << "usage error: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    return status;
}

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

}  // namespace mstable::cli
