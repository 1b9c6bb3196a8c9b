#include "defw/checks.hpp"
#include "defw/errors.hpp"
#include "defw/parallel.hpp"
#include "defw/report.hpp"
#include "defw/codim1_report.hpp"
#include "defw/text.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace defw;

namespace {

struct Common {
    int q = 1;
    std::string r = "inf";
    std::string variant = "W";
    std::string degree;
    std::string order;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    bool timing = false;
};

struct Output {
    ReportRecord record;
    std::string md;
    std::string tsv;
};

std::string r_text(const std::optional<int>& r) { return r ? std::to_string(*r) : "inf"; }

AlgebraContext make_context(const Common& c) {
    auto r = parse_r(c.r);
    AlgebraContext ctx = r ? truncated(c.q, *r, parse_variant(c.variant)) : unbounded(c.q, parse_variant(c.variant));
    ctx.validate();
    return ctx;
}

json echo(const Common& c) {
    return {{"q", c.q}, {"r", r_text(parse_r(c.r))}, {"variant", c.variant}, {"seed", c.seed}, {"format", c.format}};
}

json range_json(const Range& r) { return {{"lo", r.lo}, {"hi", r.hi}}; }

std::string md_escape(const std::string& s) {
    std::string o;
    for (char ch : s) {
        if (ch == '|') o += '\\';
        o += ch;
    }
    return o;
}

std::string join_basis(const json& basis, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < basis.size(); ++i) s += (i ? sep : "") + basis[i]["text"].get<std::string>();
    return s;
}

// cohomology

struct CohomologyArgs {
    Common c;
    std::string type;
    std::string f_lambda;
};

Type parse_type(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ValidationError("--type expects a,b");
    Range a = parse_range(s.substr(0, comma));
    Range b = parse_range(s.substr(comma + 1));
    if (a.lo != a.hi || b.lo != b.hi) throw ValidationError("--type expects a,b");
    return {a.lo, b.lo};
}

Output run_cohomology(const CohomologyArgs& a) {
    AlgebraContext ctx = make_context(a.c);
    Range deg = parse_range(a.c.degree), ord = parse_range(a.c.order);
    std::optional<Type> type;
    if (!a.type.empty()) type = parse_type(a.type);
    std::optional<Rational> lambda;
    if (!a.f_lambda.empty()) lambda = parse_rational(a.f_lambda);
    if (type && ctx.q != 1) throw UnsupportedError("--type needs q = 1");
    if (lambda && ctx.variant == Variant::WPlus) throw UnsupportedError("--f-lambda is not defined for Wplus");
    if (ctx.r && ord.hi > *ctx.r) throw ValidationError("order range exceeds r");

    std::vector<std::pair<int, int>> cells;
    for (int n = deg.lo; n <= deg.hi; ++n)
        for (int k = ord.lo; k <= ord.hi; ++k) cells.emplace_back(n, k);
    std::vector<json> rows(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        auto [n, k] = cells[i];
        std::shared_ptr<const CohomologyPiece> p;
        if (lambda)
            p = F_lambda(ctx, *lambda, n, k, type);
        else if (type)
            p = type_filtered_cohomology(ctx, n, k, *type);
        else
            p = cohomology(ctx, n, k);
        json basis = json::array();
        for (const auto& e : p->representatives()) basis.push_back(to_json(e));
        rows[i] = {{"degree", n},
                   {"order", k},
                   {"dim", p->dim()},
                   {"cochain_dim", p->cochain_dim()},
                   {"cocycle_dim", p->cocycle_dim()},
                   {"coboundary_dim", p->coboundary_dim()},
                   {"basis", basis}};
    });

    Output out;
    out.record.command = "cohomology";
    out.record.config = echo(a.c);
    out.record.config["degree"] = range_json(deg);
    out.record.config["order"] = range_json(ord);
    out.record.config["type"] = type ? json::array({type->h, type->c}) : json(nullptr);
    out.record.config["f_lambda"] = lambda ? json(to_string(*lambda)) : json(nullptr);
    out.record.result = {{"pieces", rows}};

    std::ostringstream md, tsv;
    md << "| degree | order | dim | cochains | cocycles | coboundaries | basis |\n|---|---|---|---|---|---|---|\n";
    tsv << "degree\torder\tdim\tcochain_dim\tcocycle_dim\tcoboundary_dim\tbasis\n";
    for (const auto& r : rows) {
        md << "| " << r["degree"] << " | " << r["order"] << " | " << r["dim"] << " | " << r["cochain_dim"] << " | "
           << r["cocycle_dim"] << " | " << r["coboundary_dim"] << " | " << md_escape(join_basis(r["basis"], "; "))
           << " |\n";
        tsv << r["degree"] << '\t' << r["order"] << '\t' << r["dim"] << '\t' << r["cochain_dim"] << '\t'
            << r["cocycle_dim"] << '\t' << r["coboundary_dim"] << '\t' << join_basis(r["basis"], "; ") << '\n';
    }
    out.md = md.str();
    out.tsv = tsv.str();
    return out;
}

// verify and invariants check

void check_tables(const std::vector<CheckResult>& results, Output& out) {
    std::ostringstream md, tsv;
    md << "| property | passed | cases | note | counterexample |\n|---|---|---|---|---|\n";
    tsv << "property\tpassed\tcases\tnote\tcounterexample\n";
    json arr = json::array();
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed;
        arr.push_back(to_json(r));
        md << "| " << r.name << " | " << (r.passed ? "yes" : "NO") << " | " << r.cases << " | " << md_escape(r.note)
           << " | " << md_escape(r.counterexample) << " |\n";
        tsv << r.name << '\t' << (r.passed ? "pass" : "fail") << '\t' << r.cases << '\t' << r.note << '\t'
            << r.counterexample << '\n';
    }
    out.record.ok = ok;
    out.record.result = {{"properties", arr}};
    out.md = md.str();
    out.tsv = tsv.str();
}

struct VerifyArgs {
    Common c;
    int trials = 500;
    int invariant_trials = 100;
};

Output run_verify(const VerifyArgs& a) {
    AlgebraContext ctx = make_context(a.c);
    Range deg = parse_range(a.c.degree), ord = parse_range(a.c.order);
    if (ctx.r && ord.hi > *ctx.r) throw ValidationError("order range exceeds r");
    Grid grid{deg.lo, deg.hi, ord.lo, ord.hi};
    Grid positive = grid;
    positive.min_order = std::max(1, grid.min_order);

    std::vector<CheckResult> all;
    auto add = [&](std::vector<CheckResult> v) { all.insert(all.end(), v.begin(), v.end()); };
    add(derivation_identity_suite(ctx.q, a.c.seed, a.trials, std::min(deg.hi, 6), std::min(ord.hi, 5)));
    add(ideal_stability_suite(ctx, grid));
    if (ctx.q >= 2) all.push_back(sigma_prime_instability_witness(ctx.q));
    if (ctx.variant != Variant::WPlus) {
        if (positive.min_order <= positive.max_order) add(structure_suite(ctx, positive));
        all.push_back(eigen_decomposition(ctx, grid));
    }
    all.push_back(delta_injectivity(ctx, grid));
    if (!ctx.r && ctx.variant == Variant::W) all.push_back(rho_rigidity(ctx.q, grid));
    if (ctx.q == 1 && ctx.variant == Variant::W) all.push_back(type_1b_vanishing(grid));
    add(invariants_suite(a.c.seed, a.invariant_trials));

    Output out;
    out.record.command = "verify";
    out.record.config = echo(a.c);
    out.record.config["degree"] = range_json(deg);
    out.record.config["order"] = range_json(ord);
    out.record.config["trials"] = a.trials;
    out.record.config["invariant_trials"] = a.invariant_trials;
    check_tables(all, out);
    return out;
}

// report-section10

Output run_codim1_report(const Common& c) {
    if (c.q != 1) throw ValidationError("report-section10 needs q = 1");
    if (c.format == "tsv") throw ValidationError("report-section10 writes json or md");
    Output out;
    out.record.command = "report-section10";
    out.record.config = {{"q", 1}, {"r", "inf"}, {"variant", "W"}, {"seed", c.seed}, {"format", c.format}};
    out.record.result = codim1_report();
    out.record.ok = out.record.result["ok"].get<bool>();
    out.md = codim1_markdown(out.record.result);
    return out;
}

// invariants eval

struct EvalArgs {
    Common c;
    int r = 1;
    std::string matrix;
    std::string convention = "as-defined";
};

QTruncPolyMatrix matrix_from_json(const json& j, int q, int r) {
    if (!j.is_array() || static_cast<int>(j.size()) != r + 1)
        throw ParseError("--matrix needs r + 1 matrices");
    QTruncPolyMatrix x(q, r);
    for (int l = 0; l <= r; ++l) {
        const auto& m = j[l];
        if (!m.is_array() || static_cast<int>(m.size()) != q) throw ParseError("--matrix: each matrix needs q rows");
        for (int i = 0; i < q; ++i) {
            if (!m[i].is_array() || static_cast<int>(m[i].size()) != q)
                throw ParseError("--matrix: each row needs q entries");
            for (int k = 0; k < q; ++k) {
                const auto& e = m[i][k];
                x[l](i, k) = e.is_string() ? parse_rational(e.get<std::string>())
                                           : e.is_number_integer() ? Rational(e.get<long>())
                                                                   : throw ParseError("--matrix entries are \"p/q\" strings");
            }
        }
    }
    return x;
}

Output run_eval(const EvalArgs& a) {
    const int q = a.c.q, r = a.r;
    if (q < 1 || r < 0) throw ValidationError("invariants eval needs q >= 1, r >= 0");
    JetConvention conv;
    if (a.convention == "as-defined")
        conv = JetConvention::AsDefined;
    else if (a.convention == "derivative")
        conv = JetConvention::Derivative;
    else
        throw ValidationError("--convention is as-defined or derivative");
    QTruncPolyMatrix x(q, r);
    if (!a.matrix.empty()) {
        json j;
        try {
            j = json::parse(a.matrix);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("--matrix: ") + e.what());
        }
        x = matrix_from_json(j, q, r);
    } else {
        std::mt19937_64 rng(a.c.seed);
        x = random_trunc_matrix(rng, q, r, false);
    }

    json mats = json::array();
    for (int l = 0; l <= r; ++l) mats.push_back(to_json(x[l]));
    json values = json::array();
    std::ostringstream md, tsv;
    md << "| k | l | C_kl | C'_kl | c_kl |\n|---|---|---|---|---|\n";
    tsv << "k\tl\tC_kl\tCprime_kl\tc_kl\n";
    auto txt = [](const ScaledInvariantValue& v) {
        return to_string(v.rational_part) + " (-1/2pi)^" + std::to_string(v.pi_exponent);
    };
    for (int k = 1; k <= q; ++k)
        for (int l = 0; l <= r; ++l) {
            auto C = C_kl(x, k, l), Cp = Cprime_kl(x, k, l), ck = c_kl(x, k, l, conv);
            values.push_back({{"k", k}, {"l", l}, {"C_kl", to_json(C)}, {"Cprime_kl", to_json(Cp)}, {"c_kl", to_json(ck)}});
            md << "| " << k << " | " << l << " | " << txt(C) << " | " << txt(Cp) << " | " << txt(ck) << " |\n";
            tsv << k << '\t' << l << '\t' << txt(C) << '\t' << txt(Cp) << '\t' << txt(ck) << '\n';
        }
    // tr X(t)^k against the block power traces
    json tau = json::array();
    bool tau_ok = true;
    for (int k = 1; k <= q; ++k) {
        auto series = trace_power_series(x, k);
        auto blocks = power_blocks(x, k);
        json row = json::array();
        for (int l = 0; l <= r; ++l) {
            bool eq = series[l] == blocks[l].trace();
            tau_ok = tau_ok && eq;
            row.push_back({{"l", l}, {"series", to_json(series[l])}, {"block_trace", to_json(Rational(blocks[l].trace()))}, {"equal", eq}});
        }
        tau.push_back({{"k", k}, {"coefficients", row}});
    }
    md << "\ntau identity: " << (tau_ok ? "holds" : "FAILS") << "\n";

    Output out;
    out.record.command = "invariants eval";
    out.record.config = {{"q", q}, {"r", r}, {"seed", a.c.seed}, {"convention", a.convention}, {"format", a.c.format},
                         {"matrix_source", a.matrix.empty() ? "seed" : "argument"}};
    out.record.result = {{"matrix", mats}, {"values", values}, {"tau", tau}};
    out.record.ok = tau_ok;
    out.md = md.str();
    out.tsv = tsv.str();
    return out;
}

struct InvCheckArgs {
    Common c;
    int trials = 100;
    int max_q = 3;
    int max_r = 3;
};

Output run_inv_check(const InvCheckArgs& a) {
    if (a.max_q < 1 || a.max_r < 0 || a.trials < 0) throw ValidationError("invariants check: bad bounds");
    Output out;
    out.record.command = "invariants check";
    out.record.config = {{"seed", a.c.seed}, {"trials", a.trials}, {"max_q", a.max_q}, {"max_r", a.max_r}, {"format", a.c.format}};
    check_tables(invariants_suite(a.c.seed, a.trials, a.max_q, a.max_r), out);
    return out;
}

int emit(Output out, const Common& c, double seconds) {
    if (c.timing) out.record.wall_seconds = seconds;
    std::string text;
    if (c.format == "json") {
        text = out.record.to_json().dump(2) + "\n";
    } else if (c.format == "md") {
        std::ostringstream h;
        h << "# defw " << out.record.command << "\n\nengine " << kEngineVersion << ", config `"
          << out.record.config.dump() << "`";
        if (out.record.wall_seconds) h << ", " << *out.record.wall_seconds << " s";
        h << "\n\n";
        text = h.str() + out.md;
    } else {
        text = out.tsv;
    }
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw ValidationError("cannot write " + c.out);
        f << text;
    }
    return out.record.ok ? 0 : 1;
}

void add_common(CLI::App* s, Common& c, bool algebra) {
    if (algebra) {
        s->add_option("--q", c.q, "codimension")->check(CLI::PositiveNumber);
        s->add_option("--r", c.r, "jet order bound, integer or inf");
        s->add_option("--variant", c.variant, "W, Wprime, Wplus or free");
    }
    s->add_option("--seed", c.seed, "seed for randomized suites");
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "md", "tsv"}));
    s->add_option("--out", c.out, "output path (default stdout)");
    s->add_flag("--timing", c.timing, "include wall time");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology of truncated Weil algebras and their derivations", "defw"};
    app.require_subcommand(1);

    CohomologyArgs coh;
    auto* s_coh = app.add_subcommand("cohomology", "dimensions and bases over a grid");
    add_common(s_coh, coh.c, true);
    s_coh->add_option("--degree", coh.c.degree, "A..B or N")->required();
    s_coh->add_option("--order", coh.c.order, "A..B or N")->required();
    s_coh->add_option("--type", coh.type, "a,b (q = 1)");
    s_coh->add_option("--f-lambda", coh.f_lambda, "restrict to the eigenvalue p/q of delta sigma");

    VerifyArgs ver;
    ver.c.degree = "0..6";
    ver.c.order = "0..3";
    auto* s_ver = app.add_subcommand("verify", "run the property suites");
    add_common(s_ver, ver.c, true);
    s_ver->add_option("--degree", ver.c.degree, "A..B or N");
    s_ver->add_option("--order", ver.c.order, "A..B or N");
    s_ver->add_option("--trials", ver.trials, "randomized trials per identity")->check(CLI::NonNegativeNumber);
    s_ver->add_option("--invariant-trials", ver.invariant_trials, "trials for the invariants suite")
        ->check(CLI::NonNegativeNumber);

    Common cr;
    cr.format = "md";
    auto* s_cr = app.add_subcommand("report-section10", "codimension one report");
    add_common(s_cr, cr, false);
    s_cr->add_option("--q", cr.q, "must be 1");

    auto* s_inv = app.add_subcommand("invariants", "invariant polynomials of the jet group");
    s_inv->require_subcommand(1);
    EvalArgs ev;
    auto* s_eval = s_inv->add_subcommand("eval", "evaluate C, C' and c on one element");
    add_common(s_eval, ev.c, false);
    s_eval->add_option("--q", ev.c.q, "matrix size")->check(CLI::PositiveNumber);
    s_eval->add_option("--r", ev.r, "jet order")->check(CLI::NonNegativeNumber);
    s_eval->add_option("--matrix", ev.matrix, "JSON list of r+1 q-by-q matrices of \"p/q\" strings");
    s_eval->add_option("--convention", ev.convention, "as-defined or derivative");
    InvCheckArgs ic;
    auto* s_ichk = s_inv->add_subcommand("check", "randomized invariance suite");
    add_common(s_ichk, ic.c, false);
    s_ichk->add_option("--trials", ic.trials, "random conjugations");
    s_ichk->add_option("--max-q", ic.max_q, "largest q");
    s_ichk->add_option("--max-r", ic.max_r, "largest r");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
    try {
        if (*s_coh) {
            auto o = run_cohomology(coh);
            return emit(std::move(o), coh.c, elapsed());
        }
        if (*s_ver) {
            auto o = run_verify(ver);
            return emit(std::move(o), ver.c, elapsed());
        }
        if (*s_cr) {
            auto o = run_codim1_report(cr);
            return emit(std::move(o), cr, elapsed());
        }
        if (*s_eval) {
            auto o = run_eval(ev);
            return emit(std::move(o), ev.c, elapsed());
        }
        if (*s_ichk) {
            auto o = run_inv_check(ic);
            return emit(std::move(o), ic.c, elapsed());
        }
    } catch (const ValidationError& e) {
        std::cerr << "defw: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "defw: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        std::cerr << "defw: " << e.what() << "\n";
        return 2;
    } catch (const OrderOverflowError& e) {
        std::cerr << "defw: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
