#include "motso/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "motso/error.hpp"
#include "motso/milnor.hpp"
#include "motso/motivic.hpp"
#include "motso/parse.hpp"
#include "motso/rings.hpp"
#include "motso/verify.hpp"
#include "motso/weightfilt.hpp"

namespace motso::cli {

namespace {

using motivic::Model;

constexpr unsigned kDefaultSeed = 20240802;

// Resolve --out against MOTSO_GOLDEN_DIR for relative paths.
std::filesystem::path resolve_out(const std::string& out_path) {
    std::filesystem::path p(out_path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("MOTSO_GOLDEN_DIR")) return std::filesystem::path(dir) / p;
    }
    return p;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
        return;
    }
    auto p = resolve_out(out_path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << text;
}

// Run fn(d) for d in [0, maxdeg] on a small worker pool; results are
// consumed in degree order regardless of completion order.
void for_each_degree(int maxdeg, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1) {
        for (int d = 0; d <= maxdeg; ++d) fn(d);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(jobs, maxdeg + 1);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int d = next.fetch_add(1); d <= maxdeg; d = next.fetch_add(1)) fn(d);
        });
    for (auto& th : pool) th.join();
}

Model model_with_torsion(const std::string& group, int maxdeg) {
    Model model = motivic::parse_model(group);
    if (model.kind() == Model::Kind::SO && model.n() % 2 == 0 && model.n() >= 4) {
        auto y = motivic::compute_Y(model.n() / 2, maxdeg);
        return model.with_torsion(y.table);
    }
    return model;
}

int cmd_dims(const std::string& group, int maxdeg, const std::string& format,
             const std::string& out_path, int jobs, std::ostream& out, std::ostream& err) {
    Model model = model_with_torsion(group, maxdeg);
    if (maxdeg >= 12) err << "tabulating " << model.label() << " up to degree " << maxdeg << "\n";
    // warm the per-degree caches, possibly in parallel
    for_each_degree(maxdeg, jobs, [&](int d) { (void)model.basis(d); });
    if (format == "json") {
        emit(motivic::dims_json(model, maxdeg), out_path, out);
    } else if (format == "csv") {
        emit(motivic::dims_csv(model, maxdeg), out_path, out);
    } else {
        std::ostringstream os;
        os << "# " << model.label() << "\n";
        os << "degree twist dim torsion_dim\n";
        for (int d = 0; d <= maxdeg; ++d)
            for (int j = (d + 1) / 2; j <= d; ++j)
                os << d << " " << j << " " << model.motivic_dim(d, j) << " "
                   << model.torsion_dim(d, j) << "\n";
        emit(os.str(), out_path, out);
    }
    return 0;
}

int cmd_weight(const std::string& group, const std::string& cls, std::ostream& out) {
    Model model = motivic::parse_model(group);
    int w = 0;
    if (model.kind() == Model::Kind::BO) {
        auto p = parse::parse_x_class(cls, std::size_t(model.n()));
        w = wfilt::weight_bo(std::size_t(model.n()), p);
    } else if (model.kind() == Model::Kind::BOQuot) {
        auto R = rings::RingPresentation::quot_bo(model.n(), 1);
        auto p = parse::parse_generator_class(cls, R.gen_names());
        w = wfilt::weight_in_quotient(R, p, R.degree(p));
    } else {
        auto R = rings::RingPresentation::bso(model.n());
        auto p = parse::parse_generator_class(cls, R.gen_names());
        w = wfilt::weight_bso(model.n(), p);
    }
    out << w << "\n";
    return 0;
}

int cmd_qop(int k, int n, const std::string& group, const std::string& cls, std::ostream& out) {
    if (!group.empty()) {
        Model model = motivic::parse_model(group);
        if (model.kind() != Model::Kind::SO)
            throw std::invalid_argument("qop --group expects bso:N");
        auto bso = rings::RingPresentation::bso(model.n());
        auto p = parse::parse_generator_class(cls, bso.gen_names());
        // re-index into w_1..w_n slots for the BSO action
        poly::detail::MonomialList shifted;
        for (const auto& mono : p.monomials()) {
            poly::ExponentVector e(std::size_t(model.n()), 0);
            for (std::size_t s = 0; s < mono.size(); ++s) e[s + 1] = mono[s];
            shifted.push_back(std::move(e));
        }
        auto q = milnor::apply_Q_so(
            k, poly::WPoly::from_monomials(std::size_t(model.n()), std::move(shifted)),
            std::size_t(model.n()));
        poly::detail::MonomialList back;
        for (const auto& mono : q.monomials())
            back.push_back(poly::ExponentVector(mono.begin() + 1, mono.end()));
        out << parse::print_w(poly::WPoly::from_monomials(bso.ngens(), std::move(back)),
                              bso.gen_names())
            << "\n";
        return 0;
    }
    auto p = parse::parse_x_class(cls, std::size_t(n));
    auto q = milnor::apply_Q(k, p);
    out << (poly::is_symmetric(q) ? parse::print_monomial_basis(q) : parse::print_x(q)) << "\n";
    return 0;
}

int cmd_wilson(int n, int d, bool admissibility, const std::string& format,
               const std::string& out_path, std::ostream& out) {
    auto elems = wfilt::wilson_basis(std::size_t(n), d, admissibility);
    auto rep = wfilt::verify_wilson_decomposition(std::size_t(n), d, admissibility);
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        std::map<int, int> histogram;
        for (const auto& e : elems) {
            nlohmann::json r{{"lambda", e.lambda.to_string()},
                             {"applied_qs", e.applied_qs},
                             {"weight", e.weight()}};
            rows.push_back(std::move(r));
            ++histogram[e.weight()];
        }
        nlohmann::json hist = nlohmann::json::object();
        for (auto [w, c] : histogram) hist[std::to_string(w)] = c;
        nlohmann::json j{{"n", n},
                         {"degree", d},
                         {"count", rep.count},
                         {"dim", rep.dim},
                         {"rank", rep.rank},
                         {"weight_histogram", hist},
                         {"pass", rep.pass()},
                         {"elements", rows}};
        emit(j.dump(2), out_path, out);
    } else {
        std::ostringstream os;
        for (const auto& e : elems) {
            os << "m" << e.lambda.to_string();
            if (!e.applied_qs.empty()) {
                os << " <-";
                for (int q : e.applied_qs) os << " Q" << q;
            }
            os << "  weight " << e.weight() << "\n";
        }
        os << "count " << rep.count << ", dim " << rep.dim << ", rank " << rep.rank << " -> "
           << (rep.pass() ? "ok" : "MISMATCH") << "\n";
        emit(os.str(), out_path, out);
    }
    return rep.pass() ? 0 : 1;
}

int cmd_kernel(int m, int maxdeg, bool closed_form, const std::string& format,
               const std::string& out_path, std::ostream& out) {
    motivic::DimTable table;
    if (closed_form) {
        motivic::TorsionModule tm(m);
        for (int d = 0; d <= maxdeg; ++d)
            for (int j = (d + 1) / 2; j <= d; ++j) table.add(d, j, tm.hilbert(d, j));
    } else {
        table = motivic::compute_Y(m, maxdeg).table;
    }
    std::string group = "BSO_" + std::to_string(2 * m);
    if (format == "json") {
        nlohmann::json entries = nlohmann::json::array();
        for (int d = 0; d <= maxdeg; ++d)
            for (int j = (d + 1) / 2; j <= d; ++j) {
                int v = table.at(d, j);
                if (v)
                    entries.push_back(
                        {{"degree", d}, {"twist", j}, {"dim", v}, {"torsion_dim", v}});
            }
        nlohmann::json jo{{"group", group}, {"kind", "kernel"}, {"entries", entries}};
        emit(jo.dump(2), out_path, out);
    } else if (format == "csv") {
        std::ostringstream os;
        os << "group,degree,twist,dim,torsion_dim\n";
        for (int d = 0; d <= maxdeg; ++d)
            for (int j = (d + 1) / 2; j <= d; ++j) {
                int v = table.at(d, j);
                if (v) os << group << "," << d << "," << j << "," << v << "," << v << "\n";
            }
        emit(os.str(), out_path, out);
    } else {
        std::ostringstream os;
        os << "# Ker t on " << group << (closed_form ? " (closed form)" : " (computed)") << "\n";
        for (int d = 0; d <= maxdeg; ++d)
            for (int j = (d + 1) / 2; j <= d; ++j)
                if (table.at(d, j)) os << "(" << d << "," << j << "): " << table.at(d, j) << "\n";
        emit(os.str(), out_path, out);
    }
    return 0;
}

struct VerifyOutcome {
    bool pass = false;
    nlohmann::json detail;
};

void report_verify(const std::string& name, const VerifyOutcome& oc, const std::string& format,
                   const std::string& out_path, std::ostream& out) {
    if (format == "json") {
        nlohmann::json j{{"check", name}, {"pass", oc.pass}, {"detail", oc.detail}};
        emit(j.dump(2), out_path, out);
    } else {
        std::ostringstream os;
        os << (oc.pass ? "PASS" : "FAIL") << " " << name;
        if (!oc.detail.is_null() && !oc.pass) os << "  " << oc.detail.dump();
        os << "\n";
        emit(os.str(), out_path, out);
    }
}

VerifyOutcome verify_theorem(int m, int maxdeg, bool perturbed, std::ostream& err) {
    VerifyOutcome oc;
    err << "verifying Ker t for BSO_" << 2 * m << " up to degree " << maxdeg << "\n";
    auto rep = motivic::verify_main_theorem(m, maxdeg, perturbed);
    oc.pass = rep.all_pass();
    nlohmann::json mism = nlohmann::json::array();
    for (const auto& r : rep.rows)
        if (!r.pass())
            mism.push_back({{"degree", r.d}, {"twist", r.j}, {"computed", r.computed},
                            {"closed_form", r.closed_form}});
    oc.detail = {{"m", m}, {"maxdeg", maxdeg}, {"mismatches", mism}};
    return oc;
}

VerifyOutcome verify_wilson(int n, int maxdeg, bool admissibility, std::ostream& err) {
    VerifyOutcome oc;
    err << "verifying Wilson decomposition for BO_" << n << " up to degree " << maxdeg << "\n";
    auto rep = verify::wilson_range(std::size_t(n), maxdeg, admissibility);
    oc.pass = rep.all_pass();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        if (!r.pass())
            rows.push_back({{"d", r.d}, {"count", r.count}, {"dim", r.dim}, {"rank", r.rank}});
    oc.detail = {{"n", n}, {"failures", rows}};
    return oc;
}

VerifyOutcome verify_strict(int n, int maxdeg, std::ostream& err) {
    VerifyOutcome oc;
    err << "verifying strictness of kappa* for n = " << n << "\n";
    auto rep = wfilt::verify_strictness(n, maxdeg);
    oc.pass = rep.all_pass();
    oc.detail = {{"n", n}, {"injective", rep.injective}, {"first_failure", rep.first_failure()}};
    return oc;
}

VerifyOutcome verify_iota_control(int m, int maxdeg, std::ostream& err) {
    VerifyOutcome oc;
    err << "negative control: iota* strictness must fail at w_" << 2 * m << "\n";
    auto rep = wfilt::iota_strictness_control(m, maxdeg);
    bool failed_at_top = false;
    for (const auto& r : rep.rows)
        if (r.d == 2 * m && r.omega == 2 * m - 2 && !r.pass()) failed_at_top = true;
    oc.pass = failed_at_top;
    oc.detail = {{"m", m}, {"failed_at_top_class", failed_at_top}};
    return oc;
}

VerifyOutcome verify_exactness(int mmax, int maxdeg, std::ostream& err) {
    VerifyOutcome oc;
    oc.pass = true;
    nlohmann::json parts = nlohmann::json::array();
    for (int m = 1; m <= mmax; ++m) {
        err << "sequence (2.3)-level checks at m = " << m << "\n";
        int n = 2 * m + 1;
        bool topo = true;
        for (int d = 1; d <= maxdeg; ++d) {
            auto km = map_matrix(rings::kappa_star(n), d);
            rings::DeltaTop dt(n, d);
            auto dm = dt.matrix();
            std::size_t tail_dim = rings::RingPresentation::bso(n - 2).poly_dim(d - 1);
            if (gf2::rank(km) != km.cols || gf2::rank(dm) != tail_dim ||
                gf2::rank(km) + gf2::rank(dm) != km.rows)
                topo = false;
        }
        err << "motivic short exact sequence at m = " << m << "\n";
        auto ses = motivic::ses_odd(m, maxdeg);
        parts.push_back({{"m", m}, {"topological", topo}, {"motivic", ses.all_pass()}});
        oc.pass = oc.pass && topo && ses.all_pass();
    }
    oc.detail = parts;
    return oc;
}

VerifyOutcome verify_milnor(int samples, unsigned seed, std::ostream& err) {
    VerifyOutcome oc;
    err << "running " << samples << " randomized Milnor-law samples (seed " << seed << ")\n";
    auto rep = verify::milnor_laws(samples, seed);
    oc.pass = rep.pass();
    oc.detail = {{"samples", rep.samples}, {"failures", rep.failures}, {"seed", rep.seed}};
    return oc;
}

VerifyOutcome verify_weights(int nmax, std::ostream& err) {
    VerifyOutcome oc;
    err << "weight tables up to n = " << nmax << "\n";
    auto rep = verify::weight_tables(nmax);
    oc.pass = rep.all_pass();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        if (!r.pass())
            rows.push_back({{"group", r.group}, {"l", r.l}, {"got", r.got}, {"want", r.want}});
    oc.detail = {{"nmax", nmax}, {"failures", rows}};
    return oc;
}

VerifyOutcome verify_weightcomp(int m, int maxdeg, std::ostream& err) {
    VerifyOutcome oc;
    err << "weight comparisons for m = " << m << " up to degree " << maxdeg << "\n";
    auto rep = motivic::verify_weight_comparison(m, maxdeg);
    oc.pass = rep.all_pass();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        if (!r.pass)
            rows.push_back({{"z", r.z.to_string()},
                            {"weight_top", r.weight_top},
                            {"weight_mixed", r.weight_mixed}});
    oc.detail = {{"m", m}, {"failures", rows}};
    return oc;
}

VerifyOutcome verify_qso(int nmax, std::ostream& err) {
    VerifyOutcome oc;
    err << "Q_0 w_{2l} = w_{2l+1} in BSO_n up to n = " << nmax << "\n";
    auto rep = verify::qso_table(nmax);
    oc.pass = rep.all_pass();
    oc.detail = {{"nmax", nmax}};
    return oc;
}

VerifyOutcome verify_torsion(int m, int maxdeg, std::ostream& err) {
    VerifyOutcome oc;
    err << "torsion sanity for m = " << m << "\n";
    auto rep = verify::torsion_sanity(m, maxdeg);
    oc.pass = rep.pass();
    oc.detail = {{"m", m},
                 {"twist_gap", rep.twist_gap},
                 {"tau_annihilates", rep.tau_annihilates},
                 {"chern_only", rep.chern_only}};
    return oc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mod-2 cohomology of BO_n/BSO_n: weight filtrations and the kernel of realization"};
    app.require_subcommand(1);

    std::string group, cls, format = "text", out_path;
    int maxdeg = 12, n = 3, d = 0, k = 0, m = 2, jobs = 1;
    int samples = 1000, nmax = 8;
    unsigned seed = kDefaultSeed;
    bool no_admissibility = false, closed_form = false, perturbed = false, iota_control = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text | json | csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", out_path,
                        "write to this file (relative paths resolve against MOTSO_GOLDEN_DIR)");
    };

    auto* dims = app.add_subcommand("dims", "motivic dimension table of a group");
    dims->add_option("--group", group, "bo:N, bso:N, bo:N/c1, bso:N/cN")->required();
    dims->add_option("--max-degree", maxdeg, "top degree")->required();
    dims->add_option("--jobs", jobs, "worker threads for per-degree work");
    add_format(dims);

    auto* weight = app.add_subcommand("weight", "weight of a class");
    weight->add_option("--group", group)->required();
    weight->add_option("--class", cls, "class in the shared grammar")->required();

    auto* qop = app.add_subcommand("qop", "apply a Milnor operation");
    qop->add_option("--k", k, "operation index")->required();
    qop->add_option("--n", n, "ambient variable count (x-grammar classes)");
    qop->add_option("--group", group, "bso:N to act on the BSO presentation");
    qop->add_option("--class", cls)->required();

    auto* wilson = app.add_subcommand("wilson", "Wilson basis of a degree");
    wilson->add_option("--n", n)->required();
    wilson->add_option("--degree", d)->required();
    wilson->add_flag("--no-admissibility", no_admissibility, "negative control");
    add_format(wilson);

    auto* kernel = app.add_subcommand("kernel", "Ker t dimension table for BSO_{2m}");
    kernel->add_option("--m", m)->required();
    kernel->add_option("--max-degree", maxdeg)->required();
    kernel->add_flag("--closed-form", closed_form, "emit the closed-form Hilbert values");
    add_format(kernel);

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->require_subcommand(1);
    auto* v_theorem = verify_cmd->add_subcommand("theorem", "Ker t vs closed form");
    v_theorem->add_option("--m", m)->required();
    v_theorem->add_option("--max-degree", maxdeg)->required();
    v_theorem->add_flag("--perturbed", perturbed, "negative control");
    add_format(v_theorem);
    auto* v_wilson = verify_cmd->add_subcommand("wilson", "Wilson decomposition over a range");
    v_wilson->add_option("--n", n)->required();
    v_wilson->add_option("--max-degree", maxdeg)->required();
    v_wilson->add_flag("--no-admissibility", no_admissibility);
    add_format(v_wilson);
    auto* v_strict = verify_cmd->add_subcommand("strictness", "kappa* strictness");
    v_strict->add_option("--n", n);
    v_strict->add_option("--m", m);
    v_strict->add_option("--max-degree", maxdeg)->required();
    v_strict->add_flag("--iota-control", iota_control,
                       "check the iota* negative control instead");
    add_format(v_strict);
    auto* v_exact = verify_cmd->add_subcommand("exactness", "sequences (2.3)-level and (2.5)-level");
    v_exact->add_option("--m", m)->required();
    v_exact->add_option("--max-degree", maxdeg)->required();
    add_format(v_exact);
    auto* v_milnor = verify_cmd->add_subcommand("milnor", "randomized Milnor laws");
    v_milnor->add_option("--samples", samples);
    v_milnor->add_option("--seed", seed);
    add_format(v_milnor);
    auto* v_weights = verify_cmd->add_subcommand("weights", "weight tables");
    v_weights->add_option("--n-max", nmax);
    add_format(v_weights);
    auto* v_qso = verify_cmd->add_subcommand("qso", "Q_0 on BSO Stiefel-Whitney classes");
    v_qso->add_option("--n-max", nmax);
    add_format(v_qso);
    auto* v_wcomp = verify_cmd->add_subcommand("weightcomp", "top-class weight comparisons");
    v_wcomp->add_option("--m", m)->required();
    v_wcomp->add_option("--max-degree", maxdeg)->required();
    add_format(v_wcomp);
    auto* v_torsion = verify_cmd->add_subcommand("torsion", "torsion sanity");
    v_torsion->add_option("--m", m)->required();
    v_torsion->add_option("--max-degree", maxdeg)->required();
    add_format(v_torsion);
    auto* v_all = verify_cmd->add_subcommand("all", "the full acceptance set at spec scale");
    v_all->add_option("--seed", seed);
    add_format(v_all);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (dims->parsed()) return cmd_dims(group, maxdeg, format, out_path, jobs, out, err);
        if (weight->parsed()) return cmd_weight(group, cls, out);
        if (qop->parsed()) return cmd_qop(k, n, group, cls, out);
        if (wilson->parsed()) return cmd_wilson(n, d, !no_admissibility, format, out_path, out);
        if (kernel->parsed()) return cmd_kernel(m, maxdeg, closed_form, format, out_path, out);
        if (verify_cmd->parsed()) {
            VerifyOutcome oc;
            std::string name;
            if (v_theorem->parsed()) {
                name = "theorem";
                oc = verify_theorem(m, maxdeg, perturbed, err);
                if (perturbed) {
                    oc.pass = !oc.pass;  // the control is expected to break
                    name = "theorem (perturbed control)";
                }
            } else if (v_wilson->parsed()) {
                name = "wilson";
                oc = verify_wilson(n, maxdeg, !no_admissibility, err);
                if (no_admissibility) {
                    oc.pass = !oc.pass;
                    name = "wilson (no-admissibility control)";
                }
            } else if (v_strict->parsed()) {
                if (iota_control) {
                    name = "strictness (iota control)";
                    oc = verify_iota_control(m, maxdeg, err);
                } else {
                    name = "strictness";
                    oc = verify_strict(n, maxdeg, err);
                }
            } else if (v_exact->parsed()) {
                name = "exactness";
                oc = verify_exactness(m, maxdeg, err);
            } else if (v_milnor->parsed()) {
                name = "milnor";
                oc = verify_milnor(samples, seed, err);
            } else if (v_weights->parsed()) {
                name = "weights";
                oc = verify_weights(nmax, err);
            } else if (v_qso->parsed()) {
                name = "qso";
                oc = verify_qso(nmax, err);
            } else if (v_wcomp->parsed()) {
                name = "weightcomp";
                oc = verify_weightcomp(m, maxdeg, err);
            } else if (v_torsion->parsed()) {
                name = "torsion";
                oc = verify_torsion(m, maxdeg, err);
            } else if (v_all->parsed()) {
                name = "all";
                bool all = true;
                auto step = [&](const std::string& label, const VerifyOutcome& sub) {
                    out << (sub.pass ? "PASS " : "FAIL ") << label << "\n";
                    all = all && sub.pass;
                };
                step("milnor laws", verify_milnor(1000, seed, err));
                for (int nn = 1; nn <= 5; ++nn)
                    step("wilson n=" + std::to_string(nn), verify_wilson(nn, 16, true, err));
                {
                    auto ctrl = verify_wilson(3, 6, false, err);
                    ctrl.pass = !ctrl.pass;
                    step("wilson negative control", ctrl);
                }
                step("weights", verify_weights(8, err));
                step("qso", verify_qso(8, err));
                for (int nn = 3; nn <= 6; ++nn)
                    step("strictness n=" + std::to_string(nn), verify_strict(nn, 12, err));
                step("iota control", verify_iota_control(2, 6, err));
                step("exactness", verify_exactness(3, 14, err));
                step("theorem m=2", verify_theorem(2, 20, false, err));
                step("theorem m=3", verify_theorem(3, 16, false, err));
                {
                    auto ctrl = verify_theorem(3, 16, true, err);
                    ctrl.pass = !ctrl.pass;
                    step("theorem perturbed control", ctrl);
                }
                step("torsion m=2", verify_torsion(2, 20, err));
                step("torsion m=3", verify_torsion(3, 16, err));
                step("weightcomp m=2", verify_weightcomp(2, 14, err));
                step("weightcomp m=3", verify_weightcomp(3, 14, err));
                oc.pass = all;
                out << (all ? "ALL PASS" : "FAILURES PRESENT") << "\n";
                return all ? 0 : 1;
            }
            report_verify(name, oc, format, out_path, out);
            return oc.pass ? 0 : 1;
        }
    } catch (const parse::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace motso::cli
