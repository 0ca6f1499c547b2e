// pdm: command-line front end for the pdmdirac shared library.
//
// Subcommands: spectrum, scan, verify, expansion, wavefunction, ordering.
// Emits CSV (default) or JSON tables; run metadata goes into '#'-prefixed
// header comments so the data stays ingestible by standard tools.
//
// Exit codes: 0 success, 1 usage error, 2 physics-domain error
// (no bound state / fall to center), 3 numerical-verification failure.

#include "pdmdirac/pdmdirac.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using Cell = std::variant<double, long long, std::string, std::monostate>;

struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string cell_to_csv(const Cell& c)
{
    if (std::holds_alternative<double>(c))
        return format_double(std::get<double>(c));
    if (std::holds_alternative<long long>(c))
        return std::to_string(std::get<long long>(c));
    if (std::holds_alternative<std::string>(c))
        return std::get<std::string>(c);
    return "";
}

nlohmann::json cell_to_json(const Cell& c)
{
    if (std::holds_alternative<double>(c))
        return std::get<double>(c);
    if (std::holds_alternative<long long>(c))
        return std::get<long long>(c);
    if (std::holds_alternative<std::string>(c))
        return std::get<std::string>(c);
    return nullptr;
}

std::string render_csv(const Table& t)
{
    std::ostringstream os;
    for (const auto& c : t.comments)
        os << "# " << c << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << cell_to_csv(row[i]);
        os << "\n";
    }
    return os.str();
}

std::string render_json(const Table& t)
{
    nlohmann::json j;
    j["meta"] = t.comments;
    j["columns"] = t.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row)
            r.push_back(cell_to_json(c));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

int emit(const Table& t, const std::string& format, const std::string& output)
{
    const std::string text = format == "json" ? render_json(t) : render_csv(t);
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::filesystem::path path(output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("PDMDIRAC_OUTPUT_DIR"))
            path = std::filesystem::path(dir) / path;
    }
    std::ofstream os(path);
    if (!os) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return 1;
    }
    os << text;
    return 0;
}

int status_exit_code(pdm_status s)
{
    switch (s) {
    case PDM_OK: return 0;
    case PDM_ERR_INVALID_ARGUMENT: return 1;
    case PDM_ERR_NO_BOUND_STATE:
    case PDM_ERR_FALL_TO_CENTER: return 2;
    case PDM_ERR_NUMERICAL: return 3;
    }
    return 3;
}

[[noreturn]] void die(pdm_status s, const std::string& context)
{
    std::cerr << "error (" << pdm_status_name(s) << "): " << context;
    const char* detail = pdm_last_error();
    if (detail && *detail)
        std::cerr << ": " << detail;
    std::cerr << "\n";
    std::exit(status_exit_code(s));
}

struct ModelHandle {
    pdm_model* ptr = nullptr;
    ModelHandle(double alpha, double a)
    {
        const pdm_status s = pdm_model_create(alpha, a, &ptr);
        if (s != PDM_OK)
            die(s, "model creation");
    }
    ~ModelHandle() { pdm_model_destroy(ptr); }
    ModelHandle(const ModelHandle&) = delete;
    ModelHandle& operator=(const ModelHandle&) = delete;
};

// --a and --abar are alternative parameterizations (a = abar * alpha);
// supplying both is a usage error.
struct ParamArgs {
    double alpha = 0.0;
    std::optional<double> a;
    std::optional<double> abar;

    double resolve_a() const
    {
        if (a && abar) {
            std::cerr << "error: supply either --a or --abar, not both\n";
            std::exit(1);
        }
        if (abar)
            return *abar * alpha;
        return a.value_or(0.0);
    }
};

void add_param_flags(CLI::App* cmd, ParamArgs& p)
{
    cmd->add_option("--alpha", p.alpha, "fine-structure constant")->check(CLI::NonNegativeNumber);
    auto* oa = cmd->add_option("--a", p.a, "mass parameter a in Compton units");
    auto* ob = cmd->add_option("--abar", p.abar, "mass parameter in classical-radius units");
    oa->excludes(ob);
}

struct StateId {
    int n_r, l, two_j;
};

std::vector<StateId> states_up_to(int n_max)
{
    std::vector<StateId> out;
    for (int n = 1; n <= n_max; ++n)
        for (int l = 0; l < n; ++l) {
            out.push_back({n - l - 1, l, 2 * l + 1});
            if (l >= 1)
                out.push_back({n - l - 1, l, 2 * l - 1});
        }
    return out;
}

std::vector<std::string> base_comments(const std::string& command, double alpha, double a)
{
    return {"pdmdirac " PDMDIRAC_VERSION, "command: " + command,
            "alpha=" + format_double(alpha) + " a=" + format_double(a)};
}

int cmd_spectrum(double alpha, double a, int n_max, const std::string& format,
                 const std::string& output)
{
    ModelHandle model(alpha, a);
    if (pdm_bound_state_kind(model.ptr) == 0) {
        std::cerr << "no bound states: a >= e^2/mc^2 (a=" << format_double(a)
                  << ", alpha=" << format_double(alpha) << ")\n";
        return 2;
    }
    Table t;
    t.comments = base_comments("spectrum", alpha, a);
    t.columns = {"n_r", "l", "j", "l_star", "n_star", "e_star_sq", "epsilon", "rydberg_shift"};
    for (const StateId& st : states_up_to(n_max)) {
        pdm_level lv;
        const pdm_status s = pdm_level_compute(model.ptr, st.n_r, st.l, st.two_j, &lv);
        if (s != PDM_OK)
            die(s, "level (n_r=" + std::to_string(st.n_r) + ", l=" + std::to_string(st.l) +
                       ", 2j=" + std::to_string(st.two_j) + ")");
        std::vector<Cell> row{static_cast<long long>(st.n_r), static_cast<long long>(st.l),
                              0.5 * st.two_j, lv.l_star, lv.n_star, lv.e_star_sq, lv.epsilon};
        if (alpha > 0.0)
            row.emplace_back((lv.epsilon - 1.0) / (0.5 * alpha * alpha));
        else
            row.emplace_back(std::monostate{});
        t.rows.push_back(std::move(row));
    }
    return emit(t, format, output);
}

int cmd_scan(double alpha, double a_min, double a_max, int steps, std::vector<int> excited,
             const std::string& format, const std::string& output)
{
    if (!(a_min <= a_max) || steps < 1) {
        std::cerr << "error: invalid scan range\n";
        return 1;
    }
    std::vector<double> grid;
    for (int i = 0; i <= steps; ++i)
        grid.push_back(a_min + (a_max - a_min) * i / steps);
    // always include the single-level boundary when it falls in range
    if (alpha >= a_min && alpha <= a_max &&
        std::find(grid.begin(), grid.end(), alpha) == grid.end())
        grid.insert(std::upper_bound(grid.begin(), grid.end(), alpha), alpha);

    Table t;
    t.comments = base_comments("scan", alpha, a_min);
    t.comments.push_back("a range [" + format_double(a_min) + ", " + format_double(a_max) + "]");
    t.columns = {"a", "status", "epsilon_ground"};
    for (int n_r : excited)
        t.columns.push_back("epsilon_nr" + std::to_string(n_r));
    for (double a : grid) {
        ModelHandle model(alpha, a);
        const int kind = pdm_bound_state_kind(model.ptr);
        std::vector<Cell> row{a};
        if (kind == 0) {
            row.emplace_back(std::string("unbound"));
            for (std::size_t i = 0; i < 1 + excited.size(); ++i)
                row.emplace_back(std::monostate{});
            t.rows.push_back(std::move(row));
            continue;
        }
        row.emplace_back(std::string(kind == 2 ? "boundary" : "bound"));
        double eps = 0.0;
        pdm_status s = pdm_ground_state_energy(model.ptr, &eps);
        if (s != PDM_OK)
            die(s, "ground state at a=" + format_double(a));
        row.emplace_back(eps);
        for (int n_r : excited) {
            pdm_level lv;
            s = pdm_level_compute(model.ptr, n_r, 0, 1, &lv);
            if (s == PDM_OK)
                row.emplace_back(lv.epsilon);
            else
                row.emplace_back(std::monostate{});
        }
        t.rows.push_back(std::move(row));
    }
    return emit(t, format, output);
}

int cmd_expansion(double alpha, double abar, int n_r, int l, int two_j,
                  const std::string& format, const std::string& output)
{
    Table t;
    t.comments = base_comments("expansion", alpha, abar * alpha);
    t.comments.push_back("abar=" + format_double(abar));
    t.columns = {"alpha", "abar",      "n_r",           "l",          "two_j",
                 "exact", "expansion", "rest_estimate", "residual"};
    double expansion = 0.0, rest = 0.0;
    pdm_status s = pdm_energy_expansion(alpha, abar, n_r, l, two_j, &expansion);
    if (s != PDM_OK)
        die(s, "expansion");
    s = pdm_rest_energy_estimate(alpha, abar, n_r, l, two_j, &rest);
    if (s != PDM_OK)
        die(s, "rest-energy estimate");
    ModelHandle model(alpha, abar * alpha);
    pdm_level lv;
    s = pdm_level_compute(model.ptr, n_r, l, two_j, &lv);
    if (s != PDM_OK)
        die(s, "exact level");
    t.rows.push_back({alpha, abar, static_cast<long long>(n_r), static_cast<long long>(l),
                      static_cast<long long>(two_j), lv.epsilon, expansion, rest,
                      std::abs(lv.epsilon - expansion)});
    return emit(t, format, output);
}

int cmd_wavefunction(double alpha, double a, int n_r, int l, int two_j, double r_min,
                     double r_max, int points, const std::string& format,
                     const std::string& output)
{
    ModelHandle model(alpha, a);
    pdm_wavefunction* wf = nullptr;
    pdm_status s = pdm_wavefunction_create(model.ptr, n_r, l, two_j, &wf);
    if (s != PDM_OK)
        die(s, "wavefunction construction");
    pdm_level info;
    pdm_wavefunction_info(wf, &info);

    std::vector<double> r(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        r[static_cast<std::size_t>(i)] = r_min + (r_max - r_min) * i / (points - 1);
    std::vector<double> val(r.size());
    s = pdm_wavefunction_eval(wf, r.data(), val.data(), r.size());
    if (s != PDM_OK) {
        pdm_wavefunction_destroy(wf);
        die(s, "wavefunction evaluation");
    }
    double norm_err = 0.0;
    pdm_wavefunction_norm_error(wf, &norm_err);
    pdm_wavefunction_destroy(wf);

    Table t;
    t.comments = base_comments("wavefunction", alpha, a);
    t.comments.push_back("n_r=" + std::to_string(n_r) + " l=" + std::to_string(l) +
                         " two_j=" + std::to_string(two_j));
    t.comments.push_back("l_star=" + format_double(info.l_star) +
                         " n_star=" + format_double(info.n_star) +
                         " e_star_sq=" + format_double(info.e_star_sq));
    t.comments.push_back("normalization_error=" + format_double(norm_err));
    t.columns = {"r", "R", "u"};
    for (std::size_t i = 0; i < r.size(); ++i)
        t.rows.push_back({r[i], val[i], r[i] * val[i]});
    return emit(t, format, output);
}

int cmd_verify(bool expansion_mode, std::optional<double> alpha_override,
               std::optional<double> a_override, const std::string& format,
               const std::string& output)
{
    Table t;
    bool all_pass = true;

    if (expansion_mode) {
        t.comments = {"pdmdirac " PDMDIRAC_VERSION, "command: verify --expansion",
                      "residual ratio between alpha=0.02 and alpha=0.01; target 64 +- 20%"};
        t.columns = {"abar", "n_r", "l", "two_j", "residual_a", "residual_b", "ratio", "pass"};
        for (double abar : {0.0, 0.3, 0.8}) {
            for (const StateId st : {StateId{0, 0, 1}, StateId{1, 0, 1}}) {
                double res[2];
                int k = 0;
                for (double alpha : {0.02, 0.01}) {
                    double residual = 0.0;
                    const pdm_status s = pdm_expansion_residual(alpha, abar, st.n_r, st.l,
                                                                st.two_j, &residual);
                    if (s != PDM_OK)
                        die(s, "expansion probe");
                    res[k++] = residual;
                }
                const double ratio = res[0] / res[1];
                const bool pass = ratio > 64.0 * 0.8 && ratio < 64.0 * 1.2;
                all_pass = all_pass && pass;
                t.rows.push_back({abar, static_cast<long long>(st.n_r),
                                  static_cast<long long>(st.l),
                                  static_cast<long long>(st.two_j), res[0], res[1], ratio,
                                  std::string(pass ? "pass" : "FAIL")});
            }
        }
        const int rc = emit(t, format, output);
        return rc != 0 ? rc : (all_pass ? 0 : 3);
    }

    const bool explicit_case = alpha_override || a_override;
    t.comments = {"pdmdirac " PDMDIRAC_VERSION, "command: verify",
                  "oracle vs analytic, tolerance 1e-6 relative"};
    t.columns = {"alpha",       "a",        "n_r",  "l",    "two_j",
                 "eps_analytic", "eps_oracle", "deviation", "status"};

    std::vector<double> alphas = {0.1, 0.3, 0.6};
    if (alpha_override)
        alphas = {*alpha_override};
    const std::vector<StateId> states = {{0, 0, 1}, {1, 0, 1}, {2, 0, 1},
                                         {0, 1, 3}, {1, 1, 3}, {2, 1, 3}};
    for (double alpha : alphas) {
        std::vector<double> as = {-0.5, 0.0, 0.5 * alpha};
        if (a_override)
            as = {*a_override};
        for (double a : as) {
            ModelHandle model(alpha, a);
            for (const StateId& st : states) {
                pdm_level lv;
                pdm_status s = pdm_level_compute(model.ptr, st.n_r, st.l, st.two_j, &lv);
                std::vector<Cell> row{alpha, a, static_cast<long long>(st.n_r),
                                      static_cast<long long>(st.l),
                                      static_cast<long long>(st.two_j)};
                if (s != PDM_OK) {
                    if (explicit_case)
                        die(s, "analytic level");
                    row.insert(row.end(), {std::monostate{}, std::monostate{},
                                           std::monostate{},
                                           std::string(pdm_status_name(s)) + ": " +
                                               pdm_last_error()});
                    t.rows.push_back(std::move(row));
                    all_pass = false;
                    continue;
                }
                pdm_oracle_result oracle;
                s = pdm_oracle_solve(model.ptr, st.n_r, st.l, st.two_j, nullptr, 1e-10,
                                     &oracle);
                if (s != PDM_OK) {
                    if (explicit_case)
                        die(s, "oracle solve");
                    row.insert(row.end(), {lv.epsilon, std::monostate{}, std::monostate{},
                                           std::string(pdm_status_name(s)) + ": " +
                                               pdm_last_error()});
                    t.rows.push_back(std::move(row));
                    all_pass = false;
                    continue;
                }
                const double dev = std::abs(oracle.epsilon - lv.epsilon) / lv.epsilon;
                const bool pass = dev < 1e-6;
                all_pass = all_pass && pass;
                row.insert(row.end(), {lv.epsilon, oracle.epsilon, dev,
                                       std::string(pass ? "pass" : "FAIL")});
                t.rows.push_back(std::move(row));
            }
        }
    }
    const int rc = emit(t, format, output);
    return rc != 0 ? rc : (all_pass ? 0 : 3);
}

int cmd_ordering(double a, double alpha, int l, std::vector<int> n_r_list,
                 const std::string& format, const std::string& output)
{
    const double orderings[][3] = {{-0.5, 0.0, -0.5}, {0.0, -1.0, 0.0}, {0.0, 0.0, -1.0}};
    const char* labels[] = {"symmetric(-1/2,0,-1/2)", "bdd(0,-1,0)", "onesided(0,0,-1)"};

    Table t;
    t.comments = base_comments("ordering", alpha, a);
    t.columns = {"n_r", "ordering", "E", "spread", "E_wkb"};
    for (int n_r : n_r_list) {
        std::vector<double> wkb(static_cast<std::size_t>(n_r) + 1);
        pdm_status s = pdm_wkb_levels(a, alpha, l, n_r, wkb.data());
        if (s != PDM_OK)
            die(s, "WKB levels");
        double spread = 0.0;
        s = pdm_ordering_spread(a, alpha, l, &orderings[0][0], 3, n_r, &spread);
        if (s != PDM_OK)
            die(s, "ordering spread");
        for (int k = 0; k < 3; ++k) {
            std::vector<double> ev(static_cast<std::size_t>(n_r) + 1);
            s = pdm_ordering_eigenvalues(a, alpha, l, orderings[k][0], orderings[k][1],
                                         orderings[k][2], nullptr, n_r + 1, ev.data());
            if (s != PDM_OK)
                die(s, std::string("eigenvalues for ordering ") + labels[k]);
            t.rows.push_back({static_cast<long long>(n_r), std::string(labels[k]),
                              ev[static_cast<std::size_t>(n_r)], spread,
                              wkb[static_cast<std::size_t>(n_r)]});
        }
    }
    return emit(t, format, output);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pdmdirac: Coulomb spectrum with position-dependent mass m*(r) = 1 + a/r"};
    app.require_subcommand(1);
    std::string format = "csv";
    std::string output;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", output,
                   "output file (relative paths resolve against $PDMDIRAC_OUTPUT_DIR)");

    ParamArgs sp_params;
    int sp_nmax = 3;
    auto* sp = app.add_subcommand("spectrum", "closed-form level table");
    add_param_flags(sp, sp_params);
    sp->add_option("--n-max", sp_nmax, "largest principal quantum number")
        ->check(CLI::PositiveNumber);

    double sc_alpha = 0.0, sc_amin = -3.0, sc_amax = 0.0;
    int sc_steps = 60;
    std::vector<int> sc_excited;
    auto* sc = app.add_subcommand("scan", "ground/excited energies over a range of a");
    sc->add_option("--alpha", sc_alpha)->check(CLI::NonNegativeNumber);
    sc->add_option("--a-min", sc_amin);
    sc->add_option("--a-max", sc_amax);
    sc->add_option("--steps", sc_steps)->check(CLI::PositiveNumber);
    sc->add_option("--excited", sc_excited, "extra s-state n_r values per row");

    bool vf_expansion = false;
    std::optional<double> vf_alpha, vf_a;
    auto* vf = app.add_subcommand("verify", "oracle and expansion verification suites");
    vf->add_flag("--expansion", vf_expansion, "run the expansion residual-ratio probe");
    vf->add_option("--alpha", vf_alpha, "restrict the grid to one alpha");
    vf->add_option("--a", vf_a, "restrict the grid to one a");

    double ex_alpha = 0.0072973525693, ex_abar = 0.0;
    int ex_nr = 0, ex_l = 0, ex_twoj = 1;
    auto* ex = app.add_subcommand("expansion", "quasirelativistic expansion for one state");
    ex->add_option("--alpha", ex_alpha)->check(CLI::NonNegativeNumber);
    ex->add_option("--abar", ex_abar);
    ex->add_option("--n-r", ex_nr)->check(CLI::NonNegativeNumber);
    ex->add_option("--l", ex_l)->check(CLI::NonNegativeNumber);
    ex->add_option("--two-j", ex_twoj);

    ParamArgs wf_params;
    int wf_nr = 0, wf_l = 0, wf_twoj = 1, wf_points = 200;
    double wf_rmin = 1e-3, wf_rmax = 0.0;
    auto* wf = app.add_subcommand("wavefunction", "sample a bound-state radial function");
    add_param_flags(wf, wf_params);
    wf->add_option("--n-r", wf_nr)->check(CLI::NonNegativeNumber);
    wf->add_option("--l", wf_l)->check(CLI::NonNegativeNumber);
    wf->add_option("--two-j", wf_twoj);
    wf->add_option("--r-min", wf_rmin)->check(CLI::PositiveNumber);
    wf->add_option("--r-max", wf_rmax, "default: 15 n*^2/e*^2");
    wf->add_option("--points", wf_points)->check(CLI::Range(2, 1000000));

    double or_a = -0.3, or_alpha = 1.0;
    int or_l = 0;
    std::vector<int> or_nr = {5, 10};
    auto* od = app.add_subcommand("ordering", "kinetic-operator ordering lab");
    od->add_option("--a", or_a);
    od->add_option("--alpha", or_alpha)->check(CLI::NonNegativeNumber);
    od->add_option("--l", or_l)->check(CLI::NonNegativeNumber);
    od->add_option("--n-r", or_nr, "levels to study");

    // let the shared --format/--output options appear after the subcommand
    for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
        s->fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // collapse CLI11's per-error exit codes onto the documented usage code
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (sp->parsed())
        return cmd_spectrum(sp_params.alpha, sp_params.resolve_a(), sp_nmax, format, output);
    if (sc->parsed())
        return cmd_scan(sc_alpha, sc_amin, sc_amax, sc_steps, sc_excited, format, output);
    if (vf->parsed())
        return cmd_verify(vf_expansion, vf_alpha, vf_a, format, output);
    if (ex->parsed())
        return cmd_expansion(ex_alpha, ex_abar, ex_nr, ex_l, ex_twoj, format, output);
    if (wf->parsed()) {
        double rmax = wf_rmax;
        if (rmax <= 0.0) {
            ModelHandle model(wf_params.alpha, wf_params.resolve_a());
            pdm_level lv;
            const pdm_status s = pdm_level_compute(model.ptr, wf_nr, wf_l, wf_twoj, &lv);
            if (s != PDM_OK)
                die(s, "wavefunction level");
            rmax = 15.0 * lv.n_star * lv.n_star / lv.e_star_sq;
        }
        return cmd_wavefunction(wf_params.alpha, wf_params.resolve_a(), wf_nr, wf_l, wf_twoj,
                                wf_rmin, rmax, wf_points, format, output);
    }
    if (od->parsed())
        return cmd_ordering(or_a, or_alpha, or_l, or_nr, format, output);
    return 1;
}
