// Command-line front end: verification reports and data tables.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlat/bc.hpp"
#include "qlat/gl2.hpp"
#include "qlat/lat2.hpp"
#include "qlat/modforms.hpp"
#include "qlat/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qlat;

namespace {

json report_header(const std::string& command) {
    json j;
    j["schema"] = "qlat-report/1";
    j["command"] = command;
    return j;
}

// parse "a/b" (b optional, defaults to 1)
QModZ parse_fraction(const std::string& s) {
    long a = 0, b = 1;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        a = std::stol(s);
    } else {
        a = std::stol(s.substr(0, slash));
        b = std::stol(s.substr(slash + 1));
    }
    if (b <= 0) throw CLI::ValidationError("fraction denominator must be positive");
    return QModZ(a, b);
}

void emit(const json& j, const std::string& format, const std::string& stem) {
    std::string payload;
    if (format == "csv") {
        std::ostringstream os;
        if (j.contains("suites")) {
            os << "suite,check,pass,residual,tolerance,witness\n";
            for (const auto& s : j["suites"])
                for (const auto& c : s["checks"])
                    os << s["name"].get<std::string>() << ',' << c["id"].get<std::string>()
                       << ',' << (c["pass"].get<bool>() ? 1 : 0) << ',' << c["residual"]
                       << ',' << c["tolerance"] << ",\"" << c["witness"].get<std::string>()
                       << "\"\n";
        } else if (j.contains("rows")) {
            os << j["columns"].get<std::string>() << "\n";
            for (const auto& r : j["rows"]) {
                bool first = true;
                for (const auto& v : r) {
                    if (!first) os << ',';
                    first = false;
                    if (v.is_string())
                        os << v.get<std::string>();
                    else
                        os << v;
                }
                os << "\n";
            }
        } else {
            for (auto it = j.begin(); it != j.end(); ++it)
                os << it.key() << ',' << it.value() << "\n";
        }
        payload = os.str();
    } else {
        payload = j.dump(2) + "\n";
    }
    std::cout << payload;
    if (const char* dir = std::getenv("QLAT_REPORT_DIR")) {
        std::string path = std::string(dir) + "/" + stem + (format == "csv" ? ".csv" : ".json");
        std::ofstream out(path);
        out << payload;
        if (!out) std::cerr << "warning: could not write " << path << "\n";
    }
}

json suites_to_json(const std::vector<Suite>& suites) {
    json out = json::array();
    for (const auto& s : suites) {
        json js;
        js["name"] = s.name;
        js["ok"] = s.ok();
        js["checks"] = json::array();
        for (const auto& c : s.checks) {
            json jc;
            jc["id"] = c.id;
            jc["pass"] = c.pass;
            jc["residual"] = c.residual;
            jc["tolerance"] = c.tolerance;
            jc["witness"] = c.witness;
            js["checks"].push_back(jc);
        }
        out.push_back(js);
    }
    return out;
}

QExpansion named_series(const std::string& name, long order) {
    if (name == "e2") return ek_series(2, order);
    if (name == "e4") return ek_series(4, order);
    if (name == "e6") return ek_series(6, order);
    if (name == "e8") return ek_series(8, order);
    if (name == "e10") return ek_series(10, order);
    if (name == "nu4") return nu_series(4, order);
    if (name == "nu6") return nu_series(6, order);
    if (name == "nu8") return nu_series(8, order);
    auto w = weierstrass_data(order);
    if (name == "g2") return w.g2;
    if (name == "g3") return w.g3;
    if (name == "delta") return w.delta;
    if (name == "j") return w.j;
    if (name == "c") return w.c;
    throw CLI::ValidationError("unknown series: " + name +
                               " (expected e2,e4,e6,e8,e10,nu4,nu6,nu8,g2,g3,delta,j,c)");
}

std::function<bool(const std::array<long, 4>&)> named_observable(const std::string& name) {
    long p, i, j, n;
    if (std::sscanf(name.c_str(), "e_%ld_%ld_%ld", &p, &i, &j) == 3)
        return [=](const std::array<long, 4>& m) { return ind_e(m, p, i, j); };
    if (std::sscanf(name.c_str(), "pi_%ld_%ld_%ld", &p, &i, &j) == 3)
        return [=](const std::array<long, 4>& m) { return ind_proj_p(m, p, i, j); };
    if (std::sscanf(name.c_str(), "scal_%ld", &n) == 1)
        return [=](const std::array<long, 4>& m) { return ind_scal_div(m, n); };
    if (std::sscanf(name.c_str(), "det_%ld", &n) == 1)
        return [=](const std::array<long, 4>& m) { return ind_det_div(m, n); };
    throw CLI::ValidationError("unknown observable: " + name +
                               " (expected e_p_i_j, pi_p_k_l, scal_n, det_n)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-1 and rank-2 arithmetic systems: states, counting, modular forms"};
    app.require_subcommand(1);

    std::string format = "json";
    unsigned seed = 20260823;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "seed for property sampling");

    // bc kms / bc verify
    auto* bc = app.add_subcommand("bc", "rank-1 system");
    auto* bc_kms = bc->add_subcommand("kms", "equilibrium value of a torsion observable");
    double beta = 3.0;
    std::string r_str = "1/2", ground_str;
    long cutoff = 10000;
    bc_kms->add_option("--beta", beta, "inverse temperature")->required();
    bc_kms->add_option("--r", r_str, "torsion label a/b")->required();
    bc_kms->add_option("--ground", ground_str, "ground label k/N (default 1/denominator)");
    bc_kms->add_option("--cutoff", cutoff, "summation cutoff");

    auto* bc_verify = bc->add_subcommand("verify", "run the rank-1 check suites");
    long bc_level = 16;
    bc_verify->add_option("--level", bc_level, "max torsion level exercised");

    // lat count
    auto* lat = app.add_subcommand("lat", "rank-2 determinant part");
    auto* lat_count = lat->add_subcommand("count", "index-n sublattice counts");
    long count_max = 10;
    lat_count->add_option("--max", count_max, "largest index")->required();

    // gl2 kms / gl2 equi
    auto* gl2 = app.add_subcommand("gl2", "rank-2 system");
    auto* gl2_kms = gl2->add_subcommand("kms", "equilibrium value of a residue observable");
    double g_beta = 3.0;
    long g_level = 2, g_cutoff = 10000;
    std::string obs = "e_2_0_1";
    gl2_kms->add_option("--beta", g_beta, "inverse temperature (> 2)")->required();
    gl2_kms->add_option("--level", g_level, "residue level");
    gl2_kms->add_option("--obs", obs, "observable name")->required();
    gl2_kms->add_option("--cutoff", g_cutoff, "determinant cutoff");

    auto* gl2_equi = gl2->add_subcommand("equi", "distribution of residue matrices");
    std::vector<double> betas{2.5, 2.2, 2.1};
    long e_level = 2, e_cutoff = 10000;
    gl2_equi->add_option("--level", e_level, "residue level");
    gl2_equi->add_option("--betas", betas, "inverse temperatures");
    gl2_equi->add_option("--cutoff", e_cutoff, "determinant cutoff");

    // mf qexp
    auto* mf = app.add_subcommand("mf", "modular forms");
    auto* mf_qexp = mf->add_subcommand("qexp", "exact q-expansion of a named series");
    std::string series = "e4";
    long order = 10;
    mf_qexp->add_option("--series", series, "series name")->required();
    mf_qexp->add_option("--order", order, "truncation order");

    // verify all
    auto* verify = app.add_subcommand("verify", "verification suites");
    auto* verify_all_cmd = verify->add_subcommand("all", "run every module's check suite");
    bool quick = false;
    verify_all_cmd->add_flag("--quick", quick, "reduced ranges and cutoffs");

    // allow the global --format/--seed options anywhere on the command line
    for (auto* top : {bc, lat, gl2, mf, verify}) {
        top->fallthrough();
        for (auto* sub : top->get_subcommands([](const CLI::App*) { return true; }))
            sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bc_kms) {
            QModZ r = parse_fraction(r_str);
            json j = report_header("bc kms");
            j["beta"] = beta;
            j["r"] = r.str();
            if (beta <= 1.0) {
                j["value"] = kms_low(beta, r);
                j["regime"] = "low";
            } else {
                GroundStateLabel g{r.b, 1};
                if (!ground_str.empty()) {
                    QModZ gr = parse_fraction(ground_str);
                    g = GroundStateLabel{gr.b, gr.a == 0 ? 1 : gr.a};
                }
                auto v = kms_high(beta, g, r, cutoff);
                j["value"] = v.value.real();
                j["value_im"] = v.value.imag();
                j["tail_bound"] = v.tail_bound;
                j["closed_form"] = v.closed_form;
                j["regime"] = "high";
            }
            emit(j, format, "bc_kms");
            return 0;
        }
        if (*bc_verify) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.quick = bc_level <= 8;
            std::vector<Suite> suites{verify_bc(opt)};
            json j = report_header("bc verify");
            j["seed"] = seed;
            j["suites"] = suites_to_json(suites);
            emit(j, format, "bc_verify");
            return suites[0].ok() ? 0 : 1;
        }
        if (*lat_count) {
            json j = report_header("lat count");
            j["columns"] = "n,count";
            j["rows"] = json::array();
            for (long n = 1; n <= count_max; ++n)
                j["rows"].push_back({n, (long)enumerate_index(n).size()});
            emit(j, format, "lat_count");
            return 0;
        }
        if (*gl2_kms) {
            auto ind = named_observable(obs);
            LevelRho rho{g_level, {1 % g_level, 0, 0, 1 % g_level}};
            auto v = kms_indicator_state(g_beta, rho, ind, g_cutoff);
            json j = report_header("gl2 kms");
            j["beta"] = g_beta;
            j["obs"] = obs;
            j["level"] = g_level;
            j["cutoff"] = g_cutoff;
            j["value"] = v.value;
            j["tail_bound"] = v.tail_bound;
            emit(j, format, "gl2_kms");
            return 0;
        }
        if (*gl2_equi) {
            json j = report_header("gl2 equi");
            j["level"] = e_level;
            j["cutoff"] = e_cutoff;
            j["columns"] = "beta,max_dev";
            j["rows"] = json::array();
            for (double b : betas) {
                auto e = equi_distribution(e_level, b, e_cutoff);
                j["rows"].push_back({b, e.max_dev});
            }
            emit(j, format, "gl2_equi");
            return 0;
        }
        if (*mf_qexp) {
            QExpansion f = named_series(series, order);
            json j = report_header("mf qexp");
            j["series"] = series;
            j["order"] = order;
            j["ram"] = f.ram();
            j["columns"] = "exponent,coefficient";
            j["rows"] = json::array();
            for (long e = f.val(); e <= f.trunc(); ++e) {
                Cyclo c = f.coeff(e);
                if (c.is_zero()) continue;
                j["rows"].push_back({e, rat_str(c.rational_value())});
            }
            emit(j, format, "mf_qexp");
            return 0;
        }
        if (*verify_all_cmd) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.quick = quick;
            auto suites = verify_all(opt);
            json j = report_header("verify all");
            j["seed"] = seed;
            j["quick"] = quick;
            j["suites"] = suites_to_json(suites);
            emit(j, format, "verify_all");
            for (const auto& s : suites)
                if (!s.ok()) return 1;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << app.help();
    return 2;
}
