// walled: representation matrices of the partially transposed permutation
// algebra, Gram data, irrep inventories, dense-oracle verification, and the
// tripartite feasibility region, behind one command-line front end.
//
// Exit codes: 0 success, 1 validation failure, 2 verification-suite failure,
// 64 malformed command line.

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>

#include "walled/io.hpp"
#include "walled/irreps.hpp"
#include "walled/multiplicity.hpp"
#include "walled/oracle.hpp"
#include "walled/parallel.hpp"
#include "walled/ppt.hpp"

using nlohmann::json;
using namespace walled;

namespace {

constexpr const char* kIrrepsSchema = "walled-irreps/1";
constexpr const char* kGramSchema = "walled-gram/1";
constexpr const char* kMultSchema = "walled-mult/1";
constexpr const char* kClassesSchema = "walled-classes/1";

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw ValidationError(message);
}

Partition parse_alpha(const std::string& text, int expected_weight) {
    Partition alpha = Partition::parse(text);
    require(alpha.weight() == expected_weight,
            "alpha " + alpha.to_string() + " is not a partition of " +
                std::to_string(expected_weight));
    return alpha;
}

json irrep_entry(const Context& ctx, const Partition& alpha, bool with_generators,
                 const std::string& sigma_text) {
    json entry;
    entry["alpha"] = io::partition_to_json(alpha);
    if (!sigma_text.empty()) {
        Permutation sigma = Permutation::parse_cycles(sigma_text, ctx.n);
        Eigen::MatrixXd M = ctx.full_rank_regime()
                                ? irrep(sigma, alpha, ctx)
                                : degenerate_basis(alpha, ctx).action(sigma);
        json mats;
        std::string label = sigma.cycle_string();
        if (!classify(sigma).fixes_last) label += "'";
        mats[label] = io::matrix_to_json(M);
        entry["dimension"] = M.rows();
        entry["reduced"] = !ctx.full_rank_regime();
        entry["matrices"] = std::move(mats);
        return entry;
    }
    if (ctx.full_rank_regime()) {
        entry["dimension"] = ctx.legs() * hook_dimension(alpha);
        entry["reduced"] = false;
        if (with_generators) {
            json mats;
            for (const auto& [label, M] : generators(ctx, alpha))
                mats[label] = io::matrix_to_json(M);
            entry["matrices"] = std::move(mats);
        }
    } else {
        ReducedIrrep red = degenerate_basis(alpha, ctx);
        entry["dimension"] = red.dimension();
        entry["reduced"] = true;
        if (with_generators && !red.absent()) {
            json mats;
            mats["e"] = io::matrix_to_json(red.action(Permutation::identity(ctx.n)));
            for (int k = 0; k + 2 < ctx.n; ++k) {
                std::string label = "(" + std::to_string(k + 1) + " " + std::to_string(k + 2) + ")";
                mats[label] =
                    io::matrix_to_json(red.action(Permutation::transposition(ctx.n, k, k + 1)));
            }
            std::string label = "(" + std::to_string(ctx.n - 1) + " " + std::to_string(ctx.n) + ")'";
            mats[label] = io::matrix_to_json(
                red.action(Permutation::transposition(ctx.n, ctx.n - 2, ctx.n - 1)));
            entry["matrices"] = std::move(mats);
        }
    }
    return entry;
}

int run_irreps(int n, int d, const std::string& alpha_text, bool with_generators,
               const std::string& sigma_text) {
    Context ctx(n, d);
    json out;
    out["schema"] = kIrrepsSchema;
    out["n"] = n;
    out["d"] = d;
    if (!alpha_text.empty()) {
        Partition alpha = parse_alpha(alpha_text, n - 2);
        json entry = irrep_entry(ctx, alpha, with_generators, sigma_text);
        for (auto& [key, value] : entry.items()) out[key] = value;
    } else {
        json list = json::array();
        for (const Partition& alpha : partitions_of(n - 2))
            list.push_back(irrep_entry(ctx, alpha, with_generators, sigma_text));
        out["irreps"] = std::move(list);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_gram(int n, int d, const std::string& alpha_text) {
    Context ctx(n, d);
    Partition alpha = parse_alpha(alpha_text, n - 2);
    GramBlockMatrix g = gram(alpha, ctx);
    json out;
    out["schema"] = kGramSchema;
    out["n"] = n;
    out["d"] = d;
    out["alpha"] = io::partition_to_json(alpha);
    out["dimension"] = g.dimension();
    out["Q"] = io::matrix_to_json(g.Q);
    out["rank"] = g.rank;
    out["min_eigenvalue"] = io::round_sig(g.min_eigenvalue);
    json independent = json::array();
    for (int x : g.independent)
        independent.push_back(json::array({x / g.m + 1, x % g.m + 1}));  // 1-based (leg, tableau)
    out["independent"] = std::move(independent);
    if (g.inverse) out["D"] = io::matrix_to_json(*g.inverse);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_mult(int n, int d) {
    auto rows = inventory(n, d);
    json out;
    out["schema"] = kMultSchema;
    out["n"] = n;
    out["d"] = d;
    json table = json::array();
    for (const auto& r : rows) {
        json row;
        row["core"] = io::partition_to_json(r.label.core);
        row["sector"] = r.label.sector == Sector::N ? "N" : "M";
        row["label"] = r.label.fits ? json(r.label.weights) : json();
        row["dim"] = r.dim;
        row["mult"] = r.mult;
        row["product"] = r.product;
        table.push_back(std::move(row));
    }
    out["rows"] = std::move(table);
    std::int64_t total = inventory_checksum(rows);
    std::int64_t expected = power_i64(d, n);
    out["checksum"] = total;
    std::cout << out.dump(2) << "\n";
    std::cout << "checksum " << total << " = " << d << "^" << n
              << (total == expected ? " OK" : " MISMATCH") << "\n";
    return total == expected ? 0 : 2;
}

int run_classes(int n) {
    auto dec = enumerate_sab(n);
    json out;
    out["schema"] = kClassesSchema;
    out["n"] = n;
    json classes = json::array();
    for (const auto& [ab, elems] : dec.classes) {
        json cls;
        cls["a"] = ab.first + 1;
        cls["b"] = ab.second + 1;
        json list = json::array(), cycles = json::array();
        for (const auto& p : elems) {
            list.push_back(io::permutation_to_json(p));
            cycles.push_back(p.cycle_string());
        }
        cls["elements"] = std::move(list);
        cls["cycles"] = std::move(cycles);
        classes.push_back(std::move(cls));
    }
    out["classes"] = std::move(classes);
    json fixes = json::array();
    for (const auto& p : dec.fixes_last) fixes.push_back(io::permutation_to_json(p));
    out["fixes_n"] = std::move(fixes);
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct CheckLine {
    bool pass;
    std::string alpha;
    std::string check;
    std::string detail;
};

void print_check_table(const std::vector<CheckLine>& lines) {
    for (const auto& line : lines)
        std::cout << (line.pass ? "PASS" : "FAIL") << "  alpha=" << line.alpha << "  "
                  << line.check << (line.detail.empty() ? "" : "  (" + line.detail + ")") << "\n";
}

int run_verify(int n, int d, bool exhaustive, int samples) {
    Context ctx(n, d);
    require(oracle::checked_dim(d, n) <= oracle::kDimGuard, "d^n exceeds the oracle guard");
    std::vector<CheckLine> lines;
    std::mt19937 rng(0x5eed);
    auto s_n = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, s_n.size() - 1);

    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2e", v);
        return std::string(buf);
    };

    for (const Partition& alpha : partitions_of(n - 2)) {
        const std::string alpha_text = alpha.to_string();
        GramBlockMatrix g = gram(alpha, ctx);
        auto units = oracle::young_units(alpha, d);

        if (ctx.full_rank_regime()) {
            double margin = g.min_eigenvalue - (d - n + 2);
            lines.push_back({margin >= -1e-9, alpha_text, "positivity-margin",
                             "min eig " + fmt(g.min_eigenvalue)});
        }

        if (units.mult == 0) {
            lines.push_back({true, alpha_text, "sector-absent", "multiplicity 0"});
            continue;
        }
        auto fam = oracle::psi_family(units, ctx);

        double gram_err = (oracle::family_gram(fam) - g.Q).cwiseAbs().maxCoeff();
        lines.push_back({gram_err <= 1e-9, alpha_text, "gram-consistency",
                         "max err " + fmt(gram_err)});

        // representation matrices against the oracle extraction
        std::vector<Permutation> probes;
        if (exhaustive) {
            probes = s_n;
        } else {
            for (int k = 0; k + 1 < n; ++k)
                probes.push_back(Permutation::transposition(n, k, k + 1));
            for (int s = 0; s < samples; ++s) probes.push_back(s_n[pick(rng)]);
        }

        const bool reduced = !ctx.full_rank_regime();
        ReducedIrrep red(alpha, ctx);
        Eigen::MatrixXd P, Dred;
        if (reduced) {
            P.resize(fam.per_r[0].rows(), red.dimension());
            for (int j = 0; j < red.dimension(); ++j)
                P.col(j) = fam.per_r[0].col(red.basis()[j]) * red.basis_signs()(j);
            Dred = red.reduced_gram().inverse();
        }

        double irrep_err = 0.0, residual = 0.0;
        for (const auto& sigma : probes) {
            bool fixes = classify(sigma).fixes_last;
            Eigen::MatrixXd V = fixes ? oracle::perm_operator(sigma, d)
                                      : oracle::transposed_perm_operator(sigma, d);
            oracle::ExtractionResult ext;
            Eigen::MatrixXd closed;
            if (reduced) {
                ext = oracle::extract_matrix(V, {P}, Dred);
                closed = red.action(sigma);
            } else {
                ext = oracle::oracle_matrix_elements(V, fam, g);
                closed = irrep(sigma, alpha, ctx);
            }
            irrep_err = std::max(irrep_err, (ext.matrix - closed).cwiseAbs().maxCoeff());
            residual = std::max(residual, ext.residual);
        }
        lines.push_back({irrep_err <= 1e-8, alpha_text,
                         reduced ? "irrep-match-reduced" : "irrep-match",
                         "max err " + fmt(irrep_err) + ", residual " + fmt(residual)});

        // homomorphism on sampled operator products
        double product_err = 0.0;
        const int pairs = exhaustive ? 100 : std::max(10, samples);
        for (int s = 0; s < pairs; ++s) {
            const Permutation& x = s_n[pick(rng)];
            const Permutation& y = s_n[pick(rng)];
            auto op = [&](const Permutation& sigma) {
                return classify(sigma).fixes_last ? oracle::perm_operator(sigma, d)
                                                  : oracle::transposed_perm_operator(sigma, d);
            };
            Eigen::MatrixXd V = op(x) * op(y);
            Eigen::MatrixXd expected, got;
            if (reduced) {
                expected = red.action(x) * red.action(y);
                got = oracle::extract_matrix(V, {P}, Dred).matrix;
            } else {
                expected = irrep(x, alpha, ctx) * irrep(y, alpha, ctx);
                got = oracle::oracle_matrix_elements(V, fam, g).matrix;
            }
            product_err = std::max(product_err, (got - expected).cwiseAbs().maxCoeff());
        }
        lines.push_back({product_err <= 1e-8, alpha_text, "product-homomorphism",
                         "max err " + fmt(product_err)});
    }

    print_check_table(lines);
    bool all_pass = true;
    for (const auto& line : lines) all_pass = all_pass && line.pass;
    std::cout << (all_pass ? "verification OK" : "verification FAILED") << "\n";
    return all_pass ? 0 : 2;
}

int run_ppt_region(int d, int grid, const std::string& out_path,
                   const std::string& spectrum_text) {
    require(d > 2, "ppt-region requires d > 2");
    if (!spectrum_text.empty()) {
        double a1 = 0.0, a2 = 0.0;
        if (std::sscanf(spectrum_text.c_str(), "%lf,%lf", &a1, &a2) != 2)
            throw ValidationError("--spectrum expects two comma-separated weights a1,a2");
        require(a1 >= 0.0 && a2 >= 0.0 && a1 + a2 <= 1.0 + 1e-12,
                "mixture weights must be nonnegative with a1 + a2 <= 1");
        ppt::ProjectorBasis basis = ppt::projector_basis(d);
        ppt::Mixture mix{a1, a2, 1.0 - a1 - a2};
        std::cout << "eigenvalue        multiplicity\n";
        for (const auto& line : ppt::transposed_spectrum(basis, mix)) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%-17.12g %lld\n", io::round_sig(line.value),
                          static_cast<long long>(line.multiplicity));
            std::cout << buf;
        }
        double min_eig = ppt::min_transposed_eigenvalue(basis, mix);
        char line[96];
        std::snprintf(line, sizeof(line), "min eigenvalue %.12g (%s)\n", io::round_sig(min_eig),
                      min_eig >= ppt::kFeasibilityTolerance ? "feasible" : "infeasible");
        std::cout << line;
        return 0;
    }

    auto points = ppt::ppt_region(d, grid);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        require(file.good(), "cannot open output file " + out_path);
        os = &file;
    }
    *os << "a_lambda1,a_lambda2,feasible,min_eig\n";
    char buf[128];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%d,%.12g\n", io::round_sig(p.a_asym),
                      io::round_sig(p.a_mixed), p.feasible ? 1 : 0, io::round_sig(p.min_eig));
        *os << buf;
    }
    if (os == &file) {
        file.close();
        std::cout << "wrote " << points.size() << " grid points to " << out_path << "\n";
    }
    return 0;
}

// Reads a key=value config file and renders it as flags for the given
// subcommand.  Unknown keys are rejected; boolean keys accept true/false.
std::vector<std::string> config_as_flags(const std::string& path, const CLI::App* sub) {
    std::ifstream file(path);
    if (!file.good()) throw ValidationError("cannot read config file " + path);
    auto trim = [](std::string s) {
        const char* ws = " \t\r";
        s.erase(0, s.find_first_not_of(ws));
        s.erase(s.find_last_not_of(ws) + 1);
        return s;
    };
    std::vector<std::string> flags;
    std::string line;
    while (std::getline(file, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line without '=': " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "config") continue;
        const CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr)
            throw ValidationError("config key '" + key + "' does not match a flag of " +
                                  sub->get_name());
        if (opt->get_expected_min() == 0) {  // boolean flag
            if (value == "true" || value == "1" || value == "yes")
                flags.push_back("--" + key);
            else if (!(value == "false" || value == "0" || value == "no"))
                throw ValidationError("config key '" + key + "' expects a boolean value");
        } else {
            flags.push_back("--" + key);
            flags.push_back(value);
        }
    }
    return flags;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"irreducible representations of the partially transposed permutation algebra"};
    app.require_subcommand(1);

    int n = 3, d = 3, grid = 400, samples = 50;
    std::string alpha_text, out_path, spectrum_text, config_path, sigma_text;
    bool with_generators = false, exhaustive = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value file mirroring the flags; flags win");
        for (CLI::Option* opt : sub->get_options())
            if (opt->get_expected_min() > 0)
                opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    };

    CLI::App* irreps_cmd = app.add_subcommand("irreps", "representation matrices per partition");
    irreps_cmd->add_option("--n", n, "tensor factors")->required()->check(CLI::Range(2, 12));
    irreps_cmd->add_option("--d", d, "local dimension")->required()->check(CLI::Range(2, 1000000));
    irreps_cmd->add_option("--alpha", alpha_text, "partition of n-2, e.g. 2,1");
    irreps_cmd->add_flag("--generators", with_generators, "emit generator matrices");
    irreps_cmd->add_option("--sigma", sigma_text, "one element in cycle notation, e.g. \"(1 2)(3 4)\"");
    add_common(irreps_cmd);

    CLI::App* gram_cmd = app.add_subcommand("gram", "Gram matrix, rank and inverse");
    gram_cmd->add_option("--n", n, "tensor factors")->required()->check(CLI::Range(2, 12));
    gram_cmd->add_option("--d", d, "local dimension")->required()->check(CLI::Range(2, 1000000));
    gram_cmd->add_option("--alpha", alpha_text, "partition of n-2")->required();
    add_common(gram_cmd);

    CLI::App* mult_cmd = app.add_subcommand("mult", "irrep inventory with multiplicities");
    mult_cmd->add_option("--n", n, "tensor factors")->required()->check(CLI::Range(2, 12));
    mult_cmd->add_option("--d", d, "local dimension")->required()->check(CLI::Range(2, 1000));
    add_common(mult_cmd);

    CLI::App* classes_cmd = app.add_subcommand("classes", "leg classes of the symmetric group");
    classes_cmd->add_option("--n", n, "group degree")->required()->check(CLI::Range(2, 8));
    add_common(classes_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "dense-oracle verification sweep");
    verify_cmd->add_option("--n", n, "tensor factors")->required()->check(CLI::Range(3, 12));
    verify_cmd->add_option("--d", d, "local dimension")->required()->check(CLI::Range(2, 100));
    verify_cmd->add_flag("--exhaustive", exhaustive, "sweep every group element");
    verify_cmd->add_option("--samples", samples, "sampled elements per check")
        ->check(CLI::Range(1, 100000));
    add_common(verify_cmd);

    CLI::App* ppt_cmd = app.add_subcommand("ppt-region", "tripartite feasibility region");
    ppt_cmd->add_option("--d", d, "local dimension > 2")->required()->check(CLI::Range(3, 1000));
    ppt_cmd->add_option("--grid", grid, "steps per simplex axis")->check(CLI::Range(1, 100000));
    ppt_cmd->add_option("--out", out_path, "CSV output path ('-' for stdout)");
    ppt_cmd->add_option("--spectrum", spectrum_text, "a1,a2: print one mixture's spectrum");
    add_common(ppt_cmd);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        // splice config-file flags in right after the subcommand token, so
        // anything given explicitly on the command line takes precedence
        std::string config_file;
        std::size_t sub_index = args.size();
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i].rfind("--config=", 0) == 0) config_file = args[i].substr(9);
            else if (args[i] == "--config" && i + 1 < args.size()) config_file = args[i + 1];
            else if (sub_index == args.size() && !args[i].empty() && args[i][0] != '-')
                sub_index = i;
        }
        if (!config_file.empty() && sub_index < args.size()) {
            const CLI::App* sub = app.get_subcommand_no_throw(args[sub_index]);
            if (sub != nullptr) {
                auto extra = config_as_flags(config_file, sub);
                args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_index) + 1,
                            extra.begin(), extra.end());
            }
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        std::reverse(args.begin(), args.end());  // App::parse consumes from the back
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 64;
    }

    try {
        if (app.got_subcommand(irreps_cmd))
            return run_irreps(n, d, alpha_text, with_generators, sigma_text);
        if (app.got_subcommand(gram_cmd)) return run_gram(n, d, alpha_text);
        if (app.got_subcommand(mult_cmd)) return run_mult(n, d);
        if (app.got_subcommand(classes_cmd)) return run_classes(n);
        if (app.got_subcommand(verify_cmd)) return run_verify(n, d, exhaustive, samples);
        if (app.got_subcommand(ppt_cmd)) return run_ppt_region(d, grid, out_path, spectrum_text);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
