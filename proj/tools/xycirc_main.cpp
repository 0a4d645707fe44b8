#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xycirc/eig.hpp"
#include "xycirc/experiments.hpp"
#include "xycirc/output.hpp"
#include "xycirc/verify.hpp"

namespace {

namespace fs = std::filesystem;

fs::path output_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("XYCIRC_OUTPUT_DIR")) return env;
    return ".";
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    std::cout << "wrote " << path.string() << "\n";
}

std::vector<double> parse_times(const std::string& spec) {
    // "start:stop:count" or a comma-separated list
    std::vector<double> times;
    if (spec.find(':') != std::string::npos) {
        double start, stop;
        int count;
        char c1, c2;
        std::istringstream in(spec);
        if (!(in >> start >> c1 >> stop >> c2 >> count) || count < 1) {
            throw CLI::ValidationError("--times", "expected start:stop:count");
        }
        for (int i = 0; i < count; ++i) {
            times.push_back(count == 1 ? start
                                       : start + (stop - start) * i / (count - 1));
        }
        return times;
    }
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) times.push_back(std::stod(tok));
    if (times.empty()) throw CLI::ValidationError("--times", "no values");
    return times;
}

void emit_manifest(const fs::path& dir, const std::string& sub,
                   const std::map<std::string, double>& params) {
    write_file(dir / (sub + "_manifest.json"), xyc::manifest_json(params, sub));
}

void emit_table(const fs::path& dir, const std::string& stem, const std::string& format,
                const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows) {
    if (format == "json") {
        write_file(dir / (stem + ".json"), xyc::to_json_table(header, rows));
    } else {
        write_file(dir / (stem + ".csv"), xyc::to_csv(header, rows));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact circuit toolkit for the transverse-field XY/Ising chain"};
    app.require_subcommand(1);
    app.fallthrough();

    int n = 8;
    double lambda = 1.0, gamma = 1.0, beta = 1.0, cutoff = 0.25;
    std::string out_flag, times_spec = "0:8:33", format = "csv";
    int initial_site = 0;
    unsigned long long seed = 1;
    app.add_option("--n", n, "chain length")->capture_default_str();
    app.add_option("--lambda", lambda, "coupling ratio")->capture_default_str();
    app.add_option("--gamma", gamma, "anisotropy")->capture_default_str();
    app.add_option("--beta", beta, "inverse temperature")->capture_default_str();
    app.add_option("--cutoff", cutoff, "momentum cutoff for coarse graining")
        ->capture_default_str();
    app.add_option("--times", times_spec, "start:stop:count or comma list")
        ->capture_default_str();
    app.add_option("--site", initial_site, "initial excitation site")
        ->capture_default_str();
    app.add_option("--out", out_flag, "output directory (or $XYCIRC_OUTPUT_DIR)");
    app.add_option("--format", format, "csv or json payload format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized checks")
        ->capture_default_str();

    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "exact level list plus the dense cross-check");
    auto* evolve_cmd = app.add_subcommand("evolve", "position-state <Z_i>(t) grid");
    auto* rg_cmd = app.add_subcommand("rg", "coarse-grained <Z_i>(t) grid");
    auto* tfd_cmd = app.add_subcommand("tfd", "thermofield-double entropy tables");
    auto* entropy_cmd = app.add_subcommand("entropy", "ground-state block entropies");
    std::string which_circuit = "udis";
    auto* export_cmd = app.add_subcommand("export-circuit", "serialize a builder output");
    export_cmd->add_option("--circuit", which_circuit,
                           "udis | fourier | tfd | laplacian | rg | evolution")
        ->capture_default_str();
    double export_time = 1.0;
    export_cmd->add_option("--time", export_time, "time for the evolution circuit")
        ->capture_default_str();
    auto* verify_cmd = app.add_subcommand("verify", "run the full oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const fs::path dir = output_dir(out_flag);
        fs::create_directories(dir);
        xyc::ModelParams params{n, lambda, gamma, beta};
        std::map<std::string, double> meta{{"n", static_cast<double>(n)},
                                           {"lambda", lambda},
                                           {"gamma", gamma},
                                           {"beta", beta},
                                           {"cutoff", cutoff},
                                           {"seed", static_cast<double>(seed)}};

        if (*spectrum_cmd) {
            const xyc::Spectrum spec = xyc::exact_spectrum(params);
            std::vector<std::vector<double>> rows;
            for (std::size_t i = 0; i < spec.levels.size(); ++i) {
                rows.push_back({static_cast<double>(i), spec.levels[i]});
            }
            // dense cross-check at oracle scale
            if (n <= 8) {
                const auto h =
                    xyc::build_hamiltonian(params, xyc::HamiltonianForm::Fermionic);
                const std::vector<double> ev = xyc::hermitian_eigenvalues(h);
                double worst = 0;
                for (std::size_t i = 0; i < ev.size(); ++i) {
                    worst = std::max(worst, std::abs(ev[i] - spec.levels[i]));
                }
                if (worst > 1e-8) {
                    std::cerr << "dense spectrum deviates by " << worst << "\n";
                    return 1;
                }
            }
            emit_table(dir, "spectrum", format, {"index", "energy"}, rows);
            emit_manifest(dir, "spectrum", meta);
            return 0;
        }
        if (*evolve_cmd) {
            const std::vector<double> times = parse_times(times_spec);
            const xyc::SpacetimeGrid grid =
                xyc::run_expz_spacetime(params, initial_site, times);
            std::vector<std::string> header{"t"};
            for (int s : grid.sites) header.push_back("z" + std::to_string(s));
            std::vector<std::vector<double>> rows;
            for (std::size_t ti = 0; ti < times.size(); ++ti) {
                std::vector<double> row{times[ti]};
                row.insert(row.end(), grid.values[ti].begin(), grid.values[ti].end());
                rows.push_back(std::move(row));
            }
            emit_table(dir, "evolve", format, header, rows);
            emit_manifest(dir, "evolve", meta);
            return 0;
        }
        if (*rg_cmd) {
            const std::vector<double> times = parse_times(times_spec);
            const xyc::StateVector init =
                xyc::StateVector::single_excitation(n, initial_site);
            const xyc::SpacetimeGrid grid =
                xyc::run_expz_coarse(params, cutoff, init, times);
            std::vector<std::string> header{"t"};
            for (int s : grid.sites) header.push_back("z" + std::to_string(s));
            std::vector<std::vector<double>> rows;
            for (std::size_t ti = 0; ti < times.size(); ++ti) {
                std::vector<double> row{times[ti]};
                row.insert(row.end(), grid.values[ti].begin(), grid.values[ti].end());
                rows.push_back(std::move(row));
            }
            emit_table(dir, "rg", format, header, rows);
            emit_manifest(dir, "rg", meta);
            return 0;
        }
        if (*tfd_cmd) {
            const std::vector<double> betas{0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0};
            const auto rows = xyc::run_tfd_entropy_vs_beta(params, betas);
            std::vector<std::string> header{"beta", "s_half"};
            for (int l = 0; l <= n; ++l) header.push_back("s" + std::to_string(l));
            std::vector<std::vector<double>> table;
            for (const auto& row : rows) {
                std::vector<double> r{row.beta, row.s_half_cut};
                r.insert(r.end(), row.curve.entropies.begin(),
                         row.curve.entropies.end());
                table.push_back(std::move(r));
            }
            emit_table(dir, "tfd", format, header, table);
            emit_manifest(dir, "tfd", meta);
            return 0;
        }
        if (*entropy_cmd) {
            const xyc::StateVector ground =
                params.n_power_of_two() ? xyc::prepare_ground_state_circuit(params)
                                        : xyc::fermionic_ground_state(params);
            std::vector<int> sites(n);
            for (int i = 0; i < n; ++i) sites[i] = i;
            const xyc::EntropyCurve curve = xyc::run_entropy_curve(ground, sites);
            const xyc::FitResult fit = xyc::critical_fit(curve, xyc::FitModel::Log);
            std::vector<std::vector<double>> rows;
            for (std::size_t l = 0; l < curve.entropies.size(); ++l) {
                rows.push_back({static_cast<double>(l), curve.entropies[l]});
            }
            emit_table(dir, "entropy", format, {"length", "bits"}, rows);
            std::vector<std::vector<double>> fit_rows{
                {fit.c_fit, fit.c1, fit.r_squared_log, fit.r_squared_linear}};
            emit_table(dir, "entropy_fit", format,
                       {"c_fit", "c1", "r2_log", "r2_linear"}, fit_rows);
            emit_manifest(dir, "entropy", meta);
            return 0;
        }
        if (*export_cmd) {
            xyc::Circuit circuit(0);
            if (which_circuit == "udis") circuit = xyc::build_udis(params);
            else if (which_circuit == "fourier") circuit = xyc::build_fourier(n);
            else if (which_circuit == "tfd") circuit = xyc::build_tfd(n, params, beta);
            else if (which_circuit == "laplacian")
                circuit = xyc::build_laplacian(params, beta);
            else if (which_circuit == "rg") circuit = xyc::build_rg(params, cutoff);
            else if (which_circuit == "evolution")
                circuit = xyc::build_time_evolution(params, export_time);
            else {
                std::cerr << "unknown circuit: " << which_circuit << "\n";
                return 2;
            }
            write_file(dir / (which_circuit + ".circuit"),
                       xyc::serialize_circuit(circuit));
            emit_manifest(dir, "export-circuit", meta);
            return 0;
        }
        if (*verify_cmd) {
            return xyc::run_verification(std::cout, seed) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
