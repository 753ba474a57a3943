// Copyright 2026 The Unruh Channel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unruh/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "unruh/channels.h"
#include "unruh/correlations.h"
#include "unruh/geometry.h"
#include "unruh/physics.h"

namespace unruh::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes to a file, or to `fallback` when path is "-".
class Sink {
   public:
    Sink(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (path != "-") {
            file_.open(path, std::ios::out | std::ios::trunc);
            if (!file_) {
                throw IoError("cannot open output file '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::ostream &get() {
        return *stream_;
    }
    void close() {
        if (file_.is_open()) {
            file_.close();
            if (file_.fail()) {
                throw IoError("failed writing output file");
            }
        } else if (stream_->fail()) {
            throw IoError("failed writing output stream");
        }
    }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

double rounded(double value) {
    return std::stod(format_number(value));
}

nlohmann::json matrix_json(const ComplexMatrix &m) {
    auto rows = nlohmann::json::array();
    for (size_t i = 0; i < m.dim(); i++) {
        auto row = nlohmann::json::array();
        for (size_t j = 0; j < m.dim(); j++) {
            row.push_back({rounded(m(i, j).real()), rounded(m(i, j).imag())});
        }
        rows.push_back(row);
    }
    return rows;
}

void write_matrix(const ComplexMatrix &m, std::ostream &out) {
    for (size_t i = 0; i < m.dim(); i++) {
        for (size_t j = 0; j < m.dim(); j++) {
            const auto &v = m(i, j);
            out << (j ? "  " : "  ") << format_number(v.real());
            if (v.imag() != 0) {
                out << (v.imag() < 0 ? "-" : "+") << format_number(std::abs(v.imag())) << "i";
            }
        }
        out << "\n";
    }
}

void write_kraus(const KrausMap &map, std::ostream &out) {
    size_t index = 1;
    for (const auto &t : map.terms()) {
        out << "K" << index++ << " sign " << (t.sign > 0 ? "+1" : "-1") << "\n";
        write_matrix(t.op, out);
    }
}

nlohmann::json kraus_json(const KrausMap &map) {
    auto terms = nlohmann::json::array();
    for (const auto &t : map.terms()) {
        terms.push_back({{"sign", t.sign}, {"op", matrix_json(t.op)}});
    }
    return terms;
}

struct AngleOptions {
    std::optional<double> r;
    std::optional<double> a;
    double omega = 0.1;

    double resolve() const {
        if (r && a) {
            throw UsageError("give either --r or --a, not both");
        }
        if (r) {
            check_bogoliubov_angle(*r);
            return *r;
        }
        if (a) {
            return UnruhParams::from_acceleration(*a, omega).r;
        }
        throw UsageError("one of --r or --a is required");
    }
};

void add_angle_options(CLI::App *cmd, AngleOptions &opts) {
    cmd->add_option("--r", opts.r, "Bogoliubov angle r in [0, pi/4]");
    cmd->add_option("--a", opts.a, "Proper acceleration (natural units); r derived with --omega");
    cmd->add_option("--omega", opts.omega, "Dirac mode frequency")->capture_default_str();
}

int cmd_sweep(const SweepConfig &config, std::ostream &out) {
    config.validate();
    auto rows = compute_sweep(config);
    Sink sink(config.output_path, out);
    if (config.format == Format::kCsv) {
        write_sweep_csv(rows, sink.get());
    } else {
        write_sweep_json(rows, sink.get());
    }
    sink.close();
    return kOk;
}

int cmd_channel(double r, const std::string &mode, const std::string &choi_norm, Format format, std::ostream &out) {
    nlohmann::json doc{{"r", rounded(r)}, {"cos_r", rounded(std::cos(r))}, {"mode", mode}};
    if (format == Format::kCsv) {
        out << "# r=" << format_number(r) << " cos_r=" << format_number(std::cos(r)) << " mode=" << mode << "\n";
    }
    if (mode == "choi") {
        auto choi = choi_matrix(unruh_kraus(r));
        if (choi_norm == "state") {
            choi = choi.state_normalized();
        }
        if (format == Format::kJson) {
            doc["normalization"] = choi_norm;
            doc["matrix"] = matrix_json(choi.matrix);
        } else {
            out << "choi (" << choi_norm << ")\n";
            write_matrix(choi.matrix, out);
        }
    } else if (mode == "kraus") {
        auto kraus = kraus_from_choi(choi_matrix(unruh_kraus(r)));
        if (format == Format::kJson) {
            doc["terms"] = kraus_json(kraus);
        } else {
            write_kraus(kraus, out);
        }
    } else {
        auto inverse = inverse_unruh(r);
        auto choi = choi_matrix(inverse).state_normalized();
        auto eig = eig_hermitian(choi.matrix);
        auto verdict = is_cp(choi);
        const char *label = verdict.completely_positive ? "CP" : "NCP";
        if (format == Format::kJson) {
            doc["terms"] = kraus_json(inverse);
            auto values = nlohmann::json::array();
            for (double v : eig.eigenvalues) {
                values.push_back(rounded(v));
            }
            doc["choi_eigenvalues"] = values;
            doc["min_eigenvalue"] = rounded(verdict.min_eigenvalue);
            doc["verdict"] = label;
        } else {
            write_kraus(inverse, out);
            out << "choi_eigenvalues (state):";
            for (double v : eig.eigenvalues) {
                out << " " << format_number(v);
            }
            out << "\nmin_eigenvalue: " << format_number(verdict.min_eigenvalue) << "\nverdict: " << label << "\n";
        }
    }
    if (format == Format::kJson) {
        out << doc.dump(2) << "\n";
    }
    return kOk;
}

int cmd_geometry(double r, size_t n_theta, size_t n_phi, size_t steps, const std::string &path, std::ostream &out) {
    if (n_theta < 2 || n_phi < 2) {
        throw UsageError("--n-theta and --n-phi must be >= 2");
    }
    if (steps < 100) {
        throw UsageError("--steps must be >= 100");
    }
    auto points = sample_surface(r, n_theta, n_phi);
    auto report = spheroid_report(r, steps);
    Sink sink(path, out);
    auto &os = sink.get();
    os << "theta,phi,x,y,z\n";
    for (const auto &p : points) {
        os << format_number(p.theta) << "," << format_number(p.phi) << "," << format_number(p.point.x) << ","
           << format_number(p.point.y) << "," << format_number(p.point.z) << "\n";
    }
    std::string summary = "# spheroid r=" + format_number(r) + " center=(" + format_number(report.center.x) + "," +
                          format_number(report.center.y) + "," + format_number(report.center.z) +
                          ") equatorial=" + format_number(report.semi_axis_equatorial) +
                          " polar=" + format_number(report.semi_axis_polar) +
                          " eccentricity=" + format_number(report.eccentricity) +
                          " volume_fraction=" + format_number(report.volume_fraction);
    if (path == "-") {
        os << summary << "\n";
    }
    sink.close();
    if (path != "-") {
        out << summary << "\n";
    }
    return kOk;
}

int cmd_teleport(double r, size_t samples, uint64_t seed, std::ostream &out) {
    if (samples == 0) {
        throw UsageError("--samples must be >= 1");
    }
    auto rho = shared_state(r);
    auto mc = teleport_fidelity_mc(rho, samples, seed);
    out << "r=" << format_number(r) << " samples=" << samples << " seed=" << seed
        << " f_mc=" << format_number(mc.mean) << " std_error=" << format_number(mc.standard_error)
        << " f_max=" << format_number(f_max(rho)) << "\n";
    return kOk;
}

}  // namespace

void SweepConfig::validate() const {
    if (!(omega > 0)) {
        throw DomainError("--omega must be > 0");
    }
    if (!(a_min > 0)) {
        throw DomainError("--a-min must be > 0");
    }
    if (!(a_max > a_min)) {
        throw DomainError("--a-max must exceed --a-min");
    }
    if (steps < 2) {
        throw DomainError("--steps must be >= 2");
    }
}

std::vector<double> sweep_grid(const SweepConfig &config) {
    config.validate();
    std::vector<double> grid(config.steps);
    double last = static_cast<double>(config.steps - 1);
    for (size_t i = 0; i < config.steps; i++) {
        double t = static_cast<double>(i) / last;
        if (config.scale == Scale::kLog) {
            grid[i] = config.a_min * std::pow(config.a_max / config.a_min, t);
        } else {
            grid[i] = config.a_min + t * (config.a_max - config.a_min);
        }
    }
    grid.front() = config.a_min;
    grid.back() = config.a_max;
    return grid;
}

std::vector<SweepRow> compute_sweep(const SweepConfig &config) {
    auto grid = sweep_grid(config);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double a : grid) {
        auto params = UnruhParams::from_acceleration(a, config.omega);
        auto m = measure_report(shared_state(params.r));
        rows.push_back(SweepRow{a, params.r, m.bell_B / 2, m.concurrence, m.f_max, m.qmid});
    }
    return rows;
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    std::string s(buf);
    if (s == "-0") {
        s = "0";
    }
    return s;
}

void write_sweep_csv(const std::vector<SweepRow> &rows, std::ostream &out) {
    out << kQmidConventionComment << "\n" << kSweepHeader << "\n";
    for (const auto &row : rows) {
        out << format_number(row.a) << "," << format_number(row.r) << "," << format_number(row.bell_half) << ","
            << format_number(row.concurrence) << "," << format_number(row.f_max) << "," << format_number(row.qmid)
            << "\n";
    }
}

void write_sweep_json(const std::vector<SweepRow> &rows, std::ostream &out) {
    auto doc = nlohmann::json::array();
    for (const auto &row : rows) {
        doc.push_back({
            {"a", rounded(row.a)},
            {"r", rounded(row.r)},
            {"bell_half", rounded(row.bell_half)},
            {"concurrence", rounded(row.concurrence)},
            {"f_max", rounded(row.f_max)},
            {"qmid", rounded(row.qmid)},
        });
    }
    out << doc.dump(2) << "\n";
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Fermionic Unruh channel toolkit", "unruh"};
    app.require_subcommand(1);

    const std::map<std::string, Scale> scales{{"linear", Scale::kLinear}, {"log", Scale::kLog}};
    const std::map<std::string, Format> formats{{"csv", Format::kCsv}, {"json", Format::kJson}};
    const std::map<std::string, Format> channel_formats{{"text", Format::kCsv}, {"json", Format::kJson}};

    SweepConfig sweep;
    uint64_t sweep_seed = 0;
    auto *sweep_cmd = app.add_subcommand("sweep", "Correlation measures versus acceleration");
    sweep_cmd->add_option("--omega", sweep.omega, "Dirac mode frequency")->capture_default_str();
    sweep_cmd->add_option("--a-min", sweep.a_min, "Smallest acceleration")->capture_default_str();
    sweep_cmd->add_option("--a-max", sweep.a_max, "Largest acceleration")->capture_default_str();
    sweep_cmd->add_option("--steps", sweep.steps, "Grid points")->capture_default_str();
    sweep_cmd->add_option("--scale", sweep.scale, "Grid spacing")
        ->transform(CLI::CheckedTransformer(scales, CLI::ignore_case));
    sweep_cmd->add_option("--format", sweep.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sweep_cmd->add_option("--out", sweep.output_path, "Output path, '-' for stdout")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep_seed, "Accepted for interface uniformity; the sweep is deterministic");

    AngleOptions channel_angle;
    std::string mode = "choi";
    std::string choi_norm = "state";
    Format channel_format = Format::kCsv;
    auto *channel_cmd = app.add_subcommand("channel", "Choi matrix, Kraus operators, or inverse-map certificate");
    add_angle_options(channel_cmd, channel_angle);
    channel_cmd->add_option("--mode", mode, "choi | kraus | invert")
        ->check(CLI::IsMember({"choi", "kraus", "invert"}))
        ->capture_default_str();
    channel_cmd->add_option("--choi-norm", choi_norm, "state | doubled")
        ->check(CLI::IsMember({"state", "doubled"}))
        ->capture_default_str();
    channel_cmd->add_option("--format", channel_format, "text | json")
        ->transform(CLI::CheckedTransformer(channel_formats, CLI::ignore_case));

    AngleOptions geometry_angle;
    geometry_angle.r = kMaxBogoliubovAngle;
    size_t n_theta = 33;
    size_t n_phi = 64;
    size_t volume_steps = 10000;
    std::string geometry_out = "-";
    auto *geometry_cmd = app.add_subcommand("geometry", "Bloch-sphere image surface and spheroid summary");
    geometry_cmd->add_option("--r", geometry_angle.r, "Bogoliubov angle (default pi/4)");
    geometry_cmd->add_option("--n-theta", n_theta, "Polar samples including both poles")->capture_default_str();
    geometry_cmd->add_option("--n-phi", n_phi, "Azimuthal samples")->capture_default_str();
    geometry_cmd->add_option("--steps", volume_steps, "Simpson steps for the volume")->capture_default_str();
    geometry_cmd->add_option("--out", geometry_out, "Point CSV path, '-' for stdout")->capture_default_str();

    AngleOptions teleport_angle;
    size_t samples = 100000;
    uint64_t seed = 0;
    auto *teleport_cmd = app.add_subcommand("teleport", "Monte-Carlo teleportation fidelity of the shared state");
    add_angle_options(teleport_cmd, teleport_angle);
    teleport_cmd->add_option("--samples", samples, "Haar-random inputs")->capture_default_str();
    teleport_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*sweep_cmd) {
            return cmd_sweep(sweep, out);
        }
        if (*channel_cmd) {
            return cmd_channel(channel_angle.resolve(), mode, choi_norm, channel_format, out);
        }
        if (*geometry_cmd) {
            return cmd_geometry(geometry_angle.resolve(), n_theta, n_phi, volume_steps, geometry_out, out);
        }
        if (*teleport_cmd) {
            return cmd_teleport(teleport_angle.resolve(), samples, seed, out);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError &e) {
        err << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception &e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    }
    return kUsage;
}

}  // namespace unruh::cli
