// Copyright 2026 The spinmean Authors
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

#include "cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace spinmean::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

double number_field(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw DocumentError(std::string("missing field '") + key + "'");
    }
    if (!it->is_number()) {
        throw DocumentError(std::string("field '") + key + "' must be a number");
    }
    return it->get<double>();
}

ordered_json means_json(const Vec3 &m) {
    ordered_json out;
    out["sx"] = m.x;
    out["sy"] = m.y;
    out["sz"] = m.z;
    return out;
}

ordered_json means_json(const MeanSpinVector &m) {
    return means_json(m.vec());
}

ordered_json axis_json(const std::array<double, 3> &v) {
    ordered_json out;
    out["x"] = v[0];
    out["y"] = v[1];
    out["z"] = v[2];
    return out;
}

ordered_json estimate_json(const EstimatedMeans &est) {
    ordered_json out;
    out["means"] = means_json(est.means);
    out["stderr"] = axis_json(est.standard_error);
    return out;
}

ordered_json error_json(std::string_view code, std::string_view message) {
    ordered_json out;
    out["code"] = code;
    out["message"] = message;
    return out;
}

void format_number(double v, std::string &out) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void format_value(const ordered_json &v, int depth, std::string &out) {
    std::string indent(2 * (depth + 1), ' ');
    std::string closing(2 * depth, ' ');
    if (v.is_object()) {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto &[key, item] : v.items()) {
            if (!first) {
                out += ",\n";
            }
            first = false;
            out += indent + json(key).dump() + ": ";
            format_value(item, depth + 1, out);
        }
        out += "\n" + closing + "}";
    } else if (v.is_array()) {
        if (v.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) {
                out += ",\n";
            }
            out += indent;
            format_value(v[i], depth + 1, out);
        }
        out += "\n" + closing + "]";
    } else if (v.is_number_float()) {
        format_number(v.get<double>(), out);
    } else {
        out += v.dump();
    }
}

json read_document(const std::string &path, std::istream &in) {
    try {
        if (path == "-") {
            return json::parse(in);
        }
        std::ifstream file(path);
        if (!file) {
            throw DocumentError("cannot open '" + path + "'");
        }
        return json::parse(file);
    } catch (const json::parse_error &e) {
        throw DocumentError("'" + path + "' is not valid JSON: " + e.what());
    }
}

SuperposeMethod method_of(std::string_view name) {
    return name == "oracle" ? SuperposeMethod::oracle : SuperposeMethod::closed_form;
}

ordered_json superpose_report(
    const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig, const std::string &method) {
    ordered_json out;
    out["method"] = method;
    if (method == "checked") {
        CheckedSuperposition checked = superpose_checked(a, b, sig);
        out["means_out"] = means_json(checked.result.means_out);
        out["T"] = checked.result.normalization_t;
        out["max_deviation"] = checked.means_deviation;
        out["t_deviation"] = checked.t_deviation;
        return out;
    }
    SuperpositionResult result =
        method_of(method) == SuperposeMethod::oracle ? superpose_oracle(a, b, sig) : superpose_closed(a, b, sig);
    out["means_out"] = means_json(result.means_out);
    out["T"] = result.normalization_t;
    return out;
}

ordered_json simulate_report(const MeanSpinVector &m, std::uint64_t shots, std::uint64_t seed) {
    if (!m.is_pure()) {
        throw Error(ErrorCode::NotPure, "simulated preparations must be pure states");
    }
    auto records = simulate_shots(m, shots, seed);
    EstimatedMeans est = estimate_means(records);
    ordered_json out;
    out["shots_per_axis"] = shots;
    out["seed"] = seed;
    ordered_json counts;
    for (const ShotRecord &r : records) {
        counts[std::string(1, axis_name(r.axis))] = r.ups;
    }
    out["counts"] = counts;
    out["means"] = means_json(est.means);
    out["stderr"] = axis_json(est.standard_error);
    return out;
}

ordered_json experiment_report(
    const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig, std::uint64_t shots, std::uint64_t seed) {
    ExperimentReport report = end_to_end_experiment(a, b, sig, shots, seed);
    ordered_json out;
    out["shots_per_axis"] = shots;
    out["seed"] = seed;
    ordered_json sigma;
    sigma["sig1"] = sig.sig1();
    sigma["sig2"] = sig.sig2();
    sigma["sig3"] = sig.sig3();
    out["sigma"] = sigma;
    out["estimated_a"] = estimate_json(report.estimated_a);
    out["estimated_b"] = estimate_json(report.estimated_b);
    out["projected_a"] = means_json(report.projected_a);
    out["projected_b"] = means_json(report.projected_b);
    out["means_out"] = means_json(report.measured.result.means_out);
    out["T"] = report.measured.result.normalization_t;
    out["noiseless_means_out"] = means_json(report.noiseless.result.means_out);
    out["noiseless_T"] = report.noiseless.result.normalization_t;
    out["deviation"] = report.deviation;
    return out;
}

}  // namespace

std::string_view kind_name(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::means:
            return "means";
        case DocumentKind::probabilities:
            return "probabilities";
        case DocumentKind::spinor:
            return "spinor";
        case DocumentKind::density:
            return "density";
    }
    return "unknown";
}

DocumentKind parse_kind(std::string_view name) {
    for (DocumentKind kind :
         {DocumentKind::means, DocumentKind::probabilities, DocumentKind::spinor, DocumentKind::density}) {
        if (kind_name(kind) == name) {
            return kind;
        }
    }
    throw DocumentError("unknown state kind '" + std::string(name) + "'");
}

StateDocument parse_state_document(const json &doc) {
    if (!doc.is_object()) {
        throw DocumentError("state document must be a JSON object");
    }
    auto kind_it = doc.find("kind");
    if (kind_it == doc.end() || !kind_it->is_string()) {
        throw DocumentError("state document needs a string field 'kind'");
    }
    switch (parse_kind(kind_it->get<std::string>())) {
        case DocumentKind::means:
            return MeanSpinVector(number_field(doc, "sx"), number_field(doc, "sy"), number_field(doc, "sz"));
        case DocumentKind::probabilities:
            return ProbabilityTriple(number_field(doc, "p1"), number_field(doc, "p2"), number_field(doc, "p3"));
        case DocumentKind::spinor: {
            Spinor s(
                Complex(number_field(doc, "re_up"), number_field(doc, "im_up")),
                Complex(number_field(doc, "re_down"), number_field(doc, "im_down")));
            if (s.norm2() <= tol::kZeroNorm2) {
                throw Error(ErrorCode::ZeroSpinor, "spinor document has zero norm");
            }
            return s;
        }
        case DocumentKind::density:
            return DensityMatrix2(
                number_field(doc, "r11"),
                number_field(doc, "r22"),
                Complex(number_field(doc, "re12"), number_field(doc, "im12")));
    }
    throw DocumentError("unreachable state kind");
}

DocumentKind kind_of(const StateDocument &state) {
    return static_cast<DocumentKind>(state.index());
}

ordered_json state_document_json(const StateDocument &state) {
    ordered_json out;
    out["kind"] = kind_name(kind_of(state));
    std::visit(
        [&out](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MeanSpinVector>) {
                out["sx"] = v.sx();
                out["sy"] = v.sy();
                out["sz"] = v.sz();
            } else if constexpr (std::is_same_v<T, ProbabilityTriple>) {
                out["p1"] = v.p1();
                out["p2"] = v.p2();
                out["p3"] = v.p3();
            } else if constexpr (std::is_same_v<T, Spinor>) {
                out["re_up"] = v.up().real();
                out["im_up"] = v.up().imag();
                out["re_down"] = v.down().real();
                out["im_down"] = v.down().imag();
            } else {
                out["r11"] = v.r00();
                out["r22"] = v.r11();
                out["re12"] = v.r01().real();
                out["im12"] = v.r01().imag();
            }
        },
        state);
    return out;
}

MeanSpinVector means_of(const StateDocument &state) {
    return std::visit(
        [](const auto &v) -> MeanSpinVector {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MeanSpinVector>) {
                return v;
            } else if constexpr (std::is_same_v<T, ProbabilityTriple>) {
                return means_from_probabilities(v);
            } else if constexpr (std::is_same_v<T, Spinor>) {
                return means_from_state(v);
            } else {
                return means_from_density(v);
            }
        },
        state);
}

StateDocument convert(const StateDocument &state, DocumentKind target) {
    if (target == DocumentKind::density && kind_of(state) == DocumentKind::probabilities) {
        return density_from_probabilities(std::get<ProbabilityTriple>(state));
    }
    MeanSpinVector m = means_of(state);
    switch (target) {
        case DocumentKind::means:
            return m;
        case DocumentKind::probabilities:
            return probabilities_from_means(m);
        case DocumentKind::spinor:
            return state_from_means(m);
        case DocumentKind::density:
            return density_from_means(m);
    }
    throw DocumentError("unreachable target kind");
}

std::string format_json(const ordered_json &value) {
    std::string out;
    format_value(value, 0, out);
    out += "\n";
    return out;
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Qubit states as mean spin projections: conversions, superposition, simulated measurement."};
    app.name("spinmean");
    app.require_subcommand(1);

    const std::vector<std::string> kinds{"means", "probabilities", "spinor", "density"};
    const std::vector<std::string> methods{"closed", "oracle", "checked"};

    std::string input = "-";
    std::string target;
    auto *convert_cmd = app.add_subcommand("convert", "Convert a state document to another description");
    convert_cmd->add_option("input", input, "State document path, or - for stdin");
    convert_cmd->add_option("--to", target, "Target kind")->required()->check(CLI::IsMember(kinds));

    std::string path_a;
    std::string path_b;
    std::vector<double> sigma;
    std::string method = "checked";
    auto *superpose_cmd = app.add_subcommand("superpose", "Superpose two pure states");
    superpose_cmd->add_option("a", path_a, "First state document")->required();
    superpose_cmd->add_option("b", path_b, "Second state document")->required();
    superpose_cmd->add_option("--sigma", sigma, "Sigma triple encoding (c1, c2)")->required()->expected(3)->delimiter(',');
    superpose_cmd->add_option("--method", method, "closed, oracle or checked")->check(CLI::IsMember(methods));

    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    auto *simulate_cmd = app.add_subcommand("simulate", "Simulate x/y/z spin measurements of a pure state");
    simulate_cmd->add_option("input", input, "State document path, or - for stdin");
    simulate_cmd->add_option("--shots", shots, "Shots per axis");
    simulate_cmd->add_option("--seed", seed, "Generator seed");

    auto *experiment_cmd = app.add_subcommand("experiment", "Measure two states and superpose the estimates");
    experiment_cmd->add_option("a", path_a, "First state document")->required();
    experiment_cmd->add_option("b", path_b, "Second state document")->required();
    experiment_cmd->add_option("--sigma", sigma, "Sigma triple encoding (c1, c2)")->required()->expected(3)->delimiter(',');
    experiment_cmd->add_option("--shots", shots, "Shots per axis");
    experiment_cmd->add_option("--seed", seed, "Generator seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "spinmean: " << e.what() << "\n";
        return kExitUsage;
    }

    ordered_json result;
    try {
        auto sigma_triple = [&sigma]() { return SigmaTriple(sigma.at(0), sigma.at(1), sigma.at(2)); };
        if (*convert_cmd) {
            StateDocument state = parse_state_document(read_document(input, in));
            result = state_document_json(convert(state, parse_kind(target)));
        } else if (*superpose_cmd) {
            MeanSpinVector a = means_of(parse_state_document(read_document(path_a, in)));
            MeanSpinVector b = means_of(parse_state_document(read_document(path_b, in)));
            result = superpose_report(a, b, sigma_triple(), method);
        } else if (*simulate_cmd) {
            MeanSpinVector m = means_of(parse_state_document(read_document(input, in)));
            result = simulate_report(m, shots, seed);
        } else if (*experiment_cmd) {
            MeanSpinVector a = means_of(parse_state_document(read_document(path_a, in)));
            MeanSpinVector b = means_of(parse_state_document(read_document(path_b, in)));
            result = experiment_report(a, b, sigma_triple(), shots, seed);
        }
    } catch (const Error &e) {
        out << format_json(error_json(error_code_name(e.code()), e.what()));
        return kExitDomain;
    } catch (const DocumentError &e) {
        out << format_json(error_json("InvalidDocument", e.what()));
        return kExitDomain;
    }
    out << format_json(result);
    return kExitOk;
}

}  // namespace spinmean::cli
