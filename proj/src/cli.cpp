#include "ramkill/cli.hpp"

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "ramkill/arrangement_io.hpp"
#include "ramkill/coloring.hpp"
#include "ramkill/dot_export.hpp"
#include "ramkill/errors.hpp"
#include "ramkill/random_arrangement.hpp"
#include "ramkill/schemes.hpp"

namespace ramkill::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInvalidInput = 2;
constexpr int kInternalError = 3;

SncComplex load_complex(const RunConfig& config) {
    if (config.random) {
        RandomArrangementParams params;
        params.dimension = config.dimension.value_or(3);
        params.vertex_count = config.random_vertices;
        return random_arrangement(params, config.seed);
    }
    if (config.input_path.empty())
        throw std::invalid_argument("no input file (use --input or --random)");
    return read_arrangement_file(config.input_path, config.dimension);
}

int require_valid(const SncComplex& complex, std::ostream& err) {
    const std::vector<std::string> report = validate(complex);
    if (report.empty()) return kOk;
    for (const std::string& line : report) err << line << "\n";
    return kInvalidInput;
}

void print_coloring(std::ostream& out, const ColoringResult& result) {
    const ColoredComplex& cc = result.colored;
    out << "colored " << cc.complex.vertex_count() << " vertices with "
        << cc.complex.dimension() << " colors after " << result.log.size()
        << " blow-ups\n";
    for (int v = 0; v < cc.complex.vertex_count(); ++v)
        out << cc.complex.vertex(v).id << " " << cc.color[static_cast<size_t>(v)] << "\n";
    if (!result.log.empty()) {
        out << "blow-ups:\n";
        for (const BlowUpEvent& ev : result.log)
            out << "  " << to_string(ev.step) << " {"
                << cc.complex.vertex(ev.edge_u).id << ","
                << cc.complex.vertex(ev.edge_v).id << "} -> "
                << cc.complex.vertex(ev.created).id << "\n";
    }
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const SncComplex complex = load_complex(config);

    if (config.command == "validate") {
        const std::vector<std::string> report = validate(complex);
        out << "violations: " << report.size() << "\n";
        for (const std::string& line : report) out << line << "\n";
        return report.empty() ? kOk : kInvalidInput;
    }

    if (const int rc = require_valid(complex, err); rc != kOk) return rc;

    if (config.command == "color") {
        print_coloring(out, color(complex));
        return kOk;
    }

    if (config.command == "export-dot") {
        const std::string dot = to_dot(color(complex).colored);
        if (config.output_path.empty()) {
            out << dot;
        } else {
            std::ofstream file(config.output_path);
            if (!file) throw std::runtime_error("cannot write '" + config.output_path + "'");
            file << dot;
        }
        return kOk;
    }

    if (config.command == "verify") {
        if (config.r < 2) throw std::invalid_argument("verify requires r >= 2");
        const ColoredComplex colored = color(complex).colored;
        const FunctionScheme scheme = scheme_by_name(config.scheme, colored);
        VerifyOptions options;
        options.parallel = !config.serial;
        options.store_solutions = false;
        options.symbolic_check = config.symbolic_check;
        options.symbolic_seed = config.seed;
        const VerifyResult result = verify(colored, scheme, config.r, options);
        out << (config.json ? render_report_json(result, colored, scheme)
                            : render_report(result, colored, scheme));
        return std::holds_alternative<Certificate>(result) ? kOk : kVerificationFailed;
    }

    throw std::invalid_argument("unknown command '" + config.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return run_command(config, out, err);
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const impossible_coloring& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::overflow_error& e) {
        err << "overflow: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

}  // namespace ramkill::cli
