#pragma once

// Command-line front end. Every command produces an Envelope which is
// serialized either as deterministic JSON (stable key order, 17 significant
// digits) or as an aligned text table.

#include <array>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lawson/spectral.hpp"
#include "lawson/surface.hpp"

namespace lawson::cli {

using Json = nlohmann::ordered_json;

enum class Status { Ok, Fail, Indeterminate };

std::string to_string(Status s);

struct Envelope {
    std::string command;
    std::optional<Triple> triple;
    Json payload = Json::object();
    Json tolerances = Json::object();
    Status status = Status::Ok;
};

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 1,
    kExitVerificationFailed = 2,
    kExitNumeric = 3,
};

/// JSON with fixed key order and %.17g numbers; byte-identical across runs.
std::string dump_json(const Json& j);
std::string to_json(const Envelope& e);
std::string to_text(const Envelope& e);

/// Default grid for spectra and verification; LAWSON_GRID_N overrides it.
int default_grid();

Envelope cmd_classify(const Triple& t);
Envelope cmd_verify(const Triple& t, int grid_n, bool deep);
Envelope cmd_spectrum(const Triple& t, int l, Symmetry symmetry, int grid_n, int count);
Envelope cmd_table();
Envelope cmd_landen(int points);

enum class ExportFormat { Csv, Obj };

void write_csv(const Triple& t, int nx, int ny, std::ostream& out);
/// Projection onto the 1-based coordinate axes given; quad faces wrap around.
void write_obj(const Triple& t, int nx, int ny, const std::array<int, 3>& axes, std::ostream& out);

Envelope cmd_export(const Triple& t, int nx, int ny, ExportFormat format, const std::array<int, 3>& axes,
                    const std::string& path);

/// Maps a failure raised by a command to its exit code and prints the
/// diagnostic to `err`: invalid input -> 1, numeric failure or undecided
/// count -> 3.
int report_failure(std::exception_ptr failure, std::ostream& err);

/// Parses arguments, runs one subcommand, prints the envelope to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lawson::cli
