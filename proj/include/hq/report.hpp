#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hq/catalog.hpp"

namespace hq {

using Json = nlohmann::json;

// A catalog entry or an algebra read from a presentation or structure-tensor file.
struct Algebra {
    std::string name;
    std::string family;  // catalog family, or "file"
    std::string source;  // "catalog" or the file path
    std::optional<CatalogEntry> entry;
    std::optional<HopfPresentation> presented;
    std::optional<FDHopf> fd;
};

// Catalog name or file path; UnknownAlgebra, ParseError.
Algebra load_algebra(const std::string& name_or_path, int degree_bound);

struct CommandOptions {
    std::string method = "auto";    // auto | descent | homology | both
    std::string twist = "identity";  // identity | nakayama | custom-file
    std::string twist_file;
    int degree_bound = 6;
    int truncate = 8;
    int window = 3;
    uint64_t seed = 0;
    int jobs = 1;  // worker threads inside one computation
};

// Commands: catalog, axioms, integral, nakayama, radford, hochschild, duality.
// Failures of the computation itself become a failing "error" verdict.
Json run_command(const std::string& command, const std::string& algebra, const CommandOptions& opt);

// Whether a command applies to a catalog entry (used when fanning out over "all").
bool command_applies(const std::string& command, const CatalogEntry& e);

// 0 when every verdict passes, 1 when some verdict fails, 2 on an error verdict.
int exit_code(const Json& report);
bool all_pass(const Json& report);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_report(const Json& report);
std::string render_text(const Json& report);

}  // namespace hq
