#pragma once

#include <string>

#include <json.hpp>

#include "shortc2/boettcher.hpp"
#include "shortc2/green.hpp"
#include "shortc2/henon.hpp"

namespace shortc2 {

using json = nlohmann::json;

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);

// Shared map document: {"d": int, "a": [re, im], "q": [[re, im], ...]},
// q listed constant term first (a_0 .. a_{d-2}).
json map_to_json(const HenonMap& H);
HenonMap map_from_json(const json& j);
HenonMap load_map(const std::string& path);
void save_map(const HenonMap& H, const std::string& path);

// Paths travel as a JSON array of [x_re, x_im, y_re, y_im].
json path_to_json(const SampledPath& path);
SampledPath path_from_json(const json& j);
SampledPath load_path(const std::string& path);
void save_path(const SampledPath& p, const std::string& path);

// {value, error_bound, iterations, escaped}; "undecided" appears only when
// set so the decided format stays minimal.
json green_to_json(const GreenEstimate& g);

json dyadic_to_json(const DyadicClass& c);
DyadicClass dyadic_from_json(const json& j);

// '#'-prefixed metadata lines, one column header row, then row-major cells.
std::string grid_to_csv(const GridResult& g);
void write_grid_csv(const GridResult& g, const std::string& path);

// 8-bit binary PGM (P5); gray = round(255 (value - vmin) / (vmax - vmin)).
// The exact mapping and grid metadata go to the sidecar document.
std::string grid_to_pgm(const GridResult& g);
json pgm_sidecar(const GridResult& g, const std::string& pgm_name);
void write_grid_pgm(const GridResult& g, const std::string& pgm_path,
                    const std::string& sidecar_path);

// Versioned schema covering every CLI artifact, plus a small structural
// validator (type / properties / required / items / enum) used by tests and
// the verify suite.
json report_schema();
bool schema_validate(const json& schema, const json& value,
                     std::string* why = nullptr);

} // namespace shortc2
