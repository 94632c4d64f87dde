#pragma once

// Module files. Two JSON shapes are accepted, all indices 1-based:
//
//   {"family": "A", "rank": 2, "intervals": [{"from": 1, "to": 2, "mult": 1}]}
//
//   {"family": "A", "rank": 2, "orientation": [[1, 2]] | "standard",
//    "dims": [1, 1], "maps": {"1->2": [[1]], "2->1": [["0"]]}}
//
// Matrix entries are integers or "p/q" strings. Maps not listed are zero.
// An optional "id" names the module in reports.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mvq/quiver.hpp"

namespace mvq {

struct ModuleInput {
  std::string id;
  PiModule module;
  std::optional<IntervalSpec> intervals;  // set for interval-form files
};

// Throws InputError on schema violations and ValidationError if the
// preprojective relation fails.
ModuleInput parse_module_text(const std::string& text, const std::string& default_id = "module");
ModuleInput parse_module_file(const std::filesystem::path& path);

// "A2 [1,2]+[2,2]^2", 1-based.
std::string describe_intervals(const CartanData& cartan, const IntervalSpec& spec);

ModuleInput from_intervals(const CartanData& cartan, const IntervalSpec& spec);

// "1,0,2" -> {1, 0, 2}.
std::vector<int> parse_dim_vector(const std::string& text);

}  // namespace mvq
