#include "mvq/module_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mvq/errors.hpp"

namespace mvq {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("module file: missing key \"") + key + "\"");
  return *it;
}

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InputError("module file: " + what + " must be an integer");
  return v.get<int>();
}

int vertex_index(const json& v, int rank, const std::string& what) {
  const int x = as_int(v, what);
  if (x < 1 || x > rank) throw InputError("module file: " + what + " = " + std::to_string(x) + " is not a vertex");
  return x - 1;
}

Rational matrix_entry(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("module file: matrix entries must be integers or \"p/q\" strings");
}

QMatrix parse_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& label) {
  if (!v.is_array() || v.size() != rows)
    throw InputError("module file: map " + label + " must have " + std::to_string(rows) + " rows");
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = v[i];
    if (!row.is_array() || row.size() != cols)
      throw InputError("module file: map " + label + " rows must have " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = matrix_entry(row[j]);
  }
  return m;
}

std::pair<int, int> parse_edge_label(const std::string& label, int rank) {
  const auto pos = label.find("->");
  if (pos == std::string::npos) throw InputError("module file: map label \"" + label + "\" is not of the form s->t");
  try {
    std::size_t used = 0;
    const int s = std::stoi(label.substr(0, pos), &used);
    if (used != pos) throw std::invalid_argument("");
    const std::string rest = label.substr(pos + 2);
    const int t = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    if (s < 1 || s > rank || t < 1 || t > rank) throw InputError("module file: map label \"" + label + "\" names a missing vertex");
    return {s - 1, t - 1};
  } catch (const std::logic_error&) {
    throw InputError("module file: map label \"" + label + "\" is not of the form s->t");
  }
}

CartanData parse_cartan(const json& doc) {
  const json& fam = require(doc, "family");
  if (!fam.is_string()) throw InputError("module file: family must be a string");
  return cartan_matrix(parse_family(fam.get<std::string>()), as_int(require(doc, "rank"), "rank"));
}

IntervalSpec parse_intervals(const json& list, int rank) {
  if (!list.is_array()) throw InputError("module file: intervals must be a list");
  IntervalSpec spec;
  for (const auto& item : list) {
    if (!item.is_object()) throw InputError("module file: each interval must be an object");
    Interval iv;
    iv.first = vertex_index(require(item, "from"), rank, "interval from");
    iv.last = vertex_index(require(item, "to"), rank, "interval to");
    iv.mult = item.contains("mult") ? as_int(item["mult"], "interval mult") : 1;
    spec.push_back(iv);
  }
  return spec;
}

PiModule parse_explicit(const json& doc, const CartanData& cartan) {
  Quiver quiver;
  const auto orient = doc.find("orientation");
  if (orient == doc.end() || (orient->is_string() && orient->get<std::string>() == "standard")) {
    quiver = Quiver::standard(cartan);
  } else if (orient->is_array()) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : *orient) {
      if (!e.is_array() || e.size() != 2) throw InputError("module file: orientation entries must be [source, target]");
      edges.emplace_back(vertex_index(e[0], cartan.rank, "orientation source"),
                         vertex_index(e[1], cartan.rank, "orientation target"));
    }
    quiver = Quiver(cartan, edges);
  } else {
    throw InputError("module file: orientation must be \"standard\" or a list of edges");
  }

  const json& dims_json = require(doc, "dims");
  if (!dims_json.is_array() || dims_json.size() != static_cast<std::size_t>(cartan.rank))
    throw InputError("module file: dims must list one entry per vertex");
  std::vector<int> dims;
  for (const auto& d : dims_json) {
    const int x = as_int(d, "dims entry");
    if (x < 0) throw InputError("module file: dims entries must be nonnegative");
    dims.push_back(x);
  }

  PiModule module = PiModule::zero(quiver, dims);
  if (auto maps = doc.find("maps"); maps != doc.end()) {
    if (!maps->is_object()) throw InputError("module file: maps must be an object keyed by \"s->t\"");
    for (const auto& [label, value] : maps->items()) {
      const auto [s, t] = parse_edge_label(label, cartan.rank);
      const auto a = quiver.arrow_between(s, t);
      if (!a) throw InputError("module file: " + label + " is not an arrow of the doubled quiver");
      module.maps[*a] = parse_matrix(value, static_cast<std::size_t>(dims[static_cast<std::size_t>(t)]),
                                     static_cast<std::size_t>(dims[static_cast<std::size_t>(s)]), label);
    }
  }
  return module;
}

}  // namespace

std::string describe_intervals(const CartanData& cartan, const IntervalSpec& spec) {
  std::string out = cartan.name();
  if (spec.empty()) return out + " 0";
  for (std::size_t k = 0; k < spec.size(); ++k) {
    out += k ? "+" : " ";
    out += "[" + std::to_string(spec[k].first + 1) + "," + std::to_string(spec[k].last + 1) + "]";
    if (spec[k].mult != 1) out += "^" + std::to_string(spec[k].mult);
  }
  return out;
}

ModuleInput from_intervals(const CartanData& cartan, const IntervalSpec& spec) {
  return {describe_intervals(cartan, spec), build_from_intervals(cartan, spec), spec};
}

ModuleInput parse_module_text(const std::string& text, const std::string& default_id) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("module file: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("module file: top level must be an object");
  const CartanData cartan = parse_cartan(doc);

  ModuleInput input;
  if (doc.contains("intervals")) {
    if (doc.contains("maps") || doc.contains("dims"))
      throw InputError("module file: give either intervals or dims/maps, not both");
    input = from_intervals(cartan, parse_intervals(doc["intervals"], cartan.rank));
  } else {
    input.module = parse_explicit(doc, cartan);
    input.id = default_id;
  }
  if (auto id = doc.find("id"); id != doc.end()) {
    if (!id->is_string()) throw InputError("module file: id must be a string");
    input.id = id->get<std::string>();
  }
  require_valid(input.module);
  return input;
}

ModuleInput parse_module_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_module_text(buf.str(), path.stem().string());
}

std::vector<int> parse_dim_vector(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("");
      out.push_back(x);
    } catch (const std::logic_error&) {
      throw InputError("dimension vector \"" + text + "\" must be comma-separated integers");
    }
  }
  if (out.empty()) throw InputError("dimension vector is empty");
  return out;
}

}  // namespace mvq
