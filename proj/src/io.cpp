#include "csr/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace csr {

using nlohmann::json;

namespace {

[[noreturn]] void fail_field(const std::string& field, const std::string& why) {
  throw std::invalid_argument("instance file: field '" + field + "' " + why);
}

int require_int(const json& doc, const char* field) {
  if (!doc.contains(field)) fail_field(field, "is missing");
  const json& value = doc.at(field);
  if (!value.is_number_integer()) fail_field(field, "must be an integer");
  return value.get<int>();
}

}  // namespace

std::string serialize_instance(const InstanceFile& file) {
  json doc;
  doc["version"] = kInstanceFormatVersion;
  doc["n"] = file.n;
  json edges = json::array();
  for (const auto& [a, b] : file.edges) edges.push_back(json::array({a, b}));
  doc["edges"] = std::move(edges);
  doc["k"] = file.k;
  if (file.init) doc["init"] = *file.init;
  if (file.meta) doc["meta"] = *file.meta;
  return doc.dump(2) + "\n";
}

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance file: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("instance file: top level must be an object");
  if (!doc.contains("version")) fail_field("version", "is missing");
  if (doc.at("version") != kInstanceFormatVersion)
    fail_field("version", std::string("must be \"") + kInstanceFormatVersion + "\"");

  InstanceFile file;
  file.n = require_int(doc, "n");
  file.k = require_int(doc, "k");

  if (!doc.contains("edges")) fail_field("edges", "is missing");
  const json& edges = doc.at("edges");
  if (!edges.is_array()) fail_field("edges", "must be an array of node pairs");
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail_field("edges", "entries must be pairs of integers");
    file.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }

  if (doc.contains("init")) {
    const json& init = doc.at("init");
    if (!init.is_array()) fail_field("init", "must be an array of resource ids");
    Allocation alloc;
    for (const json& v : init) {
      if (!v.is_number_integer()) fail_field("init", "entries must be integers");
      alloc.push_back(v.get<int>());
    }
    file.init = std::move(alloc);
  }
  if (doc.contains("meta")) {
    if (!doc.at("meta").is_object()) fail_field("meta", "must be an object");
    file.meta = doc.at("meta");
  }
  return file;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void save_instance_file(const InstanceFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << serialize_instance(file);
}

Instance to_instance(const InstanceFile& file) {
  Instance inst(Graph(file.n, file.edges), file.k);
  if (file.init) validate_allocation(inst, *file.init);
  return inst;
}

InstanceFile from_instance(const Instance& inst, std::optional<Allocation> init,
                           std::optional<nlohmann::json> meta) {
  InstanceFile file;
  file.n = inst.graph.node_count();
  file.edges = inst.graph.edges();
  file.k = inst.resource_count;
  file.init = std::move(init);
  file.meta = std::move(meta);
  return file;
}

Allocation parse_allocation_list(const std::string& text) {
  Allocation alloc;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("allocation list: '" + token + "' is not an integer");
    }
    if (used != token.size())
      throw std::invalid_argument("allocation list: '" + token + "' is not an integer");
    alloc.push_back(value);
    pos = comma + 1;
  }
  return alloc;
}

std::string format_allocation_list(const Allocation& alloc) {
  std::string out;
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(alloc[i]);
  }
  return out;
}

std::string format_real(double value, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant_digits, value);
  return buffer;
}

void write_trace_csv(const Trace& trace, std::ostream& out) {
  out << "step,player,old_resource,new_resource,old_radius,new_radius,potential,social_cost\n";
  for (const TraceStep& step : trace.steps) {
    out << step.index << ',' << step.move.player << ',' << step.move.old_resource << ','
        << step.move.new_resource << ',' << step.move.old_radius << ','
        << step.move.new_radius << ',' << format_real(step.potential_after) << ','
        << step.social_cost_after << '\n';
  }
}

void write_trace_csv_file(const Trace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  write_trace_csv(trace, out);
}

namespace {

// Fill colors for DOT export, reused cyclically past 10 resources.
constexpr const char* kPalette[] = {"lightblue", "lightcoral",  "palegreen", "khaki",
                                    "plum",      "lightsalmon", "lightcyan", "wheat",
                                    "thistle",   "darkseagreen"};

}  // namespace

void write_dot(const Graph& graph, const Allocation* alloc, std::ostream& out) {
  out << "graph csr {\n  node [style=filled];\n";
  for (NodeId i = 0; i < graph.node_count(); ++i) {
    out << "  " << i;
    if (alloc) {
      const ResourceId o = (*alloc)[i];
      out << " [label=\"" << i << ":o" << o << "\", fillcolor="
          << kPalette[o % (sizeof kPalette / sizeof kPalette[0])] << "]";
    }
    out << ";\n";
  }
  for (const auto& [a, b] : graph.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
}

void write_dot_file(const Graph& graph, const Allocation* alloc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dot file: " + path);
  write_dot(graph, alloc, out);
}

}  // namespace csr
