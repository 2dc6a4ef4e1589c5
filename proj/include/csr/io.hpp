#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "csr/dynamics.hpp"
#include "csr/game.hpp"

namespace csr {

inline constexpr const char* kInstanceFormatVersion = "csr-v1";

/// On-disk form of an instance: versioned JSON with the node count, sorted
/// edge pairs, the resource count, an optional initial allocation, and
/// optional free-form metadata (family, params, seed). parse(serialize(x))
/// reproduces x exactly.
struct InstanceFile {
  int n = 0;
  std::vector<Edge> edges;
  int k = 1;
  std::optional<Allocation> init;
  std::optional<nlohmann::json> meta;

  bool operator==(const InstanceFile&) const = default;
};

std::string serialize_instance(const InstanceFile& file);

/// Throws std::invalid_argument naming the offending field on malformed
/// input. Structural graph errors (self-loops, disconnected, ...) surface
/// when the instance is built, not here.
InstanceFile parse_instance(const std::string& text);

InstanceFile load_instance_file(const std::string& path);
void save_instance_file(const InstanceFile& file, const std::string& path);

/// Builds the game (and validates any embedded initial allocation).
Instance to_instance(const InstanceFile& file);

InstanceFile from_instance(const Instance& inst,
                           std::optional<Allocation> init = std::nullopt,
                           std::optional<nlohmann::json> meta = std::nullopt);

/// "0,1,0" -> {0,1,0}; rejects anything but comma-separated integers.
Allocation parse_allocation_list(const std::string& text);
std::string format_allocation_list(const Allocation& alloc);

/// Shortest-field significant-digit formatting used everywhere a real lands
/// in a CSV (12 significant digits).
std::string format_real(double value, int significant_digits = 12);

/// CSV with one row per step:
///   step,player,old_resource,new_resource,old_radius,new_radius,potential,social_cost
void write_trace_csv(const Trace& trace, std::ostream& out);
void write_trace_csv_file(const Trace& trace, const std::string& path);

/// Graphviz export; nodes are colored by held resource when an allocation is
/// given.
void write_dot(const Graph& graph, const Allocation* alloc, std::ostream& out);
void write_dot_file(const Graph& graph, const Allocation* alloc, const std::string& path);

}  // namespace csr
