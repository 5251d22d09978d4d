#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saptree/distance.hpp"
#include "saptree/forest.hpp"
#include "saptree/levels.hpp"
#include "saptree/trace.hpp"

namespace saptree {

/// Plain description of a scenario: white count and, per arrival, the
/// 1-based white ids it connects to.
struct InstanceFile {
  std::uint32_t white_count = 0;
  std::vector<std::vector<std::uint32_t>> arrivals;

  bool operator==(const InstanceFile&) const = default;
};

enum class Family : std::uint8_t { random_tree, degree2, pendant_chain, star_burst };

const char* to_string(Family f);
/// Throws invalid_argument for an unknown name.
Family parse_family(std::string_view name);

/// Deterministic in (family, n, seed). Throws infeasible_family when the
/// family cannot be realized for n (degree2 with a single white vertex),
/// invalid_argument when n is 0.
InstanceFile generate(Family family, std::uint32_t n, std::uint64_t seed);

/// Replays the arrivals; forest validation errors name the arrival.
OnlineForest build_forest(const InstanceFile& instance);
InstanceFile to_instance(const OnlineForest& forest);

// Text format:
//   white <n>
//   black: <id> <id> ...      (one line per arrival, ids 1-based)
std::string write_instance(const InstanceFile& instance);
/// Throws ParseError with line and field position.
InstanceFile parse_instance(std::string_view text);

InstanceFile read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// One row of the per-turn results table. Absent values are written as
/// empty fields, infinite distances as "inf".
struct RunRow {
  TurnIndex t = 0;
  std::uint32_t b_id = 0;  // 1-based black index
  std::optional<std::uint64_t> pi_len;
  Distance dist;
  Distance sec_dist;
  std::optional<std::uint64_t> prefix_len;  // absent when dist is infinite
  std::optional<std::uint64_t> suffix_len;
  std::optional<std::uint32_t> dispatch_id;  // 1-based black index
  std::uint64_t deaths_count = 0;
  TurnClass turn_class = TurnClass::dist_infinite;

  bool operator==(const RunRow&) const = default;
};

struct RunRecord {
  std::vector<RunRow> rows;
  bool operator==(const RunRecord&) const = default;
};

inline constexpr std::string_view kRunHeader =
    "t,b_id,pi_len,dist,sec_dist,prefix_len,suffix_len,dispatch_id,deaths_count,turn_class";

RunRecord make_run_record(const ScenarioTrace& trace, double beta);
std::string write_run_record(const RunRecord& record);
/// Throws ParseError with line and field position.
RunRecord parse_run_record(std::string_view text);

}  // namespace saptree
