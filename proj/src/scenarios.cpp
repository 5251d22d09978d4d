#include "saptree/scenarios.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "saptree/disjoint_sets.hpp"
#include "saptree/error.hpp"

namespace saptree {

namespace {

/// Uniform draw in [0, bound) by rejection; unlike the standard
/// distributions its output is fixed across library implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

InstanceFile pendant_chain(std::uint32_t n) {
  InstanceFile out{n, {}};
  for (std::uint32_t i = 1; i < n; ++i) out.arrivals.push_back({i, i + 1});
  out.arrivals.push_back({n});
  return out;
}

// Uniform spanning tree of the complete bipartite graph with n vertices per
// side (loop-erased random walks), blacks revealed in random order.
InstanceFile random_tree(std::uint32_t n, std::mt19937_64& rng) {
  const std::uint32_t total = 2 * n;  // whites 0..n-1, blacks n..2n-1
  std::vector<char> in_tree(total, 0);
  std::vector<std::uint32_t> next(total, 0);
  const auto root = static_cast<std::uint32_t>(draw(rng, total));
  in_tree[root] = 1;
  for (std::uint32_t start = 0; start < total; ++start) {
    for (std::uint32_t u = start; !in_tree[u]; u = next[u]) {
      const auto step = static_cast<std::uint32_t>(draw(rng, n));
      next[u] = u < n ? n + step : step;
    }
    for (std::uint32_t u = start; !in_tree[u]; u = next[u]) in_tree[u] = 1;
  }
  std::vector<std::vector<std::uint32_t>> blacks(n);
  for (std::uint32_t v = 0; v < total; ++v) {
    if (v == root) continue;
    const std::uint32_t w = v < n ? v : next[v];
    const std::uint32_t b = v < n ? next[v] : v;
    blacks[b - n].push_back(w + 1);
  }
  shuffle(blacks, rng);
  InstanceFile out{n, {}};
  for (auto& nb : blacks) {
    std::sort(nb.begin(), nb.end());
    out.arrivals.push_back(std::move(nb));
  }
  return out;
}

// Tracks components of the whites as arrivals merge them.
struct Components {
  DisjointSets sets;
  std::vector<std::uint32_t> roots;  // current representatives

  explicit Components(std::uint32_t n) {
    sets.reset(n);
    for (std::uint32_t i = 0; i < n; ++i) roots.push_back(i);
  }

  /// `k` distinct components, one uniform white from each (whites 0-based).
  std::vector<std::uint32_t> pick(std::size_t k, std::mt19937_64& rng,
                                  const std::vector<std::vector<std::uint32_t>>& members) {
    std::vector<std::uint32_t> out;
    std::vector<std::size_t> chosen;
    while (chosen.size() < k) {
      const auto i = static_cast<std::size_t>(draw(rng, roots.size()));
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      chosen.push_back(i);
      const auto& m = members[roots[i]];
      out.push_back(m[draw(rng, m.size())]);
    }
    return out;
  }
};

// Every arrival joins two (occasionally three) components, so no vertex
// ever dies; arrivals stop once the whites form a single tree.
InstanceFile degree2(std::uint32_t n, std::mt19937_64& rng) {
  if (n < 2) {
    throw Error(ErrorCode::infeasible_family,
                "degree2 needs at least two white vertices");
  }
  Components comps(n);
  std::vector<std::vector<std::uint32_t>> members(n);
  for (std::uint32_t i = 0; i < n; ++i) members[i] = {i};
  InstanceFile out{n, {}};
  while (comps.roots.size() >= 2) {
    std::size_t k = 2;
    if (comps.roots.size() >= 3 && draw(rng, 4) == 0) k = 3;
    auto pick = comps.pick(k, rng, members);
    std::uint32_t keep = comps.sets.find(pick[0]);
    for (std::size_t i = 1; i < pick.size(); ++i) {
      const std::uint32_t a = comps.sets.find(pick[i]);
      comps.sets.unite(keep, a);
      const std::uint32_t r = comps.sets.find(keep);
      const std::uint32_t other = r == keep ? a : keep;
      members[r].insert(members[r].end(), members[other].begin(), members[other].end());
      members[other].clear();
      std::erase(comps.roots, other);
      keep = r;
    }
    std::vector<std::uint32_t> ids;
    for (auto w : pick) ids.push_back(w + 1);
    std::sort(ids.begin(), ids.end());
    out.arrivals.push_back(std::move(ids));
  }
  return out;
}

// Stars (three or more distinct components), bridges (two) and pendants
// (one) in random proportion; the first arrival is a star when possible.
InstanceFile star_burst(std::uint32_t n, std::mt19937_64& rng) {
  Components comps(n);
  std::vector<std::vector<std::uint32_t>> members(n);
  for (std::uint32_t i = 0; i < n; ++i) members[i] = {i};
  InstanceFile out{n, {}};
  for (std::uint32_t a = 0; a < n; ++a) {
    const std::size_t avail = comps.roots.size();
    std::size_t k;
    const auto roll = draw(rng, 8);
    if (a == 0 || roll < 3) {
      k = 3 + draw(rng, 3);  // star of degree 3..5
    } else if (roll < 6) {
      k = 2;
    } else {
      k = 1;
    }
    k = std::min(k, avail);
    auto pick = comps.pick(k, rng, members);
    std::uint32_t keep = comps.sets.find(pick[0]);
    for (std::size_t i = 1; i < pick.size(); ++i) {
      const std::uint32_t b = comps.sets.find(pick[i]);
      comps.sets.unite(keep, b);
      const std::uint32_t r = comps.sets.find(keep);
      const std::uint32_t other = r == keep ? b : keep;
      members[r].insert(members[r].end(), members[other].begin(), members[other].end());
      members[other].clear();
      std::erase(comps.roots, other);
      keep = r;
    }
    std::vector<std::uint32_t> ids;
    for (auto w : pick) ids.push_back(w + 1);
    std::sort(ids.begin(), ids.end());
    out.arrivals.push_back(std::move(ids));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t field, const std::string& what) {
  throw ParseError(line, field, what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  return lines;
}

template <class T>
std::optional<T> to_number(std::string_view s) {
  T value{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::random_tree: return "random_tree";
    case Family::degree2: return "degree2";
    case Family::pendant_chain: return "pendant_chain";
    case Family::star_burst: return "star_burst";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::random_tree, Family::degree2, Family::pendant_chain,
                   Family::star_burst}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorCode::invalid_argument, "unknown family '" + std::string(name) + "'");
}

InstanceFile generate(Family family, std::uint32_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be at least 1");
  std::mt19937_64 rng(seed);
  switch (family) {
    case Family::pendant_chain: return pendant_chain(n);
    case Family::random_tree: return random_tree(n, rng);
    case Family::degree2: return degree2(n, rng);
    case Family::star_burst: return star_burst(n, rng);
  }
  throw Error(ErrorCode::invalid_argument, "unknown family");
}

OnlineForest build_forest(const InstanceFile& instance) {
  OnlineForest f(instance.white_count);
  for (std::size_t i = 0; i < instance.arrivals.size(); ++i) {
    try {
      f.add_black_indices(instance.arrivals[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "arrival " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return f;
}

InstanceFile to_instance(const OnlineForest& forest) {
  return {forest.white_count(), forest.arrivals()};
}

std::string write_instance(const InstanceFile& instance) {
  std::string out = "white " + std::to_string(instance.white_count) + "\n";
  for (const auto& a : instance.arrivals) {
    out += "black:";
    for (auto id : a) out += " " + std::to_string(id);
    out += "\n";
  }
  return out;
}

InstanceFile parse_instance(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) parse_fail(1, 1, "expected 'white <n>'");
  InstanceFile out;
  const auto head = words(lines[0]);
  if (head.empty() || head[0] != "white") parse_fail(1, 1, "expected 'white'");
  if (head.size() != 2) parse_fail(1, head.size() < 2 ? 2 : 3, "expected one count after 'white'");
  const auto n = to_number<std::uint32_t>(head[1]);
  if (!n || *n == 0) parse_fail(1, 2, "white count must be a positive integer");
  out.white_count = *n;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const auto w = words(lines[i]);
    if (w.empty()) parse_fail(line, 1, "empty line");
    if (w[0] != "black:") parse_fail(line, 1, "expected 'black:'");
    if (w.size() == 1) parse_fail(line, 2, "an arrival needs at least one white id");
    std::vector<std::uint32_t> ids;
    for (std::size_t k = 1; k < w.size(); ++k) {
      const auto id = to_number<std::uint32_t>(w[k]);
      if (!id) parse_fail(line, k + 1, "'" + std::string(w[k]) + "' is not an integer id");
      if (*id == 0) parse_fail(line, k + 1, "white ids are 1-based");
      if (*id > out.white_count) {
        parse_fail(line, k + 1, "white id " + std::to_string(*id) + " exceeds " +
                                    std::to_string(out.white_count));
      }
      ids.push_back(*id);
    }
    out.arrivals.push_back(std::move(ids));
  }
  return out;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::invalid_argument, "write failed for " + path);
}

RunRecord make_run_record(const ScenarioTrace& trace, double beta) {
  const auto& forest = *trace.forest;
  RunRecord out;
  for (const auto& rec : trace.turns) {
    RunRow row;
    row.t = rec.t;
    row.b_id = forest.label_index(rec.b);
    if (rec.pi_len) row.pi_len = *rec.pi_len;
    row.dist = rec.dist;
    row.sec_dist = rec.sec_dist;
    if (rec.dist_finite()) {
      row.prefix_len = rec.prefix_len;
      row.suffix_len = rec.suffix_len;
    }
    if (rec.dispatch) row.dispatch_id = forest.label_index(*rec.dispatch);
    row.deaths_count = rec.deaths.size();
    row.turn_class = classify_turn(rec, beta);
    out.rows.push_back(row);
  }
  return out;
}

std::string write_run_record(const RunRecord& record) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  std::string out(kRunHeader);
  out += "\n";
  for (const auto& r : record.rows) {
    out += std::to_string(r.t) + "," + std::to_string(r.b_id) + "," + opt(r.pi_len) +
           "," + r.dist.to_string() + "," + r.sec_dist.to_string() + "," +
           opt(r.prefix_len) + "," + opt(r.suffix_len) + "," + opt(r.dispatch_id) +
           "," + std::to_string(r.deaths_count) + "," + to_string(r.turn_class) + "\n";
  }
  return out;
}

RunRecord parse_run_record(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0] != kRunHeader) parse_fail(1, 1, "missing or wrong header");
  RunRecord out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const auto f = split(lines[i], ',');
    if (f.size() != 10) {
      parse_fail(line, std::min<std::size_t>(f.size(), 10) + (f.size() < 10),
                 "expected 10 fields, found " + std::to_string(f.size()));
    }
    auto integer = [&](std::size_t k) {
      const auto v = to_number<std::uint64_t>(f[k]);
      if (!v) parse_fail(line, k + 1, "expected an integer");
      return *v;
    };
    auto optional = [&](std::size_t k) -> std::optional<std::uint64_t> {
      if (f[k].empty()) return std::nullopt;
      return integer(k);
    };
    auto distance = [&](std::size_t k) {
      if (f[k] == "inf") return Distance::infinity();
      const auto v = integer(k);
      if (v >= Distance::infinity().value()) parse_fail(line, k + 1, "distance out of range");
      return Distance(static_cast<Distance::value_type>(v));
    };
    RunRow r;
    r.t = static_cast<TurnIndex>(integer(0));
    r.b_id = static_cast<std::uint32_t>(integer(1));
    r.pi_len = optional(2);
    r.dist = distance(3);
    r.sec_dist = distance(4);
    r.prefix_len = optional(5);
    r.suffix_len = optional(6);
    if (auto d = optional(7)) r.dispatch_id = static_cast<std::uint32_t>(*d);
    r.deaths_count = integer(8);
    bool known = false;
    for (TurnClass c : {TurnClass::dist_infinite, TurnClass::no_dispatch,
                        TurnClass::case_slow, TurnClass::case_jump}) {
      if (f[9] == to_string(c)) {
        r.turn_class = c;
        known = true;
      }
    }
    if (!known) parse_fail(line, 10, "unknown turn class '" + std::string(f[9]) + "'");
    out.rows.push_back(r);
  }
  return out;
}

}  // namespace saptree
