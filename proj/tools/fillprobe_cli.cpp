// fillprobe command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fillprobe/fillprobe.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kSyntax = 2, kNotClosed = 3, kNoFilling = 4, kPartial = 5, kIncomplete = 6 };

int exit_for(fp_status s) {
  switch (s) {
    case FP_OK: return kOk;
    case FP_SYNTAX: return kSyntax;
    case FP_NOT_CLOSED: return kNotClosed;
    case FP_NO_FILLING: return kNoFilling;
    case FP_RESOURCE: return kPartial;
    case FP_INCOMPLETE_REWRITING: return kIncomplete;
    default: return kUsage;
  }
}

struct Failure {
  fp_status status;
  std::string message;
};

void check(fp_status s) {
  if (s != FP_OK) throw Failure{s, fp_last_error()};
}

struct GroupDeleter {
  void operator()(fp_group* g) const { fp_group_free(g); }
};
struct OptionsDeleter {
  void operator()(fp_options* o) const { fp_options_free(o); }
};
using GroupPtr = std::unique_ptr<fp_group, GroupDeleter>;
using OptionsPtr = std::unique_ptr<fp_options, OptionsDeleter>;

json take_json(char* raw) {
  json j = json::parse(raw);
  fp_string_free(raw);
  return j;
}

struct Config {
  unsigned radius_cap = 0;
  std::size_t vertex_cap = 200000;
  std::size_t node_budget = 100000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out_dir;
  unsigned k_max = 12;
  std::string mode = "auto";
  std::size_t samples = 256;
  unsigned workers = 1;
  std::size_t max_rules = 256;
  std::size_t max_len = 64;
};

OptionsPtr make_options(const Config& c) {
  OptionsPtr o(fp_options_new());
  if (!o) throw Failure{FP_RESOURCE, "out of memory"};
  check(fp_options_set_radius_cap(o.get(), c.radius_cap));
  check(fp_options_set_vertex_cap(o.get(), c.vertex_cap));
  check(fp_options_set_node_budget(o.get(), c.node_budget));
  check(fp_options_set_seed(o.get(), c.seed));
  check(fp_options_set_k_max(o.get(), c.k_max));
  fp_sampling mode = c.mode == "exhaustive" ? FP_SAMPLING_EXHAUSTIVE
                     : c.mode == "sampled"  ? FP_SAMPLING_SAMPLED
                                            : FP_SAMPLING_AUTO;
  check(fp_options_set_sampling(o.get(), mode, c.samples));
  check(fp_options_set_workers(o.get(), c.workers));
  check(fp_options_set_completion(o.get(), c.max_rules, c.max_len));
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{FP_IO, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path to a presentation file, or a catalog name.
GroupPtr load_group(const std::string& source, const fp_options* options) {
  fp_group* g = nullptr;
  if (std::filesystem::is_regular_file(source)) {
    check(fp_group_parse(read_file(source).c_str(), options, &g));
  } else {
    fp_status s = fp_group_from_catalog(source.c_str(), options, &g);
    if (s == FP_INVALID_ARGUMENT) throw Failure{FP_IO, "no file or catalog entry named '" + source + "'"};
    check(s);
  }
  return GroupPtr(g);
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + "\"";
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<json>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
    out += "\n";
  }
  return out;
}

struct Report {
  json body;
  std::string csv;
  int exit = kOk;
};

void publish(const Report& r, const Config& c) {
  std::string text = r.body.dump(2) + "\n";
  if (!c.out_dir.empty()) {
    std::filesystem::create_directories(c.out_dir);
    std::ofstream(std::filesystem::path(c.out_dir) / "report.json", std::ios::binary) << text;
    std::ofstream(std::filesystem::path(c.out_dir) / "table.csv", std::ios::binary) << r.csv;
  }
  std::cout << (c.format == "csv" ? r.csv : text);
}

Report cmd_parse(const std::string& source, const Config& c) {
  auto o = make_options(c);
  auto g = load_group(source, o.get());
  char* raw = nullptr;
  check(fp_group_info_json(g.get(), &raw));
  Report r;
  r.body = take_json(raw);
  std::vector<std::vector<json>> rows;
  for (const auto& rel : r.body["relators"]) rows.push_back({rel});
  r.csv = to_csv({"relator"}, rows);
  return r;
}

Report cmd_ball(const std::string& source, unsigned radius, const Config& c) {
  auto o = make_options(c);
  auto g = load_group(source, o.get());
  char* raw = nullptr;
  check(fp_ball_json(g.get(), radius, o.get(), &raw));
  Report r;
  r.body = take_json(raw);
  std::vector<std::vector<json>> rows;
  for (std::size_t v = 0; v < r.body["vertices"].size(); ++v)
    rows.push_back({v, r.body["vertices"][v], r.body["depth"][v]});
  r.csv = to_csv({"vertex", "word", "depth"}, rows);
  return r;
}

Report cmd_fill(const std::string& source, const std::string& word, const Config& c) {
  auto o = make_options(c);
  auto g = load_group(source, o.get());
  char* raw = nullptr;
  fp_status s = fp_fill_json(g.get(), word.c_str(), o.get(), &raw);
  Report r;
  if (s == FP_NO_FILLING) {
    r.body = {{"word", word}, {"status", "NoWithinBall"}, {"message", fp_last_error()}};
    r.csv = to_csv({"ring", "value", "radius", "status"}, {{"Q", nullptr, nullptr, "NoWithinBall"},
                                                          {"Z", nullptr, nullptr, "NoWithinBall"}});
    r.exit = kNoFilling;
    return r;
  }
  check(s);
  r.body = take_json(raw);
  std::vector<std::vector<json>> rows;
  for (const char* ring : {"Q", "Z"}) {
    const json& cert = r.body[ring];
    rows.push_back({ring, cert.value("value", json(nullptr)), cert.value("radius", json(nullptr)), cert["status"]});
  }
  r.csv = to_csv({"ring", "value", "radius", "status"}, rows);
  if (r.body["capped"].get<bool>()) r.exit = kPartial;
  return r;
}

std::string fv_csv(const json& estimate) {
  std::vector<std::vector<json>> rows;
  for (const auto& row : estimate["table"]) rows.push_back({row["k"], row["value"], row["radius"], row["status"]});
  return to_csv({"k", "value", "radius", "status"}, rows);
}

Report cmd_fv(const std::string& source, const Config& c) {
  auto o = make_options(c);
  auto g = load_group(source, o.get());
  char* raw = nullptr;
  check(fp_fv_json(g.get(), o.get(), &raw));
  Report r;
  r.body = take_json(raw);
  r.csv = fv_csv(r.body);
  if (r.body["capped"].get<bool>()) r.exit = kPartial;
  return r;
}

Report cmd_hyperbolic(const std::string& source, const Config& c) {
  auto o = make_options(c);
  auto g = load_group(source, o.get());
  char* raw = nullptr;
  check(fp_probe_hyperbolic_json(g.get(), o.get(), &raw));
  Report r;
  r.body = take_json(raw);
  r.csv = fv_csv(r.body["estimate"]);
  if (r.body["capped"].get<bool>()) r.exit = kPartial;
  return r;
}

Report cmd_amenable(const std::string& source, const std::vector<unsigned>& radii, const Config& c) {
  auto o = make_options(c);
  auto g = load_group(source, o.get());
  char* raw = nullptr;
  check(fp_probe_amenable_json(g.get(), radii.data(), radii.size(), o.get(), &raw));
  Report r;
  r.body = take_json(raw);
  std::vector<std::vector<json>> rows;
  for (const auto& row : r.body["table"]) rows.push_back({row["R"], row["value"], row["R"], row["status"]});
  r.csv = to_csv({"R", "value", "radius", "status"}, rows);
  if (r.body["capped"].get<bool>()) r.exit = kPartial;
  return r;
}

Report cmd_catalog() {
  char* raw = nullptr;
  check(fp_catalog_json(&raw));
  Report r;
  r.body = take_json(raw);
  std::vector<std::vector<json>> rows;
  for (const auto& e : r.body) rows.push_back({e["name"], e["presentation"], e["rules"], e["completion_required"]});
  r.csv = to_csv({"name", "presentation", "rules", "completion_required"}, rows);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact filling norms and growth probes for finitely presented groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--radius-cap", c.radius_cap, "Largest ball radius (0 = derived from the input)");
  app.add_option("--vertex-cap", c.vertex_cap, "Largest ball size in vertices")->check(CLI::PositiveNumber);
  app.add_option("--node-budget", c.node_budget, "Branch-and-bound node budget")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Seed for sampled probes");
  app.add_option("--format", c.format, "Standard output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", c.out_dir, "Directory receiving report.json and table.csv");
  app.add_option("--k-max", c.k_max, "Largest boundary length for filling tables")->check(CLI::Range(3u, 64u));
  app.add_option("--mode", c.mode, "Loop enumeration")->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  app.add_option("--samples", c.samples, "Loops drawn per length in sampled mode")->check(CLI::PositiveNumber);
  app.add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-rules", c.max_rules, "Completion rule budget")->check(CLI::PositiveNumber);
  app.add_option("--max-len", c.max_len, "Completion rule length budget")->check(CLI::PositiveNumber);

  std::string source, word;
  unsigned radius = 2;
  std::vector<unsigned> radii;

  auto* parse = app.add_subcommand("parse", "Validate a presentation and report its rewriting system");
  parse->add_option("group", source, "Presentation file or catalog name")->required();

  auto* ball = app.add_subcommand("ball", "Truncated Cayley 2-complex in coordinate form");
  ball->add_option("group", source, "Presentation file or catalog name")->required();
  ball->add_option("--radius,-r", radius, "Ball radius");

  auto* fill = app.add_subcommand("fill", "Rational and integral filling norms of a closed word");
  fill->add_option("group", source, "Presentation file or catalog name")->required();
  fill->add_option("word", word, "Closed word, e.g. \"a b a^-1 b^-1\"")->required();

  auto* fv = app.add_subcommand("fv", "Filling-function table");
  fv->add_option("group", source, "Presentation file or catalog name")->required();

  auto* probe = app.add_subcommand("probe", "Finite-scale hyperbolicity and amenability probes");
  probe->require_subcommand(1);
  auto* hyperbolic = probe->add_subcommand("hyperbolic", "Growth of the filling function");
  hyperbolic->add_option("group", source, "Presentation file or catalog name")->required();
  auto* amenable = probe->add_subcommand("amenable", "Bounded flows on balls");
  amenable->add_option("group", source, "Presentation file or catalog name")->required();
  amenable->add_option("-R,--radii", radii, "Ball radii")->required()->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "Shipped presentations");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    Report r;
    if (*parse) r = cmd_parse(source, c);
    else if (*ball) r = cmd_ball(source, radius, c);
    else if (*fill) r = cmd_fill(source, word, c);
    else if (*fv) r = cmd_fv(source, c);
    else if (*hyperbolic) r = cmd_hyperbolic(source, c);
    else if (*amenable) r = cmd_amenable(source, radii, c);
    else if (*list) r = cmd_catalog();
    publish(r, c);
    if (r.exit == kPartial) std::cerr << "warning: a cap was reached; the report is partial\n";
    return r.exit;
  } catch (const Failure& f) {
    std::cerr << "error (" << fp_status_name(f.status) << "): " << f.message << "\n";
    return exit_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
