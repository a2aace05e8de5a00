#include "fillprobe/fillprobe.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "cache.hpp"
#include "error.hpp"
#include "report.hpp"

using namespace fillprobe;
using nlohmann::json;

struct fp_group {
  GroupPresentation presentation;
  RewritingSystem rws;
  bool completion_required = false;
};

struct fp_options {
  unsigned radius_cap = 0;
  BallLimits ball;
  CircuitLimits circuits;
  std::size_t node_budget = 100000;
  CompletionLimits completion;
  std::uint64_t seed = 0;
  unsigned k_max = 12;
  fp_sampling sampling = FP_SAMPLING_AUTO;
  std::size_t samples = 256;
  unsigned workers = 1;
  bool cache_set = false;
  std::string cache_dir;
};

namespace {

thread_local std::string last_error;

fp_status fail(fp_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
fp_status guarded(F&& body) {
  try {
    body();
    return FP_OK;
  } catch (const Error& e) {
    return fail(static_cast<fp_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FP_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(FP_INTERNAL, e.what());
  } catch (...) {
    return fail(FP_INTERNAL, "unknown failure");
  }
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fp_status emit(const json& j, char** out) {
  *out = duplicate(j.dump(2));
  return FP_OK;
}

const fp_options& defaults() {
  static const fp_options d;
  return d;
}

const fp_options& resolve(const fp_options* o) { return o ? *o : defaults(); }

std::string cache_dir(const fp_options& o) { return o.cache_set ? o.cache_dir : cache_dir_from_env(); }

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

void require_confluent(const fp_group& g) {
  if (!g.rws.confluent())
    throw Error(ErrorCode::kIncompleteRewriting,
                "rewriting system is incomplete (" + std::to_string(g.rws.rules.size()) +
                    " rules); raise the completion limits");
}

// Shipped rules are kept when they are confluent and kill every relator.
RewritingSystem rules_or_completion(const GroupPresentation& p, const CompletionLimits& limits) {
  if (!p.rules.empty()) {
    try {
      RewritingSystem rws = make_rewriting_system(p.generator_count(), p.rules);
      bool kills = rws.confluent();
      for (const auto& r : p.relators) kills = kills && normal_form(r, rws).empty();
      if (kills) return rws;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidArgument) throw;
    }
  }
  return knuth_bendix_bounded(p, limits);
}

FillOptions fill_options(const fp_options& o) {
  FillOptions f;
  f.node_budget = o.node_budget;
  return f;
}

ProbeBudget probe_budget(const fp_options& o) {
  ProbeBudget b;
  b.k_max = o.k_max;
  if (o.sampling == FP_SAMPLING_EXHAUSTIVE) b.mode = SamplingMode::kExhaustive;
  if (o.sampling == FP_SAMPLING_SAMPLED) b.mode = SamplingMode::kSampled;
  b.seed = o.seed;
  b.samples = o.samples;
  if (o.radius_cap != 0) b.radius_cap = o.radius_cap;
  b.ball = o.ball;
  b.circuits = o.circuits;
  b.fill = fill_options(o);
  b.workers = o.workers;
  b.cache_dir = cache_dir(o);
  return b;
}

json fill_ring(const Word& loop, const TwoComplex& x, const fp_group& g, unsigned r0, unsigned r_max,
               const EscalationOptions& opts, bool& capped) {
  try {
    return report::certificate(norm_with_escalation(loop, x, r0, r_max, opts), x, g.presentation);
  } catch (const ResourceError& e) {
    capped = true;
    json out = {{"ring", opts.ring == Ring::kRational ? "Q" : "Z"}, {"status", "Capped"}, {"reason", e.what()}};
    out["lower"] = e.lower_bound() ? report::rational(*e.lower_bound()) : json(nullptr);
    out["upper"] = e.upper_bound() ? report::rational(*e.upper_bound()) : json(nullptr);
    return out;
  }
}

}  // namespace

extern "C" {

const char* fp_version(void) { return "1.0.0"; }

const char* fp_last_error(void) { return last_error.c_str(); }

const char* fp_status_name(fp_status status) {
  switch (status) {
    case FP_OK: return "ok";
    case FP_INVALID_ARGUMENT: return "invalid-argument";
    case FP_SYNTAX: return "syntax";
    case FP_NOT_CLOSED: return "not-closed";
    case FP_NO_FILLING: return "no-filling";
    case FP_RESOURCE: return "resource";
    case FP_INCOMPLETE_REWRITING: return "incomplete-rewriting";
    case FP_IO: return "io";
    case FP_INTERNAL: return "internal";
  }
  return "unknown";
}

void fp_string_free(char* s) { delete[] s; }

fp_status fp_group_parse(const char* text, const fp_options* options, fp_group** out) {
  if (!text || !out) return fail(FP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto g = std::make_unique<fp_group>();
    g->presentation = parse_presentation(text);
    g->rws = rules_or_completion(g->presentation, resolve(options).completion);
    *out = g.release();
  });
}

fp_status fp_group_from_catalog(const char* name, const fp_options* options, fp_group** out) {
  if (!name || !out) return fail(FP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    LoadedGroup loaded = load_catalog_group(name, resolve(options).completion);
    auto g = std::make_unique<fp_group>();
    g->presentation = std::move(loaded.presentation);
    g->rws = std::move(loaded.rws);
    g->completion_required = loaded.completion_required;
    *out = g.release();
  });
}

void fp_group_free(fp_group* group) { delete group; }

int fp_group_is_confluent(const fp_group* group) { return group && group->rws.confluent() ? 1 : 0; }

fp_status fp_group_info_json(const fp_group* group, char** out_json) {
  if (!group || !out_json) return fail(FP_INVALID_ARGUMENT, "null argument");
  return guarded([&] { emit(report::group_info(group->presentation, group->rws, group->completion_required), out_json); });
}

fp_status fp_catalog_json(char** out_json) {
  if (!out_json) return fail(FP_INVALID_ARGUMENT, "null argument");
  return guarded([&] { emit(report::catalog_listing(), out_json); });
}

fp_options* fp_options_new(void) { return new (std::nothrow) fp_options(); }

void fp_options_free(fp_options* options) { delete options; }

fp_status fp_options_set_radius_cap(fp_options* o, unsigned radius) {
  if (!o) return fail(FP_INVALID_ARGUMENT, "null options");
  o->radius_cap = radius;
  return FP_OK;
}

fp_status fp_options_set_vertex_cap(fp_options* o, size_t vertices) {
  if (!o || vertices == 0) return fail(FP_INVALID_ARGUMENT, "vertex cap must be positive");
  o->ball.vertex_cap = vertices;
  return FP_OK;
}

fp_status fp_options_set_walk_cap(fp_options* o, size_t walks) {
  if (!o || walks == 0) return fail(FP_INVALID_ARGUMENT, "walk cap must be positive");
  o->circuits.walk_cap = walks;
  return FP_OK;
}

fp_status fp_options_set_node_budget(fp_options* o, size_t nodes) {
  if (!o || nodes == 0) return fail(FP_INVALID_ARGUMENT, "node budget must be positive");
  o->node_budget = nodes;
  return FP_OK;
}

fp_status fp_options_set_completion(fp_options* o, size_t max_rules, size_t max_len) {
  if (!o || max_rules == 0 || max_len == 0) return fail(FP_INVALID_ARGUMENT, "completion limits must be positive");
  o->completion = {max_rules, max_len};
  return FP_OK;
}

fp_status fp_options_set_seed(fp_options* o, uint64_t seed) {
  if (!o) return fail(FP_INVALID_ARGUMENT, "null options");
  o->seed = seed;
  return FP_OK;
}

fp_status fp_options_set_k_max(fp_options* o, unsigned k_max) {
  if (!o || k_max < 3) return fail(FP_INVALID_ARGUMENT, "k_max must be at least 3");
  o->k_max = k_max;
  return FP_OK;
}

fp_status fp_options_set_sampling(fp_options* o, fp_sampling mode, size_t samples) {
  if (!o || samples == 0) return fail(FP_INVALID_ARGUMENT, "sample count must be positive");
  if (mode != FP_SAMPLING_AUTO && mode != FP_SAMPLING_EXHAUSTIVE && mode != FP_SAMPLING_SAMPLED)
    return fail(FP_INVALID_ARGUMENT, "unknown sampling mode");
  o->sampling = mode;
  o->samples = samples;
  return FP_OK;
}

fp_status fp_options_set_workers(fp_options* o, unsigned workers) {
  if (!o || workers == 0) return fail(FP_INVALID_ARGUMENT, "worker count must be positive");
  o->workers = workers;
  return FP_OK;
}

fp_status fp_options_set_cache_dir(fp_options* o, const char* dir) {
  if (!o) return fail(FP_INVALID_ARGUMENT, "null options");
  o->cache_set = true;
  o->cache_dir = dir ? dir : "";
  return FP_OK;
}

fp_status fp_ball_json(const fp_group* group, unsigned radius, const fp_options* options, char** out_json) {
  if (!group || !out_json) return fail(FP_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    require_confluent(*group);
    const fp_options& o = resolve(options);
    TwoComplex x = load_or_build_complex(group->presentation, group->rws, radius, o.ball, cache_dir(o));
    json j = complex_to_json(x, group->presentation);
    j["presentation_id"] = presentation_id(group->presentation);
    j["counts"] = {{"vertices", x.ball.vertex_count()}, {"edges", x.ball.edge_count()}, {"cells", x.cells.size()}};
    j["d1_d2_zero"] = (x.d1 * x.d2).is_zero();
    emit(j, out_json);
  });
}

fp_status fp_fill_json(const fp_group* group, const char* word, const fp_options* options, char** out_json) {
  if (!group || !word || !out_json) return fail(FP_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    require_confluent(*group);
    const fp_options& o = resolve(options);
    const GroupPresentation& p = group->presentation;
    Word loop = parse_word(word, p.generators);
    if (!normal_form(loop, group->rws).empty())
      throw Error(ErrorCode::kNotClosed, "word is not trivial in the group: " + std::string(word));
    unsigned r0 = default_initial_radius(loop.size(), p.max_relator_length());
    unsigned cap = o.radius_cap != 0 ? o.radius_cap : r0 + 2;
    r0 = std::min(r0, cap);
    cap = clamp_radius(p, group->rws, cap, o.ball);
    r0 = std::min(r0, cap);
    TwoComplex x = load_or_build_complex(p, group->rws, cap, o.ball, cache_dir(o));

    EscalationOptions esc;
    esc.fill = fill_options(o);
    esc.ball = o.ball;
    bool capped = false;
    json q = fill_ring(loop, x, *group, r0, cap, esc, capped);
    esc.ring = Ring::kIntegral;
    json z = fill_ring(loop, x, *group, r0, cap, esc, capped);
    json j = {{"presentation_id", presentation_id(p)},
              {"word", format_word(loop, p.generators)},
              {"length", loop.size()},
              {"initial_radius", r0},
              {"radius_cap", cap},
              {"capped", capped},
              {"Q", q},
              {"Z", z}};
    emit(j, out_json);
  });
}

fp_status fp_fv_json(const fp_group* group, const fp_options* options, char** out_json) {
  if (!group || !out_json) return fail(FP_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    require_confluent(*group);
    FVEstimate est = estimate_fv(group->presentation, group->rws, probe_budget(resolve(options)));
    json j = report::fv_estimate(est, group->presentation);
    j["fit"] = report::growth_fit(fit_growth(est));
    emit(j, out_json);
  });
}

fp_status fp_probe_hyperbolic_json(const fp_group* group, const fp_options* options, char** out_json) {
  if (!group || !out_json) return fail(FP_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    require_confluent(*group);
    HyperbolicityReport r = probe_hyperbolicity(group->presentation, group->rws, probe_budget(resolve(options)));
    json j = report::hyperbolicity(r, group->presentation);
    j["capped"] = r.estimate.capped;
    emit(j, out_json);
  });
}

fp_status fp_probe_amenable_json(const fp_group* group, const unsigned* radii, size_t count,
                                 const fp_options* options, char** out_json) {
  if (!group || !out_json || (!radii && count > 0)) return fail(FP_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    require(count > 0, "at least one radius is required");
    require_confluent(*group);
    const fp_options& o = resolve(options);
    FlowOptions flow;
    flow.ball = o.ball;
    flow.workers = o.workers;
    flow.cache_dir = cache_dir(o);
    AmenabilityProbe probe =
        probe_amenability(group->presentation, group->rws, std::vector<unsigned>(radii, radii + count), flow);
    json j = report::amenability(probe);
    bool capped = false;
    for (const auto& row : probe.table) capped = capped || !row.solved;
    j["presentation_id"] = presentation_id(group->presentation);
    j["capped"] = capped;
    emit(j, out_json);
  });
}

void fp_verification_stats(size_t* verified, size_t* failed) {
  VerificationStats s = verification_stats();
  if (verified) *verified = s.verified;
  if (failed) *failed = s.failed;
}

}  // extern "C"
