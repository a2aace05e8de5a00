#include "catalog.hpp"

#include "error.hpp"

namespace fillprobe {

namespace {

std::vector<CatalogEntry> build_catalog() {
  return {
      {"F1", "infinite cyclic group", "a |", {}, false},
      {"F2", "free group of rank 2", "a, b |", {}, false},
      {"Z2", "free abelian group of rank 2", "a, b | a b a^-1 b^-1",
       {"b a -> a b", "b a^-1 -> a^-1 b", "b^-1 a -> a b^-1", "b^-1 a^-1 -> a^-1 b^-1"}, false},
      {"Z3", "free abelian group of rank 3", "a, b, c | a b a^-1 b^-1, a c a^-1 c^-1, b c b^-1 c^-1",
       {"b a -> a b", "b a^-1 -> a^-1 b", "b^-1 a -> a b^-1", "b^-1 a^-1 -> a^-1 b^-1", "c a -> a c",
        "c a^-1 -> a^-1 c", "c b -> b c", "c b^-1 -> b^-1 c", "c^-1 a -> a c^-1", "c^-1 a^-1 -> a^-1 c^-1",
        "c^-1 b -> b c^-1", "c^-1 b^-1 -> b^-1 c^-1"},
       false},
      {"H3", "integral Heisenberg group", "x, y, z | x y x^-1 y^-1 z^-1, x z x^-1 z^-1, y z y^-1 z^-1", {}, true},
      // generators ordered so that shortlex completion terminates
      {"genus2", "fundamental group of the closed genus 2 surface",
       "a1, a2, b1, b2 | a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1",
       {"b1 a1 b1^-1 a1^-1 -> a2 b2 a2^-1 b2^-1", "b1 a1^-1 b1^-1 a2 -> a1^-1 b2 a2 b2^-1",
        "b1^-1 a1^-1 b2 a2 -> a1^-1 b1^-1 a2 b2", "b1^-1 a2 b2 a2^-1 -> a1 b1^-1 a1^-1 b2",
        "b2 a2 b2^-1 a2^-1 -> a1 b1 a1^-1 b1^-1", "b2 a2^-1 b2^-1 a1 -> a2^-1 b1 a1 b1^-1",
        "b2^-1 a1 b1 a1^-1 -> a2 b2^-1 a2^-1 b1", "b2^-1 a2^-1 b1 a1 -> a2^-1 b2^-1 a1 b1"},
       false},
      {"BS12", "Baumslag-Solitar group BS(1,2)", "a, t | t a t^-1 a^-1 a^-1", {}, true},
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

bool in_catalog(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return true;
  return false;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorCode::kInvalidArgument, "unknown catalog group '" + name + "'");
}

LoadedGroup load_catalog_group(const std::string& name, CompletionLimits limits) {
  const CatalogEntry& entry = catalog_entry(name);
  LoadedGroup out;
  out.presentation = parse_presentation(entry.source);
  out.completion_required = entry.completion_required;
  if (entry.completion_required) {
    out.rws = knuth_bendix_bounded(out.presentation, limits);
    return out;
  }
  std::vector<RewriteRule> rules;
  for (const auto& text : entry.rules) {
    auto arrow = text.find("->");
    rules.push_back({parse_word(text.substr(0, arrow), out.presentation.generators),
                     parse_word(text.substr(arrow + 2), out.presentation.generators)});
  }
  out.rws = make_rewriting_system(out.presentation.generator_count(), std::move(rules));
  if (!out.rws.confluent()) throw Error(ErrorCode::kInternal, "shipped rules for " + name + " are not confluent");
  for (const auto& r : out.presentation.relators)
    if (!normal_form(r, out.rws).empty())
      throw Error(ErrorCode::kInternal, "shipped rules for " + name + " do not kill every relator");
  return out;
}

}  // namespace fillprobe
