#pragma once

#include <string>
#include <vector>

#include "presentation.hpp"
#include "rewriting.hpp"

namespace fillprobe {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string source;  // compact presentation text
  std::vector<std::string> rules;  // "lhs -> rhs", empty when none is known
  bool completion_required = false;
};

const std::vector<CatalogEntry>& catalog();
// Throws Error(kInvalidArgument) for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);
bool in_catalog(const std::string& name);

struct LoadedGroup {
  GroupPresentation presentation;
  RewritingSystem rws;
  bool completion_required = false;
};

// Parses the entry and checks its shipped rules: confluent, and every
// relator reduces to the identity. Entries flagged completion-required get
// bounded completion with the given limits instead.
LoadedGroup load_catalog_group(const std::string& name, CompletionLimits limits = {});

}  // namespace fillprobe
