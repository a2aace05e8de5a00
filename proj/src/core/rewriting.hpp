#pragma once

#include <cstddef>
#include <vector>

#include "presentation.hpp"

namespace fillprobe {

// Shortlex with the declared generator order, each inverse ranked right after
// its generator: a < a^-1 < b < b^-1 < ...
bool shortlex_less(const Word& u, const Word& v);

enum class RewritingStatus { kConfluent, kIncomplete };

// Rules over the letters of a presentation. In group mode the alphabet holds
// generators and inverses and free cancellation (x x^-1 -> 1) is implicit;
// in monoid mode only positive letters occur and nothing is implicit.
struct RewritingSystem {
  std::size_t generator_count = 0;
  bool group_mode = true;
  std::vector<RewriteRule> rules;
  RewritingStatus status = RewritingStatus::kIncomplete;

  bool confluent() const { return status == RewritingStatus::kConfluent; }
};

struct CriticalPair {
  Word overlap;  // the ambiguous word
  Word left;     // irreducible descendant along the first rule
  Word right;    // irreducible descendant along the second rule
};

// Validates that every rule is shortlex-reducing and uses declared letters,
// then sets status from check_local_confluence. Throws Error(kInvalidArgument).
RewritingSystem make_rewriting_system(std::size_t generator_count, std::vector<RewriteRule> rules,
                                      bool group_mode = true);

// Rule lookup indexed by the last letter of each left-hand side. Holds a
// reference to the system, which must outlive it.
class Rewriter {
 public:
  explicit Rewriter(const RewritingSystem& rws);

  Word reduce(const Word& w) const;
  // reduce(w + [x]) for an already irreducible w, touching only the tail.
  Word append(const Word& irreducible, Letter x) const;

 private:
  void run(Word& stack, Word& pending) const;

  const RewritingSystem& rws_;
  std::vector<std::vector<std::size_t>> by_last_;
};

// Rewrites to an irreducible word using leftmost reduction; the result does
// not depend on the strategy only when the system is confluent.
Word reduce(const Word& w, const RewritingSystem& rws);

// Unique irreducible descendant. Throws Error(kIncompleteRewriting) unless
// the system is confluent.
Word normal_form(const Word& w, const RewritingSystem& rws);

// Critical pairs whose two sides do not reduce to a common word. Empty means
// locally confluent, hence confluent since shortlex rules terminate.
std::vector<CriticalPair> check_local_confluence(const RewritingSystem& rws);

struct CompletionLimits {
  std::size_t max_rules = 256;
  std::size_t max_len = 64;
};

// Shortlex Knuth-Bendix completion seeded with relator = 1 equations (plus
// any rules carried by the presentation). Budget exhaustion is reported as
// status kIncomplete with the partial rule set, never as an error.
RewritingSystem knuth_bendix_bounded(const GroupPresentation& p, CompletionLimits limits = {});

}  // namespace fillprobe
