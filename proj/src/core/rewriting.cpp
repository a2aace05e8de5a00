#include "rewriting.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>

#include "error.hpp"

namespace fillprobe {

namespace {

std::size_t letter_code(Letter x) { return 2 * static_cast<std::size_t>(std::abs(x) - 1) + (x < 0 ? 1 : 0); }

bool ends_with(const Word& stack, const Word& suffix) {
  if (suffix.size() > stack.size()) return false;
  return std::equal(suffix.begin(), suffix.end(), stack.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

bool valid_letter(Letter x, const RewritingSystem& rws) {
  if (x == 0 || static_cast<std::size_t>(std::abs(x)) > rws.generator_count) return false;
  return rws.group_mode || x > 0;
}

std::vector<RewriteRule> cancellation_rules(std::size_t generator_count) {
  std::vector<RewriteRule> out;
  for (std::size_t g = 1; g <= generator_count; ++g) {
    Letter x = static_cast<Letter>(g);
    out.push_back({{x, -x}, {}});
    out.push_back({{-x, x}, {}});
  }
  return out;
}

// Reduces both sides of every critical pair between lhs_a -> rhs_a and
// lhs_b -> rhs_b: proper overlaps (suffix of a = prefix of b) and occurrences
// of lhs_b inside lhs_a.
template <typename Emit>
void critical_pairs(const RewriteRule& a, const RewriteRule& b, Emit&& emit) {
  const Word& la = a.lhs;
  const Word& lb = b.lhs;
  std::size_t limit = std::min(la.size(), lb.size());
  for (std::size_t k = 1; k < limit + 1; ++k) {
    if (k == la.size() || k == lb.size()) continue;  // inclusions handled below
    if (!std::equal(la.end() - static_cast<std::ptrdiff_t>(k), la.end(), lb.begin())) continue;
    Word overlap = la;
    overlap.insert(overlap.end(), lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
    Word left = a.rhs;
    left.insert(left.end(), lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
    Word right(la.begin(), la.end() - static_cast<std::ptrdiff_t>(k));
    right.insert(right.end(), b.rhs.begin(), b.rhs.end());
    emit(std::move(overlap), std::move(left), std::move(right));
  }
  if (lb.size() <= la.size() && !(&a == &b)) {
    for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
      if (!std::equal(lb.begin(), lb.end(), la.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
      Word right(la.begin(), la.begin() + static_cast<std::ptrdiff_t>(pos));
      right.insert(right.end(), b.rhs.begin(), b.rhs.end());
      right.insert(right.end(), la.begin() + static_cast<std::ptrdiff_t>(pos + lb.size()), la.end());
      emit(Word(la), Word(a.rhs), std::move(right));
    }
  }
}

}  // namespace

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto cu = letter_code(u[i]), cv = letter_code(v[i]);
    if (cu != cv) return cu < cv;
  }
  return false;
}

Rewriter::Rewriter(const RewritingSystem& rws) : rws_(rws), by_last_(2 * rws.generator_count) {
  for (std::size_t i = 0; i < rws.rules.size(); ++i) {
    const auto& lhs = rws.rules[i].lhs;
    if (!lhs.empty()) by_last_[letter_code(lhs.back())].push_back(i);
  }
}

void Rewriter::run(Word& stack, Word& pending) const {
  // pending is consumed from the back
  while (!pending.empty()) {
    Letter x = pending.back();
    pending.pop_back();
    if (rws_.group_mode && !stack.empty() && stack.back() == -x) {
      stack.pop_back();
      continue;
    }
    stack.push_back(x);
    for (std::size_t idx : by_last_[letter_code(x)]) {
      const auto& rule = rws_.rules[idx];
      if (!ends_with(stack, rule.lhs)) continue;
      stack.resize(stack.size() - rule.lhs.size());
      // re-feed the replacement so it can interact with what precedes it
      pending.insert(pending.end(), rule.rhs.rbegin(), rule.rhs.rend());
      break;
    }
  }
}

Word Rewriter::reduce(const Word& w) const {
  Word stack;
  stack.reserve(w.size());
  Word pending(w.rbegin(), w.rend());
  run(stack, pending);
  return stack;
}

Word Rewriter::append(const Word& irreducible, Letter x) const {
  Word stack = irreducible;
  Word pending{x};
  run(stack, pending);
  return stack;
}

RewritingSystem make_rewriting_system(std::size_t generator_count, std::vector<RewriteRule> rules, bool group_mode) {
  RewritingSystem rws;
  rws.generator_count = generator_count;
  rws.group_mode = group_mode;
  for (const auto& rule : rules) {
    for (const Word* w : {&rule.lhs, &rule.rhs})
      for (Letter x : *w)
        if (!valid_letter(x, rws))
          throw Error(ErrorCode::kInvalidArgument, "rule uses letter " + std::to_string(x) + " outside the alphabet");
    if (!shortlex_less(rule.rhs, rule.lhs))
      throw Error(ErrorCode::kInvalidArgument, "rule is not shortlex-reducing");
  }
  rws.rules = std::move(rules);
  rws.status = check_local_confluence(rws).empty() ? RewritingStatus::kConfluent : RewritingStatus::kIncomplete;
  return rws;
}

Word reduce(const Word& w, const RewritingSystem& rws) { return Rewriter(rws).reduce(w); }

Word normal_form(const Word& w, const RewritingSystem& rws) {
  if (!rws.confluent())
    throw Error(ErrorCode::kIncompleteRewriting, "normal forms need a confluent rewriting system");
  return reduce(w, rws);
}

std::vector<CriticalPair> check_local_confluence(const RewritingSystem& rws) {
  std::vector<RewriteRule> all = rws.rules;
  if (rws.group_mode) {
    auto cancel = cancellation_rules(rws.generator_count);
    all.insert(all.end(), cancel.begin(), cancel.end());
  }
  Rewriter rewriter(rws);
  std::vector<CriticalPair> unresolved;
  std::set<std::pair<Word, Word>> seen;
  for (const auto& a : all) {
    for (const auto& b : all) {
      critical_pairs(a, b, [&](Word overlap, Word left, Word right) {
        Word l = rewriter.reduce(left);
        Word r = rewriter.reduce(right);
        if (l == r) return;
        if (!seen.insert({l, r}).second) return;
        unresolved.push_back({std::move(overlap), std::move(l), std::move(r)});
      });
    }
  }
  return unresolved;
}

namespace {

class Completion {
 public:
  Completion(std::size_t generator_count, CompletionLimits limits) : limits_(limits) {
    system_.generator_count = generator_count;
    system_.group_mode = true;
  }

  // Returns false when a budget was exceeded.
  bool run(std::deque<std::pair<Word, Word>> equations) {
    equations_ = std::move(equations);
    if (!drain()) return false;
    auto cancel = cancellation_rules(system_.generator_count);
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (!active_[i]) continue;
      for (std::size_t j = 0; j <= i; ++j) {
        if (!active_[j]) continue;
        push_pairs(rules_[i], rules_[j]);
        if (i != j) push_pairs(rules_[j], rules_[i]);
        if (!active_[i]) break;
      }
      if (active_[i]) {
        for (const auto& c : cancel) {
          push_pairs(rules_[i], c);
          push_pairs(c, rules_[i]);
        }
      }
      if (!drain()) return false;
    }
    return true;
  }

  RewritingSystem result(bool complete) {
    RewritingSystem out;
    out.generator_count = system_.generator_count;
    out.group_mode = true;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (active_[i]) out.rules.push_back(rules_[i]);
    std::sort(out.rules.begin(), out.rules.end(),
              [](const RewriteRule& x, const RewriteRule& y) { return shortlex_less(x.lhs, y.lhs); });
    out.status = RewritingStatus::kIncomplete;
    if (complete && check_local_confluence(out).empty()) out.status = RewritingStatus::kConfluent;
    return out;
  }

 private:
  void push_pairs(const RewriteRule& a, const RewriteRule& b) {
    critical_pairs(a, b, [&](Word, Word left, Word right) { equations_.emplace_back(std::move(left), std::move(right)); });
  }

  void refresh() {
    system_.rules.clear();
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (active_[i]) system_.rules.push_back(rules_[i]);
    rewriter_.emplace(system_);
  }

  std::size_t active_count() const { return static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true)); }

  bool drain() {
    if (!rewriter_) refresh();
    while (!equations_.empty()) {
      auto [u, v] = std::move(equations_.front());
      equations_.pop_front();
      Word a = rewriter_->reduce(u);
      Word b = rewriter_->reduce(v);
      if (a == b) continue;
      if (shortlex_less(a, b)) std::swap(a, b);
      if (a.size() > limits_.max_len) return false;
      RewriteRule rule{std::move(a), std::move(b)};
      // interreduce: rules whose lhs contains the new lhs go back to the queue
      for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (!active_[i]) continue;
        auto& old = rules_[i];
        bool contains = std::search(old.lhs.begin(), old.lhs.end(), rule.lhs.begin(), rule.lhs.end()) != old.lhs.end();
        if (contains) {
          active_[i] = false;
          equations_.emplace_back(old.lhs, old.rhs);
        }
      }
      rules_.push_back(std::move(rule));
      active_.push_back(true);
      if (active_count() > limits_.max_rules) return false;
      refresh();
      for (std::size_t i = 0; i + 1 < rules_.size(); ++i)
        if (active_[i]) rules_[i].rhs = rewriter_->reduce(rules_[i].rhs);
      refresh();
    }
    return true;
  }

  CompletionLimits limits_;
  RewritingSystem system_;
  std::optional<Rewriter> rewriter_;
  std::vector<RewriteRule> rules_;
  std::vector<bool> active_;
  std::deque<std::pair<Word, Word>> equations_;
};

}  // namespace

RewritingSystem knuth_bendix_bounded(const GroupPresentation& p, CompletionLimits limits) {
  std::deque<std::pair<Word, Word>> seeds;
  for (const auto& r : p.relators) seeds.emplace_back(r, Word{});
  for (const auto& rule : p.rules) seeds.emplace_back(rule.lhs, rule.rhs);
  if (limits.max_rules < p.relators.size())
    throw Error(ErrorCode::kInvalidArgument, "max_rules is smaller than the number of relators");
  Completion completion(p.generator_count(), limits);
  bool complete = completion.run(std::move(seeds));
  return completion.result(complete);
}

}  // namespace fillprobe
