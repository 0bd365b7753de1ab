#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogsem/interp.hpp"
#include "cogsem/model.hpp"
#include "cogsem/sense.hpp"
#include "cogsem/truth_value.hpp"

namespace cogsem {

enum class PropositionKind { atomic_I, atomic_II, atomic_M, quantified, connective, modal, normal_phrase };

std::string_view to_string(PropositionKind k) noexcept;

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The root is not uniquely interpreted.
class NotEffective : public std::runtime_error {
 public:
  explicit NotEffective(std::vector<std::string> nodes);
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }

 private:
  std::vector<std::string> nodes_;
};

struct EvalOptions {
  Logic logic = Logic::kleene;
  std::optional<double> most_threshold;  // overrides the lexicon's theta
};

// Every sense produced in one session together with the denotation it
// implies. Append-only; safe to share between threads.
class SenseRegistry {
 public:
  void add(const SensePtr& s, const Denotation& d);
  std::vector<SensePtr> implying(const Element& e) const;
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::pair<SensePtr, Element>> by_key_;
};

struct Witness {
  ObsId imaginary;
  ObsId actual;
  bool verifies;
};

struct TraceEntry {
  int depth = 0;
  std::string sense;
  PropositionKind kind = PropositionKind::normal_phrase;
  Truth value = Truth::ud;
  std::optional<std::size_t> content_size;
  std::vector<Witness> witnesses;
  std::string note;
};

// Truth of propositions on one model. Not thread-safe; use one evaluator per
// thread over a shared registry.
class Evaluator {
 public:
  explicit Evaluator(const CognitiveModel& m, EvalOptions opts = {},
                     const SenseRegistry* registry = nullptr,
                     const Interpretation* interp = nullptr);

  // Throws EvaluationError when a relation position is left unbound.
  PropositionKind classify(const Sense& s) const;

  Truth eval(const SensePtr& s);
  // ud when e is not part of the model or no registered proposition implies
  // it; the common value when all of them agree; ud otherwise.
  Truth denotation_truth(const Element& e);

  const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

 private:
  struct Link {
    const Sense* node;
    const OperationDef* op;
    SensePtr domain;  // null for context operations
    SensePtr body;
  };
  struct Chain {
    std::vector<Link> links;  // outermost first
    SensePtr base;
    Relation relation;  // the base viewed as a relation
    bool is_set = false;
  };

  std::optional<Chain> chain_of(const Sense& s) const;
  Truth eval_at(const SensePtr& s, bool instantiated);
  Truth dispatch(const SensePtr& s, PropositionKind kind, bool instantiated, TraceEntry& t);
  std::optional<Truth> vacancy(const Chain& c, TraceEntry& t);
  Element content(const Sense& s) const;
  Truth atomic_observational(const SensePtr& s, const Chain& c, bool instantiated, TraceEntry& t);
  Truth atomic_set(const SensePtr& s, const Chain& c, TraceEntry& t);
  Truth atomic_mental(const SensePtr& s, const Chain& c, TraceEntry& t);
  Truth quantified(const SensePtr& s, const Chain& c, TraceEntry& t);
  Truth connective(const Sense& s, TraceEntry& t);
  Truth modal(const Sense& s, TraceEntry& t);
  SensePtr replace_link(const Chain& c, std::size_t at, const SensePtr& replacement) const;

  const CognitiveModel& m_;
  EvalOptions opts_;
  const SenseRegistry* registry_;
  const Interpretation* interp_;
  Verifier verifier_;
  std::map<std::pair<std::string, bool>, Truth> cache_;
  std::vector<TraceEntry> trace_;
  int depth_ = 0;
};

Truth eval_denotation_truth(const Element& e, const CognitiveModel& m, const SenseRegistry& registry,
                            EvalOptions opts = {});

struct SentenceResult {
  Truth value = Truth::ud;
  PropositionKind kind = PropositionKind::normal_phrase;
  bool explanation_consistent = true;
  std::string note;
  std::vector<TraceEntry> trace;
};

// Every explanation pair (node, sense) outside modal clauses names the sense
// the interpretation chose for that node.
bool explanation_matches(const Interpretation& interp, const Explanation& ex);

// Truth of the sentence carried by `root` (normally interp.root().front()).
SentenceResult sentence_truth(const Interpretation& interp, const MeaningTriple& root,
                              const CognitiveModel& m, EvalOptions opts, SenseRegistry& registry);

// Throws NotEffective when a node outside modal clauses is ambiguous.
SentenceResult eval_sentence(const Interpretation& interp, const CognitiveModel& m,
                             EvalOptions opts = {}, SenseRegistry* registry = nullptr);

}  // namespace cogsem
