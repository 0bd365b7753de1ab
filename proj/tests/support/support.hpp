#pragma once

#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cogsem/interp.hpp"
#include "cogsem/io.hpp"
#include "cogsem/observation.hpp"
#include "cogsem/truth.hpp"

namespace cogsem::testing {

std::filesystem::path fixture(const std::string& rel);

// The power every helper observation uses: state (t, s1), resolution s0,
// one result.
ResolutionPower eye();

PrimitiveObservation obs(std::string world, std::string label, std::int64_t t,
                         std::optional<IntTuple> point, std::string result,
                         AcIm ac = AcIm::actual, std::string place = "here");

// Hand-built senses.
SensePtr leaf(std::string name, Element e);
SensePtr leaf(OperationDef op);
SensePtr apply_op(const OperationDef& op, SensePtr domain, SensePtr body);
SensePtr unary(const OperationDef& op, SensePtr arg);
SensePtr binary(const OperationDef& op, SensePtr left, SensePtr right);

OperationDef basic_op(Match m, int var);
OperationDef quantifier_op(QuantSort s, Match m, int var, double theta = 0.5);
OperationDef connective_op(ConnectiveId c);

// A fixture directory loaded and interpreted.
struct Loaded {
  CognitiveModel model;
  Lexicon lexicon;
  Context context;
  Interpretation interp;
};

Loaded load(const std::string& dir, const std::string& model, const std::string& lexicon,
            const std::string& context, const std::string& tree);

Truth verdict(const std::string& dir, const std::string& model, const std::string& lexicon,
              const std::string& context, const std::string& tree, EvalOptions opts = {});

// Small random corpora with frequent collisions, so every consistency
// check has something to find.
std::vector<PrimitiveObservation> random_corpus(std::mt19937& rng, std::size_t n);

// Pair checks straight from the definitions, O(n^2).
std::vector<ViolationPair> naive_axiom(const std::vector<PrimitiveObservation>& a);
std::vector<ViolationPair> naive_weak(const std::vector<PrimitiveObservation>& a);
std::vector<ViolationPair> naive_strong(const std::vector<PrimitiveObservation>& a);

}  // namespace cogsem::testing
