#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cogsem/observation.hpp"

namespace cogsem {

enum class Match { weak, strong, exact };
enum class QuantSort { forall, exists, unique, most };
enum class ArgLevel { denotation, sense, explanation };
enum class ConnectiveId { negation, conjunction, disjunction, implication, equivalence, exclusive };
enum class ModalSort { necessity, possibility };

struct BasicOp {
  Match match = Match::weak;
  int var = 1;  // 1-based position in the relation
};

struct QuantifierOp {
  QuantSort sort = QuantSort::exists;
  Match match = Match::weak;
  int var = 1;
  double theta = 0.5;  // only read by `most`
};

struct ConnectiveOp {
  ConnectiveId table = ConnectiveId::conjunction;
  // Name of a model relation for non-truth-functional connectives.
  std::optional<std::string> associated_relation;
};

struct ModalOp {
  ModalSort sort = ModalSort::necessity;
  ArgLevel mode = ArgLevel::sense;
};

struct ContextOp {
  Predicate keep;
};

struct OperationDef {
  std::string name;
  std::variant<BasicOp, QuantifierOp, ConnectiveOp, ModalOp, ContextOp> kind;
  ArgLevel level = ArgLevel::denotation;  // which modifier meaning it consumes

  int arity() const noexcept;
  const BasicOp* basic() const noexcept { return std::get_if<BasicOp>(&kind); }
  const QuantifierOp* quantifier() const noexcept { return std::get_if<QuantifierOp>(&kind); }
  const ConnectiveOp* connective() const noexcept { return std::get_if<ConnectiveOp>(&kind); }
  const ModalOp* modal() const noexcept { return std::get_if<ModalOp>(&kind); }
  const ContextOp* context() const noexcept { return std::get_if<ContextOp>(&kind); }

  // Canonical text used for sense identity and printing.
  std::string signature() const;
};

std::string_view to_string(Match m) noexcept;
std::string_view to_string(QuantSort q) noexcept;
std::string_view to_string(ArgLevel a) noexcept;
std::string_view to_string(ConnectiveId c) noexcept;
std::string_view to_string(ModalSort m) noexcept;

std::optional<Match> parse_match(std::string_view s) noexcept;
std::optional<QuantSort> parse_quant_sort(std::string_view s) noexcept;
std::optional<ArgLevel> parse_arg_level(std::string_view s) noexcept;
std::optional<ConnectiveId> parse_connective(std::string_view s) noexcept;
std::optional<ModalSort> parse_modal_sort(std::string_view s) noexcept;

}  // namespace cogsem
