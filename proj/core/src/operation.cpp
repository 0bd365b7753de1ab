#include "cogsem/operation.hpp"

#include <array>
#include <cstdio>
#include <utility>

namespace cogsem {

int OperationDef::arity() const noexcept {
  if (const auto* c = connective()) return c->table == ConnectiveId::negation ? 1 : 2;
  if (modal() || context()) return 1;
  return 2;
}

std::string OperationDef::signature() const {
  std::string core;
  if (const auto* b = basic()) {
    core = "basic:" + std::string(to_string(b->match)) + ":x" + std::to_string(b->var);
  } else if (const auto* q = quantifier()) {
    core = "quant:" + std::string(to_string(q->sort)) + ":" + std::string(to_string(q->match)) +
           ":x" + std::to_string(q->var);
    if (q->sort == QuantSort::most) {
      char buf[32];
      std::snprintf(buf, sizeof buf, ":%.6g", q->theta);
      core += buf;
    }
  } else if (const auto* c = connective()) {
    core = "conn:" + std::string(to_string(c->table));
    if (c->associated_relation) core += ":" + *c->associated_relation;
  } else if (const auto* m = modal()) {
    core = "modal:" + std::string(to_string(m->sort)) + ":" + std::string(to_string(m->mode));
  } else if (const auto* x = context()) {
    core = "ctx:" + x->keep.describe();
  }
  return name.empty() ? core : name + "=" + core;
}

namespace {

template <class E, std::size_t N>
std::optional<E> lookup(const std::array<std::pair<std::string_view, E>, N>& table,
                        std::string_view s) noexcept {
  for (const auto& [k, v] : table)
    if (k == s) return v;
  return std::nullopt;
}

template <class E, std::size_t N>
std::string_view name_of(const std::array<std::pair<std::string_view, E>, N>& table, E e) noexcept {
  for (const auto& [k, v] : table)
    if (v == e) return k;
  return "?";
}

constexpr std::array<std::pair<std::string_view, Match>, 3> kMatch{{
    {"weak", Match::weak}, {"strong", Match::strong}, {"exact", Match::exact}}};
constexpr std::array<std::pair<std::string_view, QuantSort>, 4> kQuant{{
    {"forall", QuantSort::forall}, {"exists", QuantSort::exists},
    {"unique", QuantSort::unique}, {"most", QuantSort::most}}};
constexpr std::array<std::pair<std::string_view, ArgLevel>, 3> kLevel{{
    {"denotation", ArgLevel::denotation}, {"sense", ArgLevel::sense},
    {"explanation", ArgLevel::explanation}}};
constexpr std::array<std::pair<std::string_view, ConnectiveId>, 6> kConn{{
    {"not", ConnectiveId::negation}, {"and", ConnectiveId::conjunction},
    {"or", ConnectiveId::disjunction}, {"implies", ConnectiveId::implication},
    {"iff", ConnectiveId::equivalence}, {"xor", ConnectiveId::exclusive}}};
constexpr std::array<std::pair<std::string_view, ModalSort>, 2> kModal{{
    {"necessity", ModalSort::necessity}, {"possibility", ModalSort::possibility}}};

}  // namespace

std::string_view to_string(Match m) noexcept { return name_of(kMatch, m); }
std::string_view to_string(QuantSort q) noexcept { return name_of(kQuant, q); }
std::string_view to_string(ArgLevel a) noexcept { return name_of(kLevel, a); }
std::string_view to_string(ConnectiveId c) noexcept { return name_of(kConn, c); }
std::string_view to_string(ModalSort m) noexcept { return name_of(kModal, m); }

std::optional<Match> parse_match(std::string_view s) noexcept { return lookup(kMatch, s); }
std::optional<QuantSort> parse_quant_sort(std::string_view s) noexcept { return lookup(kQuant, s); }
std::optional<ArgLevel> parse_arg_level(std::string_view s) noexcept { return lookup(kLevel, s); }
std::optional<ConnectiveId> parse_connective(std::string_view s) noexcept { return lookup(kConn, s); }
std::optional<ModalSort> parse_modal_sort(std::string_view s) noexcept { return lookup(kModal, s); }

}  // namespace cogsem
