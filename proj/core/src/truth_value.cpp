#include "cogsem/truth_value.hpp"

#include <algorithm>

namespace cogsem {

std::string_view to_string(Truth t) noexcept {
  switch (t) {
    case Truth::T: return "T";
    case Truth::F: return "F";
    case Truth::U: return "U";
    case Truth::V: return "V";
    case Truth::ud: return "ud";
  }
  return "?";
}

std::string_view to_string(Logic l) noexcept {
  return l == Logic::kleene ? "kleene" : "lukasiewicz";
}

std::optional<Logic> parse_logic(std::string_view s) noexcept {
  if (s == "kleene") return Logic::kleene;
  if (s == "lukasiewicz") return Logic::lukasiewicz;
  return std::nullopt;
}

namespace {

// F < U < T as 0 < 1 < 2.
int rank(Truth t) noexcept { return t == Truth::F ? 0 : t == Truth::U ? 1 : 2; }
Truth of_rank(int r) noexcept { return r <= 0 ? Truth::F : r == 1 ? Truth::U : Truth::T; }

Truth three_valued(ConnectiveId c, Truth a, Truth b, Logic logic) noexcept {
  const int x = rank(a), y = rank(b);
  auto implies = [logic](int p, int q) {
    return logic == Logic::kleene ? std::max(2 - p, q) : std::min(2, 2 - p + q);
  };
  switch (c) {
    case ConnectiveId::negation: return of_rank(2 - x);
    case ConnectiveId::conjunction: return of_rank(std::min(x, y));
    case ConnectiveId::disjunction: return of_rank(std::max(x, y));
    case ConnectiveId::implication: return of_rank(implies(x, y));
    case ConnectiveId::equivalence: return of_rank(std::min(implies(x, y), implies(y, x)));
    case ConnectiveId::exclusive:
      return of_rank(std::min(std::max(x, y), 2 - std::min(x, y)));
  }
  return Truth::U;
}

}  // namespace

Truth negate(Truth a, Logic logic) noexcept {
  if (a == Truth::ud || a == Truth::V) return a;
  return three_valued(ConnectiveId::negation, a, a, logic);
}

Truth connect(ConnectiveId c, Truth a, Truth b, Logic logic) noexcept {
  if (c == ConnectiveId::negation) return negate(a, logic);
  if (a == Truth::ud || b == Truth::ud) return Truth::ud;
  if (a == Truth::V || b == Truth::V) return Truth::V;
  return three_valued(c, a, b, logic);
}

}  // namespace cogsem
