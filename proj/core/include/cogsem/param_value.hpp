#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cogsem {

using IntTuple = std::vector<std::int64_t>;

// Thrown when two parameter values of different kinds are compared.
class TagMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A tagged parameter value: integer, symbol, integer tuple, or the empty
// marker used for "no result" and unspecified defaults.
class ParamValue {
 public:
  enum class Tag { empty, integer, symbol, tuple };

  ParamValue() = default;
  static ParamValue integer(std::int64_t v) { return ParamValue(Repr(v)); }
  static ParamValue symbol(std::string s) { return ParamValue(Repr(std::move(s))); }
  static ParamValue tuple(IntTuple t) { return ParamValue(Repr(std::move(t))); }

  Tag tag() const noexcept { return static_cast<Tag>(v_.index()); }
  bool is_empty() const noexcept { return tag() == Tag::empty; }

  std::int64_t as_int() const;
  const std::string& as_symbol() const;
  const IntTuple& as_tuple() const;

  // Domain comparison. Throws TagMismatch across tags.
  std::strong_ordering compare(const ParamValue& other) const;

  // Record identity and canonical container order (tag first). These never
  // throw; use compare() when the values are meant to be compared as data.
  friend bool operator==(const ParamValue&, const ParamValue&) = default;
  friend std::strong_ordering operator<=>(const ParamValue& a, const ParamValue& b);

  std::string to_string() const;

 private:
  struct Empty {
    friend bool operator==(Empty, Empty) = default;
  };
  using Repr = std::variant<Empty, std::int64_t, std::string, IntTuple>;
  explicit ParamValue(Repr r) : v_(std::move(r)) {}

  Repr v_;
};

std::string_view tag_name(ParamValue::Tag tag) noexcept;

}  // namespace cogsem
