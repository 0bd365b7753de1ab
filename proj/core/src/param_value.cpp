#include "cogsem/param_value.hpp"

#include <string>

namespace cogsem {

namespace {

std::strong_ordering same_tag_order(const ParamValue& a, const ParamValue& b) {
  switch (a.tag()) {
    case ParamValue::Tag::empty:
      return std::strong_ordering::equal;
    case ParamValue::Tag::integer:
      return a.as_int() <=> b.as_int();
    case ParamValue::Tag::symbol:
      return a.as_symbol().compare(b.as_symbol()) <=> 0;
    case ParamValue::Tag::tuple:
      return a.as_tuple() <=> b.as_tuple();
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::int64_t ParamValue::as_int() const {
  if (auto p = std::get_if<std::int64_t>(&v_)) return *p;
  throw TagMismatch("expected integer, got " + std::string(tag_name(tag())));
}

const std::string& ParamValue::as_symbol() const {
  if (auto p = std::get_if<std::string>(&v_)) return *p;
  throw TagMismatch("expected symbol, got " + std::string(tag_name(tag())));
}

const IntTuple& ParamValue::as_tuple() const {
  if (auto p = std::get_if<IntTuple>(&v_)) return *p;
  throw TagMismatch("expected tuple, got " + std::string(tag_name(tag())));
}

std::strong_ordering ParamValue::compare(const ParamValue& other) const {
  if (tag() != other.tag()) {
    throw TagMismatch("cannot compare " + std::string(tag_name(tag())) + " with " +
                      std::string(tag_name(other.tag())));
  }
  return same_tag_order(*this, other);
}

std::strong_ordering operator<=>(const ParamValue& a, const ParamValue& b) {
  if (a.tag() != b.tag()) return a.tag() <=> b.tag();
  return same_tag_order(a, b);
}

std::string ParamValue::to_string() const {
  switch (tag()) {
    case Tag::empty:
      return "_";
    case Tag::integer:
      return std::to_string(as_int());
    case Tag::symbol:
      return as_symbol();
    case Tag::tuple: {
      std::string out = "(";
      const auto& t = as_tuple();
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::string_view tag_name(ParamValue::Tag tag) noexcept {
  switch (tag) {
    case ParamValue::Tag::empty: return "empty";
    case ParamValue::Tag::integer: return "integer";
    case ParamValue::Tag::symbol: return "symbol";
    case ParamValue::Tag::tuple: return "tuple";
  }
  return "?";
}

}  // namespace cogsem
