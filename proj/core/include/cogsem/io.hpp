#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cogsem/lexicon.hpp"
#include "cogsem/model.hpp"
#include "cogsem/tree.hpp"

namespace cogsem {

// Malformed or unreadable input. The message starts with "origin:line:col:"
// for syntax errors and "origin: path:" for content errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& p);

// All formats are JSON objects with a top-level "version" (currently 1).
CognitiveModel parse_model(std::string_view text, std::string_view origin = "<model>");
// Lexicon entries and context facts refer to model elements by name.
Lexicon parse_lexicon(std::string_view text, const CognitiveModel& m, std::string_view origin = "<lexicon>");
Context parse_context(std::string_view text, const CognitiveModel& m, std::string_view origin = "<context>");
DepTree parse_tree(std::string_view text, std::string_view origin = "<tree>");

CognitiveModel load_model(const std::filesystem::path& p);
Lexicon load_lexicon(const std::filesystem::path& p, const CognitiveModel& m);
Context load_context(const std::filesystem::path& p, const CognitiveModel& m);
DepTree load_tree(const std::filesystem::path& p);

}  // namespace cogsem
