#pragma once

#include <string>
#include <string_view>
#include <optional>

#include "cogsem/interp.hpp"
#include "cogsem/model.hpp"
#include "cogsem/truth.hpp"

namespace cogsem {

enum class Format { text, structured };

std::optional<Format> parse_format(std::string_view s) noexcept;

// Denotations print as model names where known; empty elements carry the
// vacancy marker.
std::string describe(const Denotation& d, const CognitiveModel& m);

std::string render_violations(const ModelViolations& v, const CognitiveModel& m, Format f);
std::string render_interpretation(const Interpretation& in, const CognitiveModel& m, Format f);
std::string render_verdict(const SentenceResult& r, const CognitiveModel& m, const EvalOptions& opts,
                           Format f);

}  // namespace cogsem
