#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cograg::mock {

/// Deterministic response synthesizer behind MockTransport: recognizes which
/// prompt it was handed by its instruction header, reads the prompt's own
/// input sections and fabricates a well-formed response. Pure function of
/// the prompt text, so every offline run is reproducible.
std::string synthesize_response(std::string_view prompt);

/// Candidate entity names the synthesizer would pick from `text` (exposed
/// for fixtures that need to predict mock output).
std::vector<std::string> candidate_names(std::string_view text, std::size_t limit = 6);

}  // namespace cograg::mock
