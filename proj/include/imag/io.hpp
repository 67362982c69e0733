#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "imag/channels.hpp"
#include "imag/states.hpp"

namespace imag {

/// A state read from a JSON file.
///   density: {"dim": d, "re": [[...], ...], "im": [[...], ...]}
///   pure:    {"re": [...], "im": [...]}
/// "im" is optional and defaults to zeros.
struct LoadedState {
  DensityMatrix rho;
  bool pure = false;
};

/// Throws ParseError (naming the field, or line/column for malformed JSON),
/// ValidationError when the matrix breaks a density-matrix invariant, and
/// IoError when the file cannot be read.
LoadedState parse_state_json(std::string_view text);
LoadedState load_state_file(const std::string& path);

/// "bf:m=0.3", "pd:n=0.2", "ad:p=0.1", or "file:<path>" pointing at
/// {"kraus": [{"re": [[...]], "im": [[...]]}, ...]}. File channels are
/// checked for completeness.
KrausChannel parse_channel_spec(std::string_view spec);

/// Writes `content` to `path`; throws IoError if the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace imag
