#pragma once

#include "tqe/states.hpp"

#include <optional>
#include <string>
#include <variant>

namespace tqe {

using StateVariant = std::variant<PureState, DensityMatrix>;

/// Parses the shared state schema: pure states carry "dims"/"re"/"im",
/// density matrices "dims"/"matrix_re"/"matrix_im" (row-major). Throws
/// ParseError on malformed JSON and SchemaError on invalid content.
StateVariant parse_state_json(const std::string& text);

StateVariant load_state_file(const std::string& path);

std::string state_to_json(const PureState& psi);
std::string state_to_json(const DensityMatrix& rho);

}  // namespace tqe
