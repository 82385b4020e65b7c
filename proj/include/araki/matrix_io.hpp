#pragma once

#include <string>

#include <json.hpp>

#include "araki/types.hpp"

namespace araki {

// Matrix file schema: {"dim": n, "field": "real"|"complex", "rows": [...]}
// with complex entries as [re, im] pairs. Values round-trip bitwise.
// Parsing symmetrizes, so any file loads to a Hermitian matrix; non-square
// data is rejected.
nlohmann::ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

Matrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const Matrix& m);

}  // namespace araki
