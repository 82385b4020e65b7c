#include "araki/matrix_io.hpp"

#include <fstream>

#include "araki/errors.hpp"
#include "araki/hermitian.hpp"

namespace araki {

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  const auto n = m.rows();
  bool real_only = true;
  for (Eigen::Index j = 0; j < m.cols() && real_only; ++j)
    for (Eigen::Index i = 0; i < n && real_only; ++i)
      if (m(i, j).imag() != 0.0) real_only = false;

  nlohmann::ordered_json j;
  j["dim"] = n;
  j["field"] = real_only ? "real" : "complex";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (real_only)
        row.push_back(m(i, k).real());
      else
        row.push_back({m(i, k).real(), m(i, k).imag()});
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rows"))
    throw IoError("matrix file: expected an object with 'dim' and 'rows'");
  const auto n = j.at("dim").get<Eigen::Index>();
  if (n < 1) throw IoError("matrix file: dim must be >= 1");
  const std::string field = j.value("field", std::string("complex"));
  if (field != "real" && field != "complex")
    throw IoError("matrix file: field must be 'real' or 'complex'");
  const auto& rows = j.at("rows");
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    throw IoError("matrix file: rows must be a dim-sized array (square data)");

  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw IoError("matrix file: non-square row");
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& e = row.at(k);
      if (field == "real") {
        if (!e.is_number()) throw IoError("matrix file: real entry expected");
        m(i, k) = Complex(e.get<double>(), 0.0);
      } else {
        if (!e.is_array() || e.size() != 2)
          throw IoError("matrix file: complex entry must be [re, im]");
        m(i, k) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
  }
  return hermitian_part(m);
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed matrix file " + path + ": " + e.what());
  }
  return matrix_from_json(j);
}

void save_matrix(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write matrix file: " + path);
  out << matrix_to_json(m).dump(2) << "\n";
}

}  // namespace araki
