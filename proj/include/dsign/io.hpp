#pragma once

// JSON documents:
//   algebra    {"dim": n, "label": "...", "labels": [basis names],
//               "structure": [[[c_ijk]]]}   c[i][j][k]: e_i e_j = sum_k c_ijk e_k
//   decorated  algebra document plus "U", "V": arrays of basis columns
//   pair       {"S": rows, "T": rows}
//   nf2d       {"i": 0|1, "j": 0|1, "A": rows, "B": rows}
// Doubles are written in shortest round-trip form, so write-then-read is exact.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dsign/decorated.hpp"
#include "dsign/dim2.hpp"
#include "dsign/quat.hpp"

namespace dsign::io {

using json = nlohmann::json;

json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);
json vector_to_json(const Vec& v);
Vec vector_from_json(const json& j);

json to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

json to_json(const DecoratedAlgebra& x);
DecoratedAlgebra decorated_from_json(const json& j);

json to_json(const NormalForm2D& nf);
NormalForm2D normal_form_from_json(const json& j);

json to_json(const ZObject& x);

struct MatrixPair {
  Mat s;
  Mat t;
};
json to_json(const MatrixPair& p);
MatrixPair pair_from_json(const json& j);

/// Throws Error(BadInput) on unreadable files or malformed JSON.
json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);

}  // namespace dsign::io
