#include "dsign/io.hpp"

#include <fstream>
#include <sstream>

#include "dsign/error.hpp"

namespace dsign::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const json& j) {
  if (!j.is_number()) bad("expected a number");
  return j.get<double>();
}

std::vector<std::string> default_basis_labels(const Algebra& a) {
  if (a.dim() == 2) return {"1", "i"};
  if (a.dim() == 4) return {"1", "i", "j", "k"};
  std::vector<std::string> out;
  for (int i = 0; i < a.dim(); ++i) out.push_back("e" + std::to_string(i));
  return out;
}

Mat columns_from_json(const json& j, int rows) {
  if (!j.is_array()) bad("expected an array of columns");
  Mat m(rows, static_cast<Eigen::Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) {
    const Vec v = vector_from_json(j[c]);
    if (v.size() != rows) bad("column has the wrong length");
    m.col(static_cast<Eigen::Index>(c)) = v;
  }
  return m;
}

json columns_to_json(const Mat& m) {
  json out = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(vector_to_json(m.col(c)));
  return out;
}

}  // namespace

json vector_to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vec vector_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i]);
  return v;
}

json matrix_to_json(const Mat& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r).transpose()));
  return out;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Mat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Vec row = vector_from_json(j[r]);
    if (static_cast<std::size_t>(row.size()) != cols) bad("matrix rows have different lengths");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

json to_json(const Algebra& a) {
  const int n = a.dim();
  json s = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(vector_to_json(a.product(i, j)));
    s.push_back(std::move(row));
  }
  return {{"dim", n}, {"label", a.label()}, {"labels", default_basis_labels(a)}, {"structure", std::move(s)}};
}

Algebra algebra_from_json(const json& j) {
  const json& dim = field(j, "dim");
  if (!dim.is_number_integer()) bad("\"dim\" must be an integer");
  const int n = dim.get<int>();
  if (n != 1 && n != 2 && n != 4 && n != 8) bad("\"dim\" must be 1, 2, 4 or 8");
  const json& s = field(j, "structure");
  if (!s.is_array() || s.size() != static_cast<std::size_t>(n)) bad("\"structure\" must have dim rows");
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(n) * n * n);
  for (const json& row : s) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) bad("\"structure\" rows must have dim entries");
    for (const json& prod : row) {
      const Vec v = vector_from_json(prod);
      if (v.size() != n) bad("each product e_i e_j needs dim coordinates");
      for (int k = 0; k < n; ++k) c.push_back(v(k));
    }
  }
  if (j.contains("labels") && (!j["labels"].is_array() || j["labels"].size() != static_cast<std::size_t>(n))) {
    bad("\"labels\" must list dim basis names");
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  return Algebra(n, std::move(c), std::move(label));
}

json to_json(const DecoratedAlgebra& x) {
  json out = to_json(x.alg());
  out["U"] = columns_to_json(x.u());
  out["V"] = columns_to_json(x.v());
  return out;
}

DecoratedAlgebra decorated_from_json(const json& j) {
  Algebra a = algebra_from_json(j);
  const int n = a.dim();
  Mat u = columns_from_json(field(j, "U"), n);
  Mat v = columns_from_json(field(j, "V"), n);
  return decorate(std::move(a), std::move(u), std::move(v));
}

json to_json(const NormalForm2D& nf) {
  return {{"i", nf.i}, {"j", nf.j}, {"A", matrix_to_json(nf.a)}, {"B", matrix_to_json(nf.b)},
          {"block", nf.block().label()}};
}

NormalForm2D normal_form_from_json(const json& j) {
  NormalForm2D nf;
  const json &i = field(j, "i"), &jj = field(j, "j");
  if (!i.is_number_integer() || !jj.is_number_integer()) bad("\"i\" and \"j\" must be integers");
  nf.i = i.get<int>();
  nf.j = jj.get<int>();
  nf.a = matrix_from_json(field(j, "A"));
  nf.b = matrix_from_json(field(j, "B"));
  if (nf.a.rows() != 2 || nf.a.cols() != 2 || nf.b.rows() != 2 || nf.b.cols() != 2) bad("A and B must be 2x2");
  return nf;
}

json to_json(const ZObject& x) {
  return {{"a", vector_to_json(x.a.vec())}, {"b", vector_to_json(x.b.vec())}, {"C", matrix_to_json(x.c)},
          {"D", matrix_to_json(x.d)}};
}

json to_json(const MatrixPair& p) { return {{"S", matrix_to_json(p.s)}, {"T", matrix_to_json(p.t)}}; }

MatrixPair pair_from_json(const json& j) {
  MatrixPair p{matrix_from_json(field(j, "S")), matrix_from_json(field(j, "T"))};
  if (p.s.rows() != p.s.cols() || p.t.rows() != p.t.cols() || p.s.rows() != p.t.rows()) {
    bad("S and T must be square matrices of equal size");
  }
  return p;
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace dsign::io
