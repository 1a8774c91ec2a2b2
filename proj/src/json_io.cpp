#include "famalg/json_io.hpp"

namespace famalg {

Rational rational_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw workspace_parse_error(path, e.what());
  }
  throw workspace_parse_error(path, "expected an integer or a \"p/q\" string");
}

Json rational_to_json(const Rational& r) { return r.str(); }

Vec vec_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw workspace_parse_error(path, "expected an array");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(rational_to_json(x));
  return j;
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw workspace_parse_error(path, "expected an array of rows");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(vec_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw workspace_parse_error(path, "ragged matrix");
  return Matrix::from_rows(rows);
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vec_to_json(m.row(i)));
  return j;
}

Tensor3 tensor_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty() || !j[0][0].is_array())
    throw workspace_parse_error(path, "expected a three-level nested array");
  std::size_t d1 = j.size(), d2 = j[0].size(), d3 = j[0][0].size();
  Tensor3 t(d1, d2, d3);
  for (std::size_t i = 0; i < d1; ++i) {
    if (!j[i].is_array() || j[i].size() != d2)
      throw workspace_parse_error(path, "ragged tensor");
    for (std::size_t k = 0; k < d2; ++k) {
      if (!j[i][k].is_array() || j[i][k].size() != d3)
        throw workspace_parse_error(path, "ragged tensor");
      for (std::size_t l = 0; l < d3; ++l)
        t.at(i, k, l) = rational_from_json(
            j[i][k][l], path + "[" + std::to_string(i) + "][" + std::to_string(k) + "][" +
                            std::to_string(l) + "]");
    }
  }
  return t;
}

Json tensor_to_json(const Tensor3& t) {
  Json j = Json::array();
  for (std::size_t i = 0; i < t.dim1(); ++i) {
    Json plane = Json::array();
    for (std::size_t k = 0; k < t.dim2(); ++k) {
      Json row = Json::array();
      for (std::size_t l = 0; l < t.dim3(); ++l) row.push_back(rational_to_json(t.at(i, k, l)));
      plane.push_back(row);
    }
    j.push_back(plane);
  }
  return j;
}

FiniteSemigroup semigroup_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw workspace_parse_error(path, "expected an object");
  FiniteSemigroup s;
  if (!j.contains("size") || !j["size"].is_number_unsigned())
    throw workspace_parse_error(path + ".size", "expected a count");
  s.size = j["size"].get<std::size_t>();
  if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != s.size)
    throw workspace_parse_error(path + ".table", "expected size x size entries");
  s.table.assign(s.size, {});
  for (std::size_t a = 0; a < s.size; ++a) {
    const auto& row = j["table"][a];
    if (!row.is_array() || row.size() != s.size)
      throw workspace_parse_error(path + ".table", "expected size x size entries");
    for (std::size_t b = 0; b < s.size; ++b) {
      if (!row[b].is_number_unsigned())
        throw workspace_parse_error(path + ".table", "expected element indices");
      std::size_t v = row[b].get<std::size_t>();
      if (v >= s.size) throw workspace_parse_error(path + ".table", "entry out of range");
      s.table[a].push_back(v);
    }
  }
  if (j.contains("unit") && !j["unit"].is_null()) {
    if (!j["unit"].is_number_unsigned() || j["unit"].get<std::size_t>() >= s.size)
      throw workspace_parse_error(path + ".unit", "expected an element index or null");
    s.unit = j["unit"].get<std::size_t>();
  }
  return s;
}

Json semigroup_to_json(const FiniteSemigroup& s) {
  Json j;
  j["size"] = s.size;
  j["table"] = s.table;
  if (s.unit) j["unit"] = *s.unit;
  else j["unit"] = nullptr;
  return j;
}

Algebra algebra_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw workspace_parse_error(path, "expected an object");
  Algebra a;
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw workspace_parse_error(path + ".dim", "expected a count");
  a.dim = j["dim"].get<std::size_t>();
  if (!j.contains("mult")) throw workspace_parse_error(path + ".mult", "missing");
  a.mult = tensor_from_json(j["mult"], path + ".mult");
  if (a.mult.dim1() != a.dim || a.mult.dim2() != a.dim || a.mult.dim3() != a.dim)
    throw workspace_parse_error(path + ".mult", "tensor shape does not match dim");
  if (j.contains("unit") && !j["unit"].is_null()) {
    a.unit = vec_from_json(j["unit"], path + ".unit");
    if (a.unit->size() != a.dim)
      throw workspace_parse_error(path + ".unit", "length does not match dim");
  }
  return a;
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["dim"] = a.dim;
  j["mult"] = tensor_to_json(a.mult);
  j["unit"] = a.unit ? vec_to_json(*a.unit) : Json(nullptr);
  return j;
}

std::vector<Matrix> map_table_from_json(const Json& j, std::size_t count,
                                        const std::string& path) {
  if (!j.is_object()) throw workspace_parse_error(path, "expected an object keyed by element");
  std::vector<Matrix> maps(count);
  std::vector<bool> seen(count, false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t idx;
    try {
      idx = std::stoul(it.key());
    } catch (...) {
      throw workspace_parse_error(path, "key '" + it.key() + "' is not an element index");
    }
    if (idx >= count) throw workspace_parse_error(path, "key '" + it.key() + "' out of range");
    maps[idx] = matrix_from_json(it.value(), path + "." + it.key());
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < count; ++i)
    if (!seen[i])
      throw workspace_parse_error(path, "missing entry for element " + std::to_string(i));
  return maps;
}

Json map_table_to_json(const std::vector<Matrix>& maps) {
  Json j = Json::object();
  for (std::size_t i = 0; i < maps.size(); ++i) j[std::to_string(i)] = matrix_to_json(maps[i]);
  return j;
}

std::vector<Tensor3> tensor_table_from_json(const Json& j, std::size_t count,
                                            const std::string& path) {
  if (!j.is_object()) throw workspace_parse_error(path, "expected an object keyed by element");
  std::vector<Tensor3> ts(count);
  std::vector<bool> seen(count, false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t idx;
    try {
      idx = std::stoul(it.key());
    } catch (...) {
      throw workspace_parse_error(path, "key '" + it.key() + "' is not an element index");
    }
    if (idx >= count) throw workspace_parse_error(path, "key '" + it.key() + "' out of range");
    ts[idx] = tensor_from_json(it.value(), path + "." + it.key());
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < count; ++i)
    if (!seen[i])
      throw workspace_parse_error(path, "missing entry for element " + std::to_string(i));
  return ts;
}

Json tensor_table_to_json(const std::vector<Tensor3>& ts) {
  Json j = Json::object();
  for (std::size_t i = 0; i < ts.size(); ++i) j[std::to_string(i)] = tensor_to_json(ts[i]);
  return j;
}

std::vector<Tensor3> pair_tensor_table_from_json(const Json& j, std::size_t omega,
                                                 const std::string& path) {
  if (!j.is_object()) throw workspace_parse_error(path, "expected an object keyed \"a,b\"");
  std::vector<Tensor3> ts(omega * omega);
  std::vector<bool> seen(omega * omega, false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto comma = it.key().find(',');
    if (comma == std::string::npos)
      throw workspace_parse_error(path, "key '" + it.key() + "' is not of the form \"a,b\"");
    std::size_t a, b;
    try {
      a = std::stoul(it.key().substr(0, comma));
      b = std::stoul(it.key().substr(comma + 1));
    } catch (...) {
      throw workspace_parse_error(path, "key '" + it.key() + "' is not of the form \"a,b\"");
    }
    if (a >= omega || b >= omega)
      throw workspace_parse_error(path, "key '" + it.key() + "' out of range");
    ts[a * omega + b] = tensor_from_json(it.value(), path + "." + it.key());
    seen[a * omega + b] = true;
  }
  for (std::size_t i = 0; i < omega * omega; ++i)
    if (!seen[i])
      throw workspace_parse_error(path, "missing entry for pair " + std::to_string(i / omega) +
                                            "," + std::to_string(i % omega));
  return ts;
}

Json pair_tensor_table_to_json(const std::vector<Tensor3>& ts, std::size_t omega) {
  Json j = Json::object();
  for (std::size_t a = 0; a < omega; ++a)
    for (std::size_t b = 0; b < omega; ++b)
      j[std::to_string(a) + "," + std::to_string(b)] = tensor_to_json(ts[a * omega + b]);
  return j;
}

}  // namespace famalg
