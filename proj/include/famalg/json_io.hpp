#ifndef FAMALG_JSON_IO_HPP
#define FAMALG_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "famalg/algebra.hpp"
#include "famalg/coalgebra.hpp"
#include "famalg/family_algebras.hpp"
#include "famalg/family_ops.hpp"
#include "famalg/linalg.hpp"
#include "famalg/semigroup.hpp"

namespace famalg {

using Json = nlohmann::ordered_json;

/// Parse failure that names the offending key path.
struct workspace_parse_error : std::runtime_error {
  workspace_parse_error(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), key_path(path) {}
  std::string key_path;
};

// rationals travel as "p/q" strings (integers also accepted on input)
Rational rational_from_json(const Json& j, const std::string& path);
Json rational_to_json(const Rational& r);

Vec vec_from_json(const Json& j, const std::string& path);
Json vec_to_json(const Vec& v);

Matrix matrix_from_json(const Json& j, const std::string& path);
Json matrix_to_json(const Matrix& m);

Tensor3 tensor_from_json(const Json& j, const std::string& path);
Json tensor_to_json(const Tensor3& t);

FiniteSemigroup semigroup_from_json(const Json& j, const std::string& path);
Json semigroup_to_json(const FiniteSemigroup& s);

Algebra algebra_from_json(const Json& j, const std::string& path);
Json algebra_to_json(const Algebra& a);

// per-element map tables {"0": [[...]], "1": [[...]]}
std::vector<Matrix> map_table_from_json(const Json& j, std::size_t count, const std::string& path);
Json map_table_to_json(const std::vector<Matrix>& maps);

// per-element tensor tables keyed "alpha" and pair tables keyed "alpha,beta"
std::vector<Tensor3> tensor_table_from_json(const Json& j, std::size_t count,
                                            const std::string& path);
Json tensor_table_to_json(const std::vector<Tensor3>& ts);
std::vector<Tensor3> pair_tensor_table_from_json(const Json& j, std::size_t omega,
                                                 const std::string& path);
Json pair_tensor_table_to_json(const std::vector<Tensor3>& ts, std::size_t omega);

}  // namespace famalg

#endif
