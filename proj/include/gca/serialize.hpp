#pragma once

#include "gca/algebra.hpp"
#include "gca/analysis.hpp"
#include "gca/constructions.hpp"
#include "gca/derivations.hpp"
#include "gca/grading.hpp"

#include <json.hpp>

#include <string>

namespace gca {

using Json = nlohmann::ordered_json;

// All from_json functions throw SchemaError with the offending field path.

Json to_json(const BilinearFormZ2& f);
BilinearFormZ2 form_from_json(const Json& j);

Json to_json(const FgGroupSpec& s);
FgGroupSpec group_spec_from_json(const Json& j);

Json to_json(const GroupReduction& r);
Json to_json(const ReductionMap& r);

/// {"num","den"} plus {"im_num","im_den"} for Gaussian fields.
Json scalar_to_json(const Scalar& s, Field field);
Scalar scalar_from_json(const Json& j, const std::string& path);

Json to_json(const GradedAlgebra& a);
GradedAlgebra algebra_from_json(const Json& j);

GradedAlgebra load_algebra(const std::string& path);
void save_algebra(const GradedAlgebra& a, const std::string& path);

Json element_to_json(const GradedAlgebra& a, const Element& x);
Json to_json(const GradedAlgebra& a, const CheckReport& r);
Json to_json(const GradedAlgebra& a, const SimplicityVerdict& v);
Json to_json(const GradedAlgebra& a, const DerivationSpace& d);
Json matrix_to_json(const Matrix& m, Field field);
Json to_json(const GradedAlgebra& a, const UnitalExtension& u);

enum class TableFormat { Text, Csv, Json };

/// Full dim x dim product table; row label times column label.
std::string emit_table(const GradedAlgebra& a, TableFormat format);

}  // namespace gca
