#pragma once

// JSON encodings of problems and reports, and a deterministic serializer
// (sorted keys, 17 significant digits) for byte-stable output.

#include <string>

#include <json.hpp>

#include "dshift/pick.hpp"
#include "dshift/recipe.hpp"
#include "dshift/types.hpp"

namespace dshift {

using Json = nlohmann::json;

// Complex scalars ride as [re, im]; vectors and matrices as nested arrays.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, int d);

Json functional_to_json(const JetFunctional& l);
JetFunctional functional_from_json(const Json& j, int d);

Json pick_problem_to_json(const PickProblem& p);
PickProblem pick_problem_from_json(const Json& j);

Json ideal_spec_to_json(const IdealSpec& spec);
IdealSpec ideal_spec_from_json(const Json& j);

Json feasibility_to_json(const FeasibilityReport& report);

// Non-finite doubles serialize as the string "inf" / "-inf".
Json finite_or_sentinel(double value);

std::string dump_deterministic(const Json& j, int indent = 2);

}  // namespace dshift
