#pragma once

#include "dybx/classical.hpp"
#include "dybx/classify.hpp"
#include "dybx/dyntwist.hpp"
#include "dybx/formal.hpp"
#include "dybx/functor.hpp"

#include <json.hpp>

#include <string>

namespace dybx {

using Json = nlohmann::ordered_json;

Json readJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const Json& j);

Json toJson(const Rational& q);
Rational rationalFromJson(const Json& j);

/// {"N": order, "coeffs": ["p/q", ...]}; a bare rational string or integer is also accepted.
Json toJson(const Cyclotomic& c);
Cyclotomic cyclotomicFromJson(const Json& j);

/// [[alpha, k, "p/q"], ...]
Json toJson(const JetScalar& j);
JetScalar jetFromJson(const Json& j, const JetShapePtr& shape);

/// {"size", "cayley", "labels"} or {"builtin": "S3"}.
Json toJson(const FiniteGroup& g);
GroupPtr groupFromJson(const Json& j);

/// {"elements": [...]} or {"generators": [...]}; entries are indices or labels.
Json toJson(const AbelianSubgroup& a);
SubgroupPtr subgroupFromJson(const Json& j, GroupPtr g);

/// {"order", "terms": [{"g": [...], "c": cyclotomic}]}.
Json toJson(const TensorElement& t);
TensorElement tensorFromJson(const Json& j, GroupPtr g);

/// {"subgroup", "order", "values": [{"lambda": tuple, "element": tensor}]}, or
/// {"order", "constant": tensor} for a map that does not depend on lambda.
/// Characters without an entry get the zero element.
Json toJson(const DynamicalMap& m);
DynamicalMap dynamicalMapFromJson(const Json& j, SubgroupPtr a);

/// {"table": [{"lambda", "mu", "g"}]} with lambda, mu as tuples and g an index or label.
Json toJson(const TwoVarGroupFunction& g, const AbelianSubgroup& a);
TwoVarGroupFunction twoVarFromJson(const Json& j, const AbelianSubgroup& a);

/// {"dim", "labels", "brackets": [{"i","j","k","c"}], "abelian"} or {"builtin": "gl<n>"}
/// for gl(n) semidirect C^n.
Json toJson(const LieAlgebraSpec& g);
LiePtr lieFromJson(const Json& j);

/// {"dim", "matrices": {label: [[...]]}} or {"builtin": "defining"} for gl(n) semidirect C^n.
Json toJson(const MatrixRep& r, const LieAlgebraSpec& g);
std::shared_ptr<const MatrixRep> repFromJson(const Json& j, const LieAlgebraSpec& g);

/// {"lie", "components": [{"a", "b", "jet"}]}; a, b are indices or labels.
Json toJson(const ClassicalR& r);
ClassicalR classicalRFromJson(const Json& j, const JetShapePtr& shape, LiePtr lie = nullptr);

/// {"lie", "rep", "entries": [[jet, ...], ...], "certified"}.
Json toJson(const GammaMatrixJet& g);
GammaMatrixJet gammaFromJson(const Json& j, const JetShapePtr& shape, LiePtr lie = nullptr,
                             std::shared_ptr<const MatrixRep> rep = nullptr);

/// {"order", "terms": [{"monomial": [...], "jet": jet}]}.
Json toJson(const PBWElement& u);
PBWElement pbwFromJson(const Json& j, const JetShapePtr& shape);

Json toJson(const Report& r);

} // namespace dybx
