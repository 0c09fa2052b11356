// JSON renderings of the library's value types, matching the documented
// schemas:
//   AlgebraElement: {"n":3,"shape":[1,2,3]|null,
//                    "terms":[{"omega":[[..],..],"coeff":"p/q"},..]}
//   GradedCoalgebra: basis, Delta constants as (i,j,k,coeff) triples, counit
//   Comodule: {"coalgebra":{"n","shape","r"},"dim",
//              "coaction":[[{"basis","coalg","coeff"},..],..]}
//   CharPoly: [{"exponents":[..],"coeff":N},..]
//   Diagram reports: [{"family","indices","module","status","ranks"},..]
//   Dual algebra: structure constants keyed by dual-basis omega triples.
#pragma once

#include "json.hpp"

#include "core/functors.hpp"
#include "core/heckedem.hpp"
#include "core/schur.hpp"

namespace qba {

using Json = nlohmann::ordered_json;

Json omega_to_json(const Exponent& omega);
Json element_to_json(const AlgebraElement& element);
Json tensor_to_json(const TensorElement& element);
Json coalgebra_to_json(const GradedCoalgebra& piece);
Json comodule_to_json(const Comodule& M);
Json charpoly_to_json(const CharPoly& f);
Json diamond_to_json(const DiamondReport& report);
Json diagram_checks_to_json(const std::vector<DiagramCheck>& checks);
Json exact_sequence_to_json(const ExactSequenceReport& report);
Json schur_to_json(const DualAlgebra& algebra);
Json char_compare_to_json(const CharCompareReport& report);

}  // namespace qba
