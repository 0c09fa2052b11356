#include "core/json_io.hpp"

namespace qba {

Json omega_to_json(const Exponent& omega) {
  Json rows = Json::array();
  for (int i = 1; i <= omega.n; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= omega.n; ++j) row.push_back(omega.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Json shape_to_json(const std::optional<Shape>& shape) {
  if (!shape) return nullptr;
  Json out = Json::array();
  for (int v : shape->b) out.push_back(v);
  return out;
}

}  // namespace

Json element_to_json(const AlgebraElement& element) {
  Json terms = Json::array();
  for (const auto& [omega, coeff] : element.terms) {
    terms.push_back(
        {{"omega", omega_to_json(omega)}, {"coeff", scalar_to_string(coeff)}});
  }
  return {{"n", element.n},
          {"shape", shape_to_json(element.shape)},
          {"terms", std::move(terms)}};
}

Json tensor_to_json(const TensorElement& element) {
  Json legs = Json::array();
  for (const auto& shape : element.leg_shapes) legs.push_back(shape_to_json(shape));
  Json terms = Json::array();
  for (const auto& [key, coeff] : element.terms) {
    Json factors = Json::array();
    for (const Exponent& omega : key) factors.push_back(omega_to_json(omega));
    terms.push_back(
        {{"factors", std::move(factors)}, {"coeff", scalar_to_string(coeff)}});
  }
  return {{"n", element.n},
          {"legs", std::move(legs)},
          {"terms", std::move(terms)}};
}

Json coalgebra_to_json(const GradedCoalgebra& piece) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < piece.dim(); ++i) {
    basis.push_back(omega_to_json(piece.basis_at(i)));
  }
  Json delta = Json::array();
  for (std::size_t i = 0; i < piece.dim(); ++i) {
    for (const auto& [p, q, c] : piece.delta(i)) {
      delta.push_back(Json::array(
          {static_cast<int>(i), p, q, scalar_to_string(c)}));
    }
  }
  Json counit = Json::array();
  for (std::size_t i = 0; i < piece.dim(); ++i) {
    counit.push_back(scalar_to_string(piece.counit(i)));
  }
  Json shape = Json::array();
  for (int v : piece.shape().b) shape.push_back(v);
  return {{"n", piece.n()},        {"shape", std::move(shape)},
          {"r", piece.degree()},   {"dim", piece.dim()},
          {"basis", std::move(basis)}, {"delta", std::move(delta)},
          {"counit", std::move(counit)}};
}

Json comodule_to_json(const Comodule& M) {
  Json shape = Json::array();
  for (int v : M.coalgebra->shape().b) shape.push_back(v);
  Json coaction = Json::array();
  for (const auto& row : M.rho) {
    Json entries = Json::array();
    for (const auto& [j, q, c] : row) {
      entries.push_back(
          {{"basis", j}, {"coalg", q}, {"coeff", scalar_to_string(c)}});
    }
    coaction.push_back(std::move(entries));
  }
  return {{"coalgebra",
           {{"n", M.coalgebra->n()},
            {"shape", std::move(shape)},
            {"r", M.coalgebra->degree()}}},
          {"dim", M.dim()},
          {"labels", M.labels},
          {"coaction", std::move(coaction)}};
}

Json charpoly_to_json(const CharPoly& f) {
  Json out = Json::array();
  for (const auto& [exponents, coeff] : f.coeffs) {
    out.push_back({{"exponents", exponents}, {"coeff", coeff}});
  }
  return out;
}

Json diamond_to_json(const DiamondReport& report) {
  Json failures = Json::array();
  for (const auto& failure : report.failures) {
    Json word = Json::array();
    for (auto letter : failure.overlap) word.push_back(letter);
    failures.push_back({{"overlap", std::move(word)},
                        {"left_first", element_to_json(failure.left_first)},
                        {"right_first", element_to_json(failure.right_first)}});
  }
  return {{"ambiguities", report.ambiguities},
          {"ok", report.ok()},
          {"failures", std::move(failures)}};
}

Json diagram_checks_to_json(const std::vector<DiagramCheck>& checks) {
  Json out = Json::array();
  for (const auto& check : checks) {
    out.push_back({{"family", check.family},
                   {"indices", check.indices},
                   {"module", check.module_label},
                   {"status", check.pass ? "pass" : "fail"},
                   {"ranks",
                    {{"start_dim", check.start_dim}, {"end_dim", check.end_dim}}},
                   {"detail", check.detail}});
  }
  return out;
}

Json exact_sequence_to_json(const ExactSequenceReport& report) {
  Json shape = Json::array();
  for (int v : report.b.b) shape.push_back(v);
  return {{"b", std::move(shape)},
          {"l", report.l},
          {"r", report.degree},
          {"dims",
           {{"sub", report.dim_sub},
            {"mid", report.dim_mid},
            {"quot", report.dim_quot}}},
          {"f_injective", report.f_injective},
          {"pi_surjective", report.pi_surjective},
          {"middle_exact", report.middle_exact},
          {"intertwines", report.intertwines},
          {"ok", report.ok()}};
}

Json schur_to_json(const DualAlgebra& algebra) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    basis.push_back(omega_to_json(algebra.piece()->basis_at(i)));
  }
  Json unit = Json::array();
  for (const auto& [nu, c] : algebra.unit()) {
    unit.push_back({{"index", nu}, {"coeff", scalar_to_string(c)}});
  }
  Json products = Json::array();
  for (std::size_t p = 0; p < algebra.dim(); ++p) {
    for (std::size_t q = 0; q < algebra.dim(); ++q) {
      for (const auto& [nu, c] : algebra.product(p, q)) {
        products.push_back({{"left", static_cast<int>(p)},
                            {"right", static_cast<int>(q)},
                            {"result", nu},
                            {"coeff", scalar_to_string(c)}});
      }
    }
  }
  return {{"dim", algebra.dim()},
          {"basis", std::move(basis)},
          {"unit", std::move(unit)},
          {"products", std::move(products)}};
}

Json char_compare_to_json(const CharCompareReport& report) {
  Json steps = Json::array();
  for (const auto& step : report.steps) {
    steps.push_back({{"i", step.i},
                     {"status", step.licensed ? "licensed" : "unverified"},
                     {"dim_after", step.dim_after}});
  }
  return {{"word", report.word},
          {"lambda", report.lambda},
          {"steps", std::move(steps)},
          {"functor_character", charpoly_to_json(report.functor_side)},
          {"demazure_character", charpoly_to_json(report.demazure_side)},
          {"all_licensed", report.all_licensed},
          {"equal", report.equal}};
}

}  // namespace qba
