#include "qba/qba.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/expr_parse.hpp"
#include "core/json_io.hpp"

struct qba_session {
  int n = 0;
  int r = 0;
  qba::ParamSpec params{1, 1};
  std::string error_message;
  std::string error_code;
};

namespace {

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void clear_error(qba_session* session) {
  session->error_message.clear();
  session->error_code.clear();
}

int fail(qba_session* session, const char* code, const std::string& message) {
  session->error_code = code;
  session->error_message = message;
  return QBA_ERROR;
}

// Runs the body, converting exceptions into session error state; on success
// stores the JSON rendering into *out.
template <typename Body>
int run(qba_session* session, char** out, Body&& body) {
  if (!session) return QBA_BAD_HANDLE;
  clear_error(session);
  if (!out) return fail(session, "InvalidArgument", "output pointer is NULL");
  *out = nullptr;
  try {
    const qba::Json result = body();
    *out = dup_string(result.dump(2));
    if (!*out) return fail(session, "Internal", "out of memory");
    return QBA_OK;
  } catch (const qba::Error& e) {
    return fail(session, qba::error_code_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(session, "Internal", e.what());
  }
}

std::optional<qba::Shape> shape_from(const qba_session* session, const int* shape) {
  if (!shape) return std::nullopt;
  return qba::Shape(std::vector<int>(shape, shape + session->n));
}

std::vector<int> int_vector(const int* data, std::size_t count) {
  if (!data) {
    throw qba::Error(qba::ErrorCode::InvalidArgument, "array pointer is NULL");
  }
  return std::vector<int>(data, data + count);
}

std::vector<int> weight_from(const qba_session* session, const int* weight) {
  return int_vector(weight, static_cast<std::size_t>(session->n));
}

// The standard test modules: one-dimensional comodules k_a for every
// non-negative weight a with |a| = r.
std::vector<std::pair<std::string, qba::Comodule>> weight_modules(
    const qba_session* session) {
  const qba::CoalgebraPtr piece = qba::graded_coalgebra(
      session->n, qba::Shape::delta(session->n), session->r, session->params);
  std::vector<std::pair<std::string, qba::Comodule>> modules;
  std::vector<int> weight(static_cast<std::size_t>(session->n), 0);
  const auto recurse = [&](auto&& self, int position, int remaining) -> void {
    if (position == session->n - 1) {
      weight[static_cast<std::size_t>(position)] = remaining;
      std::string label = "k_(";
      for (int k = 0; k < session->n; ++k) {
        if (k) label += ",";
        label += std::to_string(weight[static_cast<std::size_t>(k)]);
      }
      label += ")";
      modules.emplace_back(label, qba::one_dim(weight, piece));
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      weight[static_cast<std::size_t>(position)] = v;
      self(self, position + 1, remaining - v);
    }
  };
  recurse(recurse, 0, session->r);
  return modules;
}

}  // namespace

extern "C" {

const char* qba_version(void) { return "1.0.0"; }

qba_session* qba_session_new(int n, int r, const char* alpha, const char* beta) {
  if (n < 1 || r < 0 || !alpha || !beta) return nullptr;
  try {
    auto* session = new qba_session;
    session->n = n;
    session->r = r;
    session->params = qba::ParamSpec::from_strings(alpha, beta);
    return session;
  } catch (...) {
    return nullptr;
  }
}

void qba_session_free(qba_session* session) { delete session; }

const char* qba_last_error(const qba_session* session) {
  return session ? session->error_message.c_str() : "bad handle";
}

const char* qba_last_error_code(const qba_session* session) {
  return session ? session->error_code.c_str() : "BadHandle";
}

int qba_normal_form(qba_session* session, const char* expr, const int* shape,
                    char** out) {
  return run(session, out, [&]() -> qba::Json {
    if (!expr) {
      throw qba::Error(qba::ErrorCode::InvalidArgument, "expression is NULL");
    }
    return qba::element_to_json(qba::parse_expression(
        expr, session->n, session->params, shape_from(session, shape)));
  });
}

int qba_comultiply(qba_session* session, const char* expr, const int* shape,
                   char** out) {
  return run(session, out, [&]() -> qba::Json {
    if (!expr) {
      throw qba::Error(qba::ErrorCode::InvalidArgument, "expression is NULL");
    }
    const std::optional<qba::Shape> b = shape_from(session, shape);
    const qba::AlgebraElement x =
        qba::parse_expression(expr, session->n, session->params, b);
    if (b) {
      const qba::RuleSet ambient(session->n, session->params);
      return qba::tensor_to_json(qba::comultiply_legs(x, ambient, {*b, *b}));
    }
    return qba::tensor_to_json(qba::comultiply(x, session->params));
  });
}

int qba_basis(qba_session* session, const int* shape, char** out) {
  return run(session, out, [&]() -> qba::Json {
    const qba::Shape b = shape ? *shape_from(session, shape)
                               : qba::Shape::delta(session->n);
    const std::vector<qba::Exponent> basis =
        qba::monomial_basis(session->n, b, session->r);
    qba::Json matrices = qba::Json::array();
    for (const qba::Exponent& omega : basis) {
      matrices.push_back(qba::omega_to_json(omega));
    }
    return {{"n", session->n},
            {"r", session->r},
            {"dim", basis.size()},
            {"basis", std::move(matrices)}};
  });
}

int qba_quantum_determinant(qba_session* session, char** out) {
  return run(session, out, [&]() -> qba::Json {
    return qba::element_to_json(
        qba::quantum_determinant(session->n, session->params));
  });
}

int qba_check_diamond(qba_session* session, const int* shape, char** out) {
  return run(session, out, [&]() -> qba::Json {
    const qba::RuleSet rules(session->n, session->params,
                             shape_from(session, shape));
    return qba::diamond_to_json(qba::check_diamond(rules));
  });
}

int qba_apply_word(qba_session* session, const int* word, size_t word_len,
                   const int* weight, char** out) {
  return run(session, out, [&]() -> qba::Json {
    const std::vector<int> w = word_len ? int_vector(word, word_len)
                                        : std::vector<int>{};
    const qba::Comodule module = qba::apply_word(
        w, qba::one_dim(weight_from(session, weight),
                        qba::graded_coalgebra(session->n,
                                              qba::Shape::delta(session->n),
                                              session->r, session->params)));
    return {{"comodule", qba::comodule_to_json(module)},
            {"character", qba::charpoly_to_json(qba::character(module))},
            {"character_text", qba::character(module).to_string()}};
  });
}

int qba_demazure_word(qba_session* session, const int* word, size_t word_len,
                      const int* weight, char** out) {
  return run(session, out, [&]() -> qba::Json {
    const std::vector<int> w = word_len ? int_vector(word, word_len)
                                        : std::vector<int>{};
    const qba::CharPoly result = qba::demazure_word(
        w, qba::CharPoly::monomial(weight_from(session, weight)));
    return {{"polynomial", qba::charpoly_to_json(result)},
            {"text", result.to_string()}};
  });
}

int qba_character_compare(qba_session* session, const int* word,
                          size_t word_len, const int* weight, char** out) {
  return run(session, out, [&]() -> qba::Json {
    const std::vector<int> w = word_len ? int_vector(word, word_len)
                                        : std::vector<int>{};
    return qba::char_compare_to_json(qba::compare_character(
        w, weight_from(session, weight), session->n, session->params));
  });
}

int qba_check_diagrams(qba_session* session, const int* families,
                       size_t family_count, int* all_pass, char** out) {
  return run(session, out, [&]() -> qba::Json {
    std::vector<int> wanted;
    if (families) {
      wanted = int_vector(families, family_count);
    } else {
      for (int f = 1; f <= 10; ++f) wanted.push_back(f);
    }
    const std::vector<qba::DiagramCheck> checks = qba::check_preaction_diagrams(
        session->n, weight_modules(session), wanted);
    bool ok = true;
    for (const auto& check : checks) ok = ok && check.pass;
    if (all_pass) *all_pass = ok ? 1 : 0;
    return qba::diagram_checks_to_json(checks);
  });
}

int qba_check_exact_sequences(qba_session* session, const int* shape, int l,
                              int* all_pass, char** out) {
  return run(session, out, [&]() -> qba::Json {
    std::vector<qba::ExactSequenceReport> reports;
    if (shape) {
      reports.push_back(qba::check_exact_sequence(
          session->n, *shape_from(session, shape), l, session->r,
          session->params));
    } else {
      // All non-decreasing shapes 1 <= b <= (n,...,n) with b - v_l still a
      // shape, every degree up to the session degree.
      std::vector<int> b(static_cast<std::size_t>(session->n), 1);
      const auto sweep = [&](auto&& self, int position) -> void {
        if (position == session->n) {
          const qba::Shape candidate{std::vector<int>(b)};
          for (int cut = 1; cut <= session->n; ++cut) {
            bool valid = true;
            try {
              candidate.minus_v(cut);
            } catch (const qba::Error&) {
              valid = false;
            }
            if (!valid || !candidate.minus_v(cut).is_nondecreasing()) continue;
            for (int degree = 0; degree <= session->r; ++degree) {
              reports.push_back(qba::check_exact_sequence(
                  session->n, candidate, cut, degree, session->params));
            }
          }
          return;
        }
        const int low = position == 0 ? 1 : b[static_cast<std::size_t>(position - 1)];
        for (int v = low; v <= session->n; ++v) {
          b[static_cast<std::size_t>(position)] = v;
          self(self, position + 1);
        }
      };
      sweep(sweep, 0);
    }
    bool ok = true;
    qba::Json out_reports = qba::Json::array();
    for (const auto& report : reports) {
      ok = ok && report.ok();
      out_reports.push_back(qba::exact_sequence_to_json(report));
    }
    if (all_pass) *all_pass = ok ? 1 : 0;
    return out_reports;
  });
}

int qba_schur_algebra(qba_session* session, char** out) {
  return run(session, out, [&]() -> qba::Json {
    return qba::schur_to_json(
        qba::schur_algebra(session->n, session->r, session->params));
  });
}

void qba_string_free(char* text) { std::free(text); }

}  // extern "C"
