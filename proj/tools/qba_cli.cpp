// Command-line front end.  Talks to the library exclusively through the C
// interface in qba/qba.h; every result is printed as JSON and the process
// exits 0 only when the requested computation (and any check it encodes)
// succeeded.
#include <cstdio>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qba/qba.h"

namespace {

struct SessionDeleter {
  void operator()(qba_session* session) const { qba_session_free(session); }
};
using Session = std::unique_ptr<qba_session, SessionDeleter>;

struct Options {
  int n = 3;
  int r = 2;
  std::string alpha = "1";
  std::string beta = "1";
  bool json = false;  // accepted for compatibility; output is always JSON
  std::vector<int> shape;
  std::vector<int> word;
  std::vector<int> weight;
  int l = 0;
  std::string expr;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--n", opt.n, "matrix size")->check(CLI::PositiveNumber);
  cmd->add_option("--r", opt.r, "degree")->check(CLI::NonNegativeNumber);
  cmd->add_option("--alpha", opt.alpha, "first parameter, rational p or p/q");
  cmd->add_option("--beta", opt.beta, "second parameter, rational p or p/q");
  cmd->add_flag("--json", opt.json, "emit JSON (always on)");
}

Session make_session(const Options& opt) {
  Session session(
      qba_session_new(opt.n, opt.r, opt.alpha.c_str(), opt.beta.c_str()));
  if (!session) {
    std::fprintf(stderr,
                 "error [InvalidArgument]: bad session arguments "
                 "(need n >= 1, r >= 0, nonzero rational alpha and beta)\n");
  }
  return session;
}

const int* shape_ptr(const Options& opt) {
  return opt.shape.empty() ? nullptr : opt.shape.data();
}

// Prints the JSON result (or the session error) and converts the status and
// check verdict into a process exit code.
int finish(qba_session* session, int status, char* json, bool check_passed = true) {
  if (status != QBA_OK) {
    std::fprintf(stderr, "error [%s]: %s\n", qba_last_error_code(session),
                 qba_last_error(session));
    return 1;
  }
  std::printf("%s\n", json);
  qba_string_free(json);
  return check_passed ? 0 : 1;
}

bool validate_lengths(const Options& opt) {
  if (!opt.shape.empty() && static_cast<int>(opt.shape.size()) != opt.n) {
    std::fprintf(stderr, "error [InvalidArgument]: --shape needs %d entries\n",
                 opt.n);
    return false;
  }
  if (!opt.weight.empty() && static_cast<int>(opt.weight.size()) != opt.n) {
    std::fprintf(stderr, "error [InvalidArgument]: --weight needs %d entries\n",
                 opt.n);
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the two-parameter quantized "
               "coordinate algebra and its Borel/parabolic quotients"};
  app.require_subcommand(1);

  Options opt;
  bool r_given = false;

  CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", opt.expr, "expression in generators c[i,j]")->required();
  CLI::App* diamond =
      app.add_subcommand("diamond", "resolve all rewriting ambiguities");
  CLI::App* basis = app.add_subcommand("basis", "normal monomial basis of A(b;r)");
  CLI::App* det = app.add_subcommand("det", "quantum determinant");
  CLI::App* delta = app.add_subcommand("delta", "comultiplication of an expression");
  delta->add_option("expr", opt.expr, "expression in generators c[i,j]")->required();
  CLI::App* apply =
      app.add_subcommand("apply", "apply an induction word to k_weight");
  CLI::App* chr =
      app.add_subcommand("char", "compare induction and Demazure characters");
  CLI::App* demazure =
      app.add_subcommand("demazure", "Demazure operator word on x^weight");
  CLI::App* diagrams =
      app.add_subcommand("diagrams", "check the ten preaction diagram families");
  CLI::App* exactseq =
      app.add_subcommand("exactseq", "graded exact sequence checks");
  CLI::App* schur = app.add_subcommand("schur", "dual algebra S^-(n,r)");

  for (CLI::App* cmd : {nf, diamond, basis, det, delta, apply, chr, demazure,
                        diagrams, exactseq, schur}) {
    add_common(cmd, opt);
  }
  for (CLI::App* cmd : {nf, diamond, basis, delta, exactseq}) {
    cmd->add_option("--shape", opt.shape, "shape b, n comma-separated entries")
        ->delimiter(',');
  }
  for (CLI::App* cmd : {apply, chr, demazure}) {
    cmd->add_option("--word", opt.word, "indices, first entry acts first")
        ->delimiter(',');
    cmd->add_option("--weight", opt.weight, "n comma-separated entries")
        ->delimiter(',')
        ->required();
  }
  exactseq->add_option("--l", opt.l, "column index l of the sequence");

  CLI11_PARSE(app, argc, argv);
  r_given = !app.get_subcommands().empty() &&
            app.get_subcommands().front()->count("--r") > 0;
  if (!validate_lengths(opt)) return 1;

  // For weight-driven commands the degree is the weight size unless the
  // user pinned --r explicitly.
  if (!opt.weight.empty() && !r_given) {
    opt.r = std::accumulate(opt.weight.begin(), opt.weight.end(), 0);
  }

  Session session = make_session(opt);
  if (!session) return 1;
  char* json = nullptr;
  int status = QBA_ERROR;

  if (*nf) {
    status = qba_normal_form(session.get(), opt.expr.c_str(), shape_ptr(opt), &json);
    return finish(session.get(), status, json);
  }
  if (*diamond) {
    status = qba_check_diamond(session.get(), shape_ptr(opt), &json);
    const bool ok =
        status == QBA_OK && std::string(json).find("\"ok\": true") != std::string::npos;
    return finish(session.get(), status, json, ok);
  }
  if (*basis) {
    status = qba_basis(session.get(), shape_ptr(opt), &json);
    return finish(session.get(), status, json);
  }
  if (*det) {
    status = qba_quantum_determinant(session.get(), &json);
    return finish(session.get(), status, json);
  }
  if (*delta) {
    status = qba_comultiply(session.get(), opt.expr.c_str(), shape_ptr(opt), &json);
    return finish(session.get(), status, json);
  }
  if (*apply) {
    status = qba_apply_word(session.get(), opt.word.data(), opt.word.size(),
                            opt.weight.data(), &json);
    return finish(session.get(), status, json);
  }
  if (*chr) {
    status = qba_character_compare(session.get(), opt.word.data(),
                                   opt.word.size(), opt.weight.data(), &json);
    const bool ok = status == QBA_OK &&
                    std::string(json).find("\"equal\": true") != std::string::npos;
    return finish(session.get(), status, json, ok);
  }
  if (*demazure) {
    status = qba_demazure_word(session.get(), opt.word.data(), opt.word.size(),
                               opt.weight.data(), &json);
    return finish(session.get(), status, json);
  }
  if (*diagrams) {
    int all_pass = 0;
    status = qba_check_diagrams(session.get(), nullptr, 0, &all_pass, &json);
    return finish(session.get(), status, json, all_pass == 1);
  }
  if (*exactseq) {
    int all_pass = 0;
    status = qba_check_exact_sequences(session.get(), shape_ptr(opt), opt.l,
                                       &all_pass, &json);
    return finish(session.get(), status, json, all_pass == 1);
  }
  if (*schur) {
    status = qba_schur_algebra(session.get(), &json);
    return finish(session.get(), status, json);
  }
  return 1;
}
