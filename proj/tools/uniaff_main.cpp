#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "uniaff/io.hpp"

namespace {

constexpr int kExitAnswered = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalidInput = 2;

int run_validate(const std::string& path) {
  uniaff::ProblemInstance problem = uniaff::parse_problem_file(path);
  if (auto r = uniaff::validate_algebra(problem.algebra); !r.ok()) {
    std::cout << "invalid: " << r.first() << "\n";
    return kExitFailed;
  }
  if (auto r = uniaff::validate_levi(problem.algebra, problem.levi_data); !r.ok()) {
    std::cout << "invalid: " << r.first() << "\n";
    return kExitFailed;
  }
  if (problem.element.is_zero()) {
    std::cout << "invalid: element: must be nonzero\n";
    return kExitFailed;
  }
  if (!uniaff::is_nilpotent_element(problem.algebra, problem.levi_data, problem.element)) {
    std::cout << "invalid: element: not nilpotent\n";
    return kExitFailed;
  }
  std::cout << "valid\n";
  return kExitAnswered;
}

int run_decide(const std::string& path, bool trace, const std::string& cert_path,
               const std::string& format) {
  uniaff::ProblemInstance problem = uniaff::parse_problem_file(path);
  uniaff::Verdict verdict;
  try {
    verdict = uniaff::decide(problem.algebra, problem.levi_data, problem.element);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  std::cout << uniaff::verdict_name(verdict.kind) << "\n";
  if (trace) {
    if (format == "text")
      std::cout << uniaff::explain_text(problem.algebra, verdict);
    else
      std::cout << uniaff::trace_to_json(verdict);
  }
  if (!cert_path.empty()) {
    std::ofstream out(cert_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write certificate file: " << cert_path << "\n";
      return kExitInvalidInput;
    }
    out << uniaff::certificate_to_json(verdict.certificate);
  }
  return kExitAnswered;
}

int run_verify(const std::string& problem_path, const std::string& cert_path) {
  uniaff::ProblemInstance problem = uniaff::parse_problem_file(problem_path);
  uniaff::Certificate cert = uniaff::certificate_from_file(cert_path);
  uniaff::VerifyResult result =
      std::holds_alternative<uniaff::EmbeddingCert>(cert)
          ? uniaff::verify_embedding(problem.algebra, problem.levi_data, problem.element,
                                     std::get<uniaff::EmbeddingCert>(cert))
          : uniaff::verify_section(problem.algebra, problem.levi_data, problem.element,
                                   std::get<uniaff::SectionCert>(cert));
  if (!result.ok) {
    std::cout << "FAIL: " << result.diagnostic << "\n";
    return kExitFailed;
  }
  std::cout << "PASS\n";
  return kExitAnswered;
}

int run_explain(const std::string& path, const std::string& format) {
  uniaff::ProblemInstance problem = uniaff::parse_problem_file(path);
  uniaff::Verdict verdict;
  try {
    verdict = uniaff::decide(problem.algebra, problem.levi_data, problem.element);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  if (format == "json")
    std::cout << uniaff::trace_to_json(verdict);
  else
    std::cout << uniaff::explain_text(problem.algebra, verdict);
  return kExitAnswered;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decides affinity of G/H for a one-dimensional unipotent subgroup H,\n"
               "with exact rational arithmetic and machine-checkable certificates"};
  app.require_subcommand(1);

  std::string path, cert_in, cert_out, format = "json";
  bool trace = false;

  CLI::App* validate = app.add_subcommand("validate", "check a problem file");
  validate->add_option("path", path, "problem file")->required();

  CLI::App* decide = app.add_subcommand("decide", "decide whether G/H is affine");
  decide->add_option("path", path, "problem file")->required();
  decide->add_flag("--trace", trace, "emit the per-level trace document");
  decide->add_option("--cert", cert_out, "write the certificate to this file");
  decide->add_option("--format", format, "trace format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* verify = app.add_subcommand("verify", "verify a certificate against a problem");
  verify->add_option("problem", path, "problem file")->required();
  verify->add_option("certificate", cert_in, "certificate file")->required();

  CLI::App* explain = app.add_subcommand("explain", "narrate the decision per level");
  explain->add_option("path", path, "problem file")->required();
  explain->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      try {
        return run_validate(path);
      } catch (const uniaff::ParseError& e) {
        std::cout << "invalid: parse error: " << e.what() << "\n";
        return kExitFailed;
      } catch (const std::invalid_argument& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kExitFailed;
      }
    }
    if (decide->parsed()) return run_decide(path, trace, cert_out, format);
    if (verify->parsed()) return run_verify(path, cert_in);
    if (explain->parsed()) return run_explain(path, format == "json" ? "json" : "text");
  } catch (const uniaff::ParseError& e) {
    std::cerr << "error: parse error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
