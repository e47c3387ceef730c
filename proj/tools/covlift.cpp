// covlift: decide whether graph automorphisms lift to abelian regular covers.
//
//   covlift check INSTANCE.json [--oracle off|kernel|liftsearch|both]
//                 [--budget N] [--format text|structured] [--threads N]
//   covlift normal-form (MATRIX_FILE | --matrix "r11 r12; r21 r22") --p P --k K
//   covlift gen --seed S [--max-vertices N] [--max-order N]
//
// Exit status: 0 on success (a "does not lift" verdict is a success),
// 2 on parse or validation errors, 3 when an oracle disagrees.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "covlift/error.hpp"
#include "covlift/generator.hpp"
#include "covlift/report.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitDisagreement = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw covlift::Error(covlift::ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

std::vector<std::vector<std::int64_t>> parse_rows(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::stringstream all(text);
  std::string line;
  while (std::getline(all, line, ';')) {
    std::stringstream parts(line);
    std::string piece;
    // allow newlines as row separators too
    while (std::getline(parts, piece, '\n')) {
      std::stringstream numbers(piece);
      std::vector<std::int64_t> row;
      std::int64_t x;
      while (numbers >> x) row.push_back(x);
      if (!numbers.eof()) throw covlift::Error(covlift::ErrorCode::ParseError, "matrix entries must be integers");
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lifting automorphisms to abelian regular coverings of graphs"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;

  auto* check = app.add_subcommand("check", "Run the lifting criterion on every automorphism of an instance");
  std::string instance_path;
  std::string oracle = "off";
  std::int64_t budget = covlift::kDefaultBudget;
  unsigned threads = 1;
  check->add_option("instance", instance_path, "Instance file (JSON)")->required();
  check->add_option("--oracle", oracle, "Cross-check with brute force: off|kernel|liftsearch|both")
      ->check(CLI::IsMember({"off", "kernel", "liftsearch", "both"}));
  check->add_option("--budget", budget, "Enumeration limit for the oracles");
  check->add_option("--threads", threads, "Worker threads for the automorphism batch");
  check->add_option("--format", format, "text|structured|json (json is an alias of structured)")->check(CLI::IsMember({"text", "structured", "json"}));
  check->add_option("-o,--output", output, "Write the report here instead of stdout");

  auto* nf = app.add_subcommand("normal-form", "Diagonalize a matrix over Z/p^k");
  std::string matrix_path;
  std::string inline_matrix;
  std::int64_t prime = 0;
  int exponent = 0;
  nf->add_option("matrix_file", matrix_path, "File with JSON {p,k,matrix} or whitespace rows");
  nf->add_option("--matrix", inline_matrix, "Inline rows separated by ';'");
  nf->add_option("--p", prime, "Prime p");
  nf->add_option("--k", exponent, "Exponent k");
  nf->add_option("--format", format, "text|structured|json (json is an alias of structured)")->check(CLI::IsMember({"text", "structured", "json"}));

  auto* gen = app.add_subcommand("gen", "Emit a random instance");
  std::uint64_t seed = 1;
  covlift::GenOptions gen_options;
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--max-vertices", gen_options.max_vertices, "Vertex bound (<= 8 keeps brute force fast)")
      ->check(CLI::Range(2, 12));
  gen->add_option("--max-order", gen_options.max_group_order, "Bound on |A|")->check(CLI::Range(2, 1 << 20));
  gen->add_option("--max-automorphisms", gen_options.max_automorphisms, "Automorphisms per instance")
      ->check(CLI::Range(1, 64));
  gen->add_option("--kernel-budget", gen_options.kernel_budget, "Bound on exponent(A)^t");
  gen->add_flag("--non-reduced", gen_options.non_reduced, "Also put voltages on tree arcs");
  gen->add_option("-o,--output", output, "Write the instance here instead of stdout");

  CLI11_PARSE(app, argc, argv);
  const bool structured = format != "text";

  try {
    if (check->parsed()) {
      const covlift::Fixture fixture = covlift::build_fixture(covlift::load_instance(instance_path));
      covlift::CheckOptions options{covlift::parse_oracle_mode(oracle), budget, threads};
      const covlift::CheckOutcome outcome = covlift::run_check(fixture, options);
      emit(structured ? outcome.report.dump(2) + "\n" : covlift::render_check_text(outcome.report), output);
      if (!outcome.disagreements.empty()) {
        std::cerr << "covlift: oracle disagreement on";
        for (const auto& name : outcome.disagreements) std::cerr << ' ' << name;
        std::cerr << '\n';
        return kExitDisagreement;
      }
      return 0;
    }
    if (nf->parsed()) {
      std::vector<std::vector<std::int64_t>> rows;
      if (!inline_matrix.empty()) {
        rows = parse_rows(inline_matrix);
      } else if (!matrix_path.empty()) {
        std::ifstream file(matrix_path);
        if (!file) throw covlift::Error(covlift::ErrorCode::ParseError, "cannot open " + matrix_path);
        std::stringstream buffer;
        buffer << file.rdbuf();
        const std::string text = buffer.str();
        if (text.find_first_not_of(" \t\r\n") != std::string::npos && text[text.find_first_not_of(" \t\r\n")] == '{') {
          const auto doc = covlift::Json::parse(text);
          if (prime == 0 && doc.contains("p")) prime = doc["p"].get<std::int64_t>();
          if (exponent == 0 && doc.contains("k")) exponent = doc["k"].get<int>();
          rows = doc.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
        } else {
          rows = parse_rows(text);
        }
      } else {
        throw covlift::Error(covlift::ErrorCode::ParseError, "give a matrix file or --matrix");
      }
      if (rows.empty()) throw covlift::Error(covlift::ErrorCode::ParseError, "empty matrix");
      covlift::PrimePower ring(prime, exponent);
      covlift::ModMatrix x(ring, rows.size(), rows.front().size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != x.cols()) throw covlift::Error(covlift::ErrorCode::ParseError, "ragged matrix");
        for (std::size_t j = 0; j < x.cols(); ++j) x.set(i, j, rows[i][j]);
      }
      const covlift::Json report = covlift::normal_form_report(x);
      std::cout << (structured ? report.dump(2) + "\n" : covlift::render_normal_form_text(report));
      return report["verified"].get<bool>() ? 0 : 1;
    }
    if (gen->parsed()) {
      emit(covlift::to_json(covlift::generate_instance(seed, gen_options)).dump(2) + "\n", output);
      return 0;
    }
  } catch (const covlift::Error& e) {
    std::cerr << "covlift: " << e.what() << '\n';
    return e.code() == covlift::ErrorCode::OracleDisagreement ? kExitDisagreement : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "covlift: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
