#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "semiring_lab/semiring_lab.hpp"

using namespace semiring_lab;

namespace {

constexpr int exit_ran = 0, exit_usage = 1, exit_proven = 2;

/// A path to a semiring JSON file, or a fixture name such as "zmod(4)".
FiniteSemiring load_semiring(const std::string& arg) {
  if (!std::filesystem::exists(arg)) return fixture(arg);
  std::ifstream in(arg);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedTables(arg + ": " + e.what());
  }
  return semiring_from_json(j);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParams("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedCertificate(path + ": " + e.what());
  }
}

std::vector<Element> parse_indices(const std::string& text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw BadParams("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite commutative semiring toolkit and proposition auditor"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "check the semiring axioms");
  validate->add_option("file", file, "semiring JSON or fixture name")->required();

  bool classify_flag = false;
  auto* ideals = app.add_subcommand("ideals", "list ideals");
  ideals->add_option("file", file, "semiring JSON or fixture name")->required();
  ideals->add_flag("--classify", classify_flag, "print flags for each ideal");

  std::string indices;
  auto* closure = app.add_subcommand("closure", "Golan closure of the ideal generated by the given elements");
  closure->add_option("file", file, "semiring JSON or fixture name")->required();
  closure->add_option("--ideal", indices, "comma separated element indices")->required();

  bool dot = false;
  auto* topology = app.add_subcommand("topology", "semisubtractive space");
  topology->add_option("file", file, "semiring JSON or fixture name")->required();
  topology->add_flag("--dot", dot, "print the specialization order as DOT");

  std::size_t order = 0;
  std::string out_path;
  bool allow_large = false;
  auto* enumerate = app.add_subcommand("enumerate", "semirings of one order up to isomorphism");
  enumerate->add_option("--order", order, "order n")->required()->check(CLI::Range(1, 15));
  enumerate->add_option("--out", out_path, "write JSON lines here instead of stdout");
  enumerate->add_flag("--allow-large", allow_large, "lift the order cap");

  std::string corpus_file, props, json_out, md_out;
  std::size_t corpus_order = 0;
  bool all_q = false;
  auto* audit = app.add_subcommand("audit", "evaluate propositions over a corpus");
  auto* corpus_opt = audit->add_option("--corpus", corpus_file, "corpus JSON lines file");
  auto* order_opt = audit->add_option("--order", corpus_order, "all semirings of order 2..N")->check(CLI::Range(2, 15));
  corpus_opt->excludes(order_opt);
  audit->add_option("--props", props, "comma separated ids or id prefixes");
  audit->add_option("--json", json_out, "write the JSON report here");
  audit->add_option("--md", md_out, "write the Markdown summary here");
  audit->add_flag("--all-q-witnesses", all_q, "audit every Q witness of each Q-ideal");
  audit->add_flag("--allow-large", allow_large, "lift the order cap");

  std::string cert_path;
  auto* replay_cmd = app.add_subcommand("replay", "re-evaluate a counterexample certificate");
  replay_cmd->add_option("certificate", cert_path, "certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ran : exit_usage;
  }

  try {
    if (*validate) {
      try {
        const auto s = load_semiring(file);
        std::cout << "valid semiring of order " << s.order() << "\n";
      } catch (const AxiomViolation& v) {
        std::cout << "invalid: " << v.what() << "\n";
      }
      return exit_ran;
    }
    if (*ideals) {
      const Analysis an(load_semiring(file));
      for (const auto& a : an.ideals().members()) {
        json row = {{"ideal", to_json(a.elements())}};
        if (classify_flag) {
          const auto c = classify(an.semiring(), a, an.ideals().members());
          row["proper"] = c.proper;
          row["subtractive"] = c.subtractive;
          row["strongly_subtractive"] = c.strongly_subtractive;
          row["semisubtractive"] = c.semisubtractive;
          row["prime"] = c.prime;
          row["maximal"] = c.maximal;
        }
        std::cout << row.dump() << "\n";
      }
      return exit_ran;
    }
    if (*closure) {
      const auto s = load_semiring(file);
      const auto a = generated_ideal(s, s.set_of(parse_indices(indices)));
      std::cout << json{{"ideal", to_json(a.elements())}, {"closure", to_json(golan_closure(s, a).elements())}}.dump()
                << "\n";
      return exit_ran;
    }
    if (*topology) {
      const Analysis an(load_semiring(file));
      if (dot)
        std::cout << hasse_dot(an.semisubtractive(), "semisubtractive_space");
      else
        std::cout << to_json(build_space(an)).dump(2) << "\n";
      return exit_ran;
    }
    if (*enumerate) {
      const auto found = enumerate_semirings(order, allow_large);
      std::ofstream file_out;
      if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) throw BadParams("cannot write '" + out_path + "'");
      }
      std::ostream& os = out_path.empty() ? std::cout : file_out;
      for (std::size_t k = 0; k < found.size(); ++k)
        os << to_jsonl_line({"n" + std::to_string(order) + "." + std::to_string(k), found[k]}).dump() << "\n";
      std::cerr << found.size() << " semirings of order " << order << "\n";
      return exit_ran;
    }
    if (*audit) {
      if (corpus_file.empty() && corpus_order == 0) throw CLI::RequiredError("--corpus or --order");
      const auto corpus = corpus_file.empty() ? corpus_up_to(corpus_order, allow_large) : read_corpus_file(corpus_file);
      std::vector<std::string> filters;
      if (!props.empty()) {
        std::stringstream ss(props);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) filters.push_back(tok);
      }
      AuditOptions opt;
      opt.all_q_witnesses = all_q;
      const auto report = run_audit(corpus, default_registry(), filters, opt);
      if (!json_out.empty()) write_file(json_out, to_json(report).dump(2) + "\n");
      if (!md_out.empty()) write_file(md_out, to_markdown(report));
      if (json_out.empty() && md_out.empty()) std::cout << to_markdown(report);
      const auto failures = report.proven_failures();
      for (const auto& [name, id] : failures)
        std::cerr << "PROVEN FAILURE: " << id << " fails on " << name << " (certificate in the JSON report)\n";
      return failures.empty() ? exit_ran : exit_proven;
    }
    if (*replay_cmd) {
      const auto outcome = replay(load_json(cert_path));
      std::cout << outcome.proposition << ": recorded " << to_string(outcome.recorded) << ", replayed "
                << to_string(outcome.replayed) << (outcome.matches() ? "" : "  MISMATCH") << "\n";
      return outcome.matches() ? exit_ran : exit_usage;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ran;
}
