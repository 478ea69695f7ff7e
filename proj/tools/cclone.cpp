// Command-line surface of the clausal clone workbench.
//
// Exit codes: 0 all requested certificates verified (or plain query answered),
//             1 verification failure (the falsification locus is printed),
//             2 usage or budget errors.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cclone/classify.hpp"
#include "cclone/io.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
  bool json_output = false;
  double budget_bits = 24.0;
  std::size_t search_budget = std::size_t{1} << 20;
};

void print_relation(const cclone::Relation& rho, const GlobalOpts& opts) {
  std::cout << (opts.json_output ? cclone::relation_to_json(rho) + "\n"
                                 : cclone::relation_to_text(rho));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-domain clausal clone workbench"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_flag("--json", opts.json_output, "emit JSON envelopes instead of text");
  app.add_option("--budget", opts.budget_bits,
                 "enumeration budget: log2 of the admitted search space");
  app.add_option("--search-budget", opts.search_budget,
                 "max candidates examined by the witness family search");

  // clausal build
  auto* clausal_cmd = app.add_subcommand("clausal", "clausal relation commands");
  auto* build_cmd = clausal_cmd->add_subcommand("build", "build the relation of a clausal spec");
  std::string spec_text, spec_file;
  build_cmd->add_option("--spec", spec_text, "spec in the form \"n p q | a.. | b..\"");
  build_cmd->add_option("--file", spec_file, "file with one clausal spec ('-' = stdin)");

  // preserves
  auto* pres_cmd = app.add_subcommand("preserves", "test whether an operation preserves a relation");
  std::string op_path, rel_path;
  pres_cmd->add_option("--op", op_path, "operation file")->required();
  pres_cmd->add_option("--rel", rel_path, "relation file")->required();

  // pol
  auto* pol_cmd = app.add_subcommand("pol", "enumerate pol_k of the given relations");
  std::vector<std::string> pol_rels;
  int pol_arity = 1;
  pol_cmd->add_option("--rel", pol_rels, "relation file (repeatable)")->required();
  pol_cmd->add_option("-k,--arity", pol_arity, "operation arity")->required();

  // inv
  auto* inv_cmd = app.add_subcommand("inv", "enumerate inv_m of the given operations");
  std::vector<std::string> inv_ops;
  int inv_arity = 1;
  inv_cmd->add_option("--op", inv_ops, "operation file (repeatable)")->required();
  inv_cmd->add_option("-m,--arity", inv_arity, "relation arity")->required();

  // enumerate <class>
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate a relation class");
  std::string enum_class;
  int enum_n = 3;
  enum_cmd->add_option("class", enum_class,
                       "unary-central | equivalence | binary-central | bounded-order")
      ->required();
  enum_cmd->add_option("-n,--domain", enum_n, "domain size")->required();

  // classify a b n
  auto* classify_cmd = app.add_subcommand("classify", "the unique maximal clone above Pol(R(a,b))");
  int cl_a = 0, cl_b = 0, cl_n = 0;
  classify_cmd->add_option("a", cl_a)->required();
  classify_cmd->add_option("b", cl_b)->required();
  classify_cmd->add_option("n", cl_n)->required();

  // certify a b n
  auto* certify_cmd = app.add_subcommand("certify", "inclusion certificate for the designated clone");
  int ce_a = 0, ce_b = 0, ce_n = 0;
  certify_cmd->add_option("a", ce_a)->required();
  certify_cmd->add_option("b", ce_b)->required();
  certify_cmd->add_option("n", ce_n)->required();

  // refute a b n --target FILE
  auto* refute_cmd = app.add_subcommand("refute", "exclusion certificate against a target relation");
  int re_a = 0, re_b = 0, re_n = 0;
  std::string target_path;
  refute_cmd->add_option("a", re_a)->required();
  refute_cmd->add_option("b", re_b)->required();
  refute_cmd->add_option("n", re_n)->required();
  refute_cmd->add_option("--target", target_path, "target relation file")->required();

  // verify n
  auto* verify_cmd = app.add_subcommand("verify", "verify the classification for every (a,b)");
  int verify_n = 3;
  std::vector<std::string> verify_classes;
  bool verbose = false;
  verify_cmd->add_option("n", verify_n)->required();
  verify_cmd->add_option("--classes", verify_classes, "candidate classes (default: all four)");
  verify_cmd->add_flag("--verbose", verbose, "print one line per candidate");

  // complete --specs FILE
  auto* complete_cmd = app.add_subcommand("complete", "exact completeness test for a clausal set");
  std::string specs_path;
  complete_cmd->add_option("--specs", specs_path, "file with one clausal spec per line")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (build_cmd->parsed()) {
      if (spec_text.empty() == spec_file.empty()) {
        std::cerr << "clausal build: pass exactly one of --spec / --file\n";
        return 2;
      }
      const cclone::ClausalSpec spec =
          spec_text.empty() ? cclone::load_clausal_specs(spec_file).at(0)
                            : cclone::clausal_spec_from_text(spec_text);
      print_relation(cclone::build_clausal(spec), opts);
      return 0;
    }

    if (pres_cmd->parsed()) {
      const cclone::Operation f = cclone::load_operation(op_path);
      const cclone::Relation rho = cclone::load_relation(rel_path);
      const auto violation = cclone::find_violation(f, rho);
      if (opts.json_output) {
        json j;
        j["preserves"] = !violation.has_value();
        if (violation) {
          j["violating_columns"] = violation->columns;
          j["image_tuple"] = violation->image;
        }
        std::cout << j.dump() << '\n';
      } else if (violation) {
        std::cout << "false\n";
        for (const auto& col : violation->columns) {
          std::cout << "column:";
          for (int x : col) std::cout << ' ' << x;
          std::cout << '\n';
        }
        std::cout << "image:";
        for (int x : violation->image) std::cout << ' ' << x;
        std::cout << '\n';
      } else {
        std::cout << "true\n";
      }
      return 0;
    }

    if (pol_cmd->parsed()) {
      std::vector<cclone::Relation> q;
      for (const std::string& path : pol_rels) q.push_back(cclone::load_relation(path));
      const cclone::DomainSize n = q.front().domain();
      const auto ops = cclone::pol_k(n, q, pol_arity, {opts.budget_bits});
      if (opts.json_output) {
        json j = json::array();
        for (const auto& f : ops) j.push_back(json::parse(cclone::operation_to_json(f)));
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "# " << ops.size() << " operations\n";
        for (const auto& f : ops) std::cout << cclone::operation_to_text(f);
      }
      return 0;
    }

    if (inv_cmd->parsed()) {
      std::vector<cclone::Operation> fs;
      for (const std::string& path : inv_ops) fs.push_back(cclone::load_operation(path));
      const cclone::DomainSize n = fs.front().domain();
      const auto rels = cclone::inv_m(n, fs, inv_arity, {opts.budget_bits});
      if (opts.json_output) {
        json j = json::array();
        for (const auto& rho : rels) j.push_back(json::parse(cclone::relation_to_json(rho)));
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "# " << rels.size() << " relations\n";
        for (const auto& rho : rels) std::cout << cclone::relation_to_text(rho);
      }
      return 0;
    }

    if (enum_cmd->parsed()) {
      const auto cls = cclone::class_from_token(enum_class);
      if (!cls) {
        std::cerr << "unknown class token: " << enum_class << '\n';
        return 2;
      }
      const auto rels = cclone::enumerate_class(*cls, cclone::DomainSize(enum_n));
      if (opts.json_output) {
        json j = json::array();
        for (const auto& rho : rels) j.push_back(json::parse(cclone::relation_to_json(rho)));
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "# " << rels.size() << " relations\n";
        for (const auto& rho : rels) std::cout << cclone::relation_to_text(rho);
      }
      return 0;
    }

    if (classify_cmd->parsed()) {
      const cclone::MaxCCloneParams params(cl_a, cl_b, cclone::DomainSize(cl_n));
      const auto desc = cclone::classify(params);
      if (opts.json_output) {
        json j;
        j["kind"] = std::string(cclone::kind_token(desc.kind));
        j["relation"] = json::parse(cclone::relation_to_json(desc.relation));
        std::cout << j.dump() << '\n';
      } else {
        std::cout << cclone::kind_token(desc.kind) << ' '
                  << cclone::relation_compact(desc.relation) << '\n';
      }
      return 0;
    }

    if (certify_cmd->parsed()) {
      const cclone::MaxCCloneParams params(ce_a, ce_b, cclone::DomainSize(ce_n));
      const auto cert = cclone::inclusion_certificate(params);
      if (opts.json_output) {
        json j;
        j["constructed"] = json::parse(cclone::relation_to_json(cert.constructed));
        j["expected"] = json::parse(cclone::relation_to_json(cert.expected));
        j["equal"] = cert.equal;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "constructed " << cclone::relation_compact(cert.constructed) << '\n'
                  << "designated  " << cclone::relation_compact(cert.expected) << '\n'
                  << (cert.equal ? "equal\n" : "MISMATCH\n");
      }
      return cert.equal ? 0 : 1;
    }

    if (refute_cmd->parsed()) {
      const cclone::MaxCCloneParams params(re_a, re_b, cclone::DomainSize(re_n));
      const cclone::Relation target = cclone::load_relation(target_path);
      try {
        const auto outcome =
            cclone::refute_inclusion_detailed(params, target, {opts.search_budget});
        if (opts.json_output) {
          json j = json::parse(cclone::certificate_to_json(outcome.certificate));
          j["route"] = outcome.route;
          std::cout << j.dump() << '\n';
        } else {
          std::cout << "witness " << cclone::operation_compact(outcome.certificate.witness)
                    << " via " << outcome.route << '\n'
                    << cclone::certificate_to_json(outcome.certificate) << '\n';
        }
        return 0;
      } catch (const cclone::RefutationError& e) {
        std::cerr << "refutation failed: " << e.what() << '\n';
        return 1;
      }
    }

    if (verify_cmd->parsed()) {
      cclone::VerifyOptions vopts;
      vopts.enum_budget.max_bits = opts.budget_bits;
      vopts.search_budget.max_candidates = opts.search_budget;
      if (!verify_classes.empty()) {
        vopts.classes.clear();
        for (const std::string& token : verify_classes) {
          const auto cls = cclone::class_from_token(token);
          if (!cls) {
            std::cerr << "unknown class token: " << token << '\n';
            return 2;
          }
          vopts.classes.push_back(*cls);
        }
      }
      const auto report = cclone::verify_theorem(cclone::DomainSize(verify_n), vopts);
      std::cout << (opts.json_output ? cclone::report_to_json(report) + "\n"
                                     : cclone::render_text(report, verbose));
      return report.ok ? 0 : 1;
    }

    if (complete_cmd->parsed()) {
      const auto specs = cclone::load_clausal_specs(specs_path);
      const bool complete = cclone::is_complete(specs);
      if (opts.json_output) {
        json j;
        j["complete"] = complete;
        j["specs"] = specs.size();
        if (!complete) {
          j["dominating"] = json::array();
          for (const auto& p : cclone::dominating_params(specs))
            j["dominating"].push_back({{"a", p.a}, {"b", p.b}});
        }
        std::cout << j.dump() << '\n';
      } else {
        std::cout << (complete ? "true" : "false") << '\n';
        if (!complete)
          for (const auto& p : cclone::dominating_params(specs))
            std::cout << "dominated by R(" << p.a << "," << p.b << ")\n";
      }
      return 0;
    }
  } catch (const cclone::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return 2;
  } catch (const cclone::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
