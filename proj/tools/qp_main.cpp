#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "qp/axioms.hpp"
#include "qp/classify.hpp"
#include "qp/io.hpp"
#include "qp/verify.hpp"

namespace {

using namespace qp;

constexpr const char* kPorcelainHeader = "qp-porcelain 1";

struct Opts {
  std::string file;
  std::string tuple;
  std::string axiom;
  std::string theorem;
  std::string s_set;
  std::string mode = "exhaustive";
  std::string constraint = "any";
  std::string kind = "general";
  int m = 2;
  int n = 1;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::size_t budget = 10'000'000;
  std::size_t count = 1;
  bool porcelain = false;
  bool all = false;
};

std::vector<int> parse_csv_ints(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("expected comma-separated nonnegative integers, got '" + text +
                                  "'");
    out.push_back(std::stoi(piece));
    if (comma == std::string::npos) return out;
    pos = comma + 1;
  }
}

std::string csv(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Any of the three documents, lifted to an n-ary table.
DiscreteFunction load_any_function(const std::string& path) {
  if (ends_with(path, ".qpf")) return load_function(path);
  if (ends_with(path, ".qsf")) return dnf_table(load_set_function(path));
  if (ends_with(path, ".qum")) {
    UnaryMap phi = load_unary_map(path);
    return DiscreteFunction(phi.chain(), 1, phi.values());
  }
  throw std::invalid_argument(path + ": unrecognized extension (want .qpf, .qsf or .qum)");
}

std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string qp_failure_witness(const DiscreteFunction& f, const QpFailure& fail) {
  switch (fail.stage) {
    case QpFailStage::delta_not_nondecreasing:
      return "δ_f(" + std::to_string(fail.constants->first) +
             ")=" + std::to_string(fail.values.first) + " > δ_f(" +
             std::to_string(fail.constants->second) + ")=" + std::to_string(fail.values.second);
    case QpFailStage::vertices_not_isotone:
      return "f" + Tuple::vertex(f.chain(), f.arity(), fail.masks->first).to_string() +
             "=" + std::to_string(fail.values.first) + " > f" +
             Tuple::vertex(f.chain(), f.arity(), fail.masks->second).to_string() +
             "=" + std::to_string(fail.values.second);
    case QpFailStage::reconstruction_mismatch:
      return "x=" + fail.point->to_string() + ": p_f∘δ_f=" + std::to_string(fail.values.first) +
             ", f=" + std::to_string(fail.values.second);
  }
  return "?";
}

int run_eval(const Opts& o) {
  const DiscreteFunction f = load_any_function(o.file);
  const Tuple x(f.chain(), parse_csv_ints(o.tuple));
  const int value = f.eval(x);
  if (o.porcelain)
    std::cout << kPorcelainHeader << "\nvalue=" << value << "\n";
  else
    std::cout << value << "\n";
  return 0;
}

void print_axiom_line(const DiscreteFunction& f, const AxiomResult& r, bool porcelain) {
  const std::string_view name = to_string(r.axiom);
  if (porcelain) {
    std::cout << "axiom=" << name << " holds=" << (r.holds ? "yes" : "no") << " witness=";
    std::cout << (r.holds ? "-" : describe(f, r.axiom, *r.witness, true)) << "\n";
    return;
  }
  if (r.holds)
    std::cout << name << ": holds\n";
  else
    std::cout << name << ": fails (witness " << describe(f, r.axiom, *r.witness, false) << ")\n";
}

int run_axioms(const Opts& o) {
  const DiscreteFunction f = load_any_function(o.file);
  const AxiomChecker ax(f.chain(), f.arity());
  std::optional<std::vector<int>> s;
  if (!o.s_set.empty()) s = parse_csv_ints(o.s_set);
  if (o.porcelain) std::cout << kPorcelainHeader << "\n";
  if (!o.axiom.empty()) {
    const auto a = axiom_from_string(o.axiom);
    if (!a) throw std::invalid_argument("unknown axiom '" + o.axiom + "'");
    if (s && !takes_s_set(*a))
      throw std::invalid_argument(std::string(to_string(*a)) + " does not take an S set");
    const AxiomResult r = s ? ax.check(f, *a, *s) : ax.check(f, *a);
    print_axiom_line(f, r, o.porcelain);
    return r.holds ? 0 : 1;
  }
  bool all_hold = true;
  for (const AxiomId a : kAllAxioms) {
    const AxiomResult r = s && takes_s_set(a) ? ax.check(f, a, *s) : ax.check(f, a);
    print_axiom_line(f, r, o.porcelain);
    all_hold = all_hold && r.holds;
  }
  return all_hold ? 0 : 1;
}

std::string refusal_text(const DiscreteFunction& f, const Refusal& r, bool compact) {
  std::string text = std::string("violates ") + std::string(to_string(r.axiom)) + " at " +
                     describe(f, r.axiom, r.witness, compact);
  return compact ? strip_spaces(std::move(text)) : text;
}

int run_classify(const Opts& o) {
  const DiscreteFunction f = load_any_function(o.file);
  const ClassReport rep = classify(f);
  if (o.porcelain) {
    std::cout << kPorcelainHeader << "\n";
    const auto flag = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "polynomial=" << flag(rep.polynomial)
              << " quasi_polynomial=" << flag(rep.quasi_polynomial)
              << " quasi_sugeno=" << flag(rep.quasi_sugeno)
              << " quasi_term=" << flag(rep.quasi_term)
              << " quasi_weighted_max=" << flag(rep.quasi_weighted_max)
              << " quasi_weighted_min=" << flag(rep.quasi_weighted_min) << " witness="
              << (rep.quasi_polynomial ? "-" : strip_spaces(qp_failure_witness(f, *rep.failure)))
              << "\n";
    return rep.quasi_polynomial ? 0 : 1;
  }
  if (!rep.quasi_polynomial) {
    std::cout << "quasi_polynomial: no (witness " << qp_failure_witness(f, *rep.failure) << ")\n";
    return 1;
  }
  const auto line = [&](const char* name, bool holds, const std::optional<Refusal>& refusal) {
    std::cout << name << ": " << (holds ? "yes" : "no");
    if (!holds && refusal) std::cout << " (" << refusal_text(f, *refusal, false) << ")";
    std::cout << "\n";
  };
  line("polynomial", rep.polynomial, std::nullopt);
  line("quasi_polynomial", true, std::nullopt);
  line("quasi_sugeno", rep.quasi_sugeno, std::nullopt);
  line("quasi_term", rep.quasi_term, rep.term_refusal);
  line("quasi_weighted_max", rep.quasi_weighted_max, rep.weighted_max_refusal);
  line("quasi_weighted_min", rep.quasi_weighted_min, rep.weighted_min_refusal);
  return 0;
}

void print_factorization(const Factorization& fac, bool porcelain) {
  const char* kind = "general";
  switch (fac.kind) {
    case FactorKind::general: kind = "general"; break;
    case FactorKind::sugeno: kind = "sugeno"; break;
    case FactorKind::term: kind = "term"; break;
    case FactorKind::weighted_max: kind = "weighted-max"; break;
    case FactorKind::weighted_min: kind = "weighted-min"; break;
  }
  if (porcelain) {
    std::cout << "kind=" << kind << " p=" << csv(fac.p.table()) << " phi=" << csv(fac.phi.values())
              << " weights=" << (fac.weights.empty() ? "-" : csv(fac.weights)) << "\n";
    return;
  }
  std::cout << "kind: " << kind << "\n"
            << "p: m=" << fac.p.chain().size() << " n=" << fac.p.arity()
            << " table=" << csv(fac.p.table()) << "\n"
            << "phi: " << csv(fac.phi.values()) << "\n";
  if (!fac.weights.empty()) std::cout << "weights: " << csv(fac.weights) << "\n";
}

int run_factor(const Opts& o) {
  const DiscreteFunction f = load_any_function(o.file);
  const QuasiPolynomialCheck qc = is_quasi_polynomial(f);
  if (o.porcelain) std::cout << kPorcelainHeader << "\n";
  if (!qc.quasi_polynomial) {
    if (o.porcelain)
      std::cout << "quasi_polynomial=no witness=" << strip_spaces(qp_failure_witness(f, *qc.failure))
                << "\n";
    else
      std::cout << "quasi_polynomial: no (witness " << qp_failure_witness(f, *qc.failure) << ")\n";
    return 1;
  }
  if (o.all) {
    if (o.kind != "general")
      throw std::invalid_argument("--all enumerates general factorizations; drop --kind");
    const FactorizationSets sets = factorization_sets(f);
    if (o.porcelain) {
      std::cout << "count=" << sets.by_search.size() << "\n";
      for (const Factorization& fac : sets.by_search)
        std::cout << "p=" << csv(fac.p.table()) << " phi=" << csv(fac.phi.values()) << "\n";
    } else {
      std::cout << "factorizations: " << sets.by_search.size() << "\n";
      for (const Factorization& fac : sets.by_search)
        std::cout << "p=" << csv(fac.p.table()) << " phi=" << csv(fac.phi.values()) << "\n";
    }
    return 0;
  }
  std::optional<Factorization> fac;
  std::optional<Refusal> refusal;
  if (o.kind == "general") {
    fac = *qc.canonical;
  } else if (o.kind == "sugeno") {
    fac = as_quasi_sugeno(f);
  } else {
    std::variant<Factorization, Refusal> r = [&] {
      if (o.kind == "term") return as_quasi_term(f);
      if (o.kind == "weighted-max") return as_quasi_weighted_max(f);
      if (o.kind == "weighted-min") return as_quasi_weighted_min(f);
      throw std::invalid_argument("unknown kind '" + o.kind + "'");
    }();
    if (auto* got = std::get_if<Factorization>(&r))
      fac = std::move(*got);
    else
      refusal = std::move(std::get<Refusal>(r));
  }
  if (refusal) {
    if (o.porcelain)
      std::cout << "refused=" << to_string(refusal->axiom)
                << " witness=" << describe(f, refusal->axiom, refusal->witness, true) << "\n";
    else
      std::cout << "refused: " << refusal_text(f, *refusal, false) << "\n";
    return 1;
  }
  print_factorization(*fac, o.porcelain);
  return 0;
}

int run_verify(const Opts& o) {
  const auto t = theorem_from_string(o.theorem);
  if (!t) throw std::invalid_argument("unknown theorem '" + o.theorem + "'");
  const auto mode = universe_mode_from_string(o.mode);
  if (!mode) throw std::invalid_argument("unknown mode '" + o.mode + "'");
  if (*mode == UniverseMode::sample && o.samples == 0)
    throw std::invalid_argument("sample mode needs --samples");
  const Universe u{o.m, o.n, *mode, o.samples, o.seed, o.budget};
  const VerificationReport rep = verify(*t, u, o.jobs);
  if (o.porcelain) {
    std::cout << kPorcelainHeader << "\n";
    std::cout << "theorem=" << to_string(*t) << " m=" << u.m << " n=" << u.n
              << " mode=" << to_string(u.mode) << " seed=" << u.seed
              << " checked=" << rep.functions_checked << " holds=" << (rep.holds ? "yes" : "no")
              << " witness=" << (rep.holds ? "-" : csv(rep.counterexample->function.table()))
              << " detail=" << (rep.holds ? "-" : rep.counterexample->detail) << "\n";
  } else if (rep.holds) {
    std::cout << "holds (" << rep.functions_checked << " functions)\n";
  } else {
    std::cout << "fails (ordinal " << rep.counterexample->ordinal << " of "
              << rep.functions_checked << ": table=" << csv(rep.counterexample->function.table())
              << ", " << rep.counterexample->detail << ")\n";
  }
  return rep.holds ? 0 : 1;
}

int run_count(const Opts& o) {
  const ClassCounts c = count_classes(o.m, o.n, o.budget, o.jobs);
  if (o.porcelain) {
    std::cout << kPorcelainHeader << "\n";
    std::cout << "m=" << c.m << " n=" << c.n << " total=" << c.total;
    for (std::size_t k = 0; k < kAllAxioms.size(); ++k)
      std::cout << " " << to_string(kAllAxioms[k]) << "=" << c.axiom[k];
    std::cout << " polynomial=" << c.polynomial << " quasi_polynomial=" << c.quasi_polynomial
              << " quasi_term=" << c.quasi_term << " quasi_weighted_max=" << c.quasi_weighted_max
              << " quasi_weighted_min=" << c.quasi_weighted_min << "\n";
    return 0;
  }
  std::cout << "universe: m=" << c.m << " n=" << c.n << " total=" << c.total << "\n";
  for (std::size_t k = 0; k < kAllAxioms.size(); ++k)
    std::cout << to_string(kAllAxioms[k]) << ": " << c.axiom[k] << "\n";
  std::cout << "polynomial: " << c.polynomial << "\n"
            << "quasi_polynomial: " << c.quasi_polynomial << "\n"
            << "quasi_term: " << c.quasi_term << "\n"
            << "quasi_weighted_max: " << c.quasi_weighted_max << "\n"
            << "quasi_weighted_min: " << c.quasi_weighted_min << "\n";
  return 0;
}

int run_random(const Opts& o) {
  SampleConstraint constraint;
  if (o.constraint == "any")
    constraint = SampleConstraint::any;
  else if (o.constraint == "nondecreasing")
    constraint = SampleConstraint::nondecreasing;
  else
    throw std::invalid_argument("unknown constraint '" + o.constraint + "'");
  if (o.porcelain) std::cout << kPorcelainHeader << "\n";
  for (std::size_t i = 0; i < o.count; ++i) {
    const DiscreteFunction f = random_function(o.m, o.n, o.seed + i, constraint);
    if (o.porcelain)
      std::cout << "seed=" << o.seed + i << " m=" << o.m << " n=" << o.n
                << " table=" << csv(f.table()) << "\n";
    else {
      if (i) std::cout << "\n";
      std::cout << serialize(f);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice (quasi-)polynomial functions over finite chains", "qp"};
  app.require_subcommand(1);
  Opts o;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a function at a point");
  eval->add_option("-f,--file", o.file, "function document (.qpf/.qsf/.qum)")->required();
  eval->add_option("-x,--point", o.tuple, "comma-separated point, e.g. 2,0")->required();

  CLI::App* axioms = app.add_subcommand("axioms", "check axioms, all or one");
  axioms->add_option("-f,--file", o.file)->required();
  axioms->add_option("--axiom", o.axiom, "check just this axiom");
  axioms->add_option("--S", o.s_set, "S set for S_MAX_HOM/S_MIN_HOM (default: range hull)");

  CLI::App* classify_cmd = app.add_subcommand("classify", "full class membership report");
  classify_cmd->add_option("-f,--file", o.file)->required();

  CLI::App* factor = app.add_subcommand("factor", "factor into polynomial and unary parts");
  factor->add_option("-f,--file", o.file)->required();
  factor->add_option("--kind", o.kind, "general|sugeno|term|weighted-max|weighted-min")
      ->default_str("general");
  factor->add_flag("--all", o.all, "list every (p, phi) factorization pair");

  CLI::App* verify_cmd = app.add_subcommand("verify", "machine-check a theorem over a universe");
  verify_cmd->add_option("--theorem", o.theorem, "theorem id, e.g. T-QUASIPOL")->required();
  verify_cmd->add_option("--m", o.m, "chain size")->required();
  verify_cmd->add_option("--n", o.n, "arity")->required();
  verify_cmd->add_option("--mode", o.mode, "exhaustive|exhaustive-nondecreasing|sample")
      ->default_str("exhaustive");
  verify_cmd->add_option("--samples", o.samples, "sample count (sample mode)");
  verify_cmd->add_option("--seed", o.seed, "sample seed");
  verify_cmd->add_option("--jobs", o.jobs, "worker threads");
  verify_cmd->add_option("--budget", o.budget, "max functions to enumerate");

  CLI::App* count = app.add_subcommand("count", "exhaustive class cardinalities");
  count->add_option("--m", o.m)->required();
  count->add_option("--n", o.n)->required();
  count->add_option("--jobs", o.jobs);
  count->add_option("--budget", o.budget);

  CLI::App* random = app.add_subcommand("random", "seeded random function documents");
  random->add_option("--m", o.m)->required();
  random->add_option("--n", o.n)->required();
  random->add_option("--seed", o.seed);
  random->add_option("--count", o.count, "how many functions");
  random->add_option("--mode", o.constraint, "any|nondecreasing")->default_str("any");

  for (CLI::App* sub : {eval, axioms, classify_cmd, factor, verify_cmd, count, random})
    sub->add_flag("--porcelain", o.porcelain, "stable machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) return run_eval(o);
    if (axioms->parsed()) return run_axioms(o);
    if (classify_cmd->parsed()) return run_classify(o);
    if (factor->parsed()) return run_factor(o);
    if (verify_cmd->parsed()) return run_verify(o);
    if (count->parsed()) return run_count(o);
    if (random->parsed()) return run_random(o);
  } catch (const std::exception& e) {
    std::cerr << "qp: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
