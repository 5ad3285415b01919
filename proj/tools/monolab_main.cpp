#include "CLI11.hpp"
#include "monolab/json_io.hpp"

#include <fstream>
#include <iostream>

using namespace monolab;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kViolation = 2;

struct Options {
  std::string input;
  std::string point;
  std::string subgrad = "0";
  std::string kappa = "1";
  std::string window_radius = "1";
  int max_refine = 12;
  std::uint64_t seed = 1;
  int count = 50;
  std::string format = "json";
  std::string out;
  bool signed_mode = false;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw std::invalid_argument("cannot write " + opt.out);
  f << text << "\n";
}

Vec parse_point(const std::string& s, size_t want) {
  Vec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
  if (out.size() != want)
    throw std::invalid_argument("--point needs " + std::to_string(want) +
                                " comma-separated rationals");
  return out;
}

WindowSchedule schedule_of(const Options& opt) {
  WindowSchedule s;
  s.r0 = parse_rat(opt.window_radius);
  if (s.r0 <= 0) throw std::invalid_argument("--window-radius must be positive");
  s.K = opt.max_refine;
  if (s.K < 0) throw std::invalid_argument("--max-refine must be nonnegative");
  return s;
}

int cmd_analyze_operator(const Options& opt) {
  PolyOperator F = load_operator(opt.input);
  if (F.n() != 1)
    throw std::invalid_argument("analysis currently supports n = 1 operators");
  Vec pt = parse_point(opt.point, 2);
  GraphPoint p{{pt[0]}, {pt[1]}};
  if (!F.graph().contains(pt))
    throw std::invalid_argument("--point is not on the operator graph");
  Rat kappa = parse_rat(opt.kappa);
  WindowSchedule sched = schedule_of(opt);
  if (!opt.signed_mode && kappa <= 0)
    throw std::invalid_argument(
        "the four-way characterization needs --kappa > 0; pass --signed "
        "for the signed-modulus mode");
  PredicateVector v = opt.signed_mode
                          ? signed_characterization(F, p, kappa, sched)
                          : strong_characterization(F, p, kappa, sched);
  if (opt.format == "csv") {
    emit(opt, union_to_csv(F.graph()));
  } else {
    json rep = predicate_vector_to_json(v);
    rep["mode"] = opt.signed_mode ? "signed" : "strong";
    emit(opt, rep.dump(2));
  }
  return v.agreement() ? kOk : kViolation;
}

int cmd_analyze_function(const Options& opt) {
  PwFunction1D f = load_function(opt.input);
  Rat x = parse_rat(opt.point);
  Rat y = parse_rat(opt.subgrad);
  Rat kappa = parse_rat(opt.kappa);
  PolyUnion prox = proximal_subdifferential(f, x);
  PolyUnion lim = limiting_subdifferential(f, x);
  if (opt.format == "csv") {
    Window W{{x, y}, parse_rat(opt.window_radius), parse_rat(opt.window_radius)};
    emit(opt, union_to_csv(subdiff_graph(f, W).op.graph()));
    return kOk;
  }
  json rep;
  rep["case"] = f.name();
  rep["point"] = rat_to_string(x);
  rep["subgradient"] = rat_to_string(y);
  rep["kappa"] = rat_to_string(kappa);
  rep["proximal_subdifferential_csv"] = union_to_csv(prox);
  rep["limiting_subdifferential_csv"] = union_to_csv(lim);
  if (!lim.contains({y})) {
    rep["error"] = "--subgrad is not a limiting subgradient at --point";
    emit(opt, rep.dump(2));
    return kBadInput;
  }
  ProxResult pr = prox_regular(f, x, y);
  json pj = verdict_to_json(pr.verdict);
  if (pr.cert) {
    pj["epsilon"] = rat_to_string(pr.cert->epsilon);
    pj["sigma"] = rat_to_string(pr.cert->sigma);
  }
  rep["predicates"]["prox_regular"] = pj;
  rep["predicates"]["variationally_convex"] =
      verdict_to_json(variationally_convex(f, x, y, kappa));
  bool agree = true;
  try {
    Verdict lk = locally_kappa_convex(f, x, kappa);
    rep["predicates"]["locally_kappa_convex"] = verdict_to_json(lk);
    // smooth cross-check: local convexity must match derivative definiteness
    SubdiffGraph g = subdiff_graph(f, Window{{x, y}, rat(1), rat(1)});
    Verdict dd = definite_around(g.op, {{x}, {y}}, kappa, DerivKind::bouligand,
                                 WindowSchedule{});
    rep["predicates"]["gradient_derivative_lower_definite"] =
        verdict_to_json(dd);
    agree = lk.holds == dd.holds;
  } catch (const std::invalid_argument&) {
    rep["predicates"]["locally_kappa_convex"] = {
        {"holds", nullptr}, {"certificate", "not C1 near the point"}};
  }
  rep["agreement"] = agree;
  emit(opt, rep.dump(2));
  return agree ? kOk : kViolation;
}

int cmd_corpus(const Options& opt) {
  std::vector<CaseResult> results = run_corpus(builtin_corpus());
  json rep = corpus_report_to_json(results);
  emit(opt, rep.dump(2));
  return rep["pass"].get<bool>() ? kOk : kViolation;
}

int cmd_fuzz(const Options& opt) {
  WindowSchedule sched = schedule_of(opt);
  FuzzParams params;
  std::vector<PolyOperator> ops = fuzz_operators(opt.seed, opt.count, params);
  std::vector<Rat> kappas{rat(1, 4), rat(1, 2), rat(1)};
  struct Task {
    const PolyOperator* F;
    GraphPoint p;
  };
  std::vector<Task> tasks;
  for (const auto& F : ops)
    for (const auto& a : graph_anchors(F)) tasks.push_back({&F, a});
  std::vector<std::vector<PredicateVector>> batches(tasks.size());
  parallel_for(tasks.size(), [&](size_t i) {
    batches[i] = strong_characterization_vectors(*tasks[i].F, tasks[i].p, kappas, sched);
  });
  std::vector<PredicateVector> vectors;
  for (const auto& b : batches) vectors.insert(vectors.end(), b.begin(), b.end());
  EquivReport er = assert_equivalences(vectors);
  json rep;
  rep["seed"] = opt.seed;
  rep["count"] = opt.count;
  rep["cases_evaluated"] = vectors.size();
  rep["pass"] = er.pass;
  rep["failures"] = er.failures;
  emit(opt, rep.dump(2));
  return er.pass ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact desk-scale analysis of piecewise-affine operators and "
               "piecewise-quadratic functions"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", opt.out, "output file (default stdout)");
    sub->add_option("--window-radius", opt.window_radius,
                    "initial window radius (rational)");
    sub->add_option("--max-refine", opt.max_refine,
                    "number of dyadic window refinements");
  };

  CLI::App* an_op = app.add_subcommand(
      "analyze-operator", "evaluate the four-way monotonicity characterization");
  an_op->add_option("--input", opt.input, "operator JSON file")->required();
  an_op->add_option("--point", opt.point, "graph point x,y")->required();
  an_op->add_option("--kappa", opt.kappa, "modulus (rational)");
  an_op->add_flag("--signed", opt.signed_mode,
                  "signed-modulus mode (kappa may be zero or negative)");
  add_common(an_op);

  CLI::App* an_fn = app.add_subcommand(
      "analyze-function", "subdifferential and variational convexity analysis");
  an_fn->add_option("--input", opt.input, "function JSON file")->required();
  an_fn->add_option("--point", opt.point, "base point x")->required();
  an_fn->add_option("--subgrad", opt.subgrad, "subgradient y");
  an_fn->add_option("--kappa", opt.kappa, "modulus (rational)");
  add_common(an_fn);

  CLI::App* corpus = app.add_subcommand("corpus", "run the built-in corpus");
  add_common(corpus);

  CLI::App* fuzz =
      app.add_subcommand("fuzz", "seeded equivalence fuzzing of operators");
  fuzz->add_option("--seed", opt.seed, "random seed");
  fuzz->add_option("--count", opt.count, "number of generated operators");
  add_common(fuzz);

  CLI11_PARSE(app, argc, argv);

  try {
    if (an_op->parsed()) return cmd_analyze_operator(opt);
    if (an_fn->parsed()) return cmd_analyze_function(opt);
    if (corpus->parsed()) return cmd_corpus(opt);
    return cmd_fuzz(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kViolation;
  }
}
