#include <symcone/cli.hpp>
#include <symcone/errors.hpp>
#include <symcone/json_io.hpp>
#include <symcone/symgroup.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace symcone {

namespace {

struct Options {
  int d = 1;
  int r = 1;
  std::string beta_cap = "1";
  int x_cap = 0;
  int t_cap = 0;
  std::string convention = "nonneg";
  std::string rc = "printed";
  bool exp_factor = false;
  bool probe = false;
  bool csv = false;
  bool rows = false;
  int crosscheck = 0;
  std::uint64_t seed = 1;
  std::string sector;
  std::string classes;
  std::string backend = "brute";
  int max_k = 8;
  int max_sigma = 4;
  int ratio_d = 6;
  int identity_beta_cap = 2;
  int wrc_d = 3;
  std::string tree_action;
  std::string in_file;
  std::vector<int> pair;
  std::string out_path;
};

void emit(std::ostream &out, const Json &j) { out << j.dump() << '\n'; }

int cmd_sectors(const Options &o, std::ostream &out) {
  for (const auto &s : enumerate_sectors(o.d, o.r)) {
    Json j = to_json(s);
    j["euler_class"] = sector_euler_class(s).to_string();
    emit(out, j);
  }
  return 0;
}

int cmd_edges(const Options &o, std::ostream &out) {
  BigRational cap = rational_from_json(Json(o.beta_cap));
  std::vector<FixedSector> sectors;
  if (!o.sector.empty())
    sectors.push_back(sector_from_json(Json::parse(o.sector)));
  else
    sectors = enumerate_sectors(o.d, o.r);
  for (const auto &s : sectors)
    for (const auto &e : enumerate_edges(s, cap))
      emit(out, to_json(e));
  return 0;
}

IOptions ioptions(const Options &o) {
  IOptions io;
  io.convention =
      o.convention == "pos" ? LabelConvention::Pos : LabelConvention::NonNeg;
  io.include_exp_factor = o.exp_factor;
  return io;
}

SeriesCaps caps(const Options &o) {
  BigRational b = rational_from_json(Json(o.beta_cap));
  if (b.get_den() != 1 || b < 0)
    throw Invalid("--beta-cap must be a nonnegative integer here");
  return {static_cast<int>(b.get_num().get_si()), o.x_cap, o.t_cap};
}

int cmd_ifun(const Options &o, std::ostream &out) {
  auto all = compute_all_series(o.d, o.r, caps(o), ioptions(o));
  for (const auto &[s, series] : all)
    for (const auto &[idx, f] : series.coeffs)
      emit(out, Json{{"sector", to_json(s)},
                     {"index", to_json(idx)},
                     {"coefficient", to_json(f)}});
  return 0;
}

int cmd_verify(const Options &o, std::ostream &out) {
  VerifyConfig cfg;
  cfg.d = o.d;
  cfg.r = o.r;
  cfg.caps = caps(o);
  cfg.options = ioptions(o);
  cfg.normalization = o.rc == "rsigma" ? RcNormalization::RSigmaScaled
                                       : RcNormalization::AsPrinted;
  cfg.probe = o.probe;
  cfg.crosscheck_points = o.crosscheck;
  cfg.seed = o.seed;
  auto res = run_verification(cfg);
  ProbeSummary summary;
  if (o.probe)
    summary = summarize_probes(res.recursion);
  std::size_t fails_I = 0, fails_II = 0;
  for (const auto &p : res.poles)
    fails_I += !p.pass;
  for (const auto &r : res.recursion)
    fails_II += !r.pass;
  bool pass = res.pass_I && res.pass_II && res.pass_crosscheck;
  if (o.csv) {
    out << "check,units,failures,verdict\n";
    out << "condition_I," << res.poles.size() << ',' << fails_I << ','
        << (res.pass_I ? "PASS" : "FAIL") << '\n';
    out << "condition_II," << res.recursion.size() << ',' << fails_II << ','
        << (res.pass_II ? "PASS" : "FAIL") << '\n';
    if (o.crosscheck > 0)
      out << "crosscheck," << res.crosscheck.size() << ','
          << std::count(res.crosscheck.begin(), res.crosscheck.end(), false)
          << ',' << (res.pass_crosscheck ? "PASS" : "FAIL") << '\n';
    return pass ? 0 : 1;
  }
  for (const auto &p : res.poles)
    emit(out, to_json(p));
  for (std::size_t i = 0; i < res.recursion.size(); ++i) {
    Json j = to_json(res.recursion[i], o.rows);
    if (o.crosscheck > 0)
      j["crosscheck"] = res.crosscheck[i] ? "PASS" : "FAIL";
    emit(out, j);
  }
  Json s{{"kind", "summary"},
         {"d", o.d},
         {"r", o.r},
         {"rc", to_string(cfg.normalization)},
         {"convention", o.convention},
         {"condition_I", res.pass_I ? "PASS" : "FAIL"},
         {"condition_II", res.pass_II ? "PASS" : "FAIL"},
         {"condition_II_failures", fails_II}};
  if (o.crosscheck > 0)
    s["crosscheck"] = res.pass_crosscheck ? "PASS" : "FAIL";
  if (o.probe) {
    s["probe_uniform"] = summary.uniform();
    s["probe_r_sigma_powers"] = Json(std::vector<int>(
        summary.r_sigma_powers.begin(), summary.r_sigma_powers.end()));
  }
  s["verdict"] = pass ? "PASS" : "FAIL";
  emit(out, s);
  return pass ? 0 : 1;
}

int cmd_identities(const Options &o, std::ostream &out) {
  bool all = true;
  std::vector<Json> rows;

  auto sweep = sweep_signsum(o.max_sigma);
  rows.push_back(Json{{"kind", "signsum"},
                      {"max_parts", o.max_sigma},
                      {"cases", sweep.cases},
                      {"failures", sweep.failures},
                      {"verdict", sweep.pass() ? "PASS" : "FAIL"}});
  all = all && sweep.pass();

  for (int k = 1; k <= o.max_k; ++k) {
    bool ok = check_psi_binomial(k) && check_psi_binomial_cleared(k);
    rows.push_back(Json{{"kind", "psi_binomial"},
                        {"k", k},
                        {"verdict", ok ? "PASS" : "FAIL"}});
    all = all && ok;
  }

  long ratio_cases = 0, ratio_fail = 0;
  for (int d = 1; d <= o.ratio_d; ++d)
    for (int r = 0; r <= 1; ++r)
      for (const auto &s : enumerate_sectors(d, r))
        for (const auto &e :
             enumerate_edges(s, BigRational(o.identity_beta_cap))) {
          ++ratio_cases;
          ratio_fail += !check_ratio_identity(e).pass;
        }
  rows.push_back(Json{{"kind", "ratio"},
                      {"max_d", o.ratio_d},
                      {"cases", ratio_cases},
                      {"failures", ratio_fail},
                      {"verdict", ratio_fail == 0 ? "PASS" : "FAIL"}});
  all = all && ratio_fail == 0;

  long wrc_cases = 0, wrc_fail = 0;
  for (int d = 1; d <= o.wrc_d; ++d)
    for (int r = 0; r <= 2; ++r)
      for (const auto &s : enumerate_sectors(d, r))
        for (const auto &e :
             enumerate_edges(s, BigRational(o.identity_beta_cap)))
          for (int a = 1; a <= e.mov_count(); ++a) {
            ++wrc_cases;
            wrc_fail += !check_w_times_rc(e, a);
          }
  rows.push_back(Json{{"kind", "w_times_rc"},
                      {"max_d", o.wrc_d},
                      {"cases", wrc_cases},
                      {"failures", wrc_fail},
                      {"verdict", wrc_fail == 0 ? "PASS" : "FAIL"}});
  all = all && wrc_fail == 0;

  if (o.csv) {
    out << "kind,detail,verdict\n";
    for (const auto &r : rows)
      out << r["kind"].get<std::string>() << ','
          << (r.contains("k") ? "k=" + std::to_string(r["k"].get<int>())
                              : "cases=" + std::to_string(r["cases"].get<long>()))
          << ',' << r["verdict"].get<std::string>() << '\n';
  } else {
    for (const auto &r : rows)
      emit(out, r);
    emit(out, Json{{"kind", "summary"}, {"verdict", all ? "PASS" : "FAIL"}});
  }
  return all ? 0 : 1;
}

int cmd_hurwitz(const Options &o, std::ostream &out) {
  ClassList list;
  list.degree = o.d;
  Json j = Json::parse(o.classes);
  if (!j.is_array())
    throw Invalid("--classes must be a JSON array of partitions");
  for (const auto &c : j)
    list.classes.push_back(partition_from_json(c));
  HurwitzBackend b = o.backend == "character" ? HurwitzBackend::Character
                     : o.backend == "auto"    ? HurwitzBackend::Auto
                                              : HurwitzBackend::BruteForce;
  auto res = hurwitz(list, b);
  emit(out, Json{{"count", res.count.get_str()}, {"backend", res.backend}});
  return 0;
}

DecoratedTree read_tree(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Invalid("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw Invalid(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return tree_from_json(j);
}

int cmd_trees(const Options &o, std::ostream &out) {
  DecoratedTree t = read_tree(o.in_file);
  auto rep = validate(t);
  if (o.tree_action == "validate") {
    emit(out, Json{{"verdict", rep.pass ? "PASS" : "FAIL"},
                   {"failures", rep.failures},
                   {"beta", to_json(rep.pass ? t.total_beta() : BigRational(0))},
                   {"combinable_pairs", rep.pass ? Json(combinable_pairs(t))
                                                 : Json::array()},
                   {"canonical", rep.pass ? canonical_form(t) : ""}});
    return rep.pass ? 0 : 1;
  }
  if (!rep.pass)
    throw Invalid(rep.failures.front());
  if (o.tree_action == "combine") {
    if (o.pair.size() != 2)
      throw Invalid("combine needs --pair E1 E2");
    auto res = combine(t, o.pair[0], o.pair[1]);
    Json phi = Json::object();
    for (const auto &[a, b] : res.phi)
      phi[std::to_string(a)] = b;
    emit(out, Json{{"tree", to_json(res.tree)}, {"phi", phi}});
    return 0;
  }
  DecoratedTree m = minimal_form(t);
  emit(out, Json{{"tree", to_json(m)}, {"canonical", canonical_form(m)}});
  return 0;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  Options o;
  CLI::App app{"Fixed-point combinatorics, I-function restrictions and cone "
               "checks for Sym^d P^r"};
  app.require_subcommand(1);
  app.add_option("--out", o.out_path, "write records to FILE instead of stdout");

  auto add_dr = [&](CLI::App *c) {
    c->add_option("--d", o.d, "number of points")->check(CLI::PositiveNumber);
    c->add_option("--r", o.r, "projective dimension")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_series = [&](CLI::App *c) {
    c->add_option("--beta-cap", o.beta_cap, "Novikov degree cap");
    c->add_option("--x-cap", o.x_cap, "x-degree cap")
        ->check(CLI::NonNegativeNumber);
    c->add_option("--t-cap", o.t_cap, "t-degree cap")
        ->check(CLI::NonNegativeNumber);
    c->add_option("--convention", o.convention, "label convention")
        ->check(CLI::IsMember({"nonneg", "pos"}));
    c->add_flag("--exp", o.exp_factor, "include the exponential factor");
  };

  auto *sectors = app.add_subcommand("sectors", "list torus-fixed sectors");
  add_dr(sectors);
  auto *edges = app.add_subcommand("edges", "list one-edge trees");
  add_dr(edges);
  edges->add_option("--sector", o.sector, "sector as JSON");
  edges->add_option("--beta-cap", o.beta_cap, "degree cap (rational)");
  auto *ifun = app.add_subcommand("ifun", "I-function restrictions");
  add_dr(ifun);
  add_series(ifun);
  auto *verify = app.add_subcommand("verify", "check pole and recursion conditions");
  add_dr(verify);
  add_series(verify);
  verify->add_option("--rc", o.rc, "recursion coefficient normalization")
      ->check(CLI::IsMember({"printed", "rsigma"}));
  verify->add_flag("--probe", o.probe, "fit r_sigma powers on failures");
  verify->add_option("--crosscheck", o.crosscheck,
                     "random specializations per passing report")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_flag("--rows", o.rows, "include per-index rows");
  verify->add_flag("--csv", o.csv, "CSV summary");
  auto *ident = app.add_subcommand("identities", "closed-form identity checks");
  ident->add_option("--max-k", o.max_k, "largest k for the psi identity")
      ->check(CLI::PositiveNumber);
  ident->add_option("--max-sigma", o.max_sigma, "largest |sigma_T|")
      ->check(CLI::Range(1, 8));
  ident->add_option("--ratio-d", o.ratio_d, "largest d for the ratio identity")
      ->check(CLI::Range(1, 7));
  ident->add_option("--wrc-d", o.wrc_d, "largest d for RC*W")
      ->check(CLI::Range(1, 5));
  ident->add_option("--beta-cap", o.identity_beta_cap, "edge degree cap")
      ->check(CLI::PositiveNumber);
  ident->add_flag("--csv", o.csv, "CSV summary");
  auto *hur = app.add_subcommand("hurwitz", "count factorizations");
  hur->add_option("--d", o.d, "degree")->required()->check(CLI::PositiveNumber);
  hur->add_option("--classes", o.classes, "JSON list of partitions")->required();
  hur->add_option("--backend", o.backend, "counting backend")
      ->check(CLI::IsMember({"brute", "character", "auto"}));
  auto *trees = app.add_subcommand("trees", "decorated tree operations");
  trees->add_option("action", o.tree_action, "validate|combine|minimal")
      ->required()
      ->check(CLI::IsMember({"validate", "combine", "minimal"}));
  trees->add_option("--in", o.in_file, "tree JSON file")->required();
  trees->add_option("--pair", o.pair, "two edge ids")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "error: cannot write " << o.out_path << '\n';
      return 2;
    }
  }
  std::ostream &sink = o.out_path.empty() ? out : file;

  try {
    if (*sectors)
      return cmd_sectors(o, sink);
    if (*edges)
      return cmd_edges(o, sink);
    if (*ifun)
      return cmd_ifun(o, sink);
    if (*verify)
      return cmd_verify(o, sink);
    if (*ident)
      return cmd_identities(o, sink);
    if (*hur)
      return cmd_hurwitz(o, sink);
    if (*trees)
      return cmd_trees(o, sink);
  } catch (const nlohmann::json::exception &e) {
    err << "error: bad JSON argument: " << e.what() << '\n';
    return 2;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

} // namespace symcone
