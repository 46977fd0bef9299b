#include "delpezzo/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "delpezzo/cubic.hpp"
#include "delpezzo/dp4.hpp"
#include "delpezzo/errors.hpp"
#include "delpezzo/obstructions.hpp"
#include "delpezzo/quadform.hpp"

namespace delpezzo::cli {

namespace {

const std::set<std::string> kKinds = {"dp4-pencil", "diagonal-cubic", "quad-pair", "pic-rank-one"};

long long get_int(const Json& params, const std::string& key) {
  if (!params.contains(key)) throw InputError("missing parameter '" + key + "'");
  const auto& v = params.at(key);
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_string()) {
    const Rat r = Rat::parse(v.get<std::string>());
    if (!r.is_integer() || !r.num().fits_slong_p()) {
      throw InputError("parameter '" + key + "' must be an integer");
    }
    return r.num().get_si();
  }
  throw InputError("parameter '" + key + "' must be an integer");
}

long long get_int(const Json& params, const std::string& key, long long fallback) {
  return params.contains(key) ? get_int(params, key) : fallback;
}

std::uint32_t get_prime(const Json& params, const std::string& key) {
  const long long p = get_int(params, key);
  if (p < 2 || p > 0xFFFFFFFFLL || !is_prime(static_cast<std::uint64_t>(p))) {
    throw InputError("parameter '" + key + "' must be a prime");
  }
  return static_cast<std::uint32_t>(p);
}

unsigned get_positive(const Json& params, const std::string& key, long long fallback) {
  const long long v = get_int(params, key, fallback);
  if (v < 1 || v > 64) throw InputError("parameter '" + key + "' must lie in 1..64");
  return static_cast<unsigned>(v);
}

void require_kind(const SurfaceInput& in, const std::string& kind) {
  if (in.kind != kind) throw InputError("this command expects kind '" + kind + "', got '" + in.kind + "'");
}

std::uint64_t resolve_budget(const Options& opt) {
  if (opt.budget != 0) return opt.budget;
  if (const char* env = std::getenv("DELPEZZO_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("DELPEZZO_BUDGET is not a number");
    }
  }
  return kDefaultSearchBudget;
}

FieldSpec field_from(const Json& params) {
  return {get_prime(params, "p"), get_positive(params, "f", 1)};
}

QuadricPencil pencil_from(const SurfaceInput& in) {
  require_kind(in, "dp4-pencil");
  std::array<Rat, 5> a;
  std::array<Rat, 5> b;
  for (std::size_t i = 0; i < 5; ++i) {
    a[i] = in.coefficients[i];
    b[i] = in.coefficients[5 + i];
  }
  return QuadricPencil(a, b);
}

DiagCubic cubic_from(const SurfaceInput& in) {
  require_kind(in, "diagonal-cubic");
  if (in.coefficients.size() != 4) throw InputError("diagonal-cubic needs 4 coefficients");
  return DiagCubic({in.coefficients[0], in.coefficients[1], in.coefficients[2], in.coefficients[3]});
}

QuadPair quad_pair_from(const SurfaceInput& in) {
  require_kind(in, "quad-pair");
  if (in.coefficients.empty()) throw InputError("quad-pair needs 2r coefficients");
  const std::size_t r = in.coefficients.size() / 2;
  return {DiagQF({in.coefficients.begin(), in.coefficients.begin() + static_cast<long>(r)}),
          DiagQF({in.coefficients.begin() + static_cast<long>(r), in.coefficients.end()})};
}

PicRankOneSurface surface_from(const SurfaceInput& in) {
  require_kind(in, "pic-rank-one");
  if (in.coefficients.size() != 2) throw InputError("pic-rank-one needs gen_sq and k_mult");
  auto as_int = [](const Rat& x) {
    if (!x.is_integer() || !x.num().fits_slong_p()) {
      throw InputError("pic-rank-one coefficients must be integers");
    }
    return static_cast<long long>(x.num().get_si());
  };
  PicRankOneSurface s{as_int(in.coefficients[0]), as_int(in.coefficients[1])};
  validate(s);
  return s;
}

LocalSpec local_from(const SurfaceInput& in, const Options& opt) {
  LocalSpec spec{get_prime(in.params, "p"), get_int(in.params, "a"),
                 opt.fmax ? *opt.fmax : get_positive(in.params, "fmax", 10)};
  validate(spec);
  return spec;
}

std::vector<SignCharacter> characters_for(const LineSystem& system, const Json& params) {
  if (!params.contains("subgroup")) return character_group(system.generators);
  std::vector<SignCharacter> gens;
  for (const auto& g : params.at("subgroup")) {
    std::set<Integer> flipped;
    for (const auto& x : g) flipped.insert(Integer(static_cast<long>(x.get<long long>())));
    gens.emplace_back(std::move(flipped));
  }
  return generated_subgroup(gens);
}

Json generators_json(const std::vector<Integer>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(g.get_si());
  return out;
}

std::size_t gram_rank(const LineSystem& s) {
  Matrix<Rat> g(s.gram.size());
  for (std::size_t i = 0; i < s.gram.size(); ++i) {
    for (int x : s.gram[i]) g[i].push_back(Rat(x));
  }
  return matrix_rank(g);
}

bool rows_meet_five(const LineSystem& s) {
  for (const auto& row : s.gram) {
    int ones = 0;
    for (int x : row) ones += x == 1 ? 1 : 0;
    if (ones != 5) return false;
  }
  return true;
}

Outcome run_dp4(const std::string& action, const SurfaceInput& in) {
  const auto pencil = pencil_from(in);
  Outcome out;
  out.report.verdicts["smooth"] = is_smooth(pencil);
  if (!is_smooth(pencil)) throw InputError("pencil is not smooth: some d_ij vanishes");
  const auto system = sixteen_lines(pencil);
  auto& v = out.report.verdicts;
  auto& w = out.report.witnesses;

  if (action == "lines" || action == "report") {
    v["lines"] = system.lines.size();
    v["gram_rank"] = gram_rank(system);
    v["each_line_meets_five"] = rows_meet_five(system);
    w["line_system"] = to_json(system);
    w["generators"] = generators_json(system.generators);
    if (v["gram_rank"] != 6 || !v["each_line_meets_five"].get<bool>()) {
      out.exit_code = kVerificationFailed;
    }
  }
  if (action == "galois" || action == "report") {
    const auto chars = characters_for(system, in.params);
    const auto orbits = galois_orbits(system, chars);
    v["group_order"] = chars.size();
    v["orbit"] = orbits.size();
    Json sizes = Json::array();
    for (const auto& o : orbits) sizes.push_back(o.size());
    v["orbit_sizes"] = sizes;
    w["orbits"] = orbits;
  }
  if (action == "picard" || action == "report") {
    const auto chars = characters_for(system, in.params);
    v["group_order"] = chars.size();
    v["invariant_rank"] = invariant_picard_rank(system, chars);
    v["geometric_rank"] = invariant_picard_rank(system, {SignCharacter()});
  }
  if (action == "report") {
    const auto anti = verify_anticanonical(system);
    v["anticanonical"] = anti.ok;
    Json rep = Json::array();
    for (const auto& x : anti.representative) rep.push_back(to_json(x));
    w["anticanonical_representative"] = rep;
    if (!anti.ok) out.exit_code = kVerificationFailed;
  }
  return out;
}

Outcome run_cubic(const std::string& action, const SurfaceInput& in, const Options& opt,
                  std::uint64_t budget) {
  Outcome out;
  auto& v = out.report.verdicts;
  if (action == "segre") {
    v["segre"] = segre_criterion(cubic_from(in));
  } else if (action == "local") {
    const auto spec = local_from(in, opt);
    const auto res = qp_insoluble(spec, budget);
    v["criterion"] = res.criterion_holds;
    v["oracle"] = res.oracle_agrees;
    v["primitive_solutions_mod_p3"] = res.primitive_solutions_mod_p3;
    if (!res.oracle_agrees) out.exit_code = kVerificationFailed;
  } else if (action == "extensions") {
    const auto spec = local_from(in, opt);
    const auto res = prime_to_3_insoluble(spec);
    v["prime_to_3_insoluble"] = res.holds;
    Json degrees = Json::array();
    for (const auto& d : res.degrees) degrees.push_back({{"f", d.f}, {"a_is_cube", d.a_is_cube}});
    v["degrees"] = degrees;
  } else if (action == "ffpoint") {
    const auto field = field_from(in.params);
    const auto point = ff_point_exists(cubic_from(in), field, budget);
    v["point_exists"] = point.has_value();
    // Four variables, degree 3: a point must exist.
    if (point) {
      out.report.witnesses["point"] = to_json(*point);
    } else {
      out.exit_code = kVerificationFailed;
    }
  }
  return out;
}

Outcome run_quadpair(const std::string& action, const SurfaceInput& in, const Options& opt,
                     std::uint64_t budget) {
  Outcome out;
  auto& v = out.report.verdicts;
  auto& w = out.report.witnesses;
  const FieldSpec field = field_from(in.params);
  if (action == "search") {
    const auto pair = quad_pair_from(in);
    const auto hit = find_common_isotropic(pair.first, pair.second, field, budget);
    v["common_isotropic"] = hit.has_value();
    if (hit) w["vector"] = to_json(*hit);
    return out;
  }
  const unsigned kmax = opt.kmax ? *opt.kmax : get_positive(in.params, "kmax", 3);
  if (!in.coefficients.empty()) {
    const auto pair = quad_pair_from(in);
    const auto report = amer_brumer_check(pair.first, pair.second, field, kmax, budget);
    Json levels = Json::array();
    for (const auto& level : report.levels) {
      levels.push_back({{"k", level.k}, {"common_isotropic", level.has_common_zero}});
      if (level.witness) w["k" + std::to_string(level.k)] = to_json(*level.witness);
    }
    v["levels"] = levels;
    v["descent_consistent"] = report.descent_consistent;
    if (!report.descent_consistent) out.exit_code = kVerificationFailed;
  }
  if (in.params.contains("trials")) {
    const long long trials = get_int(in.params, "trials");
    if (trials < 0) throw InputError("trials must be non-negative");
    const auto res = run_amer_brumer_trials(field, static_cast<std::size_t>(trials), kmax,
                                            opt.seed, budget);
    v["trials"] = res.trials;
    v["trials_inconsistent"] = res.inconsistent;
    v["trials_with_base_point"] = res.base_zero;
    v["trials_vacuous"] = res.vacuous;
    if (res.inconsistent > 0) out.exit_code = kVerificationFailed;
  }
  return out;
}

std::vector<DiagonalEquation> equations_from(const SurfaceInput& in) {
  if (in.kind == "diagonal-cubic") {
    const auto c = cubic_from(in);
    return {{3, {c.coeffs().begin(), c.coeffs().end()}}};
  }
  if (in.kind == "dp4-pencil") {
    const auto p = pencil_from(in);
    return {{2, {p.a().begin(), p.a().end()}}, {2, {p.b().begin(), p.b().end()}}};
  }
  if (in.kind == "quad-pair") {
    const auto q = quad_pair_from(in);
    return {{2, q.first.coeffs()}, {2, q.second.coeffs()}};
  }
  throw InputError("index needs a diagonal-cubic, dp4-pencil or quad-pair input");
}

Outcome run_obstruct(const std::string& action, const SurfaceInput& in, const Options& opt,
                     std::uint64_t budget) {
  Outcome out;
  auto& v = out.report.verdicts;
  const Json& p = in.params;
  if (action == "genus") {
    const auto s = surface_from(in);
    const long long pa = adjunction_genus(s, get_int(p, "n"));
    const auto gap = genus_gap_parity(pa, get_int(p, "p_g", 0));
    v["arithmetic_genus"] = pa;
    v["delta"] = gap.delta;
    v["delta_odd"] = gap.odd;
  } else if (action == "parity") {
    const auto s = surface_from(in);
    const long long ell = get_int(p, "ell", 2);
    if (p.contains("n_max")) {
      const long long n_max = get_int(p, "n_max");
      if (n_max < 0) throw InputError("n_max must be non-negative");
      bool all_fire = true;
      for (long long n = -n_max; n <= n_max; ++n) {
        all_fire = all_fire && parity_obstruction(s, n, ell).fires;
      }
      v["n_max"] = n_max;
      v["all_residues_zero"] = all_fire;
    } else {
      const auto res = parity_obstruction(s, get_int(p, "n"), ell);
      v["half_intersection"] = res.half_intersection;
      v["residue"] = res.residue;
      v["fires"] = res.fires;
    }
  } else if (action == "chi") {
    const auto res = euler_char_congruence(get_int(p, "chi_C"), get_int(p, "r"), get_int(p, "ell", 2));
    v["residue"] = res.residue;
    v["unit"] = res.unit;
  } else if (action == "rost") {
    DegreeFormulaInstance inst{get_int(p, "p", 3),     get_int(p, "n_X", 3),
                               get_int(p, "n_Y", 3),   get_int(p, "eta_Y", 1),
                               get_int(p, "deg_q"),    get_int(p, "deg_r", 1)};
    const auto res = rost_audit(inst);
    v["eta_Ypp"] = res.eta_ypp;
    v["deg_r_constraint"] = res.deg_r_constraint;
    v["deg_r_consistent"] = res.deg_r_consistent;
    v["contradiction_with_brauer_injectivity"] = res.contradiction_with_brauer_injectivity;
  } else if (action == "index") {
    const auto eqs = equations_from(in);
    const unsigned kmax = opt.kmax ? *opt.kmax : get_positive(p, "kmax", 1);
    const auto res = index_ff(eqs, field_from(p), kmax, budget);
    v["index"] = res.index;
    v["degrees_with_point"] = res.degrees_with_point;
    unsigned degree_sum = 0;
    for (const auto& e : eqs) degree_sum += e.degree;
    // Chevalley-Warning: total degree below the number of variables forces a point.
    const bool forced = degree_sum < eqs.front().coeffs.size();
    if (forced && res.index != 1) out.exit_code = kVerificationFailed;
  }
  return out;
}

const std::map<std::string, std::set<std::string>> kActions = {
    {"dp4", {"lines", "galois", "picard", "report"}},
    {"cubic", {"segre", "local", "extensions", "ffpoint"}},
    {"quadpair", {"search", "descent"}},
    {"obstruct", {"genus", "parity", "chi", "rost", "index"}},
};

}  // namespace

SurfaceInput SurfaceInput::from_json(const Json& j) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  SurfaceInput in;
  in.kind = j.value("kind", std::string());
  if (!in.kind.empty() && kKinds.count(in.kind) == 0) throw InputError("unknown kind '" + in.kind + "'");
  if (j.contains("coefficients")) {
    if (!j.at("coefficients").is_array()) throw InputError("coefficients must be a list");
    for (const auto& c : j.at("coefficients")) in.coefficients.push_back(rat_from_json(c));
  }
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw InputError("params must be an object");
    in.params = j.at("params");
  }
  const std::size_t n = in.coefficients.size();
  if (in.kind == "dp4-pencil" && n != 10) throw InputError("dp4-pencil needs 10 coefficients");
  if (in.kind == "diagonal-cubic" && n != 4 && n != 0) {
    throw InputError("diagonal-cubic needs 4 coefficients");
  }
  if (in.kind == "quad-pair" && n % 2 != 0) throw InputError("quad-pair needs 2r coefficients");
  if (in.kind == "pic-rank-one" && n != 2 && n != 0) {
    throw InputError("pic-rank-one needs gen_sq and k_mult");
  }
  return in;
}

Outcome dispatch(const std::string& group, const std::string& action, const SurfaceInput& input,
                 const Options& options) {
  const auto it = kActions.find(group);
  if (it == kActions.end() || it->second.count(action) == 0) {
    throw InputError("unknown command '" + group + " " + action + "'");
  }
  const std::uint64_t budget = resolve_budget(options);
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  if (group == "dp4") {
    out = run_dp4(action, input);
  } else if (group == "cubic") {
    out = run_cubic(action, input, options, budget);
  } else if (group == "quadpair") {
    out = run_quadpair(action, input, options, budget);
  } else {
    out = run_obstruct(action, input, options, budget);
  }
  out.report.command = group + " " + action;
  out.report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of del Pezzo point-free constructions"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  unsigned kmax = 0;
  unsigned fmax = 0;
  app.add_flag("--json", opt.json, "Machine-readable JSON report");
  app.add_option("--budget", opt.budget, "Candidate budget for exhaustive searches");
  app.add_option("--seed", opt.seed, "Seed for randomized harnesses");
  auto* kmax_opt = app.add_option("--kmax", kmax, "Largest extension degree examined")->check(CLI::Range(1U, 64U));
  auto* fmax_opt = app.add_option("--fmax", fmax, "Largest residue degree examined")->check(CLI::Range(1U, 64U));

  std::string action;
  std::string file;
  for (const auto& [group, actions] : kActions) {
    auto* sub = app.add_subcommand(group);
    sub->add_option("action", action)->required()->check(CLI::IsMember(actions));
    sub->add_option("file", file, "Input file")->required();
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (kmax_opt->count() > 0) opt.kmax = kmax;
  if (fmax_opt->count() > 0) opt.fmax = fmax;
  const std::string group = app.get_subcommands().front()->get_name();

  try {
    std::ifstream stream(file);
    if (!stream) throw InputError("cannot open '" + file + "'");
    Json j;
    try {
      j = Json::parse(stream);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("input is not valid JSON: ") + e.what());
    }
    const auto outcome = dispatch(group, action, SurfaceInput::from_json(j), opt);
    out << (opt.json ? outcome.report.machine() : outcome.report.human());
    if (outcome.exit_code == kVerificationFailed) err << "verification failed\n";
    return outcome.exit_code;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace delpezzo::cli
