#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "modinv/dickson.hpp"
#include "modinv/json_io.hpp"
#include "modinv/localcoh.hpp"
#include "modinv/steenrod.hpp"

using namespace modinv;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 all checks pass, 1 a violation was found, 2 inconclusive.
// Usage and malformed-input errors exit with 65.
constexpr int kDataErr = 65;

const char* class_status_name(ClassOpStatus s) {
  switch (s) {
    case ClassOpStatus::ok: return "ok";
    case ClassOpStatus::outside_window: return "outside_window";
    case ClassOpStatus::not_stabilized: return "not_stabilized";
    case ClassOpStatus::not_representable: return "not_representable";
  }
  return "unknown";
}

// Report envelope shared by every subcommand. Reruns with the same options
// are byte-identical except for the timing field.
class Report {
public:
  explicit Report(std::string command)
      : start_(std::chrono::steady_clock::now()) {
    j_["schema_version"] = kSchemaVersion;
    j_["tool"] = Json{{"name", "modinv"}, {"version", kVersion}};
    j_["command"] = std::move(command);
    j_["options"] = Json::object();
    j_["checks"] = Json::array();
  }

  Json& options() { return j_["options"]; }
  Json& inputs() { return j_["inputs"]; }
  Json& result() { return j_["result"]; }

  void check(const std::string& name, const std::string& status,
             Json detail = Json::object()) {
    detail["name"] = name;
    detail["status"] = status;
    j_["checks"].push_back(std::move(detail));
  }

  int finish(const std::string& output_path) {
    std::string status = "pass";
    for (const auto& c : j_["checks"]) {
      if (c["status"] == "fail") {
        status = "fail";
        break;
      }
      if (c["status"] == "inconclusive") status = "inconclusive";
    }
    j_["status"] = status;
    j_["timing_ms"] = static_cast<long long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_)
            .count());
    if (output_path.empty()) {
      std::cout << j_.dump(2) << "\n";
    } else {
      std::ofstream out(output_path);
      if (!out) throw std::invalid_argument(output_path + ": cannot write file");
      out << j_.dump(2) << "\n";
    }
    return status == "pass" ? 0 : status == "fail" ? 1 : 2;
  }

private:
  Json j_;
  std::chrono::steady_clock::time_point start_;
};

std::pair<int, int> parse_window(const std::string& w) {
  auto pos = w.find("..");
  std::size_t used_lo = 0, used_hi = 0;
  int lo = 0, hi = 0;
  if (pos != std::string::npos) {
    try {
      lo = std::stoi(w.substr(0, pos), &used_lo);
      hi = std::stoi(w.substr(pos + 2), &used_hi);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
  }
  if (pos == std::string::npos || used_lo != pos ||
      used_hi != w.size() - pos - 2)
    throw std::invalid_argument("--window: expected a..b, e.g. -5..-2");
  if (lo > hi) throw std::invalid_argument("--window: lower end exceeds upper");
  return {lo, hi};
}

// Rebuilds f over a structurally compatible ring (same field, same nvars).
Polynomial rebind(const Polynomial& f, const PolyRingPtr& ring) {
  std::vector<Term> terms = f.terms();
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> parse_generator_file(const std::string& path) {
  Json j = load_json_file(path);
  if (!j.is_object() || !j.contains("generators") ||
      !j["generators"].is_array() || j["generators"].empty())
    throw std::invalid_argument(
        path + ": expected an object {\"generators\": [polynomial, ...]}");
  std::vector<Polynomial> out;
  const Json& gens = j["generators"];
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.push_back(polynomial_from_json(
        gens[i], path + ".generators[" + std::to_string(i) + "]"));
  for (const Polynomial& f : out)
    if (!f.ring()->same_ring(*out[0].ring()))
      throw std::invalid_argument(path + ": generators live in different rings");
  return out;
}

Json generators_to_json(const std::vector<Polynomial>& gens) {
  Json out = Json::array();
  for (const Polynomial& g : gens) out.push_back(polynomial_to_json(g));
  return out;
}

// Group selection shared by the invariants, localcoh, probe and depth
// subcommands: either an explicit file or a named preset over GF(p^s)^d.
struct GroupOpts {
  std::string file;
  std::string preset;
  int p = 0;
  int s = 1;
  int d = 0;
};

void add_group_flags(CLI::App* cmd, GroupOpts& g) {
  auto* file = cmd->add_option("--group", g.file, "group JSON file");
  auto* preset =
      cmd->add_option("--preset", g.preset,
                      "group preset: trivial, full-GL, cyclic-transvection")
          ->check(CLI::IsMember({"trivial", "full-GL", "cyclic-transvection"}));
  file->excludes(preset);
  preset->excludes(file);
  cmd->add_option("--p", g.p, "field characteristic (with --preset)");
  cmd->add_option("--s", g.s, "field extension degree (with --preset)")
      ->default_val(1);
  cmd->add_option("--d", g.d, "number of variables (with --preset)");
}

// Builds the group; when `ring` is fixed by an ideal file the group is
// rebound onto it and must match its field and dimension.
std::shared_ptr<const Group> resolve_group(const GroupOpts& g, PolyRingPtr ring,
                                           Json& echo) {
  std::shared_ptr<const Group> group;
  if (!g.file.empty()) {
    group = group_from_json(load_json_file(g.file), g.file);
    if (ring) {
      if (!group->ring()->field()->same_field(*ring->field()) ||
          group->dim() != ring->nvars())
        throw std::invalid_argument(
            g.file + ": group field or dimension does not match the ideal ring");
      std::vector<MatrixGF> mats;
      for (const GroupElement& e : group->generators())
        mats.push_back(e.matrix());
      group = std::make_shared<const Group>(Group::close(ring, std::move(mats)));
    }
  } else {
    if (g.preset.empty())
      throw std::invalid_argument("one of --group or --preset is required");
    FieldSpecPtr field;
    int d = 0;
    if (ring) {
      field = ring->field();
      d = ring->nvars();
    } else {
      if (g.p < 2 || g.d < 1)
        throw std::invalid_argument("--preset requires --p and --d");
      field = FieldSpec::create(static_cast<std::uint32_t>(g.p),
                                static_cast<std::uint32_t>(g.s));
      d = g.d;
      ring = PolyRing::create(field, d);
    }
    std::vector<MatrixGF> gens =
        g.preset == "trivial"  ? trivial_generators()
        : g.preset == "full-GL" ? full_gl_generators(field, d)
                                : cyclic_transvection_generators(field, d);
    group = std::make_shared<const Group>(Group::close(ring, std::move(gens)));
  }
  echo = group_to_json(*group);
  return group;
}

// Ideal selection: a generator file or a preset expanded over the group ring.
struct IdealOpts {
  std::string file;
  std::string preset;
};

void add_ideal_flags(CLI::App* cmd, IdealOpts& i) {
  auto* file = cmd->add_option("--ideal", i.file,
                               "ideal generator JSON file "
                               "({\"generators\": [polynomial, ...]})");
  auto* preset = cmd->add_option("--ideal-preset", i.preset,
                                 "ideal preset: variables, dickson")
                     ->check(CLI::IsMember({"variables", "dickson"}));
  file->excludes(preset);
  preset->excludes(file);
}

std::vector<Polynomial> expand_ideal_preset(const std::string& preset,
                                            const PolyRingPtr& ring) {
  if (preset == "variables") {
    std::vector<Polynomial> gens;
    for (int i = 0; i < ring->nvars(); ++i)
      gens.push_back(Polynomial::variable(ring, i));
    return gens;
  }
  DicksonAlgebra algebra = dickson_by_roots(ring->field(), ring->nvars());
  std::vector<Polynomial> gens;
  for (const Polynomial& g : algebra.generators) gens.push_back(rebind(g, ring));
  return gens;
}

// Shared option block and setup for the window-based subcommands.
struct WindowOpts {
  GroupOpts group;
  IdealOpts ideal;
  int index = 0;
  std::string window;
  int tmax = 0;
};

void add_window_flags(CLI::App* cmd, WindowOpts& w) {
  add_group_flags(cmd, w.group);
  add_ideal_flags(cmd, w.ideal);
  cmd->add_option("--i", w.index, "cohomological index")->required();
  cmd->add_option("--window", w.window, "internal degree range a..b")
      ->required();
  cmd->add_option("--tmax", w.tmax, "largest truncation exponent (>= 3)")
      ->required();
}

struct WindowSetup {
  std::shared_ptr<const Group> group;
  std::shared_ptr<KoszulEngine> engine;
  GradedCohomologyWindow window;
  int lo, hi;
};

WindowSetup build_window(const WindowOpts& opts, Report& report) {
  auto [lo, hi] = parse_window(opts.window);
  std::vector<Polynomial> gens;
  PolyRingPtr ring;
  if (!opts.ideal.file.empty()) {
    gens = parse_generator_file(opts.ideal.file);
    ring = gens[0].ring();
  } else if (opts.ideal.preset.empty()) {
    throw std::invalid_argument("one of --ideal or --ideal-preset is required");
  }
  Json group_echo;
  auto group = resolve_group(opts.group, ring, group_echo);
  if (gens.empty()) gens = expand_ideal_preset(opts.ideal.preset, group->ring());
  report.options()["i"] = opts.index;
  report.options()["window"] = Json{{"lo", lo}, {"hi", hi}};
  report.options()["tmax"] = opts.tmax;
  report.inputs()["group"] = std::move(group_echo);
  report.inputs()["ideal"] = Json{{"generators", generators_to_json(gens)}};
  auto engine =
      std::make_shared<KoszulEngine>(group, IdealSpec{std::move(gens)});
  GradedCohomologyWindow window =
      colimit_window(engine, opts.index, lo, hi, opts.tmax);
  return {std::move(group), std::move(engine), std::move(window), lo, hi};
}

Json window_to_json(const GradedCohomologyWindow& w, int lo, int hi) {
  Json degrees = Json::object();
  for (int n = lo; n <= hi; ++n) {
    const DegreeReport& r = w.report(n);
    degrees[std::to_string(n)] = Json{
        {"dim", r.dim}, {"stabilized", r.stabilized}, {"history", r.dim_history}};
  }
  return degrees;
}

void stabilization_check(Report& report, const GradedCohomologyWindow& w,
                         int lo, int hi) {
  std::vector<int> unstable;
  for (int n = lo; n <= hi; ++n)
    if (!w.stabilized(n)) unstable.push_back(n);
  if (unstable.empty()) {
    report.check("stabilization", "pass");
  } else {
    report.check("stabilization", "inconclusive",
                 Json{{"reason", "unstabilized degrees in window"},
                      {"degrees", unstable}});
  }
}

Json annihilator_to_json(const WindowAnnihilator& ann) {
  Json pieces = Json::object();
  for (int e = 0; e <= ann.degree_cap(); ++e) {
    const WindowAnnihilator::Piece& piece = ann.piece(e);
    Json skipped = Json::array();
    for (const SkippedConstraint& s : piece.skipped)
      skipped.push_back(Json{{"source_degree", s.source_degree},
                             {"factor_degree", s.factor_degree},
                             {"reason", class_status_name(s.reason)}});
    pieces[std::to_string(e)] =
        Json{{"invariant_dim", piece.space_dim},
             {"annihilator_dim", piece.coords.cols()},
             {"constraints", piece.constraints},
             {"basis", generators_to_json(piece.basis)},
             {"skipped", std::move(skipped)}};
  }
  return Json{{"degree_cap", ann.degree_cap()},
              {"trivial", ann.trivial()},
              {"window_all_zero", ann.window_all_zero()},
              {"pieces", std::move(pieces)}};
}

// ---------------------------------------------------------------- dickson --

int run_dickson(int p, int s, int d, bool check, const std::string& output) {
  Report report("dickson");
  report.options() = Json{{"p", p}, {"s", s}, {"d", d}, {"check", check}};
  auto field = FieldSpec::create(static_cast<std::uint32_t>(p),
                                 static_cast<std::uint32_t>(s));
  DicksonAlgebra roots = dickson_by_roots(field, d);
  std::vector<std::int64_t> degrees;
  for (int i = 0; i < d; ++i)
    degrees.push_back(dickson_degree(field->q(), d, i));
  report.result() = Json{{"ring", ring_to_json(*roots.ring)},
                         {"generators", generators_to_json(roots.generators)},
                         {"degrees", degrees}};
  if (check) {
    DicksonAlgebra moore = dickson_by_moore(field, d);
    bool same = true;
    for (int i = 0; i < d; ++i)
      if (roots.generators[i] != rebind(moore.generators[i], roots.ring))
        same = false;
    report.check("roots-vs-moore", same ? "pass" : "fail");
    bool deg_ok = true;
    for (int i = 0; i < d; ++i)
      if (roots.generators[i].total_degree() != degrees[i]) deg_ok = false;
    report.check("generator-degrees", deg_ok ? "pass" : "fail");
  }
  return report.finish(output);
}

// --------------------------------------------------------------- steenrod --

int run_steenrod_apply(int i, const std::string& input,
                       const std::string& output) {
  Report report("steenrod apply");
  report.options() = Json{{"i", i}, {"input", input}};
  Polynomial f = polynomial_from_json(load_json_file(input), input);
  report.inputs()["polynomial"] = polynomial_to_json(f);
  Polynomial pf = steenrod_power(static_cast<std::size_t>(i), f);
  report.result() = Json{{"polynomial", polynomial_to_json(pf)}};
  return report.finish(output);
}

// ------------------------------------------------------------- invariants --

int run_invariants(const GroupOpts& gopts, const std::string& degrees,
                   bool with_basis, const std::string& output) {
  Report report("invariants");
  auto [lo, hi] = parse_window(degrees);
  if (lo < 0) throw std::invalid_argument("--degrees must be nonnegative");
  Json group_echo;
  auto group = resolve_group(gopts, nullptr, group_echo);
  report.options() = Json{{"degrees", Json{{"lo", lo}, {"hi", hi}}},
                          {"basis", with_basis}};
  report.inputs()["group"] = std::move(group_echo);
  InvariantBasisCache cache(group);
  Json dims = Json::object();
  Json basis = Json::object();
  for (int n = lo; n <= hi; ++n) {
    const InvariantSpace& sp = cache.get(n);
    dims[std::to_string(n)] = sp.dim();
    if (with_basis) basis[std::to_string(n)] = generators_to_json(sp.basis);
  }
  report.result() = Json{{"order", group->order()}, {"dims", std::move(dims)}};
  if (with_basis) report.result()["basis"] = std::move(basis);
  return report.finish(output);
}

// ----------------------------------------------------------------- cartan --

int run_cartan_qr(int r, const std::string& input, const std::string& output) {
  Report report("cartan qr");
  report.options() = Json{{"r", r}, {"input", input}};
  Fraction u = fraction_from_json(load_json_file(input), input);
  report.inputs()["fraction"] = fraction_to_json(u);
  Fraction qu = q_r(r, u);
  report.result() = Json{{"fraction", fraction_to_json(qu)}};
  return report.finish(output);
}

Polynomial random_homogeneous(std::mt19937_64& rng, const PolyRingPtr& ring,
                              int degree) {
  MonomialBasis mb(ring, degree);
  std::uniform_int_distribution<std::uint64_t> coeff(0, ring->field()->q() - 1);
  std::vector<FieldCode> coords(mb.size());
  for (auto& c : coords) c = static_cast<FieldCode>(coeff(rng));
  return mb.from_coords(coords);
}

Polynomial random_nonzero_homogeneous(std::mt19937_64& rng,
                                      const PolyRingPtr& ring, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (;;) {
    Polynomial f = random_homogeneous(rng, ring, deg(rng));
    if (!f.is_zero()) return f;
  }
}

Polynomial random_base(std::mt19937_64& rng, const PolyRingPtr& ring) {
  std::uniform_int_distribution<int> coin(0, 1);
  Exponents e(ring->nvars(), 0);
  bool any = false;
  while (!any)
    for (int i = 0; i < ring->nvars(); ++i) {
      e[i] = coin(rng);
      any = any || e[i] > 0;
    }
  return Polynomial::monomial(ring, e, ring->field()->one());
}

int run_cartan_verify(int p, int s, int d, int samples, int rmax,
                      int max_degree, std::uint64_t seed,
                      const std::string& output) {
  Report report("cartan verify");
  report.options() = Json{{"p", p},        {"s", s},
                          {"d", d},        {"samples", samples},
                          {"rmax", rmax},  {"max_degree", max_degree},
                          {"seed", seed}};
  auto ring = PolyRing::create(FieldSpec::create(static_cast<std::uint32_t>(p),
                                                 static_cast<std::uint32_t>(s)),
                               d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> exp_dist(1, 3);
  int axiom_fail = 0, rep_fail = 0, lin_fail = 0, map_fail = 0;
  for (int it = 0; it < samples; ++it) {
    Polynomial base = random_base(rng, ring);
    int exp = exp_dist(rng);
    Fraction u(random_homogeneous(rng, ring, exp_dist(rng)), base, exp);
    Polynomial sm = random_nonzero_homogeneous(rng, ring, max_degree);

    if (!verify_cartan_axiom(sm, u, rmax).holds) ++axiom_fail;

    int inflate = exp_dist(rng);
    auto t1 = q_tower(u, rmax);
    auto t2 = q_tower_from_representation(
        u.num() * base.pow(static_cast<unsigned>(inflate)), base,
        u.exp() + inflate, rmax);
    for (int r = 0; r <= rmax; ++r)
      if (t1[static_cast<std::size_t>(r)] != t2[static_cast<std::size_t>(r)]) {
        ++rep_fail;
        break;
      }

    Fraction v(random_homogeneous(rng, ring, exp_dist(rng)), base, exp_dist(rng));
    for (int r = 0; r <= rmax; ++r)
      if (q_r(r, u + v) != q_r(r, u) + q_r(r, v)) {
        ++lin_fail;
        break;
      }

    Polynomial y = random_base(rng, ring);
    for (int r = 0; r <= rmax; ++r)
      if (map_to(q_r(r, u), y) != q_r(r, map_to(u, y))) {
        ++map_fail;
        break;
      }
  }
  auto tally = [&](const char* name, int fails) {
    report.check(name, fails == 0 ? "pass" : "fail",
                 Json{{"samples", samples}, {"failures", fails}});
  };
  tally("cartan-axiom", axiom_fail);
  tally("representation-independence", rep_fail);
  tally("linearity", lin_fail);
  tally("map-to-commutes", map_fail);
  return report.finish(output);
}

// --------------------------------------------------------------- localcoh --

int run_localcoh(const WindowOpts& opts, const std::string& compare,
                 const std::string& output) {
  Report report("localcoh");
  WindowSetup setup = build_window(opts, report);
  report.result() =
      Json{{"t_rep", setup.window.truncation()},
           {"window", window_to_json(setup.window, setup.lo, setup.hi)}};
  stabilization_check(report, setup.window, setup.lo, setup.hi);
  if (!compare.empty()) {
    std::vector<Polynomial> other = parse_generator_file(compare);
    if (!other[0].ring()->same_ring(*setup.engine->group().ring()))
      throw std::invalid_argument(compare +
                                  ": generators live in a different ring");
    auto engine2 = std::make_shared<KoszulEngine>(
        setup.group, IdealSpec{std::move(other)});
    GradedCohomologyWindow w2 =
        colimit_window(engine2, opts.index, setup.lo, setup.hi, opts.tmax);
    WindowComparison cmp = compare_windows(setup.window, w2);
    report.inputs()["compare_ideal"] =
        Json{{"generators", generators_to_json(engine2->ideal().generators)}};
    report.result()["compare_window"] = window_to_json(w2, setup.lo, setup.hi);
    report.check("radical-comparison", cmp.agree ? "pass" : "fail",
                 Json{{"differing_degrees", cmp.differing_degrees}});
  }
  return report.finish(output);
}

// ------------------------------------------------------------------ probe --

int run_probe_main(const WindowOpts& opts, int cap, int power_bound, int gens,
                   const std::string& output) {
  Report report("probe main");
  WindowSetup setup = build_window(opts, report);
  report.options()["cap"] = cap;
  report.options()["power_bound"] = power_bound;
  report.options()["gens"] = gens;
  const PolyRingPtr& ring = setup.engine->group().ring();
  DicksonAlgebra algebra = dickson_by_roots(ring->field(), ring->nvars());
  std::vector<Polynomial> rebound;
  for (const Polynomial& g : algebra.generators)
    rebound.push_back(rebind(g, ring));
  DicksonAlgebra local{ring, std::move(rebound)};

  stabilization_check(report, setup.window, setup.lo, setup.hi);
  WindowAnnihilator ann = window_annihilator(setup.window, cap);
  report.result() = Json{{"annihilator", annihilator_to_json(ann)}};
  DicksonProbeReport probe =
      dickson_containment_probe(ann, local, gens, power_bound);
  if (probe.status == ProbeStatus::vacuous_pass) {
    report.check("containment", "pass",
                 Json{{"reason", "window vanishes; containment is vacuous"}});
  } else if (probe.status == ProbeStatus::hypothesis_not_met) {
    report.check(
        "containment", "pass",
        Json{{"reason",
              "annihilator is trivial at window precision; the hypothesis "
              "J_i != 0 is not met"}});
  }
  for (std::size_t j = 0; j < probe.generators.size(); ++j) {
    const GeneratorContainment& gc = probe.generators[j];
    std::string name = "containment d[" + std::to_string(j) + "]";
    if (gc.status == ContainmentStatus::contained) {
      report.check(name, "pass", Json{{"witness_power", gc.witness_power}});
    } else if (gc.status == ContainmentStatus::not_contained) {
      report.check(name, "fail",
                   Json{{"reason", "no power up to the bound is contained"}});
    } else {
      report.check(name, "inconclusive",
                   Json{{"reason", "powers above the degree cap"}});
    }
  }
  return report.finish(output);
}

Json depth_to_json(const DepthReport& rep,
                   const std::vector<Polynomial>& sequence) {
  Json steps = Json::array();
  for (std::size_t k = 0; k < rep.steps.size(); ++k) {
    const DepthStep& st = rep.steps[k];
    Json sj{{"element", polynomial_to_json(sequence[k])},
            {"regular", st.regular},
            {"tested_up_to", st.tested_up_to}};
    if (st.violation_degree) sj["violation_degree"] = *st.violation_degree;
    if (st.witness) sj["witness"] = polynomial_to_json(*st.witness);
    steps.push_back(std::move(sj));
  }
  return Json{{"regular", rep.regular}, {"steps", std::move(steps)}};
}

void depth_checks(Report& report, const DepthReport& rep,
                  const std::vector<Polynomial>& sequence) {
  for (std::size_t k = 0; k < rep.steps.size(); ++k) {
    const DepthStep& st = rep.steps[k];
    std::string name = "regular step " + std::to_string(k);
    if (!st.regular) {
      report.check(name, "fail",
                   Json{{"violation_degree", *st.violation_degree},
                        {"witness", polynomial_to_json(*st.witness)}});
    } else if (st.tested_up_to < 0) {
      report.check(name, "inconclusive",
                   Json{{"reason", "degree cap below the element degree"}});
    } else {
      report.check(name, "pass", Json{{"tested_up_to", st.tested_up_to}});
    }
  }
}

int run_probe_ls(int p, int s, int d, int r, int cap,
                 const std::string& output) {
  Report report("probe ls");
  report.options() =
      Json{{"p", p}, {"s", s}, {"d", d}, {"r", r}, {"cap", cap}};
  if (r < 1 || r > d) throw std::invalid_argument("--r must be in 1..d");
  auto field = FieldSpec::create(static_cast<std::uint32_t>(p),
                                 static_cast<std::uint32_t>(s));
  DicksonAlgebra algebra = dickson_by_roots(field, d);
  auto group = std::make_shared<const Group>(
      Group::close(algebra.ring, full_gl_generators(field, d)));
  // Sequence d_{d,d-1}, ..., d_{d,d-r} in increasing degree order.
  std::vector<Polynomial> sequence;
  for (int j = d - 1; j >= d - r; --j)
    sequence.push_back(algebra.generators[static_cast<std::size_t>(j)]);
  report.inputs()["sequence"] = generators_to_json(sequence);
  InvariantBasisCache cache(group);
  DepthReport rep = depth_probe(sequence, cache, cap);
  report.result() = Json{{"depth", depth_to_json(rep, sequence)}};
  depth_checks(report, rep, sequence);
  return report.finish(output);
}

int run_probe_annp(const WindowOpts& opts, int cap, const std::string& output) {
  Report report("probe annp");
  WindowSetup setup = build_window(opts, report);
  report.options()["cap"] = cap;
  stabilization_check(report, setup.window, setup.lo, setup.hi);
  WindowAnnihilator ann = window_annihilator(setup.window, cap);
  report.result() = Json{{"annihilator", annihilator_to_json(ann)}};

  ClosureReport pstar = pstar_closure_check(ann);
  Json pdetail{{"checked", pstar.checked}, {"skipped", pstar.skipped}};
  if (!pstar.pass) {
    Json viols = Json::array();
    for (const ClosureViolation& v : pstar.violations)
      viols.push_back(Json{{"degree", v.degree},
                           {"basis_index", v.basis_index},
                           {"power", v.power}});
    pdetail["violations"] = std::move(viols);
    report.check("pstar-closure", "fail", std::move(pdetail));
  } else if (pstar.checked == 0 && pstar.skipped > 0) {
    pdetail["reason"] = "every Steenrod image lands above the degree cap";
    report.check("pstar-closure", "inconclusive", std::move(pdetail));
  } else {
    report.check("pstar-closure", "pass", std::move(pdetail));
  }

  MultClosureReport mult = invariant_closure_check(ann);
  Json mdetail{{"checked", mult.checked}};
  if (!mult.pass) {
    Json viols = Json::array();
    for (const MultClosureViolation& v : mult.violations)
      viols.push_back(Json{{"degree", v.degree},
                           {"basis_index", v.basis_index},
                           {"factor_degree", v.factor_degree},
                           {"factor_index", v.factor_index}});
    mdetail["violations"] = std::move(viols);
    report.check("invariant-closure", "fail", std::move(mdetail));
  } else {
    report.check("invariant-closure", "pass", std::move(mdetail));
  }
  return report.finish(output);
}

// ------------------------------------------------------------------ depth --

int run_depth(const GroupOpts& gopts, const std::string& sequence_file, int cap,
              const std::string& output) {
  Report report("depth");
  report.options() = Json{{"cap", cap}, {"sequence", sequence_file}};
  std::vector<Polynomial> sequence = parse_generator_file(sequence_file);
  Json group_echo;
  auto group = resolve_group(gopts, sequence[0].ring(), group_echo);
  report.inputs()["group"] = std::move(group_echo);
  report.inputs()["sequence"] = generators_to_json(sequence);
  InvariantBasisCache cache(group);
  DepthReport rep = depth_probe(sequence, cache, cap);
  report.result() = Json{{"depth", depth_to_json(rep, sequence)}};
  depth_checks(report, rep, sequence);
  return report.finish(output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact modular invariant theory and local cohomology probes"};
  app.set_version_flag("--version", std::string("modinv ") + kVersion);
  app.require_subcommand(1);
  std::function<int()> run;

  // dickson
  {
    auto* cmd = app.add_subcommand("dickson", "Dickson generators of GL(d,q)");
    auto opt = std::make_shared<std::tuple<int, int, int, bool, std::string>>(
        0, 1, 0, false, "");
    cmd->add_option("--p", std::get<0>(*opt), "field characteristic")
        ->required();
    cmd->add_option("--s", std::get<1>(*opt), "field extension degree")
        ->default_val(1);
    cmd->add_option("--d", std::get<2>(*opt), "number of variables")
        ->required();
    cmd->add_flag("--check", std::get<3>(*opt),
                  "cross-validate the two constructions");
    cmd->add_option("--output", std::get<4>(*opt), "write the report here");
    cmd->callback([opt, &run] {
      run = [opt] {
        auto& [p, s, d, check, output] = *opt;
        return run_dickson(p, s, d, check, output);
      };
    });
  }

  // steenrod apply
  {
    auto* cmd = app.add_subcommand("steenrod", "Steenrod operations");
    cmd->require_subcommand(1);
    auto* apply = cmd->add_subcommand("apply", "apply P^i to a polynomial");
    auto opt = std::make_shared<std::tuple<int, std::string, std::string>>(
        0, "", "");
    apply->add_option("--i", std::get<0>(*opt), "component index")->required();
    apply->add_option("--input", std::get<1>(*opt), "polynomial JSON file")
        ->required();
    apply->add_option("--output", std::get<2>(*opt), "write the report here");
    apply->callback([opt, &run] {
      run = [opt] {
        auto& [i, input, output] = *opt;
        return run_steenrod_apply(i, input, output);
      };
    });
  }

  // invariants
  {
    auto* cmd = app.add_subcommand("invariants", "graded invariant bases");
    auto gopts = std::make_shared<GroupOpts>();
    auto opt = std::make_shared<std::tuple<std::string, bool, std::string>>(
        "", false, "");
    add_group_flags(cmd, *gopts);
    cmd->add_option("--degrees", std::get<0>(*opt), "degree range a..b")
        ->required();
    cmd->add_flag("--basis", std::get<1>(*opt), "include basis polynomials");
    cmd->add_option("--output", std::get<2>(*opt), "write the report here");
    cmd->callback([gopts, opt, &run] {
      run = [gopts, opt] {
        auto& [degrees, basis, output] = *opt;
        return run_invariants(*gopts, degrees, basis, output);
      };
    });
  }

  // cartan qr / verify
  {
    auto* cmd = app.add_subcommand("cartan", "Cartan module operators");
    cmd->require_subcommand(1);
    auto* qr = cmd->add_subcommand("qr", "apply Q^r to a fraction");
    auto qopt = std::make_shared<std::tuple<int, std::string, std::string>>(
        0, "", "");
    qr->add_option("--r", std::get<0>(*qopt), "operator index")->required();
    qr->add_option("--input", std::get<1>(*qopt), "fraction JSON file")
        ->required();
    qr->add_option("--output", std::get<2>(*qopt), "write the report here");
    qr->callback([qopt, &run] {
      run = [qopt] {
        auto& [r, input, output] = *qopt;
        return run_cartan_qr(r, input, output);
      };
    });

    auto* verify = cmd->add_subcommand("verify", "seeded property checks");
    auto vopt = std::make_shared<
        std::tuple<int, int, int, int, int, int, std::uint64_t, std::string>>(
        2, 1, 2, 100, 4, 4, 0, "");
    verify->add_option("--p", std::get<0>(*vopt), "field characteristic")
        ->default_val(2);
    verify->add_option("--s", std::get<1>(*vopt), "field extension degree")
        ->default_val(1);
    verify->add_option("--d", std::get<2>(*vopt), "number of variables")
        ->default_val(2);
    verify->add_option("--samples", std::get<3>(*vopt), "samples per check")
        ->default_val(100);
    verify->add_option("--rmax", std::get<4>(*vopt), "largest operator index")
        ->default_val(4);
    verify->add_option("--max-degree", std::get<5>(*vopt),
                       "largest sampled degree")
        ->default_val(4);
    verify->add_option("--seed", std::get<6>(*vopt), "RNG seed")
        ->default_val(0);
    verify->add_option("--output", std::get<7>(*vopt),
                       "write the report here");
    verify->callback([vopt, &run] {
      run = [vopt] {
        auto& [p, s, d, samples, rmax, maxdeg, seed, output] = *vopt;
        return run_cartan_verify(p, s, d, samples, rmax, maxdeg, seed, output);
      };
    });
  }

  // localcoh
  {
    auto* cmd = app.add_subcommand("localcoh", "local cohomology windows");
    auto wopts = std::make_shared<WindowOpts>();
    auto opt = std::make_shared<std::tuple<std::string, std::string>>("", "");
    add_window_flags(cmd, *wopts);
    cmd->add_option("--compare", std::get<0>(*opt),
                    "second generator file for a radical comparison");
    cmd->add_option("--output", std::get<1>(*opt), "write the report here");
    cmd->callback([wopts, opt, &run] {
      run = [wopts, opt] {
        auto& [compare, output] = *opt;
        return run_localcoh(*wopts, compare, output);
      };
    });
  }

  // probe main | ls | annp
  {
    auto* cmd = app.add_subcommand("probe", "desk-scale theorem probes");
    cmd->require_subcommand(1);

    auto* pmain = cmd->add_subcommand(
        "main", "Dickson generator powers in the window annihilator");
    auto mw = std::make_shared<WindowOpts>();
    auto mopt =
        std::make_shared<std::tuple<int, int, int, std::string>>(0, 4, 1, "");
    add_window_flags(pmain, *mw);
    pmain->add_option("--cap", std::get<0>(*mopt), "annihilator degree cap")
        ->required();
    pmain->add_option("--power-bound", std::get<1>(*mopt),
                      "largest power tried")
        ->default_val(4);
    pmain->add_option("--gens", std::get<2>(*mopt),
                      "check d[0]..d[gens-1]")
        ->default_val(1);
    pmain->add_option("--output", std::get<3>(*mopt),
                      "write the report here");
    pmain->callback([mw, mopt, &run] {
      run = [mw, mopt] {
        auto& [cap, power_bound, gens, output] = *mopt;
        return run_probe_main(*mw, cap, power_bound, gens, output);
      };
    });

    auto* pls = cmd->add_subcommand(
        "ls", "regularity of the small-degree Dickson system");
    auto lopt = std::make_shared<std::tuple<int, int, int, int, int,
                                            std::string>>(0, 1, 0, 0, 0, "");
    pls->add_option("--p", std::get<0>(*lopt), "field characteristic")
        ->required();
    pls->add_option("--s", std::get<1>(*lopt), "field extension degree")
        ->default_val(1);
    pls->add_option("--d", std::get<2>(*lopt), "number of variables")
        ->required();
    pls->add_option("--r", std::get<3>(*lopt),
                    "sequence length (default d)");
    pls->add_option("--cap", std::get<4>(*lopt), "degree cap")->required();
    pls->add_option("--output", std::get<5>(*lopt), "write the report here");
    pls->callback([lopt, &run] {
      run = [lopt] {
        auto& [p, s, d, r, cap, output] = *lopt;
        return run_probe_ls(p, s, d, r == 0 ? d : r, cap, output);
      };
    });

    auto* pannp = cmd->add_subcommand(
        "annp", "closure of the window annihilator under P^i and invariants");
    auto aw = std::make_shared<WindowOpts>();
    auto aopt = std::make_shared<std::tuple<int, std::string>>(0, "");
    add_window_flags(pannp, *aw);
    pannp->add_option("--cap", std::get<0>(*aopt), "annihilator degree cap")
        ->required();
    pannp->add_option("--output", std::get<1>(*aopt),
                      "write the report here");
    pannp->callback([aw, aopt, &run] {
      run = [aw, aopt] {
        auto& [cap, output] = *aopt;
        return run_probe_annp(*aw, cap, output);
      };
    });
  }

  // depth
  {
    auto* cmd = app.add_subcommand("depth", "degreewise regular sequence probe");
    auto gopts = std::make_shared<GroupOpts>();
    auto opt = std::make_shared<std::tuple<std::string, int, std::string>>(
        "", 0, "");
    add_group_flags(cmd, *gopts);
    cmd->add_option("--sequence", std::get<0>(*opt),
                    "sequence JSON file ({\"generators\": [...]})")
        ->required();
    cmd->add_option("--cap", std::get<1>(*opt), "degree cap")->required();
    cmd->add_option("--output", std::get<2>(*opt), "write the report here");
    cmd->callback([gopts, opt, &run] {
      run = [gopts, opt] {
        auto& [sequence, cap, output] = *opt;
        return run_depth(*gopts, sequence, cap, output);
      };
    });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    return run();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataErr;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataErr;
  }
}
