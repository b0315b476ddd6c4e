#include "gwdeg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwdeg/degree.hpp"
#include "gwdeg/parser.hpp"
#include "gwdeg/problem_file.hpp"

namespace gwdeg {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string method = "direct";
  bool as_json = false;
  uint64_t seed = 0;
  bool seed_given = false;
  bool require_decided = false;
  bool timings = false;
  bool doctor_lhs = false;
  std::string field_name = "Q";
  std::string generator;
  std::string min_poly;
  std::string diag;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    std::string piece = s.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    size_t a = piece.find_first_not_of(" \t");
    size_t b = piece.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? "" : piece.substr(a, b - a + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string point_text(const PointSpec& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.coords.size(); ++i) {
    if (i) s += ", ";
    s += p.coords[i].to_string();
  }
  return s + ") over " + p.residue_field.to_string();
}

ordered_json point_json(const PointSpec& p) {
  ordered_json j;
  j["residue_field"] = p.residue_field.to_string();
  ordered_json coords = ordered_json::array();
  for (const auto& c : p.coords) coords.push_back(c.to_string());
  j["coords"] = std::move(coords);
  return j;
}

std::string hasse_text(const std::map<Place, int>& h) {
  std::string s;
  for (const auto& [pl, v] : h) {
    if (!s.empty()) s += ", ";
    s += pl.to_string() + ": " + (v > 0 ? "+1" : "-1");
  }
  return s;
}

// Shared invariant fields, in schema order.
void put_invariants(ordered_json& j, const GWClass& cls, const GWInvariants& inv) {
  ordered_json d = ordered_json::array();
  for (const auto& e : cls.diagonal()) d.push_back(e.to_string());
  j["diagonal"] = std::move(d);
  j["rank"] = inv.rank;
  j["det_square_class"] = inv.det_square_class.to_string();
  if (inv.signature) j["signature"] = *inv.signature;
  if (inv.hasse_witt) {
    ordered_json h;
    for (const auto& [pl, v] : *inv.hasse_witt) h[pl.to_string()] = v;
    j["hasse_witt"] = std::move(h);
  }
}

void print_invariants(std::ostream& out, const GWClass& cls, const GWInvariants& inv) {
  out << "diagonal: " << cls.to_string() << "\n";
  out << "rank: " << inv.rank << "\n";
  out << "det square class: " << inv.det_square_class.to_string() << "\n";
  if (inv.signature) out << "signature: " << *inv.signature << "\n";
  if (inv.hasse_witt) out << "hasse-witt: " << hasse_text(*inv.hasse_witt) << "\n";
}

void put_timings(ordered_json& j, const Options& o, double ms) {
  j["timings_ms"] = o.timings ? ordered_json(ms) : ordered_json(nullptr);
}

uint64_t resolve_seed(const Options& o, const LoadedProblem& lp) {
  return o.seed_given ? o.seed : lp.seed;
}

LoadedProblem load_single_point_problem(const std::string& path) {
  LoadedProblem lp = load_problem(parse_problem_file(path));
  if (lp.points.size() != 1)
    fail(Errc::syntax_error, "this command needs a problem file with exactly one point record (found " +
                                 std::to_string(lp.points.size()) + ")");
  return lp;
}

// A certified nonsquare of f, used by the deliberate-corruption test hook.
FieldElement pick_nonsquare(const FieldDescriptor& f) {
  std::vector<FieldElement> candidates;
  if (f.base().is_prime_field()) {
    for (long c = 2; c < f.base().characteristic(); ++c)
      candidates.push_back(FieldElement::from_integer(f, c));
  } else {
    for (long c : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L})
      candidates.push_back(FieldElement::from_integer(f, c));
  }
  if (!f.is_base_only()) {
    FieldElement g = FieldElement::generator(f);
    candidates.push_back(g);
    for (long c : {1L, 2L, 3L})
      candidates.push_back(g + FieldElement::from_integer(f, c));
  }
  for (const auto& c : candidates)
    if (!c.is_zero() && is_square(c) == Ternary::no) return c;
  fail(Errc::cannot_certify, "no certified nonsquare found for corruption hook");
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_degree(const Options& o, std::ostream& out) {
  LoadedProblem lp = load_single_point_problem(o.file);
  uint64_t seed = resolve_seed(o, lp);

  auto t0 = std::chrono::steady_clock::now();
  PipelineOutcome r = o.method == "trace"
                          ? local_degree_trace_full(lp.polys, lp.points[0], seed)
                          : local_degree_direct_full(lp.polys, lp.points[0], seed);
  double ms = elapsed_ms(t0);

  if (o.as_json) {
    ordered_json j;
    j["field"] = lp.field.to_string();
    j["point"] = point_json(lp.points[0]);
    j["method"] = o.method;
    put_invariants(j, r.cls, r.inv);
    j["local_dim"] = r.local_dim;
    j["algebra_dim"] = r.ambient_dim;
    j["separating_form"] = r.separating_form_text;
    put_timings(j, o, ms);
    j["seed"] = seed;
    out << j.dump(2) << "\n";
  } else {
    out << "field: " << lp.field.to_string() << "\n";
    out << "point: " << point_text(lp.points[0]) << "\n";
    out << "method: " << o.method << "\n";
    out << "seed: " << seed << "\n";
    out << "separating form: " << r.separating_form_text << "\n";
    out << "algebra dimension: " << r.ambient_dim << "\n";
    out << "local dimension: " << r.local_dim << "\n";
    print_invariants(out, r.cls, r.inv);
    if (o.timings) out << "time: " << ms << " ms\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  LoadedProblem lp = load_single_point_problem(o.file);
  uint64_t seed = resolve_seed(o, lp);

  auto t0 = std::chrono::steady_clock::now();
  VerifyResult vr = verify_trace_theorem(lp.polys, lp.points[0], seed);
  if (o.doctor_lhs) {
    // Corrupt one diagonal entry by a certified nonsquare; the verdict must
    // flip to NotEqual, exercising the alarm path end to end.
    FieldElement u = pick_nonsquare(vr.direct.cls.field());
    std::vector<FieldElement> d = vr.direct.cls.diagonal();
    d[0] = d[0] * u;
    vr.direct.cls = GWClass::from_diagonal(vr.direct.cls.field(), std::move(d));
    vr.direct.inv = invariants(vr.direct.cls);
    vr.verdict = gw_equal(vr.direct.cls, vr.trace.cls);
  }
  double ms = elapsed_ms(t0);

  auto side_json = [](const char* name, const PipelineOutcome& r) {
    ordered_json j;
    j["method"] = name;
    put_invariants(j, r.cls, r.inv);
    j["local_dim"] = r.local_dim;
    j["algebra_dim"] = r.ambient_dim;
    j["separating_form"] = r.separating_form_text;
    return j;
  };

  if (o.as_json) {
    ordered_json j;
    j["field"] = lp.field.to_string();
    j["point"] = point_json(lp.points[0]);
    j["methods"] = ordered_json::array({"direct", "trace"});
    j["results"] = ordered_json::array(
        {side_json("direct", vr.direct), side_json("trace", vr.trace)});
    j["verdict"] = verdict_name(vr.verdict);
    put_timings(j, o, ms);
    j["seed"] = seed;
    out << j.dump(2) << "\n";
  } else {
    out << "field: " << lp.field.to_string() << "\n";
    out << "point: " << point_text(lp.points[0]) << "\n";
    out << "seed: " << seed << "\n";

    auto cell = [](const PipelineOutcome& r, size_t row) -> std::string {
      switch (row) {
        case 0: return r.cls.to_string();
        case 1: return std::to_string(r.inv.rank);
        case 2: return r.inv.det_square_class.to_string();
        case 3: return r.inv.signature ? std::to_string(*r.inv.signature) : "";
        case 4: return r.inv.hasse_witt ? hasse_text(*r.inv.hasse_witt) : "";
        case 5: return std::to_string(r.local_dim);
        case 6: return std::to_string(r.ambient_dim);
        default: return r.separating_form_text;
      }
    };
    const char* labels[] = {"diagonal",  "rank",            "det square class",
                            "signature", "hasse-witt",      "local dimension",
                            "algebra dimension", "separating form"};
    std::vector<size_t> rows;
    for (size_t i = 0; i < 8; ++i) {
      if (i == 3 && !vr.direct.inv.signature) continue;
      if (i == 4 && !vr.direct.inv.hasse_witt) continue;
      rows.push_back(i);
    }
    size_t w0 = 0, w1 = std::string("direct").size();
    for (size_t i : rows) {
      w0 = std::max(w0, std::string(labels[i]).size());
      w1 = std::max(w1, cell(vr.direct, i).size());
    }
    auto pad = [](const std::string& s, size_t w) {
      return s + std::string(w - s.size() + 2, ' ');
    };
    out << pad("", w0) << pad("direct", w1) << "trace\n";
    for (size_t i : rows)
      out << pad(labels[i], w0) << pad(cell(vr.direct, i), w1) << cell(vr.trace, i)
          << "\n";
    out << "verdict: " << verdict_name(vr.verdict) << "\n";
    if (o.timings) out << "time: " << ms << " ms\n";
  }

  switch (vr.verdict) {
    case Verdict::equal: return 0;
    case Verdict::not_equal: return 1;
    case Verdict::undecided: return 4;
  }
  return 3;
}

int cmd_global(const Options& o, std::ostream& out) {
  LoadedProblem lp = load_problem(parse_problem_file(o.file));

  auto t0 = std::chrono::steady_clock::now();
  GlobalOutcome r = global_degree_full(lp.polys);
  double ms = elapsed_ms(t0);

  if (o.as_json) {
    ordered_json j;
    j["field"] = lp.field.to_string();
    j["method"] = "global";
    put_invariants(j, r.cls, r.inv);
    j["algebra_dim"] = r.algebra_dim;
    put_timings(j, o, ms);
    j["seed"] = lp.seed;
    out << j.dump(2) << "\n";
  } else {
    out << "field: " << lp.field.to_string() << "\n";
    out << "method: global\n";
    out << "algebra dimension: " << r.algebra_dim << "\n";
    print_invariants(out, r.cls, r.inv);
    if (o.timings) out << "time: " << ms << " ms\n";
  }
  return 0;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  if (o.generator.empty() != o.min_poly.empty())
    fail(Errc::syntax_error, "--generator and --min-poly must be given together");
  BaseField base = parse_base_field(o.field_name);
  FieldDescriptor f = FieldDescriptor::base_only(base);
  if (!o.generator.empty()) {
    std::vector<Rational> mp;
    for (const auto& piece : split_commas(o.min_poly)) {
      if (piece.empty()) fail(Errc::syntax_error, "empty entry in --min-poly");
      mp.push_back(rat_from_string(piece));
    }
    f = FieldDescriptor::extension(base, o.generator, std::move(mp));
  }

  std::vector<FieldElement> diag;
  for (const auto& piece : split_commas(o.diag)) {
    if (piece.empty()) fail(Errc::syntax_error, "empty entry in --diag");
    diag.push_back(parse_field_element(piece, f));
  }

  auto t0 = std::chrono::steady_clock::now();
  GWClass cls = GWClass::from_diagonal(f, std::move(diag));
  GWInvariants inv = invariants(cls);
  double ms = elapsed_ms(t0);

  if (o.as_json) {
    ordered_json j;
    j["field"] = f.to_string();
    j["method"] = "invariants";
    put_invariants(j, cls, inv);
    put_timings(j, o, ms);
    j["seed"] = uint64_t{0};
    out << j.dump(2) << "\n";
  } else {
    out << "field: " << f.to_string() << "\n";
    print_invariants(out, cls, inv);
    if (o.timings) out << "time: " << ms << " ms\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Local degrees of polynomial maps, as diagonal bilinear form classes "
               "with exact invariants",
               "gwdeg"};
  app.require_subcommand(1);

  std::vector<CLI::Option*> seed_opts;

  auto add_common = [&](CLI::App* cmd, bool with_seed) {
    cmd->add_option("file", o.file, "problem file")->required();
    cmd->add_flag("--json", o.as_json, "machine-readable report");
    cmd->add_flag("--timings", o.timings,
                  "include wall-clock time (breaks byte-for-byte determinism)");
    if (with_seed)
      seed_opts.push_back(cmd->add_option(
          "--seed", o.seed, "separating-form search seed (overrides the file)"));
  };

  CLI::App* deg = app.add_subcommand("degree", "local degree at the file's point");
  add_common(deg, true);
  deg->add_option("--method", o.method, "pipeline: direct or trace")
      ->check(CLI::IsMember({"direct", "trace"}));
  deg->add_flag("--require-decided", o.require_decided,
                "fail instead of reporting anything undecided");

  CLI::App* ver = app.add_subcommand(
      "verify", "run both pipelines independently and compare the classes");
  add_common(ver, true);
  ver->add_flag("--require-decided", o.require_decided,
                "fail instead of reporting anything undecided");
  ver->add_flag("--doctor-lhs", o.doctor_lhs)->group("");

  CLI::App* glob = app.add_subcommand("global", "class of the whole finite algebra");
  add_common(glob, false);

  CLI::App* inv = app.add_subcommand("invariants", "invariants of a hand-entered diagonal");
  inv->add_option("--field", o.field_name, "base field: Q or F<p>")
      ->capture_default_str();
  inv->add_option("--generator", o.generator, "extension generator symbol");
  inv->add_option("--min-poly", o.min_poly,
                  "extension minimal polynomial coefficients, constant first, comma-separated");
  inv->add_option("--diag", o.diag, "diagonal entries, comma-separated expressions")
      ->required();
  inv->add_flag("--json", o.as_json, "machine-readable report");
  inv->add_flag("--timings", o.timings,
                "include wall-clock time (breaks byte-for-byte determinism)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }
  o.seed_given = std::any_of(seed_opts.begin(), seed_opts.end(),
                             [](const CLI::Option* s) { return s->count() > 0; });

  try {
    if (*deg) return cmd_degree(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*glob) return cmd_global(o, out);
    if (*inv) return cmd_invariants(o, out);
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what();
    if (e.line() > 0) {
      err << " [line " << e.line();
      if (e.col() > 0) err << ", column " << e.col();
      err << "]";
    }
    err << "\n";
    return e.is_parse() ? 2 : 3;
  }
  return 2;
}

}  // namespace gwdeg
