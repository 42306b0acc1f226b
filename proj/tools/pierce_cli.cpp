// pierce — transversals of convex-set families from the command line.
//
// Subcommands: gen, lines, colorful, points, oracle {lines|points}, check,
// render. Family files and reports are JSON; renders are deterministic SVG.
// Exit codes: 0 success, 2 precondition failure (isolated sets, infeasible k,
// rainbow violation), 3 search budget exhausted, 4 I/O or schema error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "pierce/pierce.hpp"

namespace {

using namespace pierce;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(const Json& report, const std::string& out_path) {
  if (out_path.empty())
    std::cout << report.dump(2) << "\n";
  else
    save_json(report, out_path);
}

Json lines_json(const std::vector<LineR>& lines) {
  Json arr = Json::array();
  for (const auto& l : lines) arr.push_back(line_to_json(l));
  return arr;
}

Json points_json(const std::vector<PointR>& points) {
  Json arr = Json::array();
  for (const auto& p : points) arr.push_back(point_to_json(p));
  return arr;
}

Json assignment_json(const std::map<std::string, int>& a) {
  Json obj = Json::object();
  for (const auto& [id, idx] : a) obj[id] = idx;
  return obj;
}

std::vector<PointD> dbl(const std::vector<PointR>& pts) {
  std::vector<PointD> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_double(p));
  return out;
}

std::vector<LineD> dbl(const std::vector<LineR>& lines) {
  std::vector<LineD> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back({to_double(l.a), to_double(l.b)});
  return out;
}

int parse_k(const std::string& s) {
  if (s == "auto") return kAutoK;
  std::size_t pos = 0;
  int k = -1;
  try {
    k = std::stoi(s, &pos);
  } catch (...) {
    pos = 0;
  }
  if (pos != s.size() || k < 0)
    throw precondition_error("--k wants 'auto' or a nonnegative integer, got '" + s + "'");
  return k;
}

SolveLinesOptions method_options(const std::string& method, int nmax) {
  SolveLinesOptions opt;
  if (method == "kkm")
    opt.use_fallback = false;
  else if (method == "combinatorial")
    opt.use_kkm = false;
  else if (method != "both")
    throw precondition_error("--method wants kkm, combinatorial, or both");
  if (nmax > 0) opt.n_max = nmax;
  return opt;
}

// ---- gen ----------------------------------------------------------------

int run_gen(int gon, long seed, int n, const std::string& filter, int classes,
            const std::string& out) {
  FamilyR f;
  if (gon > 0) {
    f = regular_gon_edges(gon);
  } else {
    RandomFamilyParams par;
    par.n = n;
    if (filter == "none")
      par.filter = RandomFamilyParams::Filter::none;
    else if (filter == "no-isolated")
      par.filter = RandomFamilyParams::Filter::no_isolated;
    else if (filter == "pairwise")
      par.filter = RandomFamilyParams::Filter::pairwise;
    else if (filter == "rainbow")
      par.filter = RandomFamilyParams::Filter::rainbow;
    else
      throw precondition_error("--filter wants none, no-isolated, pairwise, or rainbow");
    par.color_classes = classes;
    f = random_family(static_cast<unsigned long>(seed), par);
  }
  if (out.empty())
    std::cout << family_to_json(f).dump(2) << "\n";
  else
    save_family(f, out);
  return 0;
}

// ---- lines --------------------------------------------------------------

int run_lines(const std::string& in, const std::string& k_str, const std::string& method,
              int nmax, const std::string& out, const std::string& svg) {
  const auto t0 = std::chrono::steady_clock::now();
  FamilyR f = load_family(in);
  const int k = parse_k(k_str);
  const int nu = matching_number(f).nu;
  SolveLinesResult sr = solve_lines(f, k, method_options(method, nmax));

  Json rep;
  rep["command"] = "lines";
  rep["input"] = in;
  rep["nu"] = nu;
  rep["k"] = (k == kAutoK) ? nu / 2 : k;

  if (const auto* inf = std::get_if<Infeasibility>(&sr)) {
    rep["infeasible"] = true;
    rep["best_size"] = inf->best_size;
    rep["best_lines"] = lines_json(inf->best_lines);
    rep["assignment"] = assignment_json(inf->assignment);
    rep["ms"] = ms_since(t0);
    emit(rep, out);
    return 2;
  }

  const auto& t = std::get<LineTransversal>(sr);
  rep["count"] = t.lines.size();
  rep["lines"] = lines_json(t.lines);
  rep["source"] = (t.source == LineSource::kkm_search) ? "kkm" : "combinatorial";
  if (t.x_star) {
    Json xs = Json::array();
    for (const auto& c : t.x_star->coords) xs.push_back(rat_to_string(c));
    rep["x_star"] = xs;
  }
  rep["assignment"] = assignment_json(t.assignment);
  rep["verified"] = verify_line_transversal(f, t.lines).ok;
  rep["ms"] = ms_since(t0);
  emit(rep, out);
  if (!svg.empty()) render_svg(to_double(f), std::nullopt, dbl(t.lines), {}, svg);
  return 0;
}

// ---- colorful -----------------------------------------------------------

int run_colorful(const std::string& in, const std::string& out, const std::string& svg) {
  const auto t0 = std::chrono::steady_clock::now();
  FamilyR f = load_family(in);
  if (f.colors.empty())
    throw precondition_error("colorful needs a colored family ('colors' in the file)");
  int classes = 0;
  for (const auto& [id, c] : f.colors) classes = std::max(classes, c + 1);
  std::vector<FamilyR> split(static_cast<std::size_t>(classes));
  for (const auto& s : f.sets) split[static_cast<std::size_t>(f.colors.at(s.id))].sets.push_back(s);

  SolveColorfulResult cr = solve_colorful(split);

  Json rep;
  rep["command"] = "colorful";
  rep["input"] = in;
  rep["classes"] = classes;
  rep["k"] = classes / 2;

  if (const auto* v = std::get_if<RainbowViolation>(&cr)) {
    rep["rainbow_violation"] = v->selection;
    rep["ms"] = ms_since(t0);
    emit(rep, out);
    return 2;
  }

  const auto& r = std::get<ColorfulResult>(cr);
  rep["j"] = r.j;
  rep["rainbow_checked"] = r.rainbow_checked;
  rep["count"] = r.transversal.lines.size();
  rep["lines"] = lines_json(r.transversal.lines);
  rep["source"] = (r.transversal.source == LineSource::kkm_search) ? "kkm" : "combinatorial";
  rep["assignment"] = assignment_json(r.transversal.assignment);
  rep["verified"] =
      verify_line_transversal(split[static_cast<std::size_t>(r.j - 1)], r.transversal.lines).ok;
  rep["ms"] = ms_since(t0);
  emit(rep, out);
  if (!svg.empty())
    render_svg(to_double(f), std::nullopt, dbl(r.transversal.lines), {}, svg);
  return 0;
}

// ---- points -------------------------------------------------------------

int run_points(const std::string& in, int r_bound, const std::string& out,
               const std::string& svg) {
  const auto t0 = std::chrono::steady_clock::now();
  FamilyR f = load_family(in);
  PipelineOptions opt;
  if (r_bound >= 0) opt.r_bound = r_bound;
  PipelineReport pr = theorem1_pierce(f, opt);

  Json rep;
  rep["command"] = "points";
  rep["input"] = in;
  rep["p"] = pr.p;
  rep["r"] = pr.r;
  rep["k"] = pr.k;
  rep["bound"] = pr.bound;
  rep["bound_satisfied"] = pr.bound_satisfied;
  rep["count"] = pr.points.points.size();
  rep["points"] = points_json(pr.points.points);
  rep["assignment"] = assignment_json(pr.points.assignment);
  rep["lines"] = lines_json(pr.lines.lines);
  rep["line_assignment_fprime"] = assignment_json(pr.line_assignment_fprime);
  rep["verified"] = verify_point_transversal(f, pr.points.points).ok;
  rep["ms"] = ms_since(t0);
  emit(rep, out);
  if (!svg.empty())
    render_svg(to_double(f), std::nullopt, dbl(pr.lines.lines), dbl(pr.points.points),
               svg);
  return 0;
}

// ---- oracle -------------------------------------------------------------

int run_oracle_lines(const std::string& in, int cap, const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  FamilyR f = load_family(in);
  OracleLines ol = exact_min_lines(f, cap);
  Json rep;
  rep["command"] = "oracle-lines";
  rep["input"] = in;
  rep["count"] = ol.count;
  rep["lines"] = lines_json(ol.lines);
  rep["assignment"] = assignment_json(ol.assignment);
  rep["ms"] = ms_since(t0);
  emit(rep, out);
  return 0;
}

int run_oracle_points(const std::string& in, int cap, const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  FamilyR f = load_family(in);
  OraclePoints op = exact_min_points(f, cap);
  Json rep;
  rep["command"] = "oracle-points";
  rep["input"] = in;
  rep["count"] = op.count;
  rep["points"] = points_json(op.points);
  rep["assignment"] = assignment_json(op.assignment);
  rep["ms"] = ms_since(t0);
  emit(rep, out);
  return 0;
}

// ---- check --------------------------------------------------------------

int run_check(const std::string& in, const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  FamilyR f = load_family(in);

  int points = 0, segments = 0, polygons = 0;
  for (const auto& s : f.sets) {
    // re-validation must be the identity on loaded sets
    ConvexSetR again = make_convex_set(s.id, s.vertices);
    if (!(again.vertices == s.vertices))
      throw precondition_error("set '" + s.id + "': loaded vertices are not in normal form");
    if (s.is_point())
      ++points;
    else if (s.is_segment())
      ++segments;
    else
      ++polygons;
  }

  FamilyR fprime = pairwise_intersections(f);
  MatchingResult m = matching_number(f);

  Json rep;
  rep["command"] = "check";
  rep["input"] = in;
  rep["sets"] = f.sets.size();
  rep["points"] = points;
  rep["segments"] = segments;
  rep["polygons"] = polygons;
  if (!f.colors.empty()) {
    int classes = 0;
    for (const auto& [id, c] : f.colors) classes = std::max(classes, c + 1);
    rep["color_classes"] = classes;
  }
  rep["nu"] = m.nu;
  rep["matching_witness"] = m.witness;
  rep["pairwise_intersections"] = fprime.sets.size();
  rep["isolated"] = isolated_sets(f);
  rep["valid"] = true;
  rep["ms"] = ms_since(t0);
  emit(rep, out);
  return 0;
}

// ---- render -------------------------------------------------------------

int run_render(const std::string& in, int chords_k, const std::string& out) {
  FamilyR f = load_family(in);
  std::optional<ChordSystem<double>> overlay;
  if (chords_k > 0) {
    // chord system at the simplex barycenter, built exactly and then rounded
    const int m = 2 * chords_k + 2;
    SimplexPointR x;
    for (int i = 0; i < m; ++i) x.coords.push_back(rat(1, m));
    ChordSystem<Rational> cs = chord_system(x);
    ChordSystem<double> cd;
    cd.m = cs.m;
    for (const auto& v : cs.x) cd.x.push_back(to_double(v));
    for (const auto& v : cs.t) cd.t.push_back(to_double(v));
    for (const auto& p : cs.f) cd.f.push_back(to_double(p));
    for (const auto& c : cs.chords) cd.chords.push_back({to_double(c.a), to_double(c.b)});
    overlay = std::move(cd);
  }
  render_svg(to_double(f), overlay, {}, {}, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"line and point transversals of finite convex-set families"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family file");
  int gen_gon = 0;
  long gen_seed = 1;
  int gen_n = 5;
  std::string gen_filter = "none";
  int gen_classes = 0;
  std::string gen_out;
  auto* gon_opt = gen->add_option("--regular-gon", gen_gon, "edges of the regular (2P+1)-gon");
  auto* seed_opt = gen->add_option("--random", gen_seed, "random family from this seed");
  gen->add_option("--n", gen_n, "number of random sets");
  gen->add_option("--filter", gen_filter, "none | no-isolated | pairwise | rainbow");
  gen->add_option("--classes", gen_classes, "color classes (rainbow filter)");
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gon_opt->excludes(seed_opt);

  // lines
  auto* lines = app.add_subcommand("lines", "line transversal of a family");
  std::string lines_in, lines_k = "auto", lines_method = "both", lines_out, lines_svg;
  int lines_nmax = 0;
  lines->add_option("--in", lines_in, "family file")->required();
  lines->add_option("--k", lines_k, "chord count parameter: auto or an integer >= 0");
  lines->add_option("--method", lines_method, "kkm | combinatorial | both");
  lines->add_option("--nmax", lines_nmax, "grid resolution cap for the simplex search");
  lines->add_option("--out", lines_out, "report file (default stdout)");
  lines->add_option("--svg", lines_svg, "render the result to this SVG file");

  // colorful
  auto* colorful = app.add_subcommand("colorful", "colorful transversal of a colored family");
  std::string col_in, col_out, col_svg;
  colorful->add_option("--in", col_in, "colored family file")->required();
  colorful->add_option("--out", col_out, "report file (default stdout)");
  colorful->add_option("--svg", col_svg, "render the result to this SVG file");

  // points
  auto* points = app.add_subcommand("points", "point transversal via the line-then-trace pipeline");
  std::string pts_in, pts_out, pts_svg;
  int pts_rbound = -1;
  points->add_option("--in", pts_in, "family file")->required();
  points->add_option("--r-bound", pts_rbound, "override the matching bound r of the intersections");
  points->add_flag("--pipeline", "run the full pipeline (the default and only mode)");
  points->add_option("--out", pts_out, "report file (default stdout)");
  points->add_option("--svg", pts_svg, "render the result to this SVG file");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact small-instance ground truth");
  oracle->require_subcommand(1);
  std::string ora_in, ora_out;
  int ora_cap = kOracleCap;
  auto* ora_lines = oracle->add_subcommand("lines", "exact minimum line count");
  auto* ora_points = oracle->add_subcommand("points", "exact minimum point count");
  for (auto* sub : {ora_lines, ora_points}) {
    sub->add_option("--in", ora_in, "family file")->required();
    sub->add_option("--cap", ora_cap, "instance size cap");
    sub->add_option("--out", ora_out, "report file (default stdout)");
  }

  // check
  auto* check = app.add_subcommand("check", "run the invariant suite on a family file");
  std::string chk_in, chk_out;
  check->add_option("--in", chk_in, "family file")->required();
  check->add_option("--out", chk_out, "report file (default stdout)");

  // render
  auto* render = app.add_subcommand("render", "deterministic SVG of a family");
  std::string ren_in, ren_out;
  int ren_chords = 0;
  render->add_option("--in", ren_in, "family file")->required();
  render->add_option("--out", ren_out, "SVG output file")->required();
  render->add_option("--chords", ren_chords, "overlay the barycenter chord system for this k");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return run_gen(gen_gon, gen_seed, gen_n, gen_filter, gen_classes, gen_out);
    if (lines->parsed())
      return run_lines(lines_in, lines_k, lines_method, lines_nmax, lines_out, lines_svg);
    if (colorful->parsed()) return run_colorful(col_in, col_out, col_svg);
    if (points->parsed()) return run_points(pts_in, pts_rbound, pts_out, pts_svg);
    if (oracle->parsed()) {
      if (ora_lines->parsed()) return run_oracle_lines(ora_in, ora_cap, ora_out);
      return run_oracle_points(ora_in, ora_cap, ora_out);
    }
    if (check->parsed()) return run_check(chk_in, chk_out);
    if (render->parsed()) return run_render(ren_in, ren_chords, ren_out);
  } catch (const io_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const budget_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const precondition_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
