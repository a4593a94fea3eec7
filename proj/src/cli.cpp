#include "infcc/cli.hpp"

#include <iomanip>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "infcc/cc_direct.hpp"
#include "infcc/error.hpp"
#include "infcc/exchange.hpp"
#include "infcc/reduction.hpp"
#include "infcc/serialize.hpp"
#include "infcc/tilings.hpp"
#include "infcc/verify.hpp"

namespace infcc::cli {

namespace {

std::vector<int> parse_ints(const std::string& s, std::size_t count, const std::string& flag) {
  std::vector<int> v;
  static const std::regex num(R"(\s*(-?\d+)\s*)");
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, num)) throw Error(ErrorCode::kParse, "bad value for " + flag + ": '" + s + "'");
    v.push_back(std::stoi(m[1]));
  }
  if (v.size() != count) {
    throw Error(ErrorCode::kParse, flag + " expects " + std::to_string(count) + " comma-separated integers");
  }
  return v;
}

Arc parse_arc(const std::string& s) {
  const auto v = parse_ints(s, 2, "--arc");
  if (v[0] > v[1] - 2) throw Error(ErrorCode::kParse, "--arc needs m <= n-2");
  return Arc{v[0], v[1]};
}

struct Common {
  std::string triangulation;
  std::vector<std::string> flips;
  std::string format = "text";

  Triangulation build() const {
    TriangulationSpec spec = parse_triangulation_spec(triangulation);
    for (const auto& f : flips) spec.flips.push_back(parse_arc(f));
    return Triangulation::build(spec);
  }
};

void add_triangulation(CLI::App* app, Common& c) {
  app->add_option("--triangulation,-t", c.triangulation,
                  "fountain:N, zigzag:A[:WORD], polygon:LO-HI[:a.b,c.d] or a JSON spec")
      ->required();
  app->add_option("--flip", c.flips, "member to flip, m,n (repeatable, applied in order)");
}

std::string cell_text(const TilingWindow& W, int i, int j) { return W.has(i, j) ? W.at(i, j).str() : ""; }

void print_tiling(const TilingWindow& W, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json cells = json::array();
    for (const auto& [c, v] : W.values) cells.push_back({{"i", c.first}, {"j", c.second}, {"r", to_json(v)}});
    out << json{{"i", {W.i0, W.i1}}, {"j", {W.j0, W.j1}}, {"half_plane", W.half_plane}, {"cells", cells}}.dump() << "\n";
    return;
  }
  if (format == "csv") {
    out << "j\\i";
    for (int i = W.i0; i <= W.i1; ++i) out << "," << i;
    out << "\n";
    for (int j = W.j1; j >= W.j0; --j) {
      out << j;
      for (int i = W.i0; i <= W.i1; ++i) out << "," << cell_text(W, i, j);
      out << "\n";
    }
    return;
  }
  std::size_t width = 3;
  for (const auto& [c, v] : W.values) width = std::max(width, v.str().size());
  out << std::setw(static_cast<int>(width) + 1) << "j\\i";
  for (int i = W.i0; i <= W.i1; ++i) out << std::setw(static_cast<int>(width) + 1) << i;
  out << "\n";
  for (int j = W.j1; j >= W.j0; --j) {
    out << std::setw(static_cast<int>(width) + 1) << j;
    for (int i = W.i0; i <= W.i1; ++i) out << std::setw(static_cast<int>(width) + 1) << cell_text(W, i, j);
    out << "\n";
  }
}

json violations_json(const std::vector<Violation>& v) {
  json out = json::array();
  for (const auto& x : v) {
    out.push_back({{"relation", x.relation}, {"cell", {x.cell.first, x.cell.second}}, {"lhs", to_json(x.lhs)}, {"rhs", to_json(x.rhs)}});
  }
  return out;
}

json flip_json(const FlipResult& f) {
  json c = json::array(), cp = json::array();
  for (const auto& s : f.middle_c) c.push_back(to_json(s));
  for (const auto& s : f.middle_c_prime) cp.push_back(to_json(s));
  return {{"replaced", to_json(f.replaced)},
          {"replacement", to_json(f.replacement)},
          {"quad", f.quad},
          {"middle_c", c},
          {"middle_c_prime", cp},
          {"triangulation", to_json(f.new_triangulation.spec())}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster characters, flips, reductions and SL2-tilings for type A-infinity arc models", "infcc"};
  app.require_subcommand(1);

  Common c;
  std::string arc, window, bbox, start = "0,2", word, suite = "all", size = "small";
  bool check = false;
  std::uint64_t seed = 20240611;

  auto* cmd_cc = app.add_subcommand("cc", "cluster character of an arc");
  add_triangulation(cmd_cc, c);
  cmd_cc->add_option("--arc", arc, "m,n")->required();
  cmd_cc->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_flip = app.add_subcommand("flip", "flip a member arc");
  add_triangulation(cmd_flip, c);
  cmd_flip->add_option("--arc", arc, "m,n")->required();
  cmd_flip->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_validate = app.add_subcommand("validate", "check crossings and maximality on a window");
  add_triangulation(cmd_validate, c);
  cmd_validate->add_option("--window", window, "lo,hi")->required();

  auto* cmd_reduce = app.add_subcommand("reduce", "Calabi-Yau reduction at a member arc");
  add_triangulation(cmd_reduce, c);
  cmd_reduce->add_option("--arc", arc, "m,n")->required();

  auto* cmd_tiling = app.add_subcommand("tiling", "SL2-tiling of a locally finite triangulation");
  add_triangulation(cmd_tiling, c);
  cmd_tiling->add_option("--window", window, "lo,hi")->required();
  cmd_tiling->add_flag("--check", check, "verify the determinant relations and the second oracle");
  cmd_tiling->add_option("--format", c.format)->check(CLI::IsMember({"text", "ascii", "csv", "json"}));

  auto* cmd_frontier = app.add_subcommand("frontier", "SL2-tiling of the plane from a frontier of 1's");
  cmd_frontier->add_option("--word", word, "steps R = (i, j+1), U = (i-1, j)")->required();
  cmd_frontier->add_option("--start", start, "i,j of the first frontier cell");
  cmd_frontier->add_option("--bbox", bbox, "i0,j0,i1,j1")->required();
  cmd_frontier->add_flag("--check", check, "verify determinants and compare with the zig-zag tiling");
  cmd_frontier->add_option("--format", c.format)->check(CLI::IsMember({"text", "ascii", "csv", "json"}));

  auto* cmd_verify = app.add_subcommand("verify", "run acceptance suites");
  cmd_verify->add_option("--suite", suite, "all or 1..10");
  cmd_verify->add_option("--size", size)->check(CLI::IsMember({"small", "full"}));
  cmd_verify->add_option("--seed", seed);

  auto* cmd_quiver = app.add_subcommand("quiver", "quiver of the members inside a window");
  add_triangulation(cmd_quiver, c);
  cmd_quiver->add_option("--window", window, "lo,hi")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (cmd_cc->parsed()) {
      const Triangulation T = c.build();
      const Arc d = parse_arc(arc);
      const LaurentPoly p = cc(T, d);
      if (c.format == "json") {
        out << json{{"arc", to_json(d)}, {"cc", to_json(p)}, {"text", p.to_text()}}.dump() << "\n";
      } else {
        out << p.to_text() << "\n";
      }
    } else if (cmd_flip->parsed()) {
      const FlipResult f = c.build().flip(parse_arc(arc));
      if (c.format == "json") {
        out << flip_json(f).dump() << "\n";
      } else {
        out << "replacement " << to_string(f.replacement) << "\n"
            << "quad " << f.quad[0] << " " << f.quad[1] << " " << f.quad[2] << " " << f.quad[3] << "\n"
            << "c " << to_string(f.middle_c[0]) << " " << to_string(f.middle_c[1]) << "\n"
            << "c' " << to_string(f.middle_c_prime[0]) << " " << to_string(f.middle_c_prime[1]) << "\n";
      }
    } else if (cmd_validate->parsed()) {
      const auto w = parse_ints(window, 2, "--window");
      const Diagnosis d = c.build().validate_window(w[0], w[1]);
      json pairs = json::array(), addable = json::array(), outside = json::array();
      for (const auto& [a, b] : d.crossing_pairs) pairs.push_back({to_json(a), to_json(b)});
      for (const auto& a : d.addable) addable.push_back(to_json(a));
      for (const auto& a : d.out_of_model) outside.push_back(to_json(a));
      out << json{{"valid", d.valid()}, {"crossing_pairs", pairs}, {"addable", addable}, {"out_of_model", outside}}.dump()
          << "\n";
    } else if (cmd_reduce->parsed()) {
      const Triangulation T = c.build();
      const Arc t = parse_arc(arc);
      const USpec U = u_of(T, t);
      const ReducedModel R = reduce(T, t);
      ClusterMap ambient(T), reduced(R.triangulation());
      long checked = 0, failed = 0;
      for (int m = t.m; m <= t.n; ++m) {
        for (int n = m + 2; n <= t.n; ++n) {
          const Arc d{m, n};
          if (!spans(t, d)) continue;
          ++checked;
          const LaurentPoly bar = ambient.cc(d).substitute_unit_if([&](const Arc& a) { return U.contains(a); });
          if (bar != reduced.cc(d)) ++failed;
        }
      }
      json diags = json::array();
      for (const auto& a : R.polygon.diagonals()) diags.push_back(to_json(a));
      out << json{{"polygon", {R.polygon.lo(), R.polygon.hi()}},
                  {"diagonals", diags},
                  {"rank", R.rank},
                  {"specialization_checked", checked},
                  {"specialization_failed", failed}}
                 .dump()
          << "\n";
      if (failed) return 1;
    } else if (cmd_tiling->parsed()) {
      const Triangulation T = c.build();
      const auto w = parse_ints(window, 2, "--window");
      const TilingWindow W = tiling_window(T, w[0], w[1]);
      print_tiling(W, c.format, out);
      if (check) {
        const auto v = verify_sl2(W);
        const bool agree = tiling_window_by_recurrence(T, w[0], w[1]).values == W.values;
        err << json{{"violations", violations_json(v)}, {"oracles_agree", agree}}.dump() << "\n";
        if (!v.empty() || !agree) return 1;
      }
    } else if (cmd_frontier->parsed()) {
      const auto s = parse_ints(start, 2, "--start");
      const auto b = parse_ints(bbox, 4, "--bbox");
      const Frontier F{word, {s[0], s[1]}};
      const TilingWindow W = extend_frontier(F, b[0], b[1], b[2], b[3]);
      print_tiling(W, c.format, out);
      if (check) {
        const auto v = verify_sl2(W);
        const Triangulation T = frontier_to_triangulation(F);
        const int lo = std::min(b[0], b[1]), hi = std::max(b[2], b[3]);
        const TilingWindow R = tiling_window(T, lo, hi);
        long compared = 0, differ = 0;
        for (const auto& [cell, val] : determined_region(F, b[0], b[1], b[2], b[3])) {
          if (!R.has(cell.first, cell.second)) continue;
          ++compared;
          if (W.at(cell.first, cell.second) != R.at(cell.first, cell.second)) ++differ;
        }
        err << json{{"violations", violations_json(v)},
                    {"triangulation", to_json(T.spec())},
                    {"compared", compared},
                    {"differ", differ}}
                   .dump()
            << "\n";
        if (!v.empty() || differ) return 1;
      }
    } else if (cmd_verify->parsed()) {
      const SuiteSize sz = size == "full" ? SuiteSize::kFull : SuiteSize::kSmall;
      std::vector<SuiteResult> results;
      if (suite == "all") {
        results = run_all(sz, seed);
      } else {
        results.push_back(run_suite(parse_ints(suite, 1, "--suite")[0], sz, seed));
      }
      bool ok = true;
      for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail << "\n";
        ok = ok && r.passed;
      }
      return ok ? 0 : 1;
    } else if (cmd_quiver->parsed()) {
      const auto w = parse_ints(window, 2, "--window");
      const Quiver Q = c.build().quiver(w[0], w[1]);
      json verts = json::array(), arrows = json::array();
      for (const auto& v : Q.vertices) verts.push_back(to_json(v));
      for (const auto& [s, t] : Q.arrows) arrows.push_back({to_json(s), to_json(t)});
      out << json{{"vertices", verts}, {"arrows", arrows}, {"loops", Q.has_loops()}, {"two_cycles", Q.has_two_cycles()}}.dump()
          << "\n";
    }
  } catch (const Error& e) {
    if (e.is_refusal()) {
      err << (e.detail().empty() ? json{{"refused", to_string(e.code())}} : e.detail()).dump() << "\n";
      return 2;
    }
    err << json{{"error", to_string(e.code())}, {"message", e.what()}, {"detail", e.detail()}}.dump() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << json{{"error", "Parse"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace infcc::cli
