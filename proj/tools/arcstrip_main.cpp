// Command-line front end.  Subcommands map onto the library layers:
// check/nc/cotorsion/tstructure/basis work on strip presentations,
// "ng check" on chord presentations, "oracle sweep" cross-checks the
// symbolic routines against the finite-window oracles, and render
// writes an SVG diagram.  Exit codes: 0 success or property holds,
// 1 property fails, 2 bad input, 3 internal invariant violation.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arcstrip/arcset.hpp"
#include "arcstrip/classify.hpp"
#include "arcstrip/ng.hpp"
#include "arcstrip/oracle.hpp"
#include "arcstrip/presentation.hpp"
#include "arcstrip/render.hpp"

namespace {

using namespace arcstrip;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// t-structure parameters admit the infinite end of their side.
i64 parse_param(const std::string& s) {
  if (s == "inf") return kInf;
  if (s == "-inf") return -kInf;
  size_t pos = 0;
  i64 v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InputError("expected an integer, inf, or -inf, got '" + s + "'");
  }
  if (pos != s.size())
    throw InputError("expected an integer, inf, or -inf, got '" + s + "'");
  if (v >= kInf || v <= -kInf) throw InputError("parameter out of range");
  return v;
}

int run_oracle_sweep(i64 a, i64 b, std::uint32_t seed) {
  Window w(a, b);
  std::vector<ArcOrEdge> pool = window_arcs(w);
  std::mt19937 rng(seed);
  std::cout << "seed: " << seed << "\n";

  std::size_t pairs = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      ++pairs;
      if (crosses(pool[i], pool[j]) != geom_crossing_oracle(pool[i], pool[j]))
        throw InternalInvariantError("crossing oracle disagrees at " +
                                     pool[i].str() + " x " + pool[j].str());
    }
  std::cout << "crossing pairs checked: " << pairs << "\n";

  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t checks = 0;
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<ArcOrEdge> arcs;
    int k = 1 + int(rng() % 6);
    for (int i = 0; i < k; ++i) arcs.push_back(pool[pick(rng)]);
    ArcSet t = ArcSet::of(arcs);
    ArcSet n = t.nc();
    for (const ArcOrEdge& v : pool) {
      ++checks;
      if (n.member(v) != member_nc_oracle(t, v))
        throw InternalInvariantError("nc membership oracle disagrees at " +
                                     v.str());
    }
  }
  std::cout << "nc membership checks: " << checks << "\n";
  std::cout << "mismatches: 0\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus for finitely presented arc sets in the marked strip"};
  app.require_subcommand(1);
  int rc = 0;

  // check FILE
  std::string check_file;
  auto* sc_check = app.add_subcommand("check", "classify a presentation");
  sc_check->add_option("file", check_file, "presentation file")->required();
  sc_check->callback([&] {
    ArcSet t = parse_presentation(read_file(check_file));
    std::cout << classify_report(t).str();
  });

  // nc FILE
  std::string nc_file;
  auto* sc_nc = app.add_subcommand("nc", "print the noncrossing complement");
  sc_nc->add_option("file", nc_file, "presentation file")->required();
  sc_nc->callback([&] {
    ArcSet t = parse_presentation(read_file(nc_file));
    std::cout << serialize_presentation(t.nc());
  });

  // cotorsion X_FILE [Y_FILE]
  std::string cot_x, cot_y;
  auto* sc_cot = app.add_subcommand("cotorsion", "test a cotorsion pair");
  sc_cot->add_option("x_file", cot_x, "first part")->required();
  sc_cot->add_option("y_file", cot_y, "second part (default: nc of the first)");
  sc_cot->callback([&] {
    ArcSet x = parse_presentation(read_file(cot_x));
    ArcSet y = cot_y.empty() ? x.nc() : parse_presentation(read_file(cot_y));
    if (cot_y.empty()) {
      std::cout << "partner:\n" << serialize_presentation(y);
    }
    bool v = is_cotorsion(x, y);
    std::cout << "cotorsion: " << (v ? "yes" : "no") << "\n";
    rc = v ? 0 : 1;
  });

  // tstructure --p P --q Q --side {1,2}
  std::string ts_p, ts_q;
  int ts_side = 0;
  auto* sc_ts = app.add_subcommand("tstructure", "build an aperture t-structure");
  sc_ts->add_option("--p", ts_p, "first parameter (integer, inf, or -inf)")->required();
  sc_ts->add_option("--q", ts_q, "second parameter (integer, inf, or -inf)")->required();
  sc_ts->add_option("--side", ts_side, "1 = left aperture, 2 = right aperture")->required();
  sc_ts->callback([&] {
    if (ts_side != 1 && ts_side != 2)
      throw InputError("--side must be 1 (left) or 2 (right)");
    TSide side = ts_side == 1 ? TSide::LeftAperture : TSide::RightAperture;
    auto [x, y] = t_structure(parse_param(ts_p), parse_param(ts_q), side);
    std::cout << "part x:\n" << serialize_presentation(x);
    std::cout << "part y:\n" << serialize_presentation(y);
    std::cout << "heart:";
    for (const ArcOrEdge& u : heart_of(x, y).enumerate_all())
      std::cout << " " << u.str();
    std::cout << "\n";
  });

  // basis FILE --arc LITERAL
  std::string basis_file, basis_arc;
  auto* sc_basis = app.add_subcommand("basis", "minimal basis for the crossers of an arc");
  sc_basis->add_option("file", basis_file, "presentation file")->required();
  sc_basis->add_option("--arc", basis_arc, "target arc literal")->required();
  sc_basis->callback([&] {
    ArcSet t = parse_presentation(read_file(basis_file));
    ArcOrEdge u = parse_arc(basis_arc);
    for (const ArcOrEdge& s : tau_basis_of_crossers(t, u))
      std::cout << s.str() << "\n";
  });

  // oracle sweep --window A B [--seed S]
  auto* sc_oracle = app.add_subcommand("oracle", "finite-window cross checks");
  sc_oracle->require_subcommand(1);
  std::vector<i64> sweep_win;
  std::uint32_t sweep_seed = 1;
  auto* sc_sweep = sc_oracle->add_subcommand("sweep", "compare symbolic routines with the oracles");
  sc_sweep->add_option("--window", sweep_win, "index window a b")->expected(2)->required();
  sc_sweep->add_option("--seed", sweep_seed, "random seed (default 1)");
  sc_sweep->callback([&] { rc = run_oracle_sweep(sweep_win[0], sweep_win[1], sweep_seed); });

  // ng check FILE --base LITERAL
  auto* sc_ng = app.add_subcommand("ng", "chord-model commands");
  sc_ng->require_subcommand(1);
  std::string ng_file, ng_base;
  auto* sc_ngcheck = sc_ng->add_subcommand("check", "torsion test in a cluster sector");
  sc_ngcheck->add_option("file", ng_file, "chord presentation file")->required();
  sc_ngcheck->add_option("--base", ng_base, "connecting arc cutting out the sector")->required();
  sc_ngcheck->callback([&] {
    NgArcSet t = parse_ng_presentation(read_file(ng_file));
    ArcOrEdge base = parse_arc(ng_base);
    bool v = ng_torsion_check(t, base);
    std::cout << "torsion: " << (v ? "yes" : "no") << "\n";
    rc = v ? 0 : 1;
  });

  // render FILE --window A B -o OUT.svg
  std::string render_file, render_out;
  std::vector<i64> render_win;
  auto* sc_render = app.add_subcommand("render", "write an SVG diagram");
  sc_render->add_option("file", render_file, "presentation file")->required();
  sc_render->add_option("--window", render_win, "index window a b")->expected(2)->required();
  sc_render->add_option("-o,--out", render_out, "output SVG path")->required();
  sc_render->callback([&] {
    ArcSet t = parse_presentation(read_file(render_file));
    RenderSpec spec{Window(render_win[0], render_win[1])};
    std::string svg = render_svg(t, spec);
    std::ofstream out(render_out, std::ios::binary);
    if (!out) throw InputError("cannot write file '" + render_out + "'");
    out << svg;
    std::cout << "wrote " << render_out << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
