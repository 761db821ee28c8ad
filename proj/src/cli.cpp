#include "fusioncat/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <fstream>
#include <optional>

#include "fusioncat/pentagon.hpp"
#include "fusioncat/render.hpp"
#include "fusioncat/scalar_text.hpp"
#include "fusioncat/skein.hpp"
#include "fusioncat/solver.hpp"

namespace fusioncat {
namespace {

// Input problems (bad flags, unreadable or malformed datasets) exit with 2.
struct InputError : Error {
  using Error::Error;
};

struct Source {
  std::string builtin;
  std::string dataset;
};

struct Params {
  bool symbolic = true;
  int p1 = 1, p2 = 1;
};

Params parse_params(const std::string& text) {
  if (text == "symbolic") return {};
  auto comma = text.find(',');
  auto sign = [&](std::string_view s) {
    if (s == "+1" || s == "1") return 1;
    if (s == "-1") return -1;
    throw InputError("bad --params '" + text + "' (expected symbolic or +-1,+-1)");
  };
  if (comma == std::string::npos) sign("");
  return {false, sign(std::string_view(text).substr(0, comma)),
          sign(std::string_view(text).substr(comma + 1))};
}

FSymbolTable builtin_table(const std::string& name) {
  BuiltinRing which;
  try {
    which = builtin_ring_from_name(name);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  if (which == BuiltinRing::h3) return h3_table();
  return solve(builtin_ring(which)).front();
}

FSymbolTable load_source(const Source& src) {
  if (!src.dataset.empty()) {
    try {
      return load_table(src.dataset);
    } catch (const ParseError& e) {
      throw InputError(src.dataset + ":" + std::to_string(e.line()) + ":" +
                       std::to_string(e.column()) + ": " + e.reason());
    } catch (const Error& e) {
      throw InputError(src.dataset + ": " + e.what());
    }
  }
  return builtin_table(src.builtin.empty() ? "h3" : src.builtin);
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << bytes;
  if (!f) throw InputError("write failed for " + path);
}

void print_check(std::ostream& out, const CheckReport& r, std::size_t& failures) {
  out << r.name << ": checked=" << r.checked << " failures=" << r.failures.size();
  if (!r.note.empty()) out << " (" << r.note << ")";
  out << "\n";
  for (const auto& f : r.failures) out << "  " << f << "\n";
  failures += r.failures.size();
}

int cmd_verify(const Source& src, const Params& params, TrivialityRule rule, unsigned jobs,
               std::ostream& out) {
  FSymbolTable table = load_source(src);
  if (!params.symbolic) table = substitute_params(table, params.p1, params.p2);
  const FusionRing& ring = table.ring();
  out << "ring " << ring.name() << " entries=" << table.size() << " params="
      << (params.symbolic ? std::string("symbolic")
                          : std::to_string(params.p1) + "," + std::to_string(params.p2))
      << "\n";
  std::size_t failures = 0;

  auto orth = check_orthogonality(table);
  out << "orthogonality: blocks=" << orth.blocks << " failures=" << orth.failures.size() << "\n";
  for (const auto& f : orth.failures) out << "  " << f.detail << "\n";
  failures += orth.failures.size();

  print_check(out, check_triangle(table), failures);

  auto rep = verify_all(table, rule, jobs);
  out << summary_line(rep) << "\n";
  for (const auto& f : rep.failures) out << failure_line(ring, f) << "\n";
  failures += rep.failures.size();

  print_check(out, check_additional(table), failures);
  if (ring.name() == "h3")
    print_check(out, check_addtriv(table), failures);
  else
    out << "addtriv: skipped (h3 only)\n";

  out << "failures=" << failures << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_count(const std::string& builtin, std::ostream& out) {
  const FusionRing& ring = builtin_ring(builtin_ring_from_name(builtin.empty() ? "h3" : builtin));
  auto t0 = std::chrono::steady_clock::now();
  out << "ring " << ring.name() << "\n";
  out << "unknowns=" << enumerate_fkeys(ring).size() << "\n";
  out << "blocks:";
  for (auto [dim, count] : block_census(ring)) out << " " << dim << "x" << dim << "=" << count;
  out << "\n";
  for (auto rule : {TrivialityRule::none, TrivialityRule::unit, TrivialityRule::identical,
                    TrivialityRule::both}) {
    auto c = count_instances(ring, rule);
    out << "rule=" << triviality_name(rule) << " total=" << c.total << " trivial=" << c.trivial
        << " nontrivial=" << c.nontrivial << "\n";
  }
  out << "note: rule none counts every instance whose left-hand keys are admissible; "
         "unit drops instances with a unit among x, y, z, w; identical drops instances "
         "that hold formally\n";
  out << "seconds=" << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
      << "\n";
  return 0;
}

int cmd_render(const Source& src, const Params& params, const std::string& order,
               std::size_t width, const std::string& path, std::ostream& out) {
  if (params.symbolic) throw InputError("render needs concrete --params, e.g. +1,+1");
  if (path.empty()) throw InputError("render needs --out");
  RenderSpec spec;
  try {
    spec.order = parse_order(order, spec.seed);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  spec.width = width;
  FSymbolTable table = load_source(src);
  Image img = render_table(table, params.p1, params.p2, spec);
  write_file(path, to_ppm(img));
  out << "wrote " << path << " " << img.width << "x" << img.height << " entries=" << table.size()
      << " order=" << order << "\n";
  return 0;
}

int cmd_skein(std::ostream& out) {
  H3Constants k = h3_constants();
  out << "d=" << to_text_expanded(k.d) << " b=" << to_text_expanded(k.b)
      << " t=" << to_text_expanded(k.t) << " c1=" << to_text_expanded(k.c1)
      << " c2^2=" << to_text_expanded(k.c2 * k.c2) << "\n";
  SkeinParams p = h3_skein_params();
  SquarePop closed = square_pop_closed_form(p);
  bool agree = closed.cup == k.c1 && closed.tri == k.c2;
  out << "c2=" << to_text_expanded(k.c2) << " (~" << approx(k.c2) << ")\n";
  out << "closed form " << (agree ? "agrees" : "DISAGREES") << " with the Gram solve\n";
  return agree ? 0 : 1;
}

int cmd_solve(const std::string& builtin, const std::string& path, std::ostream& out) {
  BuiltinRing which = builtin_ring_from_name(builtin.empty() ? "fib" : builtin);
  const FusionRing& ring = builtin_ring(which);
  std::size_t total = enumerate_fkeys(ring).size();
  if (which == BuiltinRing::h3) {
    // Full re-derivation is out of reach; report how far propagation gets.
    PropagateResult res = propagate(seed(ring), false);
    out << report_text(res.report, total);
    CompareReport c = compare_to_dataset(res.table, h3_table());
    out << "dataset agreement: " << c.at_assignment << "/" << c.compared << " at (p1,p2)=("
        << c.assignment.first << "," << c.assignment.second << "), " << c.exact
        << " parameter free, " << c.up_to_sign << " up to sign\n";
    return c.all_match() ? 0 : 1;
  }
  SolveReport rep;
  auto tables = solve(ring, &rep);
  out << report_text(rep, total);
  out << "verified tables=" << tables.size() << "\n";
  std::string text;
  for (const auto& t : tables) text += serialize(t);
  if (path.empty())
    out << text;
  else
    write_file(path, text);
  return 0;
}

int cmd_export(const Source& src, const std::string& path, std::ostream& out) {
  std::string text = serialize(load_source(src));
  if (path.empty())
    out << text;
  else
    write_file(path, text);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact F-symbol tools for the Haagerup fusion category H3"};
  app.require_subcommand(1);

  Source src;
  std::string params_text = "symbolic", order = "sorted", out_path, triviality = "none";
  unsigned jobs = 1;
  std::size_t width = 0;
  const std::vector<std::string> rings{"h3", "z3", "z3_pointed", "fib", "fibonacci", "ising"};

  auto add_source = [&](CLI::App* sub) {
    auto* b = sub->add_option("--builtin", src.builtin, "built-in ring")
                  ->check(CLI::IsMember(rings));
    sub->add_option("--dataset", src.dataset, "dataset file")->excludes(b);
  };

  auto* verify = app.add_subcommand("verify", "run every consistency check on a table");
  add_source(verify);
  verify->add_option("--params", params_text, "symbolic or p1,p2 with entries +-1");
  verify->add_option("--jobs", jobs, "pentagon worker threads (0 = all cores)");
  verify->add_option("--triviality", triviality, "instances to skip")
      ->check(CLI::IsMember({"none", "unit", "identical", "both"}));

  auto* count = app.add_subcommand("count", "count unknowns and pentagon instances");
  count->add_option("--builtin", src.builtin, "built-in ring")->check(CLI::IsMember(rings));

  auto* render = app.add_subcommand("render", "write the table as a P6 pixel map");
  add_source(render);
  render->add_option("--params", params_text, "p1,p2 with entries +-1");
  render->add_option("--order", order, "sorted or seeded:<n>");
  render->add_option("--width", width, "pixels per row (default ceil(sqrt(n)))");
  render->add_option("--out", out_path, "output file")->required();

  auto* skein = app.add_subcommand("skein", "derive the square-popping constants");

  auto* solve_cmd = app.add_subcommand("solve", "solve the pentagon equations from seeds");
  solve_cmd->add_option("--builtin", src.builtin, "built-in ring")->check(CLI::IsMember(rings));
  solve_cmd->add_option("--out", out_path, "write solved tables here");

  auto* exp = app.add_subcommand("export", "write a table in the dataset format");
  add_source(exp);
  exp->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (render->parsed() && params_text == "symbolic") params_text = "+1,+1";
    Params params = parse_params(params_text);
    if (verify->parsed())
      return cmd_verify(src, params, triviality_from_name(triviality), jobs, out);
    if (count->parsed()) return cmd_count(src.builtin, out);
    if (render->parsed()) return cmd_render(src, params, order, width, out_path, out);
    if (skein->parsed()) return cmd_skein(out);
    if (solve_cmd->parsed()) return cmd_solve(src.builtin, out_path, out);
    if (exp->parsed()) return cmd_export(src, out_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace fusioncat
