// plength: command-line front end for presentation-length computations.
//
// Input arguments accept inline presentation text (anything starting with
// '<'), a file path, or "-" for stdin.  All outputs are deterministic byte
// streams: no timestamps, fixed row order, exact fractions next to
// 6-significant-digit decimals.  Exit codes: 0 success (capacity warnings
// are embedded in the report), 1 computation out of capacity, 2 usage or
// input errors.
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plength/coset_table.hpp"
#include "plength/estimate.hpp"
#include "plength/families.hpp"
#include "plength/lattice.hpp"
#include "plength/parse.hpp"
#include "plength/presentation.hpp"
#include "plength/rewrite.hpp"
#include "plength/simplify.hpp"
#include "plength/smith.hpp"
#include "plength/two_complex.hpp"

using namespace plength;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_stream(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_text_argument(const std::string& arg, char inline_marker) {
  if (!arg.empty() && arg[0] == inline_marker) return arg;
  if (arg == "-") return read_stream(std::cin);
  std::ifstream file(arg);
  if (!file) throw UsageError("cannot open input file: " + arg);
  return read_stream(file);
}

Presentation load_presentation(const std::string& arg) {
  return parse_presentation(read_text_argument(arg, '<'));
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + out_path);
  file << payload;
}

SimplifyBudget parse_budget(const std::string& text) {
  SimplifyBudget b;
  if (text.empty()) return b;
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError("budget must look like PASSES:MAXLEN, got: " + text);
  try {
    b.max_passes = std::stoi(text.substr(0, colon));
    b.max_total_length = std::stoll(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("budget must look like PASSES:MAXLEN, got: " + text);
  }
  return b;
}

// "3,-1;1,4" -> basis with columns (3,-1) and (1,4).  Entries are rationals.
LatticeBasis parse_basis(const std::string& text) {
  LatticeBasis b;
  std::stringstream columns(text);
  std::string column;
  while (std::getline(columns, column, ';')) {
    std::vector<Rational> entries;
    std::stringstream parts(column);
    std::string part;
    while (std::getline(parts, part, ',')) {
      if (part.find_first_not_of(" \t") == std::string::npos)
        throw UsageError("empty basis entry in: " + text);
      entries.push_back(parse_rational(part));
    }
    b.columns.push_back(std::move(entries));
  }
  b.rank = static_cast<int>(b.columns.size());
  for (const auto& col : b.columns)
    if (static_cast<int>(col.size()) != b.rank)
      throw UsageError("basis must be square; vectors are semicolon-separated, entries "
                       "comma-separated");
  return b;
}

// "1..50" or "7".
ParamRange parse_range(const std::string& text) {
  ParamRange r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoll(text);
    } else {
      r.lo = std::stoll(text.substr(0, dots));
      r.hi = std::stoll(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("range must look like LO..HI or N, got: " + text);
  }
  return r;
}

// "g=2..3,d=1..50" -> named ranges.
std::map<std::string, ParamRange> parse_grid(const std::string& text) {
  std::map<std::string, ParamRange> grid;
  std::stringstream entries(text);
  std::string entry;
  while (std::getline(entries, entry, ',')) {
    auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw UsageError("grid entries must look like name=LO..HI, got: " + entry);
    grid[entry.substr(0, eq)] = parse_range(entry.substr(eq + 1));
  }
  if (grid.empty()) throw UsageError("empty grid spec");
  return grid;
}

json rational_json(const Rational& q) {
  return json{{"fraction", fraction_string(q)}, {"decimal", decimal_string(q)}};
}

std::string json_payload(const json& j) { return j.dump(2) + "\n"; }

void check_format(const std::string& format, const std::vector<std::string>& allowed) {
  for (const std::string& a : allowed)
    if (format == a) return;
  std::string all;
  for (const std::string& a : allowed) all += (all.empty() ? "" : "|") + a;
  throw UsageError("unsupported --format " + format + " (expected " + all + ")");
}

// --- subcommand bodies -------------------------------------------------------

int run_tcost(const std::string& input, const std::string& format, const std::string& out) {
  Presentation p = load_presentation(input);
  if (format == "json") {
    write_output(out, json_payload(json{{"tcost", tcost(p)}}));
  } else {
    check_format(format, {"text", "json"});
    write_output(out, std::to_string(tcost(p)) + "\n");
  }
  return 0;
}

int run_triangulate(const std::string& input, const std::string& format, const std::string& out) {
  Presentation p = load_presentation(input);
  Triangulation tri = triangulate_full(p);
  if (format == "json") {
    json defs = json::array();
    for (const auto& [ordinal, word] : tri.aux_definitions)
      defs.push_back(json{{"generator", tri.presentation.generator_names[static_cast<size_t>(ordinal)]},
                          {"word", serialize_word(word, tri.presentation)}});
    write_output(out, json_payload(json{{"presentation", serialize_presentation(tri.presentation)},
                                        {"tcost", tcost(tri.presentation)},
                                        {"aux_definitions", defs}}));
  } else {
    check_format(format, {"text", "json"});
    write_output(out, serialize_presentation(tri.presentation) + "\n");
  }
  return 0;
}

int run_simplify(const std::string& input, const std::string& budget_text,
                 const std::string& format, const std::string& out) {
  Presentation p = load_presentation(input);
  SimplifyResult r = simplify_detailed(p, parse_budget(budget_text));
  if (format == "json") {
    write_output(out, json_payload(json{{"presentation", serialize_presentation(r.presentation)},
                                        {"tcost", tcost(r.presentation)},
                                        {"passes", r.passes},
                                        {"budget_exceeded", r.budget_exceeded}}));
  } else {
    check_format(format, {"text", "json"});
    write_output(out, serialize_presentation(r.presentation) + "\n");
  }
  return 0;
}

int run_subgroups(const std::string& input, int max_index, const std::string& format,
                  const std::string& out) {
  Presentation p = load_presentation(input);
  std::vector<CosetTable> tables = low_index_subgroups(p, max_index);
  if (format == "csv") {
    std::ostringstream os;
    os << "index,action\n";
    for (const CosetTable& t : tables) {
      json j = json::parse(t.to_json_string());
      os << t.index() << ",\"" << j["action"].dump() << "\"\n";
    }
    write_output(out, os.str());
  } else {
    check_format(format, {"json", "csv"});
    json subs = json::array();
    for (const CosetTable& t : tables) subs.push_back(json::parse(t.to_json_string()));
    write_output(out, json_payload(json{{"max_index", max_index},
                                        {"count", tables.size()},
                                        {"subgroups", subs}}));
  }
  return 0;
}

CosetTable table_from_args(const Presentation& p, const std::string& table_text,
                           const std::vector<std::string>& subgroup_words, int capacity) {
  if (!table_text.empty() && !subgroup_words.empty())
    throw UsageError("--table and --subgroup are mutually exclusive");
  if (!table_text.empty()) {
    CosetTable t = CosetTable::from_json_string(read_text_argument(table_text, '{'));
    t.validate(p);
    return t;
  }
  SubgroupSpec spec;
  for (const std::string& w : subgroup_words) spec.generator_words.push_back(parse_word(w, p));
  return todd_coxeter(p, spec, capacity);
}

int run_rewrite(const std::string& input, const std::string& table_text,
                const std::vector<std::string>& subgroup_words, int capacity, bool triangulate_first,
                bool simplify_after, const std::string& budget_text, const std::string& format,
                const std::string& out) {
  Presentation p = load_presentation(input);
  CosetTable t = table_from_args(p, table_text, subgroup_words, capacity);
  Presentation result;
  if (triangulate_first) {
    Triangulation tri = triangulate_full(p);
    CosetTable full = extend_table(t, tri.aux_definitions, tri.presentation.generator_count());
    result = rewrite_presentation(tri.presentation, full);
  } else {
    result = rewrite_presentation(p, t);
  }
  if (simplify_after) result = simplify(result, parse_budget(budget_text));
  if (format == "json") {
    write_output(out, json_payload(json{{"presentation", serialize_presentation(result)},
                                        {"index", t.index()},
                                        {"tcost", tcost(result)}}));
  } else {
    check_format(format, {"text", "json"});
    write_output(out, serialize_presentation(result) + "\n");
  }
  return 0;
}

int run_stable(const std::string& input, int max_index, const std::string& budget_text,
               const std::string& format, const std::string& out) {
  Presentation p = load_presentation(input);
  StableEstimate e = stable_upper_bound(p, max_index, parse_budget(budget_text));
  if (format == "csv") {
    std::ostringstream os;
    os << "index,raw_tcost,simplified_tcost,ratio,ratio_decimal,capacity_skipped,"
          "budget_exceeded\n";
    for (const EstimateRecord& r : e.all) {
      os << r.index << ',';
      if (r.capacity_skipped) {
        os << ",,,";
      } else {
        os << r.raw_cost << ',' << r.simplified_cost << ',' << fraction_string(r.ratio) << ','
           << decimal_string(r.ratio);
      }
      os << ',' << (r.capacity_skipped ? "true" : "false") << ','
         << (r.budget_exceeded ? "true" : "false") << '\n';
    }
    write_output(out, os.str());
  } else {
    check_format(format, {"json", "csv"});
    json records = json::array();
    for (const EstimateRecord& r : e.all) {
      json rec{{"index", r.index},
               {"capacity_skipped", r.capacity_skipped},
               {"budget_exceeded", r.budget_exceeded}};
      if (!r.capacity_skipped) {
        rec["raw_tcost"] = r.raw_cost;
        rec["simplified_tcost"] = r.simplified_cost;
        rec["ratio"] = rational_json(r.ratio);
      }
      records.push_back(rec);
    }
    json doc{{"max_index", max_index},
             {"base_tcost", e.base_cost},
             {"triangulated_tcost", e.triangulated_cost},
             {"any_capacity_skipped", e.any_capacity_skipped},
             {"best", json{{"index", e.best.index},
                           {"simplified_tcost", e.best.simplified_cost},
                           {"ratio", rational_json(e.best.ratio)}}},
             {"records", records}};
    write_output(out, json_payload(doc));
  }
  return 0;
}

int run_family(const std::string& name, const std::string& grid_text,
               const std::map<std::string, std::string>& range_flags, const std::string& format,
               const std::string& out) {
  std::map<std::string, ParamRange> grid;
  if (!grid_text.empty()) {
    if (!range_flags.empty())
      throw UsageError("--grid and per-parameter range flags are mutually exclusive");
    grid = parse_grid(grid_text);
  } else {
    for (const auto& [key, value] : range_flags) grid[key] = parse_range(value);
  }
  if (grid.empty()) throw UsageError("no parameter ranges given (use --grid or --g/--e/--d/--m/--n)");
  FamilySweep sweep = family_sweep(name, grid);
  if (format == "json") {
    json rows = json::array();
    for (const FamilySweepRow& r : sweep.rows) {
      json params = json::object();
      for (const auto& [k, v] : r.params) params[k] = v;
      rows.push_back(json{{"params", params},
                          {"index_or_degree", r.degree},
                          {"tcost", r.cost},
                          {"ratio", rational_json(r.ratio)},
                          {"adjusted_ratio", rational_json(r.adjusted_ratio)}});
    }
    write_output(out, json_payload(json{{"family", sweep.family},
                                        {"commensurability", sweep.commensurability},
                                        {"min_ratio", rational_json(sweep.min_ratio)},
                                        {"argmin", sweep.argmin},
                                        {"rows", rows}}));
  } else {
    check_format(format, {"csv", "json"});
    write_output(out, sweep_to_csv(sweep));
  }
  return 0;
}

int run_lll(const std::string& basis_text, const std::string& delta_text,
            const std::string& weights_text, const std::string& format, const std::string& out) {
  LatticeBasis b = parse_basis(basis_text);
  Rational delta = delta_text.empty() ? Rational(3, 4) : parse_rational(delta_text);
  WeightedOneNorm norm;
  if (weights_text.empty()) {
    norm.weights.assign(static_cast<size_t>(b.rank), Rational(1));
  } else {
    std::stringstream parts(weights_text);
    std::string part;
    while (std::getline(parts, part, ',')) norm.weights.push_back(parse_rational(part));
  }
  LatticeBasis reduced = lll_reduce(b, delta);
  BasisCertificate cert = reduced_basis_certificate(reduced, norm, delta);
  check_format(format, {"json"});
  json cols = json::array();
  for (const auto& col : reduced.columns) {
    json v = json::array();
    for (const Rational& x : col) v.push_back(fraction_string(x));
    cols.push_back(v);
  }
  write_output(out, json_payload(json{{"rank", reduced.rank},
                                      {"covolume", rational_json(cert.covolume)},
                                      {"reduced_basis", cols},
                                      {"delta", fraction_string(delta)},
                                      {"certificate",
                                       json{{"product_of_norms", rational_json(cert.product_of_norms)},
                                            {"epsilon_witness", rational_json(cert.epsilon_witness)},
                                            {"epsilon_required", rational_json(cert.epsilon_required)},
                                            {"passed", true}}}}));
  return 0;
}

int run_contract(const std::string& layout_name, const std::string& sub_text, int sweep,
                 const std::string& format, const std::string& out) {
  CellLayout layout = named_layout(layout_name);
  LatticeBasis sub = parse_basis(sub_text);
  if (sub.rank != 2) throw UsageError("--sub must describe a rank-2 sublattice");
  if (sweep > 0) {
    std::vector<ContractionSweepRow> rows = contraction_sweep(layout, sub, sweep);
    if (format == "json") {
      json jrows = json::array();
      for (const ContractionSweepRow& r : rows)
        jrows.push_back(json{{"k", r.k},
                             {"total", r.total},
                             {"interior", r.interior},
                             {"boundary", r.boundary},
                             {"boundary_ratio", rational_json(r.boundary_ratio)}});
      write_output(out, json_payload(jrows));
    } else {
      check_format(format, {"csv", "json"});
      write_output(out, contraction_sweep_csv(rows));
    }
    return 0;
  }
  DomainContraction dc = fundamental_domain_contraction(layout, sub);
  if (format == "json") {
    write_output(out, json_payload(json{{"total", dc.total_triangles},
                                        {"interior", dc.interior_contracted},
                                        {"boundary", dc.boundary_remaining}}));
  } else {
    check_format(format, {"text", "json"});
    write_output(out, "total=" + std::to_string(dc.total_triangles) +
                          " interior=" + std::to_string(dc.interior_contracted) + "\n");
  }
  return 0;
}

int run_abelianize(const std::string& input, const std::string& format, const std::string& out) {
  Presentation p = load_presentation(input);
  SmithForm s = smith_normal_form(abelianize(p));
  check_format(format, {"json"});
  json diagonal = json::array();
  for (const BigInt& d : s.diagonal) diagonal.push_back(d.str());
  write_output(out, json_payload(json{{"betti", s.betti},
                                      {"rank", s.rank},
                                      {"diagonal", diagonal},
                                      {"torsion_order", s.torsion_order.str()},
                                      {"torsion_lower_bound", torsion_lower_bound(p)},
                                      {"torsion_bound_holds", torsion_bound_holds(p)}}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"presentation-length toolkit: triangle costs, subgroup rewriting, and "
               "stable upper bounds for finitely presented groups"};
  app.require_subcommand(1);

  std::string out;
  app.add_option("--out", out, "output path (default stdout)")->capture_default_str();

  // tcost
  auto* c_tcost = app.add_subcommand("tcost", "triangle cost of a presentation");
  std::string tcost_input, tcost_format = "text";
  c_tcost->add_option("input", tcost_input, "presentation: inline '<...>', path, or -")->required();
  c_tcost->add_option("--format", tcost_format, "text|json");

  // triangulate
  auto* c_tri = app.add_subcommand("triangulate", "fan-triangulate every long relator");
  std::string tri_input, tri_format = "text";
  c_tri->add_option("input", tri_input, "presentation: inline '<...>', path, or -")->required();
  c_tri->add_option("--format", tri_format, "text|json");

  // simplify
  auto* c_simp = app.add_subcommand("simplify", "cost-monotone presentation simplification");
  std::string simp_input, simp_budget, simp_format = "text";
  c_simp->add_option("input", simp_input, "presentation: inline '<...>', path, or -")->required();
  c_simp->add_option("--budget", simp_budget, "PASSES:MAXLEN simplification budget");
  c_simp->add_option("--format", simp_format, "text|json");

  // subgroups
  auto* c_subs = app.add_subcommand("subgroups", "conjugacy classes of low-index subgroups");
  std::string subs_input, subs_format = "json";
  int subs_max_index = 2;
  c_subs->add_option("input", subs_input, "presentation: inline '<...>', path, or -")->required();
  c_subs->add_option("--max-index", subs_max_index, "search depth")->capture_default_str();
  c_subs->add_option("--format", subs_format, "json|csv");

  // rewrite
  auto* c_rw = app.add_subcommand("rewrite", "subgroup presentation along a coset table");
  std::string rw_input, rw_table, rw_budget, rw_format = "text";
  std::vector<std::string> rw_subgroup;
  int rw_capacity = 100000;
  bool rw_triangulate = false, rw_simplify = false;
  c_rw->add_option("input", rw_input, "presentation: inline '<...>', path, or -")->required();
  c_rw->add_option("--table", rw_table, "coset table: inline '{...}' JSON or path");
  c_rw->add_option("--subgroup", rw_subgroup, "subgroup generator words (repeatable)");
  c_rw->add_option("--capacity", rw_capacity, "coset enumeration capacity")->capture_default_str();
  c_rw->add_flag("--triangulate", rw_triangulate, "rewrite the triangulated presentation");
  c_rw->add_flag("--simplify", rw_simplify, "simplify the rewritten presentation");
  c_rw->add_option("--budget", rw_budget, "PASSES:MAXLEN simplification budget");
  c_rw->add_option("--format", rw_format, "text|json");

  // stable
  auto* c_stable = app.add_subcommand("stable", "upper-bound search over low-index subgroups");
  std::string stable_input, stable_budget, stable_format = "json";
  int stable_max_index = 2;
  c_stable->add_option("input", stable_input, "presentation: inline '<...>', path, or -")->required();
  c_stable->add_option("--max-index", stable_max_index, "search depth")->capture_default_str();
  c_stable->add_option("--budget", stable_budget, "PASSES:MAXLEN simplification budget");
  c_stable->add_option("--format", stable_format, "json|csv");

  // family
  auto* c_family = app.add_subcommand("family", "parametric family sweep");
  std::string family_name, family_grid, family_format = "csv";
  std::map<std::string, std::string> family_ranges;
  c_family->add_option("name", family_name, "surface|seifert|figure8|whitehead|magic|d2")
      ->required();
  c_family->add_option("--grid", family_grid, "e.g. g=2..3,d=1..50");
  for (const char* param : {"g", "e", "d", "m", "n"})
    c_family->add_option_function<std::string>(
        std::string("--") + param,
        [&family_ranges, param](const std::string& v) { family_ranges[param] = v; },
        std::string("range LO..HI or N for parameter ") + param);
  c_family->add_option("--format", family_format, "csv|json");

  // lll
  auto* c_lll = app.add_subcommand("lll", "exact lattice reduction with certificate");
  std::string lll_basis, lll_delta, lll_weights, lll_format = "json";
  c_lll->add_option("--basis", lll_basis, "columns 'a,b;c,d;...'")->required();
  c_lll->add_option("--delta", lll_delta, "Lovasz parameter as a fraction (default 3/4)");
  c_lll->add_option("--weights", lll_weights, "weighted 1-norm weights 'a1,a2,...'");
  c_lll->add_option("--format", lll_format, "json");

  // contract
  auto* c_contract = app.add_subcommand("contract", "fundamental-domain triangle contraction");
  std::string contract_layout = "fig8proof", contract_sub, contract_format;
  int contract_sweep = 0;
  c_contract->add_option("--layout", contract_layout, "cell layout name")->capture_default_str();
  c_contract->add_option("--sub", contract_sub, "sublattice basis 'a,b;c,d'")->required();
  c_contract->add_option("--sweep", contract_sweep, "also contract dilates k=1..K (CSV)");
  c_contract->add_option("--format", contract_format, "text|csv|json");

  // abelianize
  auto* c_ab = app.add_subcommand("abelianize", "Smith normal form of the exponent matrix");
  std::string ab_input, ab_format = "json";
  c_ab->add_option("input", ab_input, "presentation: inline '<...>', path, or -")->required();
  c_ab->add_option("--format", ab_format, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (contract_format.empty()) contract_format = contract_sweep > 0 ? "csv" : "text";

  try {
    if (app.got_subcommand(c_tcost)) return run_tcost(tcost_input, tcost_format, out);
    if (app.got_subcommand(c_tri)) return run_triangulate(tri_input, tri_format, out);
    if (app.got_subcommand(c_simp)) return run_simplify(simp_input, simp_budget, simp_format, out);
    if (app.got_subcommand(c_subs))
      return run_subgroups(subs_input, subs_max_index, subs_format, out);
    if (app.got_subcommand(c_rw))
      return run_rewrite(rw_input, rw_table, rw_subgroup, rw_capacity, rw_triangulate, rw_simplify,
                         rw_budget, rw_format, out);
    if (app.got_subcommand(c_stable))
      return run_stable(stable_input, stable_max_index, stable_budget, stable_format, out);
    if (app.got_subcommand(c_family))
      return run_family(family_name, family_grid, family_ranges, family_format, out);
    if (app.got_subcommand(c_lll))
      return run_lll(lll_basis, lll_delta, lll_weights, lll_format, out);
    if (app.got_subcommand(c_contract))
      return run_contract(contract_layout, contract_sub, contract_sweep, contract_format, out);
    if (app.got_subcommand(c_ab)) return run_abelianize(ab_input, ab_format, out);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
