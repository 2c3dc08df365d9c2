#include "plength/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace plength {

FamilyPoint surface(long long g) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  if (g > 100000) throw std::invalid_argument("genus out of supported range");
  FamilyPoint fp;
  fp.family = "surface";
  fp.params = {{"g", g}};
  Presentation& p = fp.presentation;
  Word r;
  for (long long i = 1; i <= g; ++i) {
    p.generator_names.push_back("x" + std::to_string(i));
    p.generator_names.push_back("y" + std::to_string(i));
    Letter x = static_cast<Letter>(2 * i - 1), y = static_cast<Letter>(2 * i);
    r.insert(r.end(), {x, y, -x, -y});
  }
  p.relators.push_back(std::move(r));
  p.validate();
  fp.has_predicted_cost = true;
  fp.predicted_cost = 4 * g - 2;
  return fp;
}

Rational surface_cover_ratio(long long g, long long d) {
  if (g < 2) throw std::invalid_argument("cover ratio requires genus at least 2");
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  return Rational(4 * (d * (g - 1) + 1) - 2, d);
}

long long punctured_surface_relative(long long g, long long b) {
  if (g < 0 || b <= 0 || 2 * g - 2 + b <= 0)
    throw std::invalid_argument("punctured surface requires b > 0 and 2g - 2 + b > 0");
  return 4 * g - 4 + 2 * b;
}

FamilyPoint seifert(long long g, long long e) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  if (g > 100000 || e > 1000000 || e < -1000000)
    throw std::invalid_argument("parameters out of supported range");
  FamilyPoint fp;
  fp.family = "seifert";
  fp.params = {{"g", g}, {"e", e}};
  Presentation& p = fp.presentation;
  for (long long i = 1; i <= g; ++i) {
    p.generator_names.push_back("x" + std::to_string(i));
    p.generator_names.push_back("y" + std::to_string(i));
  }
  p.generator_names.push_back("z");
  Letter z = static_cast<Letter>(2 * g + 1);
  Word main;
  for (long long i = 1; i <= g; ++i) {
    Letter x = static_cast<Letter>(2 * i - 1), y = static_cast<Letter>(2 * i);
    main.insert(main.end(), {x, y, -x, -y});
  }
  for (long long k = 0; k < (e < 0 ? -e : e); ++k) main.push_back(e > 0 ? z : -z);
  p.relators.push_back(std::move(main));
  for (long long i = 1; i <= g; ++i) {
    Letter x = static_cast<Letter>(2 * i - 1), y = static_cast<Letter>(2 * i);
    p.relators.push_back({x, z, -x, -z});
    p.relators.push_back({y, z, -y, -z});
  }
  p.validate();
  fp.has_predicted_cost = true;
  fp.predicted_cost = 8 * g + (e < 0 ? -e : e) - 2;
  return fp;
}

Rational seifert_cover_ratio(long long g, long long e, long long d) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  if (d < 1) throw std::invalid_argument("degree parameter must be at least 1");
  long long abs_e = e < 0 ? -e : e;
  return Rational(8 * (d * (g - 1) + 1) + abs_e - 2, d * d);
}

namespace {

std::vector<TorusCoverTemplate> build_templates() {
  using CL = TorusCoverTemplate::CellLetter;
  std::vector<TorusCoverTemplate> out;

  {
    TorusCoverTemplate t;
    t.name = "figure8";
    t.symbol_order = "xyzwab";
    t.core_relators = {
        {CL{'a', 0, 0, true}, CL{'x', 0, 0, false}, CL{'y', 0, 0, false}},
        {CL{'a', 0, 0, true}, CL{'y', 0, 0, false}, CL{'z', 0, 0, false}},
        {CL{'a', 0, 0, true}, CL{'z', 0, 0, false}, CL{'w', 0, 0, false}},
        {CL{'b', 0, 0, true}, CL{'w', 0, 0, false}, CL{'z', 0, 1, false}},
        {CL{'b', 0, 0, true}, CL{'x', 1, 1, false}, CL{'w', 0, 0, false}},
        {CL{'b', 0, 0, true}, CL{'y', 1, 0, false}, CL{'x', 1, 1, false}},
    };
    t.horizontal_shifts = {{'x', true}, {'y', false}};
    t.vertical_shifts = {{'x', 1, true, 1}, {'z', 1, false, 1}};
    t.core_cost = 6;
    t.commensurability = 6;
    t.cost_m = 4;
    t.cost_n = 4;
    t.cost_const = 6;
    out.push_back(std::move(t));
  }
  {
    TorusCoverTemplate t;
    t.name = "whitehead";
    t.symbol_order = "xyab";
    t.core_relators = {
        {CL{'a', 0, 0, true}, CL{'x', 0, 0, false}, CL{'y', 0, 0, false}},
        {CL{'a', 0, 0, true}, CL{'y', 0, 0, false}, CL{'x', 1, 1, false}},
        {CL{'b', 0, 0, true}, CL{'x', 1, 1, false}, CL{'y', 0, 1, false}},
        {CL{'b', 0, 0, true}, CL{'y', 1, 0, false}, CL{'x', 1, 1, false}},
    };
    t.horizontal_shifts = {{'x', false}, {'y', false}};
    t.vertical_shifts = {{'x', 2, true, 1}, {'y', 1, false, 1}};
    t.core_cost = 4;
    t.commensurability = 2;
    t.cost_m = 4;
    t.cost_n = 4;
    t.cost_const = 2;
    out.push_back(std::move(t));
  }
  {
    TorusCoverTemplate t;
    t.name = "magic";
    t.symbol_order = "xya";
    t.core_relators = {
        {CL{'a', 0, 0, true}, CL{'x', 0, 0, false}, CL{'y', 0, 1, false}},
        {CL{'a', 0, 0, true}, CL{'x', 1, 0, false}, CL{'x', 0, 0, false}},
        {CL{'a', 0, 0, true}, CL{'y', 0, 0, false}, CL{'x', 1, 0, false}},
    };
    t.horizontal_shifts = {{'x', false}};
    t.vertical_shifts = {{'y', 1, false, 1}};
    t.core_cost = 3;
    t.commensurability = 1;
    t.cost_m = 2;
    t.cost_n = 2;
    t.cost_const = 2;
    out.push_back(std::move(t));
  }
  {
    TorusCoverTemplate t;
    t.name = "d2";
    t.symbol_order = "xyzwuabc";
    t.core_relators = {
        {CL{'a', 0, 0, true}, CL{'x', 0, 0, false}, CL{'y', 0, 0, false}},
        {CL{'a', 0, 0, true}, CL{'y', 0, 0, false}, CL{'w', 0, 0, false}},
        {CL{'a', 0, 0, true}, CL{'w', 0, 0, false}, CL{'u', 0, 0, false}},
        {CL{'b', 0, 0, true}, CL{'z', 0, 0, false}, CL{'y', 1, -1, false}},
        {CL{'c', 0, 0, true}, CL{'u', 0, 0, false}, CL{'z', 0, 1, false}},
        {CL{'c', 0, 0, true}, CL{'x', 1, 0, false}, CL{'a', 0, 0, false}},
        {CL{'c', 0, 0, true}, CL{'b', 0, 0, false}, CL{'x', 1, 0, false}},
    };
    t.horizontal_shifts = {{'x', false}, {'y', false}};
    t.vertical_shifts = {{'z', 1, false, 1}, {'y', 2, true, 0}};
    t.core_cost = 7;
    t.commensurability = 1;
    t.cost_m = 4;
    t.cost_n = 4;
    t.cost_const = 2;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

const std::vector<TorusCoverTemplate>& builtin_templates() {
  static const std::vector<TorusCoverTemplate> templates = build_templates();
  return templates;
}

const TorusCoverTemplate& template_by_name(const std::string& name) {
  for (const TorusCoverTemplate& t : builtin_templates())
    if (t.name == name) return t;
  throw std::invalid_argument("unknown template family: " + name);
}

FamilyPoint instantiate_torus_cover(const TorusCoverTemplate& tmpl, long long m, long long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid parameters must be at least 1");
  if (m > 2000 || n > 2000) throw std::invalid_argument("grid parameters out of supported range");

  // Abstract letters: a cell symbol with absolute grid coordinates, or one
  // of the global shift generators s (kind 1) / t (kind 2).
  struct AbsLetter {
    int kind;
    char family;
    long long i, j;
    bool positive;
  };
  auto cell = [](char f, long long i, long long j, bool pos) {
    return AbsLetter{0, f, i, j, pos};
  };
  auto global = [](int kind, bool pos) { return AbsLetter{kind, '?', 0, 0, pos}; };

  std::vector<std::vector<AbsLetter>> rels;
  for (const auto& core : tmpl.core_relators)
    for (long long i = 1; i <= m; ++i)
      for (long long j = 1; j <= n; ++j) {
        std::vector<AbsLetter> w;
        w.reserve(core.size());
        for (const auto& cl : core) w.push_back(cell(cl.family, i + cl.di, j + cl.dj, cl.positive));
        rels.push_back(std::move(w));
      }
  for (const auto& hs : tmpl.horizontal_shifts) {
    long long jhi = hs.through_corner ? n + 1 : n;
    for (long long j = 1; j <= jhi; ++j)
      rels.push_back({cell(hs.family, m + 1, j, true), global(1, true),
                      cell(hs.family, 1, j, false), global(1, false)});
  }
  for (const auto& vs : tmpl.vertical_shifts) {
    long long rhi = vs.through_corner ? m + 1 : m;
    for (long long r = vs.row_lo; r <= rhi; ++r)
      rels.push_back({cell(vs.family, r, n + vs.col_delta, true), global(2, true),
                      cell(vs.family, r, vs.col_delta, false), global(2, false)});
  }
  rels.push_back({global(1, true), global(2, true), global(1, false), global(2, false)});

  // Cell symbols sorted by (family display position, i, j); then s, then t.
  std::map<std::tuple<size_t, long long, long long>, int> ordinal;
  for (const auto& r : rels)
    for (const auto& l : r) {
      if (l.kind != 0) continue;
      size_t pos = tmpl.symbol_order.find(l.family);
      if (pos == std::string::npos)
        throw std::invalid_argument("template references a symbol outside its declared order");
      ordinal.emplace(std::make_tuple(pos, l.i, l.j), 0);
    }

  FamilyPoint fp;
  fp.family = tmpl.name;
  fp.params = {{"m", m}, {"n", n}};
  Presentation& p = fp.presentation;
  for (auto& [key, ord] : ordinal) {
    ord = static_cast<int>(p.generator_names.size());
    p.generator_names.push_back(std::string(1, tmpl.symbol_order[std::get<0>(key)]) +
                                std::to_string(std::get<1>(key)) + "c" +
                                std::to_string(std::get<2>(key)));
  }
  int s_ord = static_cast<int>(p.generator_names.size());
  p.generator_names.push_back("s");
  p.generator_names.push_back("t");

  for (const auto& r : rels) {
    Word w;
    w.reserve(r.size());
    for (const auto& l : r) {
      int ord;
      if (l.kind == 0)
        ord = ordinal.at(std::make_tuple(tmpl.symbol_order.find(l.family), l.i, l.j));
      else
        ord = s_ord + (l.kind - 1);
      w.push_back(make_letter(ord, l.positive));
    }
    p.relators.push_back(std::move(w));
  }
  p.validate();
  fp.has_predicted_cost = true;
  fp.predicted_cost = tmpl.core_cost * m * n + tmpl.cost_m * m + tmpl.cost_n * n + tmpl.cost_const;
  return fp;
}

Presentation free_product(const Presentation& p1, const Presentation& p2) {
  p1.validate();
  p2.validate();
  Presentation out = p1;
  std::vector<int> remap(static_cast<size_t>(p2.generator_count()));
  for (int g = 0; g < p2.generator_count(); ++g) {
    const std::string& name = p2.generator_names[static_cast<size_t>(g)];
    remap[static_cast<size_t>(g)] = static_cast<int>(out.generator_names.size());
    if (std::find(out.generator_names.begin(), out.generator_names.end(), name) ==
        out.generator_names.end()) {
      out.generator_names.push_back(name);
    } else {
      int counter = 2;
      out.generator_names.push_back(unique_generator_name(out.generator_names, name, counter));
    }
  }
  for (const Word& r : p2.relators) {
    Word w;
    w.reserve(r.size());
    for (Letter l : r) w.push_back(make_letter(remap[static_cast<size_t>(gen_of(l))], sign_of(l) > 0));
    out.relators.push_back(std::move(w));
  }
  out.validate();
  return out;
}

}  // namespace plength
