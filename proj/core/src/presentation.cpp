#include "plength/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace plength {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

}  // namespace

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& name : generator_names) {
    if (!is_identifier(name))
      throw std::invalid_argument("invalid generator name '" + name + "'");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate generator name '" + name + "'");
  }
  int n = generator_count();
  for (const Word& r : relators)
    for (Letter l : r)
      if (l == 0 || gen_of(l) >= n)
        throw std::invalid_argument("relator letter references unknown generator");
}

TriangleCost word_cost(const Word& w) {
  long long len = static_cast<long long>(cyclic_reduce(w).size());
  return len > 2 ? len - 2 : 0;
}

TriangleCost tcost(const Presentation& p) {
  TriangleCost total = 0;
  for (const Word& r : p.relators) total += word_cost(r);
  return total;
}

bool is_triangular(const Presentation& p) {
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [](const Word& r) { return r.size() == 2 || r.size() == 3; });
}

std::string unique_generator_name(const std::vector<std::string>& taken, const std::string& stem,
                                  int& counter) {
  for (;; ++counter) {
    std::string candidate = stem + std::to_string(counter);
    if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) {
      ++counter;
      return candidate;
    }
  }
}

Triangulation triangulate_full(const Presentation& p) {
  p.validate();
  Triangulation out;
  out.presentation.generator_names = p.generator_names;
  int suffix = 1;
  for (const Word& r : p.relators) {
    Word w = cyclic_reduce(r);
    if (w.size() <= 3) {
      out.presentation.relators.push_back(w);
      continue;
    }
    // Fan split: peel two letters at a time onto a fresh diagonal generator
    // t with relator t l1 l2, continuing from t^-1 l3 ... lk.
    while (w.size() > 3) {
      std::string name = unique_generator_name(out.presentation.generator_names, "q", suffix);
      out.presentation.generator_names.push_back(name);
      int t = out.presentation.generator_count();  // 1-based letter of the new generator
      out.presentation.relators.push_back({t, w[0], w[1]});
      // t = (l1 l2)^-1, a word in generators of lower ordinal.
      out.aux_definitions.emplace_back(t - 1, Word{inverse(w[1]), inverse(w[0])});
      Word rest;
      rest.reserve(w.size() - 1);
      rest.push_back(inverse(t));
      rest.insert(rest.end(), w.begin() + 2, w.end());
      w = std::move(rest);
    }
    out.presentation.relators.push_back(w);
  }
  return out;
}

Presentation triangulate(const Presentation& p) { return triangulate_full(p).presentation; }

}  // namespace plength
