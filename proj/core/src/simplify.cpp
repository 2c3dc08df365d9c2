#include "plength/simplify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

#include "plength/word.hpp"

namespace plength {

namespace {

long long total_length(const Presentation& p) {
  long long n = 0;
  for (const Word& r : p.relators) n += static_cast<long long>(r.size());
  return n;
}

using QualityKey = std::tuple<TriangleCost, long long, int>;

QualityKey quality(const Presentation& p) {
  return {tcost(p), total_length(p), p.generator_count()};
}

// Move 1: cyclically reduce every relator in place.
bool reduce_all(Presentation& p) {
  bool changed = false;
  for (Word& r : p.relators) {
    Word red = cyclic_reduce(r);
    if (red != r) {
      r = std::move(red);
      changed = true;
    }
  }
  return changed;
}

// Move 2: drop empty relators and duplicates up to rotation and inversion.
bool drop_trivial_and_duplicate(Presentation& p) {
  std::vector<Word> kept;
  std::vector<Word> seen;
  bool changed = false;
  for (const Word& r : p.relators) {
    if (r.empty()) {
      changed = true;
      continue;
    }
    Word key = canonical_cyclic(r);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      changed = true;
      continue;
    }
    seen.push_back(std::move(key));
    kept.push_back(r);
  }
  if (changed) p.relators = std::move(kept);
  return changed;
}

// Removes generator `gen` (0-based) from the presentation, renumbering the
// letters of every relator.  Callers must already have substituted away all
// occurrences of the generator.
void erase_generator(Presentation& p, int gen) {
  p.generator_names.erase(p.generator_names.begin() + gen);
  for (Word& r : p.relators)
    for (Letter& l : r) {
      int g = gen_of(l);
      if (g > gen) l = make_letter(g - 1, sign_of(l) > 0);
    }
}

// Replaces every occurrence of ±gen in `w` by `value` / its inverse.
Word substitute(const Word& w, int gen, const Word& value) {
  Word out;
  Word value_inv = inverse_word(value);
  for (Letter l : w) {
    if (gen_of(l) == gen) {
      const Word& rep = sign_of(l) > 0 ? value : value_inv;
      out.insert(out.end(), rep.begin(), rep.end());
    } else {
      out.push_back(l);
    }
  }
  return free_reduce(out);
}

// Move 3 (one step): find the (generator, relator) pair where the relator
// contains the generator exactly once and the projected total-length change
// k*(L-2) - L is minimal and <= 0; eliminate it.  Returns false if no
// eligible pair exists.
bool eliminate_one_generator(Presentation& p) {
  int ngens = p.generator_count();
  int nrel = static_cast<int>(p.relators.size());
  if (ngens == 0 || nrel == 0) return false;

  // occurrences[g][i] = number of letters ±g in relator i.
  std::vector<std::vector<int>> occurrences(static_cast<size_t>(ngens),
                                            std::vector<int>(static_cast<size_t>(nrel), 0));
  std::vector<long long> total_occ(static_cast<size_t>(ngens), 0);
  for (int i = 0; i < nrel; ++i)
    for (Letter l : p.relators[i]) {
      occurrences[static_cast<size_t>(gen_of(l))][static_cast<size_t>(i)]++;
      total_occ[static_cast<size_t>(gen_of(l))]++;
    }

  long long best_delta = std::numeric_limits<long long>::max();
  int best_gen = -1, best_rel = -1;
  for (int g = 0; g < ngens; ++g)
    for (int i = 0; i < nrel; ++i) {
      if (occurrences[static_cast<size_t>(g)][static_cast<size_t>(i)] != 1) continue;
      long long L = static_cast<long long>(p.relators[static_cast<size_t>(i)].size());
      long long k = total_occ[static_cast<size_t>(g)] - 1;
      long long delta = k * (L - 2) - L;
      if (delta < best_delta) {
        best_delta = delta;
        best_gen = g;
        best_rel = i;
      }
    }
  if (best_gen < 0 || best_delta > 0) return false;

  // Rotate the defining relator so the unique ±best_gen letter leads, then
  // read off the generator's value in the remaining generators.
  Word r = p.relators[static_cast<size_t>(best_rel)];
  size_t pos = 0;
  while (gen_of(r[pos]) != best_gen) ++pos;
  std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
  Word rest(r.begin() + 1, r.end());
  // r = g u = 1 gives g = u^-1;  r = g^-1 u = 1 gives g = u.
  Word value = sign_of(r[0]) > 0 ? inverse_word(rest) : rest;

  std::vector<Word> next;
  next.reserve(p.relators.size() - 1);
  for (int i = 0; i < nrel; ++i) {
    if (i == best_rel) continue;
    next.push_back(cyclic_reduce(substitute(p.relators[static_cast<size_t>(i)], best_gen, value)));
  }
  p.relators = std::move(next);
  erase_generator(p, best_gen);
  return true;
}

// Move 4 (one step): find relators u (tool) and s (target), a rotation rho
// of u or u^-1, and a cyclic subword of s equal to a prefix of rho of
// length m with 2m > |rho|; replace that subword by the inverse of the rest
// of rho, strictly shortening s.  Scanned in deterministic order: tool
// index, target index, then longest m first, then sign/rotation/position.
bool substitute_one_relator(Presentation& p) {
  int nrel = static_cast<int>(p.relators.size());
  for (int ti = 0; ti < nrel; ++ti) {
    const Word& u = p.relators[static_cast<size_t>(ti)];
    if (u.size() < 2) continue;
    for (int si = 0; si < nrel; ++si) {
      if (si == ti) continue;
      const Word& s = p.relators[static_cast<size_t>(si)];
      if (s.empty()) continue;
      size_t m_max = std::min(u.size(), s.size());
      Word s2 = s;
      s2.insert(s2.end(), s.begin(), s.end());
      for (size_t m = m_max; 2 * m > u.size(); --m) {
        for (int sign = 0; sign < 2; ++sign) {
          Word base = sign == 0 ? u : inverse_word(u);
          for (size_t rot = 0; rot < base.size(); ++rot) {
            Word rho = base;
            std::rotate(rho.begin(), rho.begin() + static_cast<std::ptrdiff_t>(rot), rho.end());
            for (size_t pos = 0; pos < s.size(); ++pos) {
              if (!std::equal(rho.begin(), rho.begin() + static_cast<std::ptrdiff_t>(m),
                              s2.begin() + static_cast<std::ptrdiff_t>(pos)))
                continue;
              // Rotate s so the matched subword leads, then swap it for the
              // inverse of the complementary part of rho.
              Word srot = s;
              std::rotate(srot.begin(), srot.begin() + static_cast<std::ptrdiff_t>(pos),
                          srot.end());
              Word tail(srot.begin() + static_cast<std::ptrdiff_t>(m), srot.end());
              Word comp(rho.begin() + static_cast<std::ptrdiff_t>(m), rho.end());
              Word replacement = inverse_word(comp);
              replacement.insert(replacement.end(), tail.begin(), tail.end());
              replacement = cyclic_reduce(replacement);
              if (replacement.size() >= s.size()) continue;
              p.relators[static_cast<size_t>(si)] = std::move(replacement);
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

SimplifyResult simplify_detailed(const Presentation& p, const SimplifyBudget& budget) {
  p.validate();
  if (budget.max_passes < 1 || budget.max_total_length < 1)
    throw std::invalid_argument("simplify budget fields must be positive");

  SimplifyResult result;
  Presentation cur = p;
  reduce_all(cur);
  drop_trivial_and_duplicate(cur);
  result.presentation = cur;
  QualityKey best = quality(cur);

  auto consider = [&](const Presentation& cand) {
    QualityKey k = quality(cand);
    if (k < best) {
      best = k;
      result.presentation = cand;
    }
  };
  consider(p);  // the untouched input is also a candidate
  auto over_length = [&] { return total_length(cur) > budget.max_total_length; };

  if (over_length()) {
    result.budget_exceeded = true;
    return result;
  }

  for (int pass = 0; pass < budget.max_passes; ++pass) {
    result.passes = pass + 1;
    bool changed = false;
    if (reduce_all(cur)) changed = true;
    if (drop_trivial_and_duplicate(cur)) changed = true;
    consider(cur);
    while (eliminate_one_generator(cur)) {
      changed = true;
      drop_trivial_and_duplicate(cur);
      consider(cur);
      if (over_length()) {
        result.budget_exceeded = true;
        return result;
      }
    }
    while (substitute_one_relator(cur)) {
      changed = true;
      consider(cur);
    }
    if (!changed) return result;
  }
  // Ran out of passes while still making progress.
  result.budget_exceeded = true;
  return result;
}

Presentation simplify(const Presentation& p, const SimplifyBudget& budget) {
  return simplify_detailed(p, budget).presentation;
}

}  // namespace plength
