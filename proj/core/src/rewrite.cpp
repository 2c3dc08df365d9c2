#include "plength/rewrite.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace plength {

SchreierTransversal schreier_transversal(const CosetTable& t) {
  int d = t.index();
  int n = t.generator_count();
  SchreierTransversal out;
  out.representative_word.assign(static_cast<size_t>(d), Word{});
  std::vector<char> seen(static_cast<size_t>(d), 0);
  seen[0] = 1;
  std::deque<int> queue{0};
  int reached = 1;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g = 0; g < n; ++g) {
      int v = t.act(c, g + 1);
      if (seen[static_cast<size_t>(v)]) continue;
      seen[static_cast<size_t>(v)] = 1;
      ++reached;
      out.representative_word[static_cast<size_t>(v)] = out.representative_word[static_cast<size_t>(c)];
      out.representative_word[static_cast<size_t>(v)].push_back(g + 1);
      out.tree_edges.emplace_back(c, g + 1);
      queue.push_back(v);
    }
  }
  if (reached != d)
    throw std::invalid_argument("coset table is not transitive");
  return out;
}

Presentation rewrite_presentation(const Presentation& p, const CosetTable& t) {
  t.validate(p);
  int d = t.index();
  int n = p.generator_count();
  SchreierTransversal tr = schreier_transversal(t);

  // sg[c][g]: ordinal of the Schreier generator for the pair (c, g), or -1
  // when the pair is a tree edge and contributes nothing.
  std::vector<std::vector<int>> sg(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(n), 0));
  for (const auto& [c, l] : tr.tree_edges) sg[static_cast<size_t>(c)][static_cast<size_t>(gen_of(l))] = -1;

  Presentation out;
  for (int g = 0; g < n; ++g)
    for (int c = 0; c < d; ++c) {
      if (sg[static_cast<size_t>(c)][static_cast<size_t>(g)] < 0) continue;
      sg[static_cast<size_t>(c)][static_cast<size_t>(g)] = static_cast<int>(out.generator_names.size());
      out.generator_names.push_back(p.generator_names[static_cast<size_t>(g)] + "c" +
                                    std::to_string(c + 1));
    }

  for (const Word& r : p.relators)
    for (int c = 0; c < d; ++c) {
      Word w;
      int cur = c;
      for (Letter l : r) {
        int g = gen_of(l);
        if (sign_of(l) > 0) {
          int ordinal = sg[static_cast<size_t>(cur)][static_cast<size_t>(g)];
          if (ordinal >= 0) w.push_back(ordinal + 1);
          cur = t.act(cur, l);
        } else {
          int prev = t.act(cur, l);  // prev * g = cur
          int ordinal = sg[static_cast<size_t>(prev)][static_cast<size_t>(g)];
          if (ordinal >= 0) w.push_back(-(ordinal + 1));
          cur = prev;
        }
      }
      out.relators.push_back(cyclic_reduce(w));
    }
  out.validate();
  return out;
}

}  // namespace plength
