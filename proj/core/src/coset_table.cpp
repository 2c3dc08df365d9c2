#include "plength/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <nlohmann/json.hpp>

namespace plength {

CosetTable::CosetTable(int index, int generator_count)
    : index_(index),
      ngens_(generator_count),
      action_(static_cast<size_t>(index) * 2 * generator_count, -1) {
  if (index < 1) throw std::invalid_argument("coset table index must be positive");
}

void CosetTable::set(int coset, Letter l, int target) {
  action_[slot(coset, l)] = target;
  action_[slot(target, inverse(l))] = coset;
}

int CosetTable::trace(int start, const Word& w) const {
  int c = start;
  for (Letter l : w) {
    c = act(c, l);
    if (c < 0) throw std::logic_error("trace through undefined table entry");
  }
  return c;
}

void CosetTable::validate(const Presentation& p, const SubgroupSpec* sub) const {
  if (ngens_ != p.generator_count())
    throw std::invalid_argument("coset table generator count mismatch");
  for (int v : action_)
    if (v < 0 || v >= index_) throw std::invalid_argument("coset table action not total");
  // Each generator acts as a permutation: column 2g and column 2g+1 are
  // mutually inverse maps.
  for (int g = 0; g < ngens_; ++g)
    for (int c = 0; c < index_; ++c) {
      if (act(act(c, g + 1), -(g + 1)) != c || act(act(c, -(g + 1)), g + 1) != c)
        throw std::invalid_argument("generator action is not a permutation");
    }
  // Transitivity: all cosets reachable from 0.
  std::vector<char> seen(static_cast<size_t>(index_), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g = 0; g < ngens_; ++g)
      for (Letter l : {g + 1, -(g + 1)}) {
        int d = act(c, l);
        if (!seen[static_cast<size_t>(d)]) {
          seen[static_cast<size_t>(d)] = 1;
          ++reached;
          queue.push_back(d);
        }
      }
  }
  if (reached != index_) throw std::invalid_argument("coset action is not transitive");
  for (const Word& r : p.relators)
    for (int c = 0; c < index_; ++c)
      if (trace(c, r) != c) throw std::invalid_argument("relator does not close at a coset");
  if (sub)
    for (const Word& w : sub->generator_words)
      if (trace(0, w) != 0)
        throw std::invalid_argument("subgroup generator does not stabilize coset 0");
}

CosetTable CosetTable::standardized() const {
  std::vector<int> to_new(static_cast<size_t>(index_), -1);
  std::vector<int> to_old;
  to_old.reserve(static_cast<size_t>(index_));
  to_new[0] = 0;
  to_old.push_back(0);
  // Row-major first-occurrence numbering: process new cosets in order,
  // scanning columns g, g^-1 for g ascending.
  for (size_t i = 0; i < to_old.size(); ++i) {
    int old = to_old[i];
    for (int col = 0; col < 2 * ngens_; ++col) {
      int target = action_[static_cast<size_t>(old) * 2 * ngens_ + static_cast<size_t>(col)];
      if (to_new[static_cast<size_t>(target)] < 0) {
        to_new[static_cast<size_t>(target)] = static_cast<int>(to_old.size());
        to_old.push_back(target);
      }
    }
  }
  CosetTable out(index_, ngens_);
  for (int c = 0; c < index_; ++c)
    for (int col = 0; col < 2 * ngens_; ++col) {
      int v = action_[static_cast<size_t>(to_old[static_cast<size_t>(c)]) * 2 * ngens_ +
                      static_cast<size_t>(col)];
      out.action_[static_cast<size_t>(c) * 2 * ngens_ + static_cast<size_t>(col)] =
          to_new[static_cast<size_t>(v)];
    }
  return out;
}

bool CosetTable::operator<(const CosetTable& other) const {
  if (index_ != other.index_) return index_ < other.index_;
  return action_ < other.action_;
}

std::string CosetTable::to_json_string() const {
  nlohmann::json j;
  j["index"] = index_;
  nlohmann::json arr = nlohmann::json::array();
  for (int v : action_) arr.push_back(v + 1);
  j["action"] = arr;
  return j.dump();
}

CosetTable CosetTable::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int index = j.at("index").get<int>();
  std::vector<int> action = j.at("action").get<std::vector<int>>();
  if (index < 1 || action.size() % (2 * static_cast<size_t>(index)) != 0)
    throw std::invalid_argument("malformed coset table serialization");
  int ngens = static_cast<int>(action.size() / (2 * static_cast<size_t>(index)));
  CosetTable t(index, ngens);
  for (size_t i = 0; i < action.size(); ++i) {
    int v = action[i] - 1;
    if (v < 0 || v >= index) throw std::invalid_argument("coset ordinal out of range");
    t.action_[i] = v;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter enumeration (HLT strategy).
// ---------------------------------------------------------------------------

namespace {

// Working table: rows may die through coincidences; rep[] is a union-find
// map to the smallest live equivalent coset.  Entries may temporarily hold
// dead ids and are normalized through find() on read.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const SubgroupSpec& s, int max_cosets)
      : ngens_(p.generator_count()), max_cosets_(max_cosets) {
    for (const Word& r : p.relators) {
      Word w = cyclic_reduce(r);
      if (!w.empty()) relators_.push_back(std::move(w));
    }
    for (const Word& w : s.generator_words) subgroup_words_.push_back(free_reduce(w));
    new_coset();  // coset 0
  }

  CosetTable run() {
    for (const Word& w : subgroup_words_) scan_and_fill(0, w);
    for (int a = 0; a < static_cast<int>(rows_.size()); ++a) {
      if (!alive(a)) continue;
      for (const Word& r : relators_) {
        scan_and_fill(a, r);
        if (!alive(a)) break;
      }
      if (!alive(a)) continue;
      // Complete the row so the final table is total even for generators
      // that appear in no relator.
      for (int col = 0; col < 2 * ngens_; ++col) {
        if (!alive(a)) break;
        if (entry(a, col) < 0) {
          int nu = new_coset();
          link(a, col, nu);
        }
      }
    }
    return compact();
  }

 private:
  int ngens_;
  int max_cosets_;
  std::vector<Word> relators_;
  std::vector<Word> subgroup_words_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> rep_;
  std::deque<std::pair<int, int>> coincidences_;
  int live_ = 0;

  bool alive(int c) { return find(c) == c; }

  int find(int c) {
    while (rep_[static_cast<size_t>(c)] != c) {
      rep_[static_cast<size_t>(c)] = rep_[static_cast<size_t>(rep_[static_cast<size_t>(c)])];
      c = rep_[static_cast<size_t>(c)];
    }
    return c;
  }

  int entry(int c, int col) {
    int v = rows_[static_cast<size_t>(c)][static_cast<size_t>(col)];
    if (v < 0) return v;
    v = find(v);
    rows_[static_cast<size_t>(c)][static_cast<size_t>(col)] = v;
    return v;
  }

  static int inv_col(int col) { return col ^ 1; }

  int new_coset() {
    if (live_ >= max_cosets_) {
      lookahead();
      if (live_ >= max_cosets_)
        throw CapacityError("coset enumeration exceeded " + std::to_string(max_cosets_) +
                            " cosets");
    }
    rows_.emplace_back(static_cast<size_t>(2 * ngens_), -1);
    rep_.push_back(static_cast<int>(rows_.size()) - 1);
    ++live_;
    return static_cast<int>(rows_.size()) - 1;
  }

  // Sets both directions of an edge, queueing a coincidence on conflict.
  void link(int a, int col, int b) {
    a = find(a);
    b = find(b);
    int cur = entry(a, col);
    if (cur >= 0) {
      if (cur != b) queue_coincidence(cur, b);
      return;
    }
    rows_[static_cast<size_t>(a)][static_cast<size_t>(col)] = b;
    int back = entry(b, inv_col(col));
    if (back < 0) {
      rows_[static_cast<size_t>(b)][static_cast<size_t>(inv_col(col))] = a;
    } else if (back != a) {
      queue_coincidence(back, a);
    }
    process_coincidences();
  }

  void queue_coincidence(int a, int b) { coincidences_.emplace_back(a, b); }

  void process_coincidences() {
    while (!coincidences_.empty()) {
      auto [x, y] = coincidences_.front();
      coincidences_.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      rep_[static_cast<size_t>(y)] = x;
      --live_;
      // Fold row y into row x, queueing any clashes.
      for (int col = 0; col < 2 * ngens_; ++col) {
        int v = rows_[static_cast<size_t>(y)][static_cast<size_t>(col)];
        if (v < 0) continue;
        v = find(v);
        int cur = entry(x, col);
        if (cur < 0) {
          rows_[static_cast<size_t>(x)][static_cast<size_t>(col)] = v;
          int back = entry(v, inv_col(col));
          if (back < 0)
            rows_[static_cast<size_t>(v)][static_cast<size_t>(inv_col(col))] = x;
          else if (find(back) != x)
            queue_coincidence(back, x);
        } else if (cur != v) {
          queue_coincidence(cur, v);
        }
      }
    }
  }

  // Scans word w from coset a, defining new cosets to fill any gap.  Any
  // fill can trigger collapses that invalidate mid-scan state, so the scan
  // restarts from (the representative of) a after each definition.
  void scan_and_fill(int a, const Word& w) {
    for (;;) {
      a = find(a);
      int f = a, b = a;
      size_t i = 0, j = w.size();
      while (i < j) {
        int next = entry(f, CosetTable::column(w[i]));
        if (next < 0) break;
        f = next;
        ++i;
      }
      if (i == j) {
        if (f != b) {
          queue_coincidence(f, b);
          process_coincidences();
        }
        return;
      }
      while (j > i) {
        int prev = entry(b, CosetTable::column(inverse(w[j - 1])));
        if (prev < 0) break;
        b = prev;
        --j;
      }
      if (j == i) {  // both scans met at the same gap boundary
        queue_coincidence(f, b);
        process_coincidences();
        return;
      }
      if (j == i + 1) {
        link(f, CosetTable::column(w[i]), b);
        return;
      }
      int nu = new_coset();
      link(f, CosetTable::column(w[i]), nu);
    }
  }

  // Deduction-only pass over the whole table; collapses may free capacity.
  void lookahead() {
    for (int a = 0; a < static_cast<int>(rows_.size()); ++a) {
      if (!alive(a)) continue;
      for (const Word& r : relators_) {
        scan_without_fill(a, r);
        if (!alive(a)) break;
      }
    }
  }

  void scan_without_fill(int a, const Word& w) {
    a = find(a);
    size_t i = 0, j = w.size();
    int f = a, b = a;
    while (i < j) {
      int next = entry(f, CosetTable::column(w[i]));
      if (next < 0) break;
      f = next;
      ++i;
    }
    if (i == j) {
      if (f != b) {
        queue_coincidence(f, b);
        process_coincidences();
      }
      return;
    }
    while (j > i) {
      int prev = entry(b, CosetTable::column(inverse(w[j - 1])));
      if (prev < 0) break;
      b = prev;
      --j;
    }
    if (j == i) {
      queue_coincidence(f, b);
      process_coincidences();
    } else if (j == i + 1) {
      link(f, CosetTable::column(w[i]), b);
    }
  }

  CosetTable compact() {
    std::vector<int> to_new(rows_.size(), -1);
    int n = 0;
    for (int c = 0; c < static_cast<int>(rows_.size()); ++c)
      if (alive(c)) to_new[static_cast<size_t>(c)] = n++;
    CosetTable t(n, ngens_);
    for (int c = 0; c < static_cast<int>(rows_.size()); ++c) {
      if (!alive(c)) continue;
      for (int col = 0; col < 2 * ngens_; ++col) {
        int v = entry(c, col);
        if (v < 0) throw std::logic_error("incomplete table after enumeration");
        // set() writes the inverse slot too; writing both orientations of
        // every edge is harmless and keeps this simple.
        Letter l = (col % 2 == 0) ? (col / 2 + 1) : -(col / 2 + 1);
        t.set(to_new[static_cast<size_t>(c)], l, to_new[static_cast<size_t>(v)]);
      }
    }
    return t.standardized();
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const SubgroupSpec& s, int max_cosets) {
  p.validate();
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be positive");
  int n = p.generator_count();
  for (const Word& w : s.generator_words)
    for (Letter l : w)
      if (l == 0 || gen_of(l) >= n)
        throw std::invalid_argument("subgroup generator word references unknown generator");
  if (n == 0) return CosetTable(1, 0);  // the trivial group
  CosetTable t = Enumerator(p, s, max_cosets).run();
  t.validate(p, &s);
  return t;
}

// ---------------------------------------------------------------------------
// Low-index subgroup search.
// ---------------------------------------------------------------------------

namespace {

// Backtracking over partial standardized tables.  Branches on the first
// undefined slot in row-major order; after each tentative assignment runs
// relator-closure deduction to a fixed point.  Completed tables are kept
// only if no rebasing at another coset gives a lexicographically smaller
// standardized table (first-in-orbit canonicity).
class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, int max_index)
      : ngens_(p.generator_count()), max_index_(max_index) {
    for (const Word& r : p.relators) {
      Word w = cyclic_reduce(r);
      if (!w.empty()) relators_.push_back(std::move(w));
    }
    table_.assign(static_cast<size_t>(max_index) * 2 * ngens_, -1);
  }

  std::vector<CosetTable> run() {
    ncos_ = 1;
    search();
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  int ngens_;
  int max_index_;
  std::vector<Word> relators_;
  std::vector<int> table_;
  int ncos_ = 1;
  std::vector<std::pair<int, int>> trail_;  // (slot, old ncos marker unused) — slots only
  std::vector<CosetTable> found_;

  int& at(int coset, int col) {
    return table_[static_cast<size_t>(coset) * 2 * ngens_ + static_cast<size_t>(col)];
  }

  static int inv_col(int col) { return col ^ 1; }

  // Records every slot write so branches can be unwound.
  bool assign(int coset, int col, int target) {
    int& fwd = at(coset, col);
    if (fwd >= 0) return fwd == target;
    fwd = target;
    trail_.emplace_back(coset, col);
    int& back = at(target, inv_col(col));
    if (back >= 0) return back == coset;
    back = coset;
    trail_.emplace_back(target, inv_col(col));
    return true;
  }

  void unwind(size_t mark) {
    while (trail_.size() > mark) {
      auto [coset, col] = trail_.back();
      trail_.pop_back();
      at(coset, col) = -1;
    }
  }

  // Scans all relators at all cosets until no deduction is possible.
  // Returns false on contradiction.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < ncos_; ++c)
        for (const Word& r : relators_) {
          int status = scan(c, r, changed);
          if (status < 0) return false;
        }
    }
    return true;
  }

  // Returns -1 on contradiction, 0 otherwise; sets `changed` on deduction.
  int scan(int start, const Word& w, bool& changed) {
    size_t i = 0, j = w.size();
    int f = start, b = start;
    while (i < j) {
      int next = at(f, CosetTable::column(w[i]));
      if (next < 0) break;
      f = next;
      ++i;
    }
    if (i == j) return f == b ? 0 : -1;
    while (j > i) {
      int prev = at(b, CosetTable::column(inverse(w[j - 1])));
      if (prev < 0) break;
      b = prev;
      --j;
    }
    if (j == i) return -1;  // both ends met with a mismatch
    if (j == i + 1) {
      if (!assign(f, CosetTable::column(w[i]), b)) return -1;
      changed = true;
    }
    return 0;
  }

  void search() {
    int coset = -1, col = -1;
    for (int c = 0; c < ncos_ && coset < 0; ++c)
      for (int k = 0; k < 2 * ngens_; ++k)
        if (at(c, k) < 0) {
          coset = c;
          col = k;
          break;
        }
    if (coset < 0) {
      emit();
      return;
    }
    int limit = ncos_ < max_index_ ? ncos_ + 1 : ncos_;
    for (int target = 0; target < limit; ++target) {
      size_t mark = trail_.size();
      bool grew = target == ncos_;
      if (grew) ++ncos_;
      if (assign(coset, col, target) && propagate()) search();
      unwind(mark);
      if (grew) --ncos_;
    }
  }

  void emit() {
    CosetTable t(ncos_, ngens_);
    for (int c = 0; c < ncos_; ++c)
      for (int g = 0; g < ngens_; ++g) {
        t.set(c, g + 1, at(c, 2 * g));
        t.set(c, -(g + 1), at(c, 2 * g + 1));
      }
    // The search builds standardized tables; keep t only if rebasing at any
    // other coset does not yield a smaller standardized table.
    CosetTable std0 = t.standardized();
    if (!(std0 == t)) return;  // not in standard form => a smaller twin exists
    for (int v = 1; v < ncos_; ++v)
      if (rebased_standardized(t, v) < t) return;
    found_.push_back(t);
  }

  static CosetTable rebased_standardized(const CosetTable& t, int base) {
    // Renumber with `base` as coset 0 by first occurrence in row-major scan.
    int d = t.index(), n = t.generator_count();
    std::vector<int> to_new(static_cast<size_t>(d), -1);
    std::vector<int> to_old;
    to_new[static_cast<size_t>(base)] = 0;
    to_old.push_back(base);
    for (size_t i = 0; i < to_old.size(); ++i)
      for (int g = 0; g < n; ++g)
        for (Letter l : {g + 1, -(g + 1)}) {
          int w = t.act(to_old[i], l);
          if (to_new[static_cast<size_t>(w)] < 0) {
            to_new[static_cast<size_t>(w)] = static_cast<int>(to_old.size());
            to_old.push_back(w);
          }
        }
    CosetTable out(d, n);
    for (int c = 0; c < d; ++c)
      for (int g = 0; g < n; ++g)
        for (Letter l : {g + 1, -(g + 1)})
          out.set(to_new[static_cast<size_t>(c)], l, to_new[static_cast<size_t>(t.act(c, l))]);
    return out;
  }
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& p, int max_index) {
  p.validate();
  if (max_index < 1) throw std::invalid_argument("max_index must be positive");
  if (p.generator_count() == 0) return {CosetTable(1, 0)};
  std::vector<CosetTable> tables = LowIndexSearch(p, max_index).run();
  for (const CosetTable& t : tables) t.validate(p);
  return tables;
}

CosetTable extend_table(const CosetTable& t,
                        const std::vector<std::pair<int, Word>>& aux_definitions,
                        int total_generator_count) {
  if (total_generator_count != t.generator_count() + static_cast<int>(aux_definitions.size()))
    throw std::invalid_argument("extend_table: generator count mismatch");
  CosetTable out(t.index(), total_generator_count);
  for (int c = 0; c < t.index(); ++c)
    for (int g = 0; g < t.generator_count(); ++g) out.set(c, g + 1, t.act(c, g + 1));
  std::vector<std::pair<int, Word>> defs = aux_definitions;
  std::sort(defs.begin(), defs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [ordinal, definition] : defs) {
    for (Letter l : definition)
      if (gen_of(l) >= ordinal)
        throw std::invalid_argument("extend_table: definition references later generator");
    for (int c = 0; c < t.index(); ++c) out.set(c, ordinal + 1, out.trace(c, definition));
  }
  return out;
}

}  // namespace plength
