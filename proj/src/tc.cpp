#include "orbicell/tc.hpp"

#include <algorithm>
#include <deque>

namespace orbicell {

namespace {

// HLT-style enumerator with a coincidence queue.
struct Enumerator {
  int ngens;
  long long max_cosets, max_steps;
  long long steps = 0;
  std::vector<std::vector<int>> table;  // table[c][2g], table[c][2g+1]; -1 undefined
  std::vector<int> rep;                 // union-find over cosets
  std::deque<std::pair<int, int>> coincidences;

  Enumerator(int g, long long mc, long long ms) : ngens(g), max_cosets(mc), max_steps(ms) {
    new_coset();
  }

  int find(int c) {
    while (rep[c] != c) c = rep[c] = rep[rep[c]];
    return c;
  }

  int new_coset() {
    if (static_cast<int>(table.size()) >= max_cosets)
      fail(ErrorKind::ResourceLimit, "coset enumeration exceeded the coset bound");
    table.emplace_back(2 * ngens, -1);
    rep.push_back(static_cast<int>(table.size()) - 1);
    return static_cast<int>(table.size()) - 1;
  }

  static int column(int letter) {
    int g = std::abs(letter) - 1;
    return 2 * g + (letter > 0 ? 0 : 1);
  }
  static int inverse_column(int col) { return col ^ 1; }

  void tick() {
    if (++steps > max_steps)
      fail(ErrorKind::ResourceLimit, "coset enumeration exceeded the step budget");
  }

  void set_entry(int c, int col, int d) {
    c = find(c);
    d = find(d);
    int cur = table[c][col];
    if (cur != -1) {
      if (find(cur) != d) coincidences.emplace_back(find(cur), d);
      return;
    }
    table[c][col] = d;
    int back = table[d][inverse_column(col)];
    if (back == -1)
      table[d][inverse_column(col)] = c;
    else if (find(back) != c)
      coincidences.emplace_back(find(back), c);
  }

  void process_coincidences() {
    while (!coincidences.empty()) {
      auto [a, b] = coincidences.front();
      coincidences.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      rep[b] = a;
      for (int col = 0; col < 2 * ngens; ++col) {
        int t = table[b][col];
        if (t == -1) continue;
        set_entry(a, col, find(t));
        tick();
      }
    }
  }

  // Walks the word from the coset, defining cosets on gaps.
  void trace_and_close(int start, const Word& w) {
    int c = find(start);
    for (std::size_t i = 0; i < w.size(); ++i) {
      tick();
      int col = column(w[i]);
      int next = table[c][col];
      if (next == -1) {
        if (i + 1 == w.size()) {
          set_entry(c, col, find(start));  // close the cycle
          process_coincidences();
          return;
        }
        next = new_coset();
        set_entry(c, col, next);
      }
      c = find(next);
    }
    if (c != find(start)) {
      coincidences.emplace_back(c, find(start));
      process_coincidences();
    }
  }

  bool complete() {
    for (std::size_t c = 0; c < table.size(); ++c) {
      if (find(static_cast<int>(c)) != static_cast<int>(c)) continue;
      for (int col = 0; col < 2 * ngens; ++col)
        if (table[c][col] == -1) return false;
    }
    return true;
  }
};

}  // namespace

int CosetTable::apply_letter(int coset, int letter) const {
  int g = std::abs(letter) - 1;
  if (g < 0 || g >= num_generators) fail(ErrorKind::InvalidInput, "letter out of range");
  return action[coset][2 * g + (letter > 0 ? 0 : 1)];
}

int CosetTable::apply_word(int coset, const Word& w) const {
  for (int x : w) coset = apply_letter(coset, x);
  return coset;
}

CosetTable coset_enumeration(int num_generators, const std::vector<Word>& relators,
                             const std::vector<Word>& subgroup_gens, long long max_cosets,
                             long long max_steps) {
  Enumerator e(num_generators, max_cosets, max_steps);
  for (const Word& w : subgroup_gens) e.trace_and_close(0, w);
  // scan relators at every live coset until no row is incomplete
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < e.table.size(); ++c) {
      if (e.find(static_cast<int>(c)) != static_cast<int>(c)) continue;
      for (const Word& w : relators) {
        if (w.empty()) continue;
        std::size_t before = e.table.size();
        e.trace_and_close(static_cast<int>(c), w);
        if (e.table.size() != before) progress = true;
      }
    }
    if (!progress && !e.complete()) {
      // fill one hole and keep scanning
      for (std::size_t c = 0; c < e.table.size() && !progress; ++c) {
        if (e.find(static_cast<int>(c)) != static_cast<int>(c)) continue;
        for (int col = 0; col < 2 * num_generators && !progress; ++col)
          if (e.table[c][col] == -1) {
            int d = e.new_coset();
            e.set_entry(static_cast<int>(c), col, d);
            e.process_coincidences();
            progress = true;
          }
      }
    }
  }

  // standardize: renumber live cosets in breadth-first order from coset 0
  std::vector<int> live;
  for (std::size_t c = 0; c < e.table.size(); ++c)
    if (e.find(static_cast<int>(c)) == static_cast<int>(c)) live.push_back(static_cast<int>(c));
  std::vector<int> order(e.table.size(), -1);
  std::vector<Word> words(e.table.size());
  std::deque<int> queue{e.find(0)};
  order[e.find(0)] = 0;
  int next_id = 1;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g = 0; g < num_generators; ++g)
      for (int sign : {+1, -1}) {
        int col = Enumerator::column(sign * (g + 1));
        int d = e.find(e.table[c][col]);
        if (order[d] == -1) {
          order[d] = next_id++;
          words[d] = words[c];
          words[d].push_back(sign * (g + 1));
          queue.push_back(d);
        }
      }
  }
  CosetTable out;
  out.num_generators = num_generators;
  out.num_cosets = next_id;
  out.steps = e.steps;
  out.action.assign(next_id, std::vector<int>(2 * num_generators, -1));
  out.transversal.assign(next_id, {});
  for (int c : live) {
    if (order[c] == -1) fail(ErrorKind::InternalError, "coset table is not transitive");
    out.transversal[order[c]] = words[c];
    for (int col = 0; col < 2 * num_generators; ++col)
      out.action[order[c]][col] = order[e.find(e.table[c][col])];
  }
  return out;
}

long long fp_group_order(const FpGroup& g, long long max_cosets, long long max_steps) {
  CosetTable t = coset_enumeration(static_cast<int>(g.generators.size()), g.relators, {},
                                   max_cosets, max_steps);
  return t.num_cosets;
}

int normalizer_quotient_order(const CosetTable& t, const std::vector<Word>& subgroup_gens) {
  int count = 0;
  for (int c = 0; c < t.num_cosets; ++c) {
    bool fixed = true;
    for (const Word& w : subgroup_gens)
      if (t.apply_word(c, w) != c) fixed = false;
    if (fixed) ++count;
  }
  return count;
}

}  // namespace orbicell
