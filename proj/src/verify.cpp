#include "crystal/verify.hpp"

#include <random>

#include "crystal/crystal_graph.hpp"
#include "crystal/embedding.hpp"
#include "crystal/insertion.hpp"
#include "crystal/skew_rsk.hpp"

namespace crystal {

namespace {

using Rng = std::mt19937;

int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Partition random_partition(Rng& rng, int max_len, int max_part) {
  int len = pick(rng, 0, max_len);
  std::vector<int> parts;
  int cur = max_part;
  for (int k = 0; k < len; ++k) {
    cur = pick(rng, 0, cur);
    parts.push_back(cur);
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

Tableau random_sst(Rng& rng, const Partition& lambda, Alphabet a, int moves) {
  Tableau t = Tableau::highest_weight(lambda, a);
  for (int k = 0; k < moves; ++k) {
    int i = a.n >= 2 ? pick(rng, 1, a.n - 1) : 0;
    if (i == 0) break;
    if (auto next = tableau_apply(t, i, Dir::lower_op)) t = *next;
  }
  return t;
}

BiwordMatrix random_matrix(Rng& rng, Alphabet rows, Alphabet cols, int max_total) {
  BiwordMatrix m(rows, cols);
  int total = pick(rng, 0, max_total);
  for (int k = 0; k < total; ++k) {
    Letter a = rows.kind == AlphabetKind::unbarred ? pick(rng, 1, rows.n) : -pick(rng, 1, rows.n);
    Letter b = cols.kind == AlphabetKind::unbarred ? pick(rng, 1, cols.n) : -pick(rng, 1, cols.n);
    m.add(a, b, 1);
  }
  return m;
}

LusztigDatum random_datum(Rng& rng, const Quiver& q, int max_coord) {
  LusztigDatum c(q);
  for (int i = 1; i < q.n; ++i)
    for (int j = i + 1; j <= q.n; ++j) c.set(i, j, pick(rng, 0, max_coord));
  return c;
}

std::string show_op(const Quiver& q, int i, Dir dir) {
  return (dir == Dir::lower_op ? "f_" : "e_") + std::to_string(i) + " on n=" +
         std::to_string(q.n) + " sink=" + std::to_string(q.sink);
}

void compare_routes(const LusztigDatum& c, SuiteResult& out) {
  for (int i = 1; i < c.n(); ++i)
    for (Dir dir : {Dir::raise_op, Dir::lower_op}) {
      auto a = apply_direct(c, i, dir);
      auto b = apply_tensor(c, i, dir);
      ++out.checks;
      if (a.has_value() != b.has_value() || (a && !(*a == *b)))
        out.failures.push_back("route mismatch for " + show_op(c.quiver(), i, dir) +
                               " at " + c.show());
    }
}

std::vector<Partition> partitions_up_to(int max_cells, int max_len) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    out.emplace_back(parts);
    if (static_cast<int>(parts.size()) == max_len) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, max_cells, max_cells);
  return out;
}

}  // namespace

SuiteResult verify_rsk(int instances, unsigned seed) {
  SuiteResult out{"rsk", 0, {}};
  Rng rng(seed);
  for (int it = 0; it < instances; ++it) {
    int na = pick(rng, 1, 5), nb = pick(rng, 1, 5);
    Alphabet a = pick(rng, 0, 1) ? Alphabet::barred(na) : Alphabet::unbarred(na);
    Alphabet b = pick(rng, 0, 1) ? Alphabet::barred(nb) : Alphabet::unbarred(nb);
    Tableau base = random_sst(rng, random_partition(rng, na, 4), a, pick(rng, 0, 6));
    Tableau t = antinormalize(base);
    BiwordMatrix m = random_matrix(rng, a, b, 8);

    auto pq = skew_rsk(t, m);
    ++out.checks;
    if (pq.p.cells() != t.cells() + m.total())
      out.failures.push_back("insertion did not add total(M) cells");
    auto pre = skew_rsk_inverse(pq.p, pq.q);
    ++out.checks;
    if (!(pre.t == t) || !(pre.m == m))
      out.failures.push_back("kappa^{-1} kappa != id on instance " + std::to_string(it));
    auto pq2 = skew_rsk(pre.t, pre.m);
    ++out.checks;
    if (!(pq2.p == pq.p) || !(pq2.q == pq.q))
      out.failures.push_back("kappa kappa^{-1} != id on instance " + std::to_string(it));

    Biword bw = biword_of(m);
    ++out.checks;
    if (!(matrix_of(bw) == m)) out.failures.push_back("biword/matrix round trip failed");
    ++out.checks;
    if (!(tau_transpose(tau_transpose(bw)) == bw))
      out.failures.push_back("tau transpose is not an involution");
  }
  return out;
}

SuiteResult verify_thm44(int samples, unsigned seed) {
  SuiteResult out{"thm44", 0, {}};
  const int n = 4, nroots = n * (n - 1) / 2;
  for (int sink = 1; sink <= n - 1; ++sink) {
    std::vector<int> coords(nroots, 0);
    for (;;) {
      LusztigDatum c{Quiver(n, sink)};
      int k = 0;
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) c.set(i, j, coords[k++]);
      compare_routes(c, out);
      int pos = 0;
      while (pos < nroots && coords[pos] == 2) coords[pos++] = 0;
      if (pos == nroots) break;
      ++coords[pos];
    }
  }
  Rng rng(seed);
  for (int it = 0; it < samples; ++it) {
    int nn = pick(rng, 2, 7);
    Quiver q(nn, pick(rng, 1, nn - 1));
    compare_routes(random_datum(rng, q, 4), out);
  }
  return out;
}

SuiteResult verify_thm54(int max_cells) {
  SuiteResult out{"thm54", 0, {}};
  const int n = 4;
  TableauCrystal tc{Alphabet::unbarred(n)};
  for (const Partition& lambda : partitions_up_to(max_cells, n)) {
    auto g = generate(tc, Tableau::highest_weight(lambda, tc.alphabet));
    std::vector<int> shift(n);
    for (int k = 0; k < n; ++k) shift[k] = -lambda.part(k);
    for (int sink = 1; sink <= n - 1; ++sink) {
      Quiver q(n, sink);
      LusztigCrystal lc{q, false};
      auto bad = check_morphism<TableauCrystal, LusztigCrystal>(
          tc, g, lc, [&](const Tableau& s) { return embed(s, q); }, shift);
      out.checks += g.size();
      for (auto& msg : bad)
        out.failures.push_back("lambda=" + lambda.show() + " sink=" +
                               std::to_string(sink) + ": " + msg);
      std::unordered_map<std::string, int> images;
      for (const auto& node : g.nodes) ++images[lc.key(embed(node, q))];
      ++out.checks;
      if (static_cast<int>(images.size()) != g.size())
        out.failures.push_back("embed not injective on lambda=" + lambda.show());
    }
  }
  return out;
}

std::vector<SuiteResult> verify_all() {
  return {verify_rsk(), verify_thm44(), verify_thm54()};
}

}  // namespace crystal
