#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "crystal/lusztig.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

// Weight plus the eps/phi string of an element; kNegInf marks -infinity.
struct CrystalStats {
  std::vector<int> wt;
  std::vector<int> eps;  // eps[i-1] for index i
  std::vector<int> phi;
};

// Crystal of semistandard tableaux over a fixed alphabet (B(lambda) when
// generated from a highest weight tableau).
struct TableauCrystal {
  using Element = Tableau;
  Alphabet alphabet;

  static constexpr bool seminormal = true;
  int index_count() const { return alphabet.n - 1; }

  std::string key(const Tableau& t) const {
    std::ostringstream os;
    os << t.shape().rotated();
    for (const auto& row : t.rows()) {
      os << '|';
      for (Letter l : row) os << l << ',';
    }
    return os.str();
  }

  CrystalStats stats(const Tableau& t) const {
    CrystalStats st;
    st.wt = t.weight();
    for (int i = 1; i < alphabet.n; ++i) {
      auto s = tableau_index_stats(t, i);
      st.eps.push_back(s.eps);
      st.phi.push_back(s.phi);
    }
    return st;
  }

  std::optional<Tableau> apply(const Tableau& t, int i, Dir dir) const {
    return tableau_apply(t, i, dir);
  }

  long truncation_measure(const Tableau&) const { return 0; }
};

// Crystal of Lusztig data on a single-sink quiver; `tensor` switches between
// the two operator routes.
struct LusztigCrystal {
  using Element = LusztigDatum;
  Quiver quiver;
  bool tensor = false;

  static constexpr bool seminormal = false;
  int index_count() const { return quiver.n - 1; }

  std::string key(const LusztigDatum& c) const {
    std::ostringstream os;
    for (auto [i, j, v] : c.nonzeros()) os << i << ',' << j << ':' << v << ';';
    return os.str();
  }

  CrystalStats stats(const LusztigDatum& c) const {
    CrystalStats st;
    st.wt = c.weight();
    for (int i = 1; i < quiver.n; ++i) {
      st.eps.push_back(datum_eps(c, i));
      st.phi.push_back(datum_phi(c, i));
    }
    return st;
  }

  std::optional<LusztigDatum> apply(const LusztigDatum& c, int i, Dir dir) const {
    return tensor ? apply_tensor(c, i, dir) : apply_direct(c, i, dir);
  }

  long truncation_measure(const LusztigDatum& c) const { return c.coord_sum(); }
};

constexpr size_t kDefaultNodeCap = 1'000'000;

template <class Crys>
struct CrystalGraph {
  using Element = typename Crys::Element;
  std::vector<Element> nodes;  // nodes[0] is the start element
  std::unordered_map<std::string, int> index_of;
  struct Edge {
    int src;
    int label;
    int dst;
  };
  std::vector<Edge> edges;
  std::optional<long> depth;  // truncation bound, if any

  int size() const { return static_cast<int>(nodes.size()); }
  bool contains(const std::string& k) const { return index_of.count(k) > 0; }
};

// Breadth-first closure of `start` under the lowering operators.  When depth
// is given, elements with truncation_measure > depth are not added (and the
// edges into them are dropped), which truncates B(infty)-type crystals by
// total coordinate sum.
template <class Crys>
CrystalGraph<Crys> generate(const Crys& crys, const typename Crys::Element& start,
                            std::optional<long> depth = std::nullopt,
                            size_t node_cap = kDefaultNodeCap) {
  CrystalGraph<Crys> g;
  g.depth = depth;
  g.nodes.push_back(start);
  g.index_of[crys.key(start)] = 0;
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int src = frontier.front();
    frontier.pop_front();
    for (int i = 1; i <= crys.index_count(); ++i) {
      auto next = crys.apply(g.nodes[src], i, Dir::lower_op);
      if (!next) continue;
      if (depth && crys.truncation_measure(*next) > *depth) continue;
      std::string k = crys.key(*next);
      auto [it, inserted] = g.index_of.try_emplace(k, g.size());
      if (inserted) {
        if (g.nodes.size() >= node_cap) throw std::runtime_error("node cap exceeded");
        g.nodes.push_back(*next);
        frontier.push_back(it->second);
      }
      g.edges.push_back({src, i, it->second});
    }
  }
  return g;
}

// Node-by-node check of the crystal axioms on a generated graph.  Edges whose
// target fell outside a truncation bound are skipped.  Returns human-readable
// violation descriptions; empty means verified.
template <class Crys>
std::vector<std::string> check_axioms(const Crys& crys, const CrystalGraph<Crys>& g) {
  std::vector<std::string> bad;
  auto complain = [&](int node, const std::string& what) {
    bad.push_back("node " + std::to_string(node) + ": " + what);
  };
  for (int v = 0; v < g.size(); ++v) {
    auto st = crys.stats(g.nodes[v]);
    for (int i = 1; i <= crys.index_count(); ++i) {
      int eps = st.eps[i - 1], phi = st.phi[i - 1];
      int wh = st.wt[i - 1] - st.wt[i];
      if (is_finite(eps) != is_finite(phi))
        complain(v, "eps/phi finiteness differs at i=" + std::to_string(i));
      if (is_finite(eps) && phi != wh + eps)
        complain(v, "phi != <wt,h_i> + eps at i=" + std::to_string(i));

      auto lo = crys.apply(g.nodes[v], i, Dir::lower_op);
      auto hi = crys.apply(g.nodes[v], i, Dir::raise_op);
      if (!is_finite(phi)) {
        if (lo || hi) complain(v, "operator defined with phi = -inf at i=" + std::to_string(i));
        continue;
      }
      if (!lo) {
        if (crys.seminormal && phi != 0)
          complain(v, "f_i null with phi != 0 at i=" + std::to_string(i));
        if (!crys.seminormal)
          complain(v, "f_i unexpectedly null at i=" + std::to_string(i));
        continue;
      }
      if (g.depth && crys.truncation_measure(*lo) > *g.depth) continue;
      auto ls = crys.stats(*lo);
      if (ls.eps[i - 1] != eps + 1 || ls.phi[i - 1] != phi - 1)
        complain(v, "f_i does not shift eps/phi by one at i=" + std::to_string(i));
      for (int k = 0; k < static_cast<int>(st.wt.size()); ++k) {
        int want = st.wt[k] - (k == i - 1 ? 1 : 0) + (k == i ? 1 : 0);
        if (ls.wt[k] != want) {
          complain(v, "f_i does not shift the weight by alpha_i at i=" + std::to_string(i));
          break;
        }
      }
      auto back = crys.apply(*lo, i, Dir::raise_op);
      if (!back || crys.key(*back) != crys.key(g.nodes[v]))
        complain(v, "e_i f_i != id at i=" + std::to_string(i));

      if (eps == 0) {
        if (hi) complain(v, "e_i defined with eps = 0 at i=" + std::to_string(i));
      } else if (is_finite(eps)) {
        if (!hi) {
          complain(v, "e_i null with eps > 0 at i=" + std::to_string(i));
        } else {
          auto fwd = crys.apply(*hi, i, Dir::lower_op);
          if (!fwd || crys.key(*fwd) != crys.key(g.nodes[v]))
            complain(v, "f_i e_i != id at i=" + std::to_string(i));
        }
      }
    }
  }
  return bad;
}

// Checks that `map` is a morphism from g1 into the crystal `target`, up to the
// declared T_mu twist: wt(img) = wt(b) + shift, eps equal, phi shifted by
// <shift, h_i>, operators commuting wherever both sides are defined.
template <class C1, class C2>
std::vector<std::string> check_morphism(
    const C1& source, const CrystalGraph<C1>& g1, const C2& target,
    const std::function<typename C2::Element(const typename C1::Element&)>& map,
    const std::vector<int>& wt_shift) {
  std::vector<std::string> bad;
  auto complain = [&](int node, const std::string& what) {
    bad.push_back("node " + std::to_string(node) + ": " + what);
  };
  if (source.index_count() != target.index_count())
    return {"index sets differ"};

  std::vector<typename C2::Element> images;
  images.reserve(g1.nodes.size());
  for (const auto& b : g1.nodes) images.push_back(map(b));

  for (int v = 0; v < g1.size(); ++v) {
    auto sb = source.stats(g1.nodes[v]);
    auto si = target.stats(images[v]);
    for (size_t k = 0; k < sb.wt.size(); ++k)
      if (si.wt[k] != sb.wt[k] + wt_shift[k]) {
        complain(v, "weight not shifted as declared");
        break;
      }
    for (int i = 1; i <= source.index_count(); ++i) {
      if (si.eps[i - 1] != sb.eps[i - 1])
        complain(v, "eps differs at i=" + std::to_string(i));
      int dh = wt_shift[i - 1] - wt_shift[i];
      if (is_finite(sb.phi[i - 1]) ? si.phi[i - 1] != sb.phi[i - 1] + dh
                                   : is_finite(si.phi[i - 1]))
        complain(v, "phi not shifted as declared at i=" + std::to_string(i));
    }
  }
  for (const auto& e : g1.edges) {
    auto img_low = target.apply(images[e.src], e.label, Dir::lower_op);
    if (!img_low || target.key(*img_low) != target.key(images[e.dst]))
      complain(e.src, "f_" + std::to_string(e.label) + " does not commute");
    auto img_hi = target.apply(images[e.dst], e.label, Dir::raise_op);
    if (!img_hi || target.key(*img_hi) != target.key(images[e.src]))
      complain(e.dst, "e_" + std::to_string(e.label) + " does not commute");
  }
  return bad;
}

}  // namespace crystal
