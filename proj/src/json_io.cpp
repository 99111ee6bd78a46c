#include "crystal/json_io.hpp"

#include <stdexcept>

namespace crystal {

json to_json(const Alphabet& a) {
  return json{{"kind", a.kind == AlphabetKind::unbarred ? "unbarred" : "barred"},
              {"n", a.n}};
}

Alphabet alphabet_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  int n = j.at("n").get<int>();
  if (kind == "unbarred") return Alphabet::unbarred(n);
  if (kind == "barred") return Alphabet::barred(n);
  throw std::invalid_argument("alphabet kind must be 'unbarred' or 'barred'");
}

json to_json(const Tableau& t) {
  return json{{"alphabet", to_json(t.alphabet())},
              {"outer", t.shape().outer().parts()},
              {"inner", t.shape().inner().parts()},
              {"rotated", t.shape().rotated()},
              {"rows", t.rows()}};
}

Tableau tableau_from_json(const json& j) {
  Alphabet a = alphabet_from_json(j.at("alphabet"));
  Partition outer(j.at("outer").get<std::vector<int>>());
  Partition inner(j.value("inner", std::vector<int>{}));
  bool rotated = j.value("rotated", false);
  auto rows = j.at("rows").get<std::vector<std::vector<Letter>>>();
  return Tableau(SkewShape(outer, inner, rotated), a, std::move(rows));
}

json to_json(const BiwordMatrix& m) {
  json entries = json::array();
  for (const auto& [ab, c] : m.entries)
    entries.push_back(json::array({ab.first, ab.second, c}));
  return json{{"rows", to_json(m.row_alphabet)},
              {"cols", to_json(m.col_alphabet)},
              {"entries", entries}};
}

BiwordMatrix matrix_from_json(const json& j) {
  BiwordMatrix m(alphabet_from_json(j.at("rows")), alphabet_from_json(j.at("cols")));
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("matrix entries must be [row, col, count]");
    m.add(e[0].get<Letter>(), e[1].get<Letter>(), e[2].get<int>());
  }
  return m;
}

json to_json(const LusztigDatum& c) {
  json entries = json::array();
  for (auto [i, j, v] : c.nonzeros()) entries.push_back(json::array({i, j, v}));
  return json{{"n", c.n()}, {"sink", c.quiver().sink}, {"c", entries}};
}

LusztigDatum datum_from_json(const json& j) {
  Quiver q(j.at("n").get<int>(), j.at("sink").get<int>());
  LusztigDatum c(q);
  for (const auto& e : j.at("c")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("datum entries must be [i, j, count]");
    int i = e[0].get<int>(), jj = e[1].get<int>(), v = e[2].get<int>();
    if (v < 0) throw std::invalid_argument("negative coordinate");
    c.set(i, jj, v);
  }
  return c;
}

}  // namespace crystal
