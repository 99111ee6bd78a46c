#include "crystal/biword.hpp"

#include <stdexcept>

namespace crystal {

void BiwordMatrix::add(Letter a, Letter b, int count) {
  if (!row_alphabet.contains(a) || !col_alphabet.contains(b))
    throw std::invalid_argument("matrix entry outside its alphabets");
  if (count < 0) throw std::invalid_argument("negative count");
  if (count == 0) return;
  entries[{a, b}] += count;
}

int BiwordMatrix::total() const {
  int s = 0;
  for (const auto& [_, c] : entries) s += c;
  return s;
}

bool BiwordMatrix::operator==(const BiwordMatrix& o) const {
  return row_alphabet == o.row_alphabet && col_alphabet == o.col_alphabet &&
         entries == o.entries;
}

BiwordMatrix BiwordMatrix::transposed() const {
  BiwordMatrix t(col_alphabet, row_alphabet);
  for (const auto& [ab, c] : entries) t.add(ab.second, ab.first, c);
  return t;
}

std::vector<int> BiwordMatrix::weight(int ambient) const {
  std::vector<int> wt(ambient, 0);
  for (const auto& [ab, c] : entries)
    for (int k = 0; k < c; ++k) {
      add_letter_weight(wt, ab.first);
      add_letter_weight(wt, ab.second);
    }
  return wt;
}

Biword biword_of(const BiwordMatrix& m) {
  Biword bw{m.row_alphabet, m.col_alphabet, {}, {}};
  // entries is keyed by (a, b) in lexicographic letter order; within a fixed a
  // the b's come out increasing, so emit them reversed for the tie rule.
  for (auto it = m.entries.begin(); it != m.entries.end();) {
    Letter a = it->first.first;
    auto row_end = it;
    while (row_end != m.entries.end() && row_end->first.first == a) ++row_end;
    for (auto r = std::make_reverse_iterator(row_end),
              stop = std::make_reverse_iterator(it);
         r != stop; ++r)
      for (int k = 0; k < r->second; ++k) {
        bw.top.push_back(a);
        bw.bottom.push_back(r->first.second);
      }
    it = row_end;
  }
  return bw;
}

BiwordMatrix matrix_of(const Biword& bw) {
  if (bw.top.size() != bw.bottom.size())
    throw std::invalid_argument("biword words differ in length");
  BiwordMatrix m(bw.top_alphabet, bw.bottom_alphabet);
  for (size_t k = 0; k < bw.top.size(); ++k) m.add(bw.top[k], bw.bottom[k], 1);
  return m;
}

Biword tau_transpose(const Biword& bw) {
  return biword_of(matrix_of(bw).transposed());
}

}  // namespace crystal
