#include "crystal/tableau.hpp"

#include <stdexcept>

namespace crystal {

Tableau::Tableau(SkewShape shape, Alphabet alphabet, std::vector<std::vector<Letter>> rows)
    : shape_(std::move(shape)), alphabet_(alphabet), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw std::invalid_argument("row count does not match shape");
  for (int t = 0; t < shape_.rows(); ++t) {
    if (static_cast<int>(rows_[t].size()) != shape_.row_len(t))
      throw std::invalid_argument("row length does not match shape");
    for (size_t k = 0; k < rows_[t].size(); ++k) {
      if (!alphabet_.contains(rows_[t][k]))
        throw std::invalid_argument("entry outside alphabet");
      if (k > 0 && rows_[t][k] < rows_[t][k - 1])
        throw std::invalid_argument("row entries must weakly increase");
    }
  }
  for (int t = 0; t + 1 < shape_.rows(); ++t) {
    int lo = std::max(shape_.col_begin(t), shape_.col_begin(t + 1));
    int hi = std::min(shape_.col_end(t), shape_.col_end(t + 1));
    for (int c = lo; c < hi; ++c)
      if (at(t, c) >= at(t + 1, c))
        throw std::invalid_argument("column entries must strictly increase");
  }
}

Tableau Tableau::highest_weight(const Partition& lambda, Alphabet a) {
  if (lambda.rows() > a.n) throw std::invalid_argument("partition longer than alphabet");
  std::vector<std::vector<Letter>> rows;
  for (int i = 0; i < lambda.rows(); ++i) {
    Letter l = a.kind == AlphabetKind::unbarred ? i + 1 : -(a.n - i);
    rows.emplace_back(lambda.part(i), l);
  }
  return Tableau(SkewShape::straight(lambda), a, std::move(rows));
}

Letter Tableau::at(int t, int c) const {
  int b = shape_.col_begin(t);
  if (c < b || c >= shape_.col_end(t)) throw std::out_of_range("cell not in shape");
  return rows_[t][c - b];
}

Word Tableau::reading_word() const {
  std::vector<Letter> ls;
  ls.reserve(cells());
  for (const auto& r : rows_) ls.insert(ls.end(), r.rbegin(), r.rend());
  return Word(alphabet_, std::move(ls));
}

Word Tableau::row_word() const {
  std::vector<Letter> ls;
  ls.reserve(cells());
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    ls.insert(ls.end(), it->begin(), it->end());
  return Word(alphabet_, std::move(ls));
}

std::vector<int> Tableau::weight() const {
  std::vector<int> wt(alphabet_.n, 0);
  for (const auto& r : rows_)
    for (Letter l : r) add_letter_weight(wt, l);
  return wt;
}

bool Tableau::operator==(const Tableau& o) const {
  if (!(alphabet_ == o.alphabet_) || shape_.rotated() != o.shape_.rotated()) return false;
  if (!(shape_.outer() == o.shape_.outer()) || !(shape_.inner() == o.shape_.inner()))
    return false;
  auto nonempty = [](const std::vector<std::vector<Letter>>& rs) {
    std::vector<std::vector<Letter>> out;
    for (const auto& r : rs)
      if (!r.empty()) out.push_back(r);
    return out;
  };
  return nonempty(rows_) == nonempty(o.rows_);
}

std::string Tableau::show() const {
  std::string s = shape_.show() + " over " + (alphabet_.kind == AlphabetKind::unbarred ? "[n]" : "[n~]") + ":";
  for (int t = 0; t < shape_.rows(); ++t) {
    s += "\n";
    s.append(2 * shape_.col_begin(t), ' ');
    for (Letter l : rows_[t]) s += alphabet_.show(l) + " ";
  }
  return s;
}

TableauIndexStats tableau_index_stats(const Tableau& t, int i) {
  auto st = word_index_stats(t.reading_word(), i);
  return {st.eps, st.phi};
}

std::optional<Tableau> tableau_apply(const Tableau& t, int i, Dir dir) {
  Word w = t.reading_word();
  auto st = word_index_stats(w, i);
  int pos = dir == Dir::raise_op ? st.raise_pos : st.lower_pos;
  if (pos < 0) return std::nullopt;
  auto rows = t.rows();
  // Reading order: row t, offsets right to left.
  int k = 0;
  for (auto& r : rows) {
    int len = static_cast<int>(r.size());
    if (pos < k + len) {
      int off = len - 1 - (pos - k);
      r[off] = *letter_apply(r[off], i, dir);
      return Tableau(t.shape(), t.alphabet(), std::move(rows));
    }
    k += len;
  }
  throw std::logic_error("reading position out of range");
}

}  // namespace crystal
