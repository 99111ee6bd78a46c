#include "crystal/word.hpp"

#include <stdexcept>

namespace crystal {

namespace {

// suffix_eps[k] = eps_i(f_k (x) ... (x) f_{m-1}), suffix_eps[m] = -inf.
std::vector<int> suffix_eps(const std::vector<FactorStats>& f) {
  const int m = static_cast<int>(f.size());
  std::vector<int> e(m + 1, kNegInf);
  for (int k = m - 1; k >= 0; --k)
    e[k] = std::max(f[k].eps, xadd(e[k + 1], -f[k].wt_h));
  return e;
}

}  // namespace

int tensor_eps(const std::vector<FactorStats>& f) { return suffix_eps(f)[0]; }

int tensor_phi(const std::vector<FactorStats>& f) {
  int p = kNegInf;
  for (const auto& fk : f) p = std::max(xadd(p, fk.wt_h), fk.phi);
  return p;
}

int tensor_route(const std::vector<FactorStats>& f, Dir dir) {
  const int m = static_cast<int>(f.size());
  if (m == 0) return -1;
  auto e = suffix_eps(f);
  for (int k = 0; k < m - 1; ++k) {
    if (dir == Dir::lower_op ? f[k].phi > e[k + 1] : f[k].phi >= e[k + 1]) return k;
  }
  return m - 1;
}

Word::Word(Alphabet a, std::vector<Letter> ls) : alphabet(a), letters(std::move(ls)) {
  for (Letter l : letters)
    if (!alphabet.contains(l)) throw std::invalid_argument("letter outside alphabet: " + std::to_string(l));
}

std::vector<int> Word::weight() const {
  std::vector<int> wt(alphabet.n, 0);
  for (Letter l : letters) add_letter_weight(wt, l);
  return wt;
}

std::string Word::show() const {
  std::string s;
  for (Letter l : letters) {
    if (!s.empty()) s += ' ';
    s += alphabet.show(l);
  }
  return s;
}

namespace {

std::vector<FactorStats> letter_factors(const Word& w, int i) {
  std::vector<FactorStats> f;
  f.reserve(w.letters.size());
  for (Letter l : w.letters) {
    int e = letter_eps(l, i), p = letter_phi(l, i);
    f.push_back({e, p, p - e});
  }
  return f;
}

}  // namespace

WordIndexStats word_index_stats(const Word& w, int i) {
  if (i < 1 || i >= w.alphabet.n)
    throw std::invalid_argument("crystal index out of range");
  WordIndexStats st;
  if (w.letters.empty()) return st;
  auto f = letter_factors(w, i);
  st.eps = tensor_eps(f);
  st.phi = tensor_phi(f);
  int rp = tensor_route(f, Dir::raise_op);
  int lp = tensor_route(f, Dir::lower_op);
  st.raise_pos = (rp >= 0 && f[rp].eps > 0) ? rp : -1;
  st.lower_pos = (lp >= 0 && f[lp].phi > 0) ? lp : -1;
  return st;
}

std::optional<Word> word_apply(const Word& w, int i, Dir dir) {
  auto st = word_index_stats(w, i);
  int pos = dir == Dir::raise_op ? st.raise_pos : st.lower_pos;
  if (pos < 0) return std::nullopt;
  Word out = w;
  auto changed = letter_apply(out.letters[pos], i, dir);
  if (!changed) throw std::logic_error("routed letter does not admit the operator");
  out.letters[pos] = *changed;
  return out;
}

}  // namespace crystal
