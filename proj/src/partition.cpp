#include "crystal/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace crystal {

Partition::Partition(std::vector<int> parts, int n_bound)
    : parts_(std::move(parts)), n_bound_(n_bound) {
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0) throw std::invalid_argument("partition part < 0");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
  if (n_bound_ > 0 && rows() > n_bound_)
    throw std::invalid_argument("partition longer than its n_bound");
}

int Partition::cells() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::padded(int len) const {
  std::vector<int> p = parts_;
  while (static_cast<int>(p.size()) < len) p.push_back(0);
  return Partition(std::move(p), n_bound_ > 0 && n_bound_ < len ? len : n_bound_);
}

Partition Partition::trimmed() const {
  std::vector<int> p = parts_;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Partition(std::move(p), n_bound_);
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 0; i < std::max(rows(), inner.rows()); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

bool Partition::operator==(const Partition& o) const {
  for (int i = 0; i < std::max(rows(), o.rows()); ++i)
    if (part(i) != o.part(i)) return false;
  return true;
}

std::string Partition::show() const {
  std::string s = "(";
  for (int i = 0; i < rows(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

SkewShape::SkewShape(Partition outer, Partition inner, bool rotated)
    : outer_(std::move(outer)), inner_(inner.padded(outer_.rows())), rotated_(rotated) {
  if (!outer_.contains(inner_)) throw std::invalid_argument("inner not contained in outer");
  if (inner_.rows() > outer_.rows())
    throw std::invalid_argument("inner longer than outer");
}

int SkewShape::col_begin(int t) const {
  if (!rotated_) return inner_.part(t);
  int s = rows() - 1 - t;
  return outer_.width() - outer_.part(s);
}

int SkewShape::col_end(int t) const {
  if (!rotated_) return outer_.part(t);
  int s = rows() - 1 - t;
  return outer_.width() - inner_.part(s);
}

bool SkewShape::operator==(const SkewShape& o) const {
  return rotated_ == o.rotated_ && outer_ == o.outer_ && inner_ == o.inner_;
}

std::string SkewShape::show() const {
  std::string s = outer_.show();
  if (!is_straight()) s += "/" + inner_.show();
  if (rotated_) s += "^pi";
  return s;
}

}  // namespace crystal
