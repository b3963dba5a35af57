#include "ncsurf/lattice.hpp"

#include <stdexcept>

namespace ncsurf {

IntersectionLattice::IntersectionLattice(std::vector<std::string> basis,
                                         std::vector<std::vector<long>> gram,
                                         DivisorClass canonical)
    : basis_(std::move(basis)), gram_(std::move(gram)), canonical_(std::move(canonical)) {
  const std::size_t n = basis_.size();
  if (gram_.size() != n) throw std::invalid_argument("gram matrix size does not match basis");
  for (const auto& row : gram_)
    if (row.size() != n) throw std::invalid_argument("gram matrix must be square");
  if (!symmetric()) throw std::invalid_argument("gram matrix must be symmetric");
  if (canonical_.size() != n) throw std::invalid_argument("canonical class has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    DivisorClass e(n, 0);
    e[i] = 1;
    if (basis_[i] == "K") throw std::invalid_argument("'K' is reserved for the canonical class");
    if (!classes_.emplace(basis_[i], std::move(e)).second)
      throw std::invalid_argument("duplicate basis label '" + basis_[i] + "'");
  }
}

bool IntersectionLattice::symmetric() const {
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) return false;
  return true;
}

bool IntersectionLattice::has(const std::string& name) const {
  return name == "K" || classes_.count(name) > 0;
}

DivisorClass IntersectionLattice::named(const std::string& name) const {
  if (name == "K") return canonical_;
  auto it = classes_.find(name);
  if (it == classes_.end()) throw std::out_of_range("unknown divisor class '" + name + "'");
  return it->second;
}

long IntersectionLattice::pair(const DivisorClass& a, const DivisorClass& b) const {
  if (a.size() != basis_.size() || b.size() != basis_.size())
    throw std::invalid_argument("divisor class has wrong length");
  long sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) sum += a[i] * gram_[i][j] * b[j];
  return sum;
}

long IntersectionLattice::pair(const std::string& a, const std::string& b) const {
  return pair(named(a), named(b));
}

IntersectionLattice IntersectionLattice::blowup(const std::map<std::string, long>& center_incidences,
                                                const std::string& exceptional) const {
  if (has(exceptional)) throw std::invalid_argument("class '" + exceptional + "' already exists");
  for (const auto& [name, mult] : center_incidences) {
    if (mult < 0) throw std::invalid_argument("negative multiplicity at '" + name + "'");
    if (name == "K" || !classes_.count(name))
      throw std::out_of_range("unknown divisor class '" + name + "'");
  }

  IntersectionLattice out = *this;
  const std::size_t n = basis_.size();
  out.basis_.push_back(exceptional);
  for (auto& row : out.gram_) row.push_back(0);
  out.gram_.emplace_back(n + 1, 0);
  out.gram_[n][n] = -1;

  for (auto& [name, cls] : out.classes_) {
    cls.push_back(0);
    auto it = center_incidences.find(name);
    if (it != center_incidences.end()) cls[n] = -it->second;
  }
  out.canonical_.push_back(1);
  DivisorClass e(n + 1, 0);
  e[n] = 1;
  out.classes_.emplace(exceptional, std::move(e));
  return out;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size()) throw std::invalid_argument("divisor classes have different lengths");
  DivisorClass r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

long nc_pullback_degree(const IntersectionLattice& lattice, const std::vector<std::string>& boundary,
                        const std::string& target) {
  DivisorClass d = lattice.canonical();
  for (const auto& b : boundary) d = d + lattice.named(b);
  return lattice.pair(d, lattice.named(target));
}

}  // namespace ncsurf
