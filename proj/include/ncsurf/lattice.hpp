#pragma once

#include <map>
#include <string>
#include <vector>

namespace ncsurf {

// Integer combination of the lattice basis.
using DivisorClass = std::vector<long>;

// Divisor classes on a surface with a symmetric integer intersection pairing.
// Basis classes are total transforms; named classes (curves, K) are integer
// combinations of them and follow the blow-up transformation rules.
class IntersectionLattice {
 public:
  // `gram` must be square and symmetric with size equal to `basis`; `canonical`
  // is a combination of the basis. Each basis label is also a named class.
  IntersectionLattice(std::vector<std::string> basis, std::vector<std::vector<long>> gram,
                      DivisorClass canonical);

  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const std::vector<std::vector<long>>& gram() const noexcept { return gram_; }
  const DivisorClass& canonical() const noexcept { return canonical_; }
  // Throws std::out_of_range for an unknown name; "K" is the canonical class.
  DivisorClass named(const std::string& name) const;
  bool has(const std::string& name) const;

  long pair(const DivisorClass& a, const DivisorClass& b) const;
  long pair(const std::string& a, const std::string& b) const;

  // Blow up a point lying on the named curves with the given multiplicities:
  // adds E with E.E = -1 orthogonal to the old basis, replaces each named
  // curve D by D - mult(D) E and K by K + E. E is registered as `exceptional`.
  IntersectionLattice blowup(const std::map<std::string, long>& center_incidences,
                             const std::string& exceptional) const;

  bool symmetric() const;

 private:
  std::vector<std::string> basis_;
  std::vector<std::vector<long>> gram_;
  DivisorClass canonical_;
  std::map<std::string, DivisorClass> classes_;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);

// (K + sum of boundary) . target.
long nc_pullback_degree(const IntersectionLattice& lattice, const std::vector<std::string>& boundary,
                        const std::string& target);

}  // namespace ncsurf
