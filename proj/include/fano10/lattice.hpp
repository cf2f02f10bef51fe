#pragma once

#include <string>
#include <vector>

#include "fano10/exactlin.hpp"

namespace fano10 {

/// Integral lattice, identified with its Gram matrix (symmetric, det != 0).
/// Basis changes produce new values; vectors always refer to the basis of
/// the lattice they were created from.
class Lattice {
  public:
    Lattice() = default;
    Lattice(IntMat gram, std::string label = "");

    const IntMat& gram() const { return gram_; }
    const std::string& label() const { return label_; }
    int rank() const { return gram_.rows(); }

    Int determinant() const;            // det(Gram), with sign
    std::pair<int, int> signature() const;
    bool is_even() const;

    bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

  private:
    IntMat gram_;
    std::string label_;
};

/// Integer coordinate vector in the basis of an owning lattice.
struct LatticeVector {
    const Lattice* owner = nullptr;
    std::vector<Int> coords;
};

LatticeVector vec(const Lattice& l, std::vector<Int> coords);
LatticeVector vec(const Lattice& l, std::initializer_list<long> coords);

Int inner(const LatticeVector& x, const LatticeVector& y);
Int norm(const LatticeVector& x);

/// div(w): positive generator of the ideal w.L, i.e. gcd of Gram*coords.
Int divisibility(const LatticeVector& w);

/// x is characteristic iff x.y == y.y (mod 2) for all y; checked on basis
/// vectors, which suffices since the condition is additive mod 2.
bool is_characteristic(const LatticeVector& x);

// Standard building blocks.
Lattice lattice_U();
Lattice lattice_A1();
Lattice lattice_E8();
Lattice lattice_scaled(const Int& n);                 // rank 1, Gram [n]
Lattice lattice_odd_unimodular(int p, int q);         // diag(+1 x p, -1 x q)

Lattice direct_sum(const std::vector<Lattice>& ls);

}  // namespace fano10
