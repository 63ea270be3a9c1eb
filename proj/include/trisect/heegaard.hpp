#pragma once

#include "trisect/symplectic.hpp"

#include <vector>

namespace trisect {

struct HeegaardPair {
  CutSystemClass a;
  CutSystemClass b;
};

struct HeegaardTriple {
  SymplecticLattice lattice;
  CutSystemClass a, b, c;
  Index k = 0;

  Index genus() const { return lattice.genus; }
  HeegaardPair ab() const { return {a, b}; }
  HeegaardPair bc() const { return {b, c}; }
  HeegaardPair ca() const { return {c, a}; }
};

/// Validates all three cut systems.
HeegaardTriple make_triple(const IntMatrix& alpha, const IntMatrix& beta, const IntMatrix& gamma, Index k);

struct HomologyReport {
  std::vector<BigInt> invariant_factors;  // torsion of H_1, each > 1
  Index free_rank = 0;
  bool is_homology_sphere = false;
  bool is_s1s2_connected_sum_homology = false;
  Index s1s2_count = 0;
};

HomologyReport heegaard_homology(const HeegaardPair& p);

bool is_homology_sphere(const HeegaardPair& p);

/// SNF of the pairing matrix is (1, ..., 1, 0, ..., 0) with k zeros.
bool is_algebraically_standard(const HeegaardPair& p, Index k);

/// Embeds a class of genus g1 (or g2) into the genus g1 + g2 lattice, handles
/// of the first summand first.
IntMatrix embed_left(const IntMatrix& rows, Index g1, Index g2);
IntMatrix embed_right(const IntMatrix& rows, Index g1, Index g2);

HeegaardTriple connected_sum(const HeegaardTriple& t1, const HeegaardTriple& t2);

/// Appends n copies of the genus-1 triple (x, x, y).
HeegaardTriple stabilize(const HeegaardTriple& t, Index n);

HeegaardTriple empty_triple();

}  // namespace trisect
