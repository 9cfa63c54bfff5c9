#pragma once

#include <vector>

#include "flagchow/polynomial.hpp"

namespace flagchow {

enum class SpaceKind { Grassmannian, ThreeStepFlag };

// Ambient space descriptor: either G(d,n) with the single symmetric block
// X1..Xd, or the three-step flag F(d-1,d,d+1,n) with blocks
// X1..X_{d-1} | X_d | X_{d+1}.  The materialized ring uses the first d_k
// variables only; the ideal is generated by the complete homogeneous
// symmetric polynomials of degrees n-d_k+1..n in them.
class FlagSpace {
 public:
  static FlagSpace grassmannian(int d, int n);
  static FlagSpace three_step_flag(int d, int n);

  SpaceKind kind() const { return kind_; }
  int d() const { return d_; }
  int n() const { return n_; }
  int variable_count() const;   // d for G(d,n), d+1 for the flag
  int top_block_size() const { return variable_count(); }  // d_k
  BlockPartition blocks() const;
  std::vector<int> generator_degrees() const;
  std::string str() const;

  bool operator==(const FlagSpace& other) const = default;

 private:
  FlagSpace(SpaceKind kind, int d, int n);
  SpaceKind kind_;
  int d_;
  int n_;
};

std::vector<Polynomial> ideal_generators(const FlagSpace& space);

// Graded ideal membership by exact linear algebra.  p must be
// block-symmetric for the space and X-homogeneous per T-power.
bool in_ideal(const FlagSpace& space, const Polynomial& p);

bool ring_equal(const FlagSpace& space, const Polynomial& p,
                const Polynomial& q);

// Dimension of (block-symmetric polynomials of the degree) / (I cap degree).
int graded_dimension(const FlagSpace& space, int degree);

// Smallest degree with a nonzero graded piece of I.
int min_ideal_degree(const FlagSpace& space);

// Canonical normal form of p modulo I (per T-power and X-degree, reduced
// against the row-echelon basis of the ideal piece).
Polynomial reduce(const FlagSpace& space, const Polynomial& p);

// Representative of the class of p that is symmetric in X1..Xd and free of
// X_{d+1}; canonical among such.  Throws when the class admits none.
Polynomial symmetric_representative(const FlagSpace& space,
                                    const Polynomial& p);

}  // namespace flagchow
