#include "flagchow/chow.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "flagchow/linalg.hpp"

namespace flagchow {

FlagSpace::FlagSpace(SpaceKind kind, int d, int n) : kind_(kind), d_(d), n_(n) {
  if (d < 2 || d > n - d) {
    throw Error("flag space requires 2 <= d <= n-d");
  }
}

FlagSpace FlagSpace::grassmannian(int d, int n) {
  return FlagSpace(SpaceKind::Grassmannian, d, n);
}

FlagSpace FlagSpace::three_step_flag(int d, int n) {
  return FlagSpace(SpaceKind::ThreeStepFlag, d, n);
}

int FlagSpace::variable_count() const {
  return kind_ == SpaceKind::Grassmannian ? d_ : d_ + 1;
}

BlockPartition FlagSpace::blocks() const {
  if (kind_ == SpaceKind::Grassmannian) return BlockPartition::single(d_);
  BlockPartition partition;
  std::vector<int> head;
  for (int i = 1; i <= d_ - 1; ++i) head.push_back(i);
  partition.blocks.push_back(head);
  partition.blocks.push_back({d_});
  partition.blocks.push_back({d_ + 1});
  return partition;
}

std::vector<int> FlagSpace::generator_degrees() const {
  std::vector<int> degrees;
  for (int j = n_ - top_block_size() + 1; j <= n_; ++j) degrees.push_back(j);
  return degrees;
}

std::string FlagSpace::str() const {
  if (kind_ == SpaceKind::Grassmannian) {
    return "G(" + std::to_string(d_) + "," + std::to_string(n_) + ")";
  }
  return "F(" + std::to_string(d_ - 1) + "," + std::to_string(d_) + "," +
         std::to_string(d_ + 1) + "," + std::to_string(n_) + ")";
}

std::vector<Polynomial> ideal_generators(const FlagSpace& space) {
  int m = space.variable_count();
  std::vector<int> vars;
  for (int i = 1; i <= m; ++i) vars.push_back(i);
  std::vector<Polynomial> generators;
  for (int j : space.generator_degrees()) {
    generators.push_back(sigma(vars, j, m));
  }
  return generators;
}

namespace {

void monomials_rec(int m, int position, int remaining, ExponentRow& row,
                   std::vector<ExponentRow>& out) {
  if (position == m) {
    if (remaining == 0) out.push_back(row);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    row[position + 1] = e;  // entry 0 is the T exponent, kept zero
    monomials_rec(m, position + 1, remaining - e, row, out);
  }
  row[position + 1] = 0;
}

std::vector<ExponentRow> monomials_of_degree(int m, int degree) {
  std::vector<ExponentRow> out;
  ExponentRow row(1 + m, 0);
  monomials_rec(m, 0, degree, row, out);
  std::sort(out.begin(), out.end());
  return out;
}

ExponentRow canonical_under_blocks(ExponentRow row,
                                   const BlockPartition& partition) {
  for (const auto& block : partition.blocks) {
    std::vector<int> exponents;
    for (int i : block) exponents.push_back(row[i]);
    std::sort(exponents.rbegin(), exponents.rend());
    for (std::size_t k = 0; k < block.size(); ++k) row[block[k]] = exponents[k];
  }
  return row;
}

// Sum of the distinct monomials in the block-group orbit of the row.
Polynomial orbit_sum(const ExponentRow& row, const BlockPartition& partition,
                     int m) {
  std::vector<std::vector<int>> block_exponents;
  for (const auto& block : partition.blocks) {
    std::vector<int> exponents;
    for (int i : block) exponents.push_back(row[i]);
    std::sort(exponents.begin(), exponents.end());
    block_exponents.push_back(exponents);
  }
  Polynomial result(m);
  // Walk the Cartesian product of per-block multiset permutations.
  std::vector<std::vector<std::vector<int>>> arrangements;
  for (auto exponents : block_exponents) {
    std::vector<std::vector<int>> all;
    do {
      all.push_back(exponents);
    } while (std::next_permutation(exponents.begin(), exponents.end()));
    arrangements.push_back(all);
  }
  std::vector<std::size_t> index(arrangements.size(), 0);
  while (true) {
    ExponentRow permuted(1 + m, 0);
    permuted[0] = row[0];
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
      const auto& block = partition.blocks[b];
      const auto& exponents = arrangements[b][index[b]];
      for (std::size_t k = 0; k < block.size(); ++k) {
        permuted[block[k]] = exponents[k];
      }
    }
    result += Polynomial::monomial(permuted, 1);
    int level = static_cast<int>(arrangements.size()) - 1;
    while (level >= 0 && ++index[level] == arrangements[level].size()) {
      index[level] = 0;
      --level;
    }
    if (level < 0) break;
  }
  return result;
}

struct GradedPiece {
  std::vector<ExponentRow> monomials;
  std::map<ExponentRow, int> index;
  RatMatrix ideal_basis;        // reduced row echelon form, full coordinates
  std::vector<int> pivots;
  int symmetric_dimension = 0;  // block-symmetric quotient dimension
};

RatRow vectorize(const Polynomial& p, const GradedPiece& piece) {
  RatRow row(piece.monomials.size(), Rational(0));
  for (const auto& [exp, coeff] : p.terms()) {
    auto it = piece.index.find(exp);
    if (it == piece.index.end()) throw Error("monomial outside graded piece");
    row[it->second] = coeff;
  }
  return row;
}

using PieceKey = std::tuple<int, int, int, int>;

std::shared_ptr<const GradedPiece> graded_piece(const FlagSpace& space,
                                                int degree) {
  static std::mutex cache_mutex;
  static std::map<PieceKey, std::shared_ptr<const GradedPiece>> cache;
  PieceKey key{static_cast<int>(space.kind()), space.d(), space.n(), degree};
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto piece = std::make_shared<GradedPiece>();
  int m = space.variable_count();
  piece->monomials = monomials_of_degree(m, degree);
  for (std::size_t i = 0; i < piece->monomials.size(); ++i) {
    piece->index.emplace(piece->monomials[i], static_cast<int>(i));
  }

  const BlockPartition partition = space.blocks();
  const std::vector<Polynomial> generators = ideal_generators(space);
  const std::vector<int> degrees = space.generator_degrees();

  RatMatrix full_rows;
  RatMatrix symmetric_rows;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    int remaining = degree - degrees[g];
    if (remaining < 0) continue;
    for (const auto& mu : monomials_of_degree(m, remaining)) {
      Polynomial product = Polynomial::monomial(mu, 1) * generators[g];
      full_rows.push_back(vectorize(product, *piece));
      if (mu == canonical_under_blocks(mu, partition)) {
        Polynomial symmetric_product = orbit_sum(mu, partition, m) * generators[g];
        symmetric_rows.push_back(vectorize(symmetric_product, *piece));
      }
    }
  }
  piece->pivots = rref(full_rows);
  piece->ideal_basis = std::move(full_rows);

  int orbit_count = 0;
  for (const auto& mono : piece->monomials) {
    if (mono == canonical_under_blocks(mono, partition)) ++orbit_count;
  }
  rref(symmetric_rows);
  piece->symmetric_dimension =
      orbit_count - static_cast<int>(symmetric_rows.size());

  auto [pos, inserted] = cache.emplace(key, std::move(piece));
  return pos->second;
}

void check_membership_input(const FlagSpace& space, const Polynomial& p,
                            const char* who) {
  if (p.variable_count() != space.variable_count()) {
    throw Error(std::string(who) + ": polynomial arity does not match space");
  }
  if (!is_block_symmetric(p, space.blocks())) {
    throw Error(std::string(who) +
                ": polynomial is not block-symmetric for the space");
  }
}

}  // namespace

bool in_ideal(const FlagSpace& space, const Polynomial& p) {
  check_membership_input(space, p, "in_ideal");
  if (p.is_zero()) return true;
  for (int k = 0; k <= p.t_degree(); ++k) {
    Polynomial slice = p.t_coefficient(k);
    if (slice.is_zero()) continue;
    auto info = homogeneous_degree(slice);
    if (info.kind != Homogeneity::Homogeneous) {
      throw Error("in_ideal: T-coefficient is not homogeneous in the X-grading");
    }
    auto piece = graded_piece(space, info.degree);
    RatRow reduced =
        reduce_against(piece->ideal_basis, piece->pivots, vectorize(slice, *piece));
    for (const auto& entry : reduced) {
      if (entry != 0) return false;
    }
  }
  return true;
}

bool ring_equal(const FlagSpace& space, const Polynomial& p,
                const Polynomial& q) {
  check_membership_input(space, p, "ring_equal");
  check_membership_input(space, q, "ring_equal");
  return in_ideal(space, p - q);
}

int graded_dimension(const FlagSpace& space, int degree) {
  if (degree < 0) throw Error("graded_dimension: negative degree");
  return graded_piece(space, degree)->symmetric_dimension;
}

int min_ideal_degree(const FlagSpace& space) {
  for (int degree = 1;; ++degree) {
    if (!graded_piece(space, degree)->ideal_basis.empty()) return degree;
  }
}

Polynomial reduce(const FlagSpace& space, const Polynomial& p) {
  if (p.variable_count() != space.variable_count()) {
    throw Error("reduce: polynomial arity does not match space");
  }
  int m = space.variable_count();
  Polynomial result(m);
  for (int k = 0; k <= std::max(p.t_degree(), 0); ++k) {
    Polynomial slice = p.t_coefficient(k);
    if (slice.is_zero()) continue;
    Polynomial reduced_slice(m);
    for (int g = 0; g <= slice.total_degree(); ++g) {
      Polynomial component = slice.homogeneous_component(g);
      if (component.is_zero()) continue;
      auto piece = graded_piece(space, g);
      RatRow reduced = reduce_against(piece->ideal_basis, piece->pivots,
                                      vectorize(component, *piece));
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (reduced[i] != 0) {
          reduced_slice += Polynomial::monomial(piece->monomials[i], reduced[i]);
        }
      }
    }
    result += reduced_slice * pow(Polynomial::t(m), k);
  }
  return result;
}

Polynomial symmetric_representative(const FlagSpace& space,
                                    const Polynomial& p) {
  if (space.kind() != SpaceKind::ThreeStepFlag) {
    throw Error("symmetric_representative requires a three-step flag space");
  }
  int m = space.variable_count();  // d+1
  int d = space.d();
  if (p.variable_count() != m) {
    throw Error("symmetric_representative: arity mismatch");
  }
  BlockPartition symmetric_block = BlockPartition::single(d);
  symmetric_block.blocks.push_back({d + 1});

  Polynomial result(m);
  for (int k = 0; k <= std::max(p.t_degree(), 0); ++k) {
    Polynomial slice = p.t_coefficient(k);
    if (slice.is_zero()) continue;
    for (int g = 0; g <= slice.total_degree(); ++g) {
      Polynomial component = slice.homogeneous_component(g);
      if (component.is_zero()) continue;
      auto piece = graded_piece(space, g);

      // Basis of candidate representatives: S_d-orbit sums of monomials free
      // of X_{d+1}.
      std::vector<RatRow> columns;
      std::vector<Polynomial> basis_polys;
      for (const auto& mono : piece->monomials) {
        if (mono[d + 1] != 0) continue;
        if (mono != canonical_under_blocks(mono, symmetric_block)) continue;
        Polynomial orbit = orbit_sum(mono, symmetric_block, m);
        basis_polys.push_back(orbit);
        columns.push_back(vectorize(orbit, *piece));
      }
      std::size_t rep_count = columns.size();
      for (const auto& row : piece->ideal_basis) columns.push_back(row);

      auto solution = solve_any(columns, vectorize(component, *piece));
      if (!solution) {
        throw Error("class admits no symmetric X-free representative");
      }
      Polynomial candidate(m);
      for (std::size_t j = 0; j < rep_count; ++j) {
        if ((*solution)[j] != 0) candidate += (*solution)[j] * basis_polys[j];
      }

      // Canonicalize modulo (ideal piece) cap (symmetric X-free span): a
      // basis vector of that intersection is a combination of the orbit-sum
      // columns whose reduction against the ideal basis vanishes.
      std::vector<RatRow> reduced_columns;
      for (std::size_t j = 0; j < rep_count; ++j) {
        reduced_columns.push_back(
            reduce_against(piece->ideal_basis, piece->pivots, columns[j]));
      }
      RatMatrix overlap;
      for (const auto& combo : kernel_basis(reduced_columns)) {
        Polynomial element(m);
        for (std::size_t j = 0; j < rep_count; ++j) {
          if (combo[j] != 0) element += combo[j] * basis_polys[j];
        }
        if (!element.is_zero()) overlap.push_back(vectorize(element, *piece));
      }
      std::vector<int> overlap_pivots = rref(overlap);
      RatRow reduced =
          reduce_against(overlap, overlap_pivots, vectorize(candidate, *piece));
      Polynomial canonical(m);
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (reduced[i] != 0) {
          canonical += Polynomial::monomial(piece->monomials[i], reduced[i]);
        }
      }
      result += canonical * pow(Polynomial::t(m), k);
    }
  }
  return result;
}

}  // namespace flagchow
