#pragma once

#include <cstddef>
#include <vector>

#include "qi/matrix.hpp"

namespace qi {

/// A cell of a shape; column and row are 1-based, rows counted from the top.
struct Cell {
  std::size_t column = 0;
  std::size_t row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The matrix of an arrow's slot is indexed (row of the tail cell, row of the head cell).
struct TableauArrow {
  Cell head;
  Cell tail;
  /// 1-based slot index phi(a).
  std::size_t slot = 1;
};

struct Tableau {
  /// Column lengths n_1..n_m.
  std::vector<std::size_t> columns;
  std::vector<TableauArrow> arrows;

  std::size_t cell_count() const;
  std::size_t slot_count() const;
  /// Number of arrows in each slot (r_j).
  std::vector<std::size_t> slot_multiplicities() const;
};

/// Throws PreconditionError: cells covered exactly once, slots onto [1, s], one column pair per slot.
void validate_tableau(const Tableau& t);

struct TableauWithSubstitution {
  Tableau tableau;
  std::vector<Matrix> matrices;
};

/// Tableau invariants plus X_{phi(a)} of size n_{a''} x n_{a'}; throws PreconditionError.
void validate_tws(const TableauWithSubstitution& tws);

/// Largest cell count accepted by the direct permutation sum.
inline constexpr std::size_t kBpfReferenceCellCap = 12;
/// Largest cell count accepted by the memoized evaluator.
inline constexpr std::size_t kBpfCellCap = 40;

/// bpf^0 by summing over all of S_{n_1} x ... x S_{n_m}.
Scalar bpf0_reference(const TableauWithSubstitution& tws);
/// bpf^0 by cell-by-cell expansion memoized on the set of used row indices.
Scalar bpf0(const TableauWithSubstitution& tws);
/// c_T = prod_j r_j!.
mpz_class bpf_normalizer(const Tableau& t);
/// bpf^0 / c_T. Over Z/p the computation runs on integer lifts and is reduced afterwards.
/// Throws ArithmeticError if the quotient of integer data is not an integer.
Scalar bpf(const TableauWithSubstitution& tws);

struct BlockTerm {
  std::size_t p = 1;  // block row
  std::size_t q = 1;  // block column
  Matrix x;           // n_p x n_q
};

struct BplpTableau {
  TableauWithSubstitution tws;
  /// bpf(tws) = sign * P_r(blocks).
  int sign = 1;
};

/// One tableau for P_{r_1..r_s}(X_1^{p_1,q_1}, ...). Slot j gets r_j arrows from column p_j to
/// column q_j; each arrow takes the next free tail cell and then the next free head cell.
BplpTableau tableau_from_bplp(const std::vector<std::size_t>& r, const std::vector<BlockTerm>& blocks,
                              const std::vector<std::size_t>& dims);

struct Bplp {
  std::vector<std::size_t> r;
  std::vector<BlockTerm> blocks;
  int sign = 1;
};

/// The b.p.l.p. with bpf(tws) = sign * P_r(blocks).
Bplp bplp_from_tableau(const TableauWithSubstitution& tws);
/// Evaluates P_r on the block embeddings.
Scalar evaluate_bplp(const Bplp& f, const std::vector<std::size_t>& dims);

/// Single column of n cells, arrows 2i-1 -> 2i; slot j holds r_j consecutive arrows.
Tableau pfaffian_tableau(const std::vector<std::size_t>& r);
/// Two columns of n cells, arrow i from (1, i) to (2, i); slot j holds r_j consecutive arrows.
Tableau determinant_tableau(const std::vector<std::size_t>& r);
/// Dimension (t+2r, t+2s): t horizontal arrows, then r vertical arrows in column 1 and s in column 2.
/// Empty groups get no slot, so the slots are the nonempty ones among X, Y, Z in that order.
Tableau dp_tableau(std::size_t t, std::size_t r, std::size_t s);

/// bpf of dp_tableau. For r = s this is DP_{r,r}; otherwise it is DP_{r,s} up to a sign.
Scalar dp(std::size_t r, std::size_t s, const Matrix& x, const Matrix& y, const Matrix& z);
/// DP_{r,r}(X, Y, Z) for n x n matrices with n = t + 2r.
Scalar sigma_tr_via_dp(std::size_t t, std::size_t r, const Matrix& x, const Matrix& y, const Matrix& z);

}  // namespace qi
