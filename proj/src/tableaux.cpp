#include "qi/tableaux.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "qi/error.hpp"
#include "qi/linalg.hpp"
#include "qi/parallel.hpp"

namespace qi {

namespace {

std::string cell_text(const Cell& c) {
  return "(" + std::to_string(c.column) + ", " + std::to_string(c.row) + ")";
}

// Parity of a sequence of distinct integers, as the permutation sorting it.
int sequence_sign(const std::vector<std::size_t>& seq) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::size_t> column_offsets(const std::vector<std::size_t>& columns) {
  std::vector<std::size_t> off(columns.size() + 1, 0);
  for (std::size_t i = 0; i < columns.size(); ++i) off[i + 1] = off[i] + columns[i];
  return off;
}

// Global positions of (tail, head) of the arrows taken in slot order.
int slot_order_sign(const Tableau& t) {
  const auto off = column_offsets(t.columns);
  std::vector<std::size_t> order(t.arrows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return t.arrows[a].slot < t.arrows[b].slot; });
  std::vector<std::size_t> seq;
  seq.reserve(2 * order.size());
  for (std::size_t a : order) {
    const auto& x = t.arrows[a];
    seq.push_back(off[x.tail.column - 1] + x.tail.row);
    seq.push_back(off[x.head.column - 1] + x.head.row);
  }
  return sequence_sign(seq);
}

Field tws_field(const TableauWithSubstitution& tws) {
  return tws.matrices.empty() ? Field::rational() : tws.matrices.front().field();
}

Scalar product_at(const TableauWithSubstitution& tws, const std::vector<std::vector<std::size_t>>& pi,
                  const Field& f) {
  Scalar prod = f.one();
  for (const auto& a : tws.tableau.arrows) {
    const Scalar& x = tws.matrices[a.slot - 1](pi[a.tail.column - 1][a.tail.row - 1],
                                               pi[a.head.column - 1][a.head.row - 1]);
    if (x.is_zero()) return f.zero();
    prod *= x;
  }
  return prod;
}

// Sums over permutations of columns col..m-1 with column 0 already fixed in pi.
void sum_columns(const TableauWithSubstitution& tws, std::size_t col, int sign,
                 std::vector<std::vector<std::size_t>>& pi, const Field& f, Scalar& acc) {
  if (col == pi.size()) {
    Scalar p = product_at(tws, pi, f);
    if (!p.is_zero()) acc += sign > 0 ? p : -p;
    return;
  }
  auto& perm = pi[col];
  std::iota(perm.begin(), perm.end(), 0);
  do {
    sum_columns(tws, col + 1, sign * sequence_sign(perm), pi, f, acc);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void require_cells(const Tableau& t, std::size_t cap, const char* what) {
  if (t.cell_count() > cap) {
    throw PreconditionError(std::string(what) + " is limited to " + std::to_string(cap) + " cells, tableau has " +
                            std::to_string(t.cell_count()));
  }
}

mpz_class factorial(std::size_t k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

bool integral_entries(const TableauWithSubstitution& tws) {
  for (const auto& m : tws.matrices)
    for (const auto& e : m.entries())
      if (e.is_rational() && e.rational().get_den() != 1) return false;
  return true;
}

}  // namespace

std::size_t Tableau::cell_count() const { return std::accumulate(columns.begin(), columns.end(), std::size_t{0}); }

std::size_t Tableau::slot_count() const {
  std::size_t s = 0;
  for (const auto& a : arrows) s = std::max(s, a.slot);
  return s;
}

std::vector<std::size_t> Tableau::slot_multiplicities() const {
  std::vector<std::size_t> r(slot_count(), 0);
  for (const auto& a : arrows) ++r[a.slot - 1];
  return r;
}

void validate_tableau(const Tableau& t) {
  const std::size_t m = t.columns.size();
  for (std::size_t i = 0; i < m; ++i)
    if (t.columns[i] == 0) throw PreconditionError("column " + std::to_string(i + 1) + " is empty");
  const auto off = column_offsets(t.columns);
  std::vector<int> covered(off.back(), 0);
  auto mark = [&](const Cell& c) {
    if (c.column < 1 || c.column > m || c.row < 1 || c.row > t.columns[c.column - 1])
      throw PreconditionError("cell " + cell_text(c) + " is outside the shape");
    if (covered[off[c.column - 1] + c.row - 1]++)
      throw PreconditionError("cell " + cell_text(c) + " is used by more than one arrow");
  };
  for (const auto& a : t.arrows) {
    mark(a.tail);
    mark(a.head);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 1; r <= t.columns[i]; ++r)
      if (!covered[off[i] + r - 1]) throw PreconditionError("cell " + cell_text({i + 1, r}) + " has no arrow");
  const std::size_t s = t.slot_count();
  std::vector<const TableauArrow*> rep(s, nullptr);
  for (const auto& a : t.arrows) {
    if (a.slot < 1) throw PreconditionError("slot indices are 1-based");
    auto& first = rep[a.slot - 1];
    if (!first) first = &a;
    else if (first->head.column != a.head.column || first->tail.column != a.tail.column)
      throw PreconditionError("arrows of slot " + std::to_string(a.slot) + " join different columns");
  }
  for (std::size_t j = 0; j < s; ++j)
    if (!rep[j]) throw PreconditionError("slot " + std::to_string(j + 1) + " has no arrow");
}

void validate_tws(const TableauWithSubstitution& tws) {
  const Tableau& t = tws.tableau;
  validate_tableau(t);
  if (tws.matrices.size() != t.slot_count())
    throw PreconditionError("expected " + std::to_string(t.slot_count()) + " matrices, got " +
                            std::to_string(tws.matrices.size()));
  for (const auto& m : tws.matrices)
    if (!(m.field() == tws.matrices.front().field())) throw PreconditionError("matrices over different fields");
  for (const auto& a : t.arrows) {
    const Matrix& x = tws.matrices[a.slot - 1];
    const std::size_t rows = t.columns[a.tail.column - 1], cols = t.columns[a.head.column - 1];
    if (x.rows() != rows || x.cols() != cols)
      throw PreconditionError("matrix of slot " + std::to_string(a.slot) + " must be " + std::to_string(rows) +
                              " x " + std::to_string(cols));
  }
}

Scalar bpf0_reference(const TableauWithSubstitution& tws) {
  validate_tws(tws);
  require_cells(tws.tableau, kBpfReferenceCellCap, "the direct permutation sum");
  const Field f = tws_field(tws);
  const auto& cols = tws.tableau.columns;
  if (cols.empty()) return f.one();
  // One task per value of pi_1(1); partial sums are added in task order.
  const std::size_t n1 = cols[0];
  std::vector<Scalar> partial(n1, f.zero());
  parallel_for(n1, [&](std::size_t k) {
    std::vector<std::vector<std::size_t>> pi;
    for (std::size_t c : cols) pi.emplace_back(c);
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < n1; ++v)
      if (v != k) rest.push_back(v);
    Scalar acc = f.zero();
    do {
      pi[0][0] = k;
      std::copy(rest.begin(), rest.end(), pi[0].begin() + 1);
      sum_columns(tws, 1, sequence_sign(pi[0]), pi, f, acc);
    } while (std::next_permutation(rest.begin(), rest.end()));
    partial[k] = acc;
  });
  Scalar total = f.zero();
  for (const auto& p : partial) total += p;
  return total;
}

Scalar bpf0(const TableauWithSubstitution& tws) {
  validate_tws(tws);
  require_cells(tws.tableau, kBpfCellCap, "bpf");
  const Field f = tws_field(tws);
  const Tableau& t = tws.tableau;
  const auto off = column_offsets(t.columns);
  const auto& arrows = t.arrows;

  // Rows are filled in arrow order (tail, then head); the value sign below assumes increasing
  // positions, so correct by the sign of that visiting order in each column.
  std::vector<std::vector<std::size_t>> visit(t.columns.size());
  for (const auto& a : arrows) {
    visit[a.tail.column - 1].push_back(a.tail.row);
    visit[a.head.column - 1].push_back(a.head.row);
  }
  int order_sign = 1;
  for (const auto& v : visit) order_sign *= sequence_sign(v);

  auto column_mask = [&](std::size_t col) {
    return ((std::uint64_t{1} << t.columns[col]) - 1) << off[col];
  };
  std::unordered_map<std::uint64_t, Scalar> memo;
  std::function<Scalar(std::uint64_t)> rec = [&](std::uint64_t used) -> Scalar {
    const std::size_t k = static_cast<std::size_t>(std::popcount(used)) / 2;
    if (k == arrows.size()) return f.one();
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    const auto& a = arrows[k];
    const Matrix& x = tws.matrices[a.slot - 1];
    const std::size_t ct = a.tail.column - 1, ch = a.head.column - 1;
    Scalar total = f.zero();
    for (std::size_t u = 0; u < t.columns[ct]; ++u) {
      const std::uint64_t bu = std::uint64_t{1} << (off[ct] + u);
      if (used & bu) continue;
      const std::uint64_t after_u = used | bu;
      const int su = std::popcount(used & column_mask(ct) & ~((bu << 1) - 1)) % 2;
      for (std::size_t v = 0; v < t.columns[ch]; ++v) {
        const std::uint64_t bv = std::uint64_t{1} << (off[ch] + v);
        if (after_u & bv) continue;
        const Scalar& e = x(u, v);
        if (e.is_zero()) continue;
        const int sv = std::popcount(after_u & column_mask(ch) & ~((bv << 1) - 1)) % 2;
        Scalar term = e * rec(after_u | bv);
        if ((su + sv) % 2) total -= term;
        else total += term;
      }
    }
    memo.emplace(used, total);
    return total;
  };
  Scalar out = rec(0);
  return order_sign > 0 ? out : -out;
}

mpz_class bpf_normalizer(const Tableau& t) {
  mpz_class c = 1;
  for (std::size_t r : t.slot_multiplicities()) c *= factorial(r);
  return c;
}

Scalar bpf(const TableauWithSubstitution& tws) {
  validate_tws(tws);
  const Field f = tws_field(tws);
  const mpz_class c = bpf_normalizer(tws.tableau);
  if (f.is_rational()) {
    Scalar b0 = bpf0(tws);
    Scalar out = b0 / Scalar(mpq_class(c));
    if (integral_entries(tws) && out.rational().get_den() != 1)
      throw ArithmeticError("bpf0 = " + b0.to_string() + " is not divisible by c_T = " + c.get_str());
    return out;
  }
  TableauWithSubstitution lifted{tws.tableau, {}};
  for (const auto& m : tws.matrices) {
    std::vector<Scalar> e;
    e.reserve(m.entries().size());
    for (const auto& x : m.entries()) e.emplace_back(mpq_class(x.lift()));
    lifted.matrices.emplace_back(m.rows(), m.cols(), std::move(e));
  }
  const mpq_class b0 = bpf0(lifted).rational();
  if (b0.get_den() != 1 || b0.get_num() % c != 0)
    throw ArithmeticError("bpf0 of the integer lift is not divisible by c_T = " + c.get_str());
  return f.from_integer(b0.get_num() / c);
}

BplpTableau tableau_from_bplp(const std::vector<std::size_t>& r, const std::vector<BlockTerm>& blocks,
                              const std::vector<std::size_t>& dims) {
  if (r.size() != blocks.size()) throw PreconditionError("r and blocks must have the same length");
  if (r.empty()) throw PreconditionError("a b.p.l.p. needs at least one block");
  const std::size_t m = dims.size();
  std::vector<std::size_t> load(m, 0);
  for (std::size_t j = 0; j < r.size(); ++j) {
    const auto& b = blocks[j];
    if (r[j] == 0) throw PreconditionError("multiplicities r_j must be positive");
    if (b.p < 1 || b.p > m || b.q < 1 || b.q > m) throw PreconditionError("block position out of range");
    if (b.x.rows() != dims[b.p - 1] || b.x.cols() != dims[b.q - 1])
      throw PreconditionError("block " + std::to_string(j + 1) + " must be " + std::to_string(dims[b.p - 1]) +
                              " x " + std::to_string(dims[b.q - 1]));
    load[b.p - 1] += r[j];
    load[b.q - 1] += r[j];
  }
  for (std::size_t i = 0; i < m; ++i)
    if (load[i] != dims[i])
      throw PreconditionError("column " + std::to_string(i + 1) + " receives " + std::to_string(load[i]) +
                              " arrow ends but has length " + std::to_string(dims[i]));
  BplpTableau out;
  out.tws.tableau.columns = dims;
  std::vector<std::size_t> next(m, 1);
  for (std::size_t j = 0; j < r.size(); ++j) {
    const auto& b = blocks[j];
    for (std::size_t k = 0; k < r[j]; ++k) {
      TableauArrow a;
      a.slot = j + 1;
      a.tail = {b.p, next[b.p - 1]++};
      a.head = {b.q, next[b.q - 1]++};
      out.tws.tableau.arrows.push_back(a);
    }
    out.tws.matrices.push_back(b.x);
  }
  out.sign = slot_order_sign(out.tws.tableau);
  return out;
}

Bplp bplp_from_tableau(const TableauWithSubstitution& tws) {
  validate_tws(tws);
  const Tableau& t = tws.tableau;
  Bplp f;
  f.r = t.slot_multiplicities();
  f.blocks.resize(f.r.size());
  for (const auto& a : t.arrows) {
    auto& b = f.blocks[a.slot - 1];
    b.p = a.tail.column;
    b.q = a.head.column;
  }
  for (std::size_t j = 0; j < f.blocks.size(); ++j) f.blocks[j].x = tws.matrices[j];
  f.sign = slot_order_sign(t);
  return f;
}

Scalar evaluate_bplp(const Bplp& f, const std::vector<std::size_t>& dims) {
  std::vector<Matrix> embedded;
  embedded.reserve(f.blocks.size());
  for (const auto& b : f.blocks) embedded.push_back(block_embed(b.x, b.p, b.q, dims));
  return partial_linearization_pf(f.r, embedded);
}

namespace {

void assign_slots(Tableau& t, const std::vector<std::size_t>& r) {
  std::size_t k = 0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] == 0) throw PreconditionError("slot multiplicities must be positive");
    for (std::size_t c = 0; c < r[j]; ++c) t.arrows.at(k++).slot = j + 1;
  }
}

}  // namespace

Tableau pfaffian_tableau(const std::vector<std::size_t>& r) {
  const std::size_t half = std::accumulate(r.begin(), r.end(), std::size_t{0});
  if (half == 0) throw PreconditionError("pfaffian tableau needs at least one arrow");
  Tableau t{{2 * half}, {}};
  for (std::size_t i = 1; i <= half; ++i) t.arrows.push_back({{1, 2 * i}, {1, 2 * i - 1}, 1});
  assign_slots(t, r);
  return t;
}

Tableau determinant_tableau(const std::vector<std::size_t>& r) {
  const std::size_t n = std::accumulate(r.begin(), r.end(), std::size_t{0});
  if (n == 0) throw PreconditionError("determinant tableau needs at least one arrow");
  Tableau t{{n, n}, {}};
  for (std::size_t i = 1; i <= n; ++i) t.arrows.push_back({{2, i}, {1, i}, 1});
  assign_slots(t, r);
  return t;
}

Tableau dp_tableau(std::size_t t, std::size_t r, std::size_t s) {
  if (t + 2 * r == 0 && t + 2 * s == 0) throw PreconditionError("DP tableau would be empty");
  Tableau out;
  std::size_t col1 = 0, col2 = 0;
  if (t + 2 * r > 0) {
    out.columns.push_back(t + 2 * r);
    col1 = out.columns.size();
  }
  if (t + 2 * s > 0) {
    out.columns.push_back(t + 2 * s);
    col2 = out.columns.size();
  }
  std::size_t slot = 0;
  if (t > 0) {
    ++slot;
    for (std::size_t i = 1; i <= t; ++i) out.arrows.push_back({{col2, i}, {col1, i}, slot});
  }
  if (r > 0) {
    ++slot;
    for (std::size_t j = 1; j <= r; ++j) out.arrows.push_back({{col1, t + 2 * j}, {col1, t + 2 * j - 1}, slot});
  }
  if (s > 0) {
    ++slot;
    for (std::size_t k = 1; k <= s; ++k) out.arrows.push_back({{col2, t + 2 * k}, {col2, t + 2 * k - 1}, slot});
  }
  return out;
}

Scalar dp(std::size_t r, std::size_t s, const Matrix& x, const Matrix& y, const Matrix& z) {
  if (x.rows() < 2 * r) throw PreconditionError("DP: X must have t + 2r rows");
  const std::size_t t = x.rows() - 2 * r;
  if (x.cols() != t + 2 * s)
    throw PreconditionError("DP: X must be " + std::to_string(t + 2 * r) + " x " + std::to_string(t + 2 * s));
  TableauWithSubstitution tws{dp_tableau(t, r, s), {}};
  if (t > 0) tws.matrices.push_back(x);
  if (r > 0) {
    if (y.rows() != t + 2 * r || y.cols() != t + 2 * r) throw PreconditionError("DP: Y must be square of size t + 2r");
    tws.matrices.push_back(y);
  }
  if (s > 0) {
    if (z.rows() != t + 2 * s || z.cols() != t + 2 * s) throw PreconditionError("DP: Z must be square of size t + 2s");
    tws.matrices.push_back(z);
  }
  return bpf(tws);
}

Scalar sigma_tr_via_dp(std::size_t t, std::size_t r, const Matrix& x, const Matrix& y, const Matrix& z) {
  const std::size_t n = t + 2 * r;
  for (const Matrix* m : {&x, &y, &z})
    if (m->rows() != n || m->cols() != n)
      throw PreconditionError("sigma_tr_via_dp needs " + std::to_string(n) + " x " + std::to_string(n) + " matrices");
  return dp(r, r, x, y, z);
}

}  // namespace qi
