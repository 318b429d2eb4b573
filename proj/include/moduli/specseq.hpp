#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moduli/numeric.hpp"

namespace moduli::specseq {

using Cell = std::pair<int, int>;

inline std::string cell_name(const Cell& c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

/// First-quadrant page of a cohomological spectral sequence, tracked at
/// free-rank level. `entries` holds the recorded cells; everything else
/// inside the [0,width] x [0,height] box is unrecorded. Rank arithmetic
/// (next_page, abutment, Euler characteristic, degeneration) reads
/// unrecorded cells as rank zero; survival analysis treats them as "not
/// yet computed", which is what the bottom-row arguments need.
struct Page {
  int r = 2;
  int width = 0;
  int height = 0;
  std::map<Cell, Int> entries;

  Int entry(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Int(0) : it->second;
  }

  bool in_box(int i, int j) const { return i >= 0 && i <= width && j >= 0 && j <= height; }

  bool known_zero(int i, int j) const {
    if (!in_box(i, j)) return true;  // entries vanish outside the box
    auto it = entries.find({i, j});
    return it != entries.end() && it->second == 0;
  }

  void validate() const {
    if (r < 2) throw input_error("page index must be >= 2");
    for (const auto& [cell, rank] : entries) {
      if (!in_box(cell.first, cell.second))
        throw input_error("entry outside the page box at " + cell_name(cell));
      if (rank < 0) throw input_error("negative rank at " + cell_name(cell));
    }
  }
};

/// Builds an E2 page over P^2 from direct-image cohomology ranks. The
/// base bounds the column range: i <= 4 (the topological dimension; the
/// coherent pages only ever use i <= 2). Pass an explicit box to leave
/// room for rows that are intentionally not recorded.
inline Page leray_e2(const std::map<Cell, Int>& base, int width = -1, int height = -1) {
  Page p;
  p.r = 2;
  for (const auto& [cell, rank] : base) {
    if (cell.first < 0 || cell.second < 0) throw input_error("E2 support must be in the first quadrant");
    if (cell.first > 4) throw input_error("base P^2 has no cohomology above degree 4");
    if (rank < 0) throw input_error("negative rank at " + cell_name(cell));
    p.width = std::max(p.width, cell.first);
    p.height = std::max(p.height, cell.second);
  }
  if (width >= 0) {
    if (width < p.width) throw input_error("explicit width smaller than the support");
    p.width = width;
  }
  if (height >= 0) {
    if (height < p.height) throw input_error("explicit height smaller than the support");
    p.height = height;
  }
  p.entries = base;
  return p;
}

/// E2 page of O on the Lagrangian fibration: R^j of the structure sheaf
/// is Omega^j of the plane, whose cohomology is one line exactly on the
/// diagonal. Recorded in full, zeros included, since this page is known
/// everywhere.
inline Page leray_o_page() {
  std::map<Cell, Int> e;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) e[{i, j}] = (i == j) ? 1 : 0;
  return leray_e2(e, 2, 2);
}

/// Bottom row of the Z-coefficient E2 page: H^*(P^2, Z) = (1,0,1,0,1).
/// The higher rows are left unrecorded inside a 4 x 4 box.
inline Page leray_z_bottom_row() {
  std::map<Cell, Int> e;
  for (int i = 0; i <= 4; ++i) e[{i, 0}] = (i % 2 == 0) ? 1 : 0;
  return leray_e2(e, 4, 4);
}

/// Ranks of the differentials d_r out of each cell; the target of d_r at
/// (i,j) is (i+r, j-r+1).
struct DifferentialAssignment {
  int r = 2;
  std::map<Cell, Int> ranks;
};

inline Cell target_of(const Cell& c, int r) { return {c.first + r, c.second - r + 1}; }
inline Cell source_of(const Cell& c, int r) { return {c.first - r, c.second + r - 1}; }

/// E_{r+1} = homology of (E_r, d_r) at rank level: each cell loses its
/// outgoing and incoming differential ranks. Violations are rejected
/// with the offending cell named, never clamped.
inline Page next_page(const Page& p, const DifferentialAssignment& d) {
  p.validate();
  if (d.r != p.r)
    throw input_error("differential index " + std::to_string(d.r) +
                      " does not match page index " + std::to_string(p.r));
  std::map<Cell, Int> out, in;
  for (const auto& [cell, rank] : d.ranks) {
    if (rank < 0) throw input_error("negative differential rank at " + cell_name(cell));
    if (rank == 0) continue;
    Cell tgt = target_of(cell, d.r);
    if (tgt.second < 0 || !p.in_box(tgt.first, tgt.second))
      throw input_error("differential out of " + cell_name(cell) + " targets " + cell_name(tgt) +
                        " outside the page");
    if (rank > p.entry(cell.first, cell.second))
      throw input_error("differential rank exceeds the entry at " + cell_name(cell));
    if (rank > p.entry(tgt.first, tgt.second))
      throw input_error("differential rank exceeds the entry at target " + cell_name(tgt));
    out[cell] += rank;
    in[tgt] += rank;
  }
  Page q = p;
  q.r = p.r + 1;
  for (auto& [cell, rank] : q.entries) {
    Int loss = 0;
    if (auto it = out.find(cell); it != out.end()) loss += it->second;
    if (auto it = in.find(cell); it != in.end()) loss += it->second;
    if (loss > rank)
      throw input_error("incoming plus outgoing ranks exceed the entry at " + cell_name(cell));
    rank -= loss;
  }
  return q;
}

/// True iff no differential on this or any later page can be nonzero:
/// every d_r (r >= page index) has a zero source or a zero target.
inline bool forced_degeneration(const Page& p) {
  p.validate();
  for (const auto& [cell, rank] : p.entries) {
    if (rank == 0) continue;
    for (int r = p.r; r <= cell.second + 1; ++r) {
      Cell tgt = target_of(cell, r);
      if (!p.in_box(tgt.first, tgt.second)) continue;
      if (p.entry(tgt.first, tgt.second) > 0) return false;
    }
  }
  return true;
}

/// Totals along the antidiagonals of a stable page: H^n = sum of
/// entries with i + j = n, for n = 0 .. width+height.
inline std::vector<Int> abutment(const Page& p) {
  p.validate();
  std::vector<Int> h(static_cast<std::size_t>(p.width + p.height) + 1, Int(0));
  for (const auto& [cell, rank] : p.entries) h[static_cast<std::size_t>(cell.first + cell.second)] += rank;
  return h;
}

inline Int euler_characteristic(const Page& p) {
  Int chi = 0;
  for (const auto& [cell, rank] : p.entries)
    chi += ((cell.first + cell.second) % 2 == 0) ? rank : -rank;
  return chi;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

/// Koszul-type E2 page: Ext^p against the q-th wedge of a trivial bundle
/// of the given rank, so entry(p,q) = e_p * C(rank, q). Fully recorded.
inline Page koszul_page(const std::vector<Int>& ext_ranks, int conormal_rank) {
  if (conormal_rank < 0) throw input_error("conormal rank must be >= 0");
  for (const Int& e : ext_ranks)
    if (e < 0) throw input_error("Ext ranks must be >= 0");
  Page p;
  p.r = 2;
  p.width = ext_ranks.empty() ? 0 : static_cast<int>(ext_ranks.size()) - 1;
  p.height = conormal_rank;
  for (int i = 0; i <= p.width; ++i)
    for (int j = 0; j <= p.height; ++j)
      p.entries[{i, j}] =
          (i < static_cast<int>(ext_ranks.size()) ? ext_ranks[static_cast<std::size_t>(i)] : Int(0)) *
          binomial(conormal_rank, j);
  return p;
}

/// Ext vanishing by induction up the bottom row: E^{0,0} has no
/// differentials at all, so e_0 embeds in H^0 = 0; once e_p = 0 for
/// p <= k, every differential into (k+1, 0) starts in a vanishing
/// column and every differential out leaves the quadrant, so e_{k+1}
/// embeds in H^{k+1} = 0.
inline std::vector<Int> deduce_ext_vanishing(int conormal_rank, bool abutment_zero, int p_max) {
  if (conormal_rank < 0) throw input_error("conormal rank must be >= 0");
  if (p_max < 0) throw input_error("p_max must be >= 0");
  if (!abutment_zero) throw input_error("induction only applies when the abutment vanishes");
  std::vector<Int> e(static_cast<std::size_t>(p_max) + 1, Int(0));
  for (int p = 0; p <= p_max; ++p) {
    // d_r into (p,0) comes from column p - r <= p - 2, already zero by
    // induction; d_r out of (p,0) targets row 1 - r < 0.
    e[static_cast<std::size_t>(p)] = 0;
  }
  return e;
}

/// Bottom row of the invertible-function page, display labels only. The
/// degree-0 entry is the divisible group C^* of global units; it carries
/// no rank and never enters rank arithmetic.
inline std::vector<std::string> unit_page_bottom_row_labels() {
  return {"C*", "Z", "0", "Z"};
}

struct SurvivalConstraint {
  int r;
  Cell source;

  friend bool operator==(const SurvivalConstraint&, const SurvivalConstraint&) = default;
};

/// Every differential that could still hit the given cell, across all
/// later pages; each one must vanish for the cell to survive to the
/// abutment. Sources known to be zero impose nothing; unrecorded cells
/// inside the box are treated as potentially nonzero.
inline std::vector<SurvivalConstraint> survival_constraints(const Page& p, const Cell& cell) {
  p.validate();
  if (!p.in_box(cell.first, cell.second)) throw input_error("cell outside the page box");
  std::vector<SurvivalConstraint> out;
  for (int r = p.r; r <= cell.first; ++r) {
    Cell src = source_of(cell, r);
    if (!p.in_box(src.first, src.second)) continue;
    if (p.known_zero(src.first, src.second)) continue;
    out.push_back({r, src});
  }
  return out;
}

}  // namespace moduli::specseq
