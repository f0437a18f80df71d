#include "pmat/arrangement.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace pmat {

namespace {

// Solves N x = c for a d x d rational system; nullopt when singular.
std::optional<VectorXr> solve_square(MatrixXr n, VectorXr c) {
  const Eigen::Index d = n.rows();
  for (Eigen::Index col = 0; col < d; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index row = col; row < d; ++row)
      if (n(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      n.row(pivot).swap(n.row(col));
      std::swap(c[pivot], c[col]);
    }
    for (Eigen::Index row = 0; row < d; ++row) {
      if (row == col || n(row, col) == 0) continue;
      Rational f = n(row, col) / n(col, col);
      n.row(row) -= f * n.row(col);
      c[row] -= f * c[col];
    }
  }
  VectorXr x(d);
  for (Eigen::Index i = 0; i < d; ++i) x[i] = c[i] / n(i, i);
  return x;
}

// Clip half-width: at least 2^20, doubled until it strictly dominates every
// arrangement vertex coordinate, axis intercept and finite box bound.
Rational auto_clip_half_width(const std::vector<Hyperplane>& hyperplanes,
                              const ParameterBox& box,
                              const std::vector<lp::Constraint>& domain) {
  const int d = box.dim();
  Rational maxcoord = 0;
  auto fold = [&maxcoord](const Rational& v) {
    Rational a = abs(v);
    if (a > maxcoord) maxcoord = a;
  };
  for (int i = 0; i < d; ++i) {
    if (box.lower[i]) fold(*box.lower[i]);
    if (box.upper[i]) fold(*box.upper[i]);
  }
  auto fold_intercepts = [&](const VectorXr& normal, const Rational& rhs) {
    for (Eigen::Index i = 0; i < normal.size(); ++i)
      if (normal[i] != 0) fold(rhs / normal[i]);
  };
  for (const Hyperplane& h : hyperplanes) fold_intercepts(h.normal, h.offset);
  for (const lp::Constraint& c : domain) fold_intercepts(c.normal, c.rhs);

  const int q = static_cast<int>(hyperplanes.size());
  if (d >= 1 && q >= d) {
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    for (;;) {
      MatrixXr n(d, d);
      VectorXr c(d);
      for (int i = 0; i < d; ++i) {
        n.row(i) = hyperplanes[pick[i]].normal.transpose();
        c[i] = hyperplanes[pick[i]].offset;
      }
      if (auto vertex = solve_square(std::move(n), std::move(c)))
        for (int i = 0; i < d; ++i) fold((*vertex)[i]);
      // next d-combination
      int k = d - 1;
      while (k >= 0 && pick[k] == q - d + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int i = k + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
    }
  }

  Rational clip = Rational(1 << 20);
  while (clip <= 2 * maxcoord + 1) clip *= 2;
  return clip;
}

std::vector<lp::Constraint> clip_constraints(const ParameterBox& box,
                                             const Rational& clip) {
  std::vector<lp::Constraint> out;
  for (int i = 0; i < box.dim(); ++i) {
    VectorXr unit = VectorXr::Zero(box.dim());
    unit[i] = 1;
    if (!box.lower[i] || *box.lower[i] < -clip)
      out.push_back({unit, -clip, true});
    if (!box.upper[i] || *box.upper[i] > clip)
      out.push_back({Rational(-1) * unit, -clip, true});
  }
  return out;
}

void append_sign_constraints(const std::vector<Hyperplane>& hyperplanes,
                             const SignVector& sign, bool strict,
                             std::vector<lp::Constraint>& out) {
  for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
    if (sign[h] > 0)
      out.push_back({hyperplanes[h].normal, hyperplanes[h].offset, strict});
    else
      out.push_back({Rational(-1) * hyperplanes[h].normal,
                     Rational(-1) * hyperplanes[h].offset, strict});
  }
}

}  // namespace

Integer cell_count_bound(int q, int d) {
  Integer total = 0, binom = 1;
  for (int i = 0; i <= d; ++i) {
    total += binom;
    binom = binom * (q - i) / (i + 1);
    if (q - i <= 0) break;
  }
  return total;
}

std::vector<lp::Constraint> box_constraints(const ParameterBox& box) {
  std::vector<lp::Constraint> out;
  for (int i = 0; i < box.dim(); ++i) {
    VectorXr unit = VectorXr::Zero(box.dim());
    unit[i] = 1;
    if (box.lower[i]) out.push_back({unit, *box.lower[i], true});
    if (box.upper[i])
      out.push_back({Rational(-1) * unit, Rational(-*box.upper[i]), true});
  }
  return out;
}

const Cell* Arrangement::locate(const VectorXr& point) const {
  std::vector<int> signs(hyperplanes.size());
  for (std::size_t h = 0; h < hyperplanes.size(); ++h)
    signs[h] = side(hyperplanes[h], point);
  for (const Cell& cell : cells) {
    bool ok = true;
    for (std::size_t h = 0; h < hyperplanes.size() && ok; ++h)
      ok = signs[h] == 0 || signs[h] == cell.sign[h];
    if (ok) return &cell;
  }
  return nullptr;
}

std::vector<lp::Constraint> Arrangement::cell_constraints(const Cell& cell,
                                                          bool strict) const {
  std::vector<lp::Constraint> out;
  append_sign_constraints(hyperplanes, cell.sign, strict, out);
  return out;
}

Arrangement enumerate_cells(std::vector<Hyperplane> hyperplanes,
                            const ParameterBox& box,
                            const EnumerationOptions& options) {
  box.validate();
  const int d = box.dim();
  const int q = static_cast<int>(hyperplanes.size());
  for (const Hyperplane& h : hyperplanes) {
    if (h.dim() != d) throw InputError("hyperplane dimension mismatch");
    if (h.normal.isZero()) throw InputError("hyperplane with zero normal");
  }
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (hyperplanes[i].same_locus(hyperplanes[j]))
        throw InputError("duplicate hyperplanes in arrangement input");

  Arrangement arr;
  arr.hyperplanes = std::move(hyperplanes);
  arr.box = box;
  arr.domain = options.domain;
  arr.clip_half_width = options.clip_half_width
                            ? *options.clip_half_width
                            : auto_clip_half_width(arr.hyperplanes, box, options.domain);

  const std::vector<lp::Constraint> box_rows = box_constraints(box);
  const std::vector<lp::Constraint> clip_rows = clip_constraints(box, arr.clip_half_width);

  // Base constraints shared by every feasibility probe.
  std::vector<lp::Constraint> base = options.domain;
  base.insert(base.end(), box_rows.begin(), box_rows.end());

  // Seed: a point strictly inside box and domain, then nudged off every
  // hyperplane along a moment-curve direction with an exact step bound.
  VectorXr seed(d);
  for (int i = 0; i < d; ++i) {
    if (box.lower[i] && box.upper[i])
      seed[i] = (*box.lower[i] + *box.upper[i]) / 2;
    else if (box.lower[i])
      seed[i] = *box.lower[i] + 1;
    else if (box.upper[i])
      seed[i] = *box.upper[i] - 1;
    else
      seed[i] = 0;
  }
  if (!options.domain.empty()) {
    std::vector<lp::Constraint> probe = base;
    probe.insert(probe.end(), clip_rows.begin(), clip_rows.end());
    lp::InteriorPointResult ip = lp::interior_point(probe, d);
    if (!ip.feasible) return arr;  // empty domain: no cells
    seed = ip.point;
  }

  std::vector<int> on_seed;
  for (int h = 0; h < q; ++h)
    if (side(arr.hyperplanes[h], seed) == 0) on_seed.push_back(h);
  if (!on_seed.empty()) {
    for (long j = 1;; ++j) {
      VectorXr dir(d);
      Rational power = 1;
      for (int i = 0; i < d; ++i) {
        dir[i] = power;
        power *= j;
      }
      bool usable = true;
      for (int h : on_seed)
        if (arr.hyperplanes[h].normal.dot(dir) == 0) {
          usable = false;
          break;
        }
      if (!usable) continue;
      std::optional<Rational> step;
      auto shrink = [&step](const Rational& bound) {
        if (!step || bound < *step) step = bound;
      };
      for (int h = 0; h < q; ++h) {
        if (side(arr.hyperplanes[h], seed) == 0) continue;
        Rational along = arr.hyperplanes[h].normal.dot(dir);
        if (along == 0) continue;
        shrink(abs(arr.hyperplanes[h].normal.dot(seed) - arr.hyperplanes[h].offset) /
               abs(along));
      }
      auto guard = [&](const std::vector<lp::Constraint>& rows) {
        for (const lp::Constraint& c : rows) {
          Rational along = c.normal.dot(dir);
          if (along < 0) shrink((c.normal.dot(seed) - c.rhs) / -along);
        }
      };
      guard(base);
      guard(clip_rows);
      seed += (step ? *step / 2 : Rational(1)) * dir;
      break;
    }
  }

  // Breadth-first search over sign-vector flips.
  std::map<SignVector, int> index;
  std::deque<int> queue;

  auto try_cell = [&](const SignVector& sign) -> std::optional<Cell> {
    std::vector<lp::Constraint> rows = base;
    append_sign_constraints(arr.hyperplanes, sign, true, rows);
    lp::InteriorPointResult open = lp::interior_point(rows, d, true);
    if (!open.feasible) return std::nullopt;
    Cell cell;
    cell.sign = sign;
    cell.representative = open.point;
    // Prefer a representative inside the clip box; cells living entirely
    // beyond it keep the unclipped witness.
    bool inside_clip = true;
    for (int i = 0; i < d && inside_clip; ++i)
      inside_clip = abs(open.point[i]) < arr.clip_half_width;
    if (!inside_clip) {
      rows.insert(rows.end(), clip_rows.begin(), clip_rows.end());
      lp::InteriorPointResult clipped = lp::interior_point(rows, d, true);
      if (clipped.feasible) cell.representative = clipped.point;
    }
    return cell;
  };

  SignVector start(q);
  for (int h = 0; h < q; ++h)
    start[h] = static_cast<std::int8_t>(side(arr.hyperplanes[h], seed));
  std::optional<Cell> first = try_cell(start);
  if (!first) throw std::logic_error("seed cell must be feasible");
  first->id = 0;
  index.emplace(start, 0);
  arr.cells.push_back(std::move(*first));
  queue.push_back(0);

  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int h = 0; h < q; ++h) {
      SignVector flipped = arr.cells[u].sign;
      flipped[h] = static_cast<std::int8_t>(-flipped[h]);
      auto hit = index.find(flipped);
      if (hit != index.end()) {
        if (u < hit->second) arr.adjacency.push_back({u, hit->second, h});
        continue;
      }
      std::optional<Cell> next = try_cell(flipped);
      if (!next) continue;
      next->id = static_cast<int>(arr.cells.size());
      index.emplace(flipped, next->id);
      arr.adjacency.push_back({u, next->id, h});
      queue.push_back(next->id);
      arr.cells.push_back(std::move(*next));
    }
  }

  for (const AdjacencyEdge& e : arr.adjacency) {
    arr.cells[e.cell_a].tight.push_back(e.hyperplane);
    arr.cells[e.cell_b].tight.push_back(e.hyperplane);
  }
  for (Cell& cell : arr.cells) {
    std::sort(cell.tight.begin(), cell.tight.end());
    cell.tight.erase(std::unique(cell.tight.begin(), cell.tight.end()),
                     cell.tight.end());
  }

  if (Integer(arr.cells.size()) > cell_count_bound(q, d))
    throw std::logic_error("cell count exceeds the arrangement bound");
  return arr;
}

}  // namespace pmat
