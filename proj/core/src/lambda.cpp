#include "hgraph/lambda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hgraph/error.hpp"

namespace hgraph {

bool BoundaryComponent::crosses() const {
  if (kind != ComponentKind::Arc) return false;
  return (attachments[0] == RectEdge::Left && attachments[1] == RectEdge::Right) ||
         (attachments[0] == RectEdge::Right && attachments[1] == RectEdge::Left);
}

Point2 BoundaryComponent::endpoint_on(RectEdge edge) const {
  if (kind == ComponentKind::Arc) {
    if (attachments[0] == edge) return polyline.front();
    if (attachments[1] == edge) return polyline.back();
  }
  throw Error(ErrorKind::InvalidArgument, "component has no endpoint on the requested edge");
}

double LambdaDecomposition::eps() const { return 1e-9 * rect.diameter(); }

bool LambdaDecomposition::on_component(Point2 p, std::size_t index) const {
  return point_polyline_distance(p, components.at(index).polyline) <= eps();
}

std::optional<std::size_t> LambdaDecomposition::component_of(Point2 p) const {
  std::optional<std::size_t> best;
  double best_d = eps();
  for (std::size_t i = 0; i < components.size(); ++i) {
    const double d = point_polyline_distance(p, components[i].polyline);
    if (d <= best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::vector<std::size_t> LambdaDecomposition::members(LambdaLabel label) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].label == label) out.push_back(i);
  }
  return out;
}

bool LambdaDecomposition::partitioned() const {
  return std::none_of(components.begin(), components.end(),
                      [](const BoundaryComponent& c) { return c.label == LambdaLabel::Unassigned; });
}

namespace {

struct Cell {
  std::vector<std::size_t> members;
  std::vector<Point2> outer;
  std::vector<std::vector<Point2>> holes;
  bool touches_left = false;
  bool touches_right = false;
};

struct Clip {
  std::vector<BoundaryComponent> components;
  std::vector<Cell> cells;
};

RectEdge classify_edge(Point2 p, const Rectangle& rect) {
  const double d[4] = {std::abs(p.x - rect.left()), std::abs(p.x - rect.right()), std::abs(p.y - rect.bottom()),
                       std::abs(p.y - rect.top())};
  const RectEdge edges[4] = {RectEdge::Left, RectEdge::Right, RectEdge::Bottom, RectEdge::Top};
  return edges[std::min_element(d, d + 4) - d];
}

// Loop vertices with every crossing of the rectangle outline inserted.
std::vector<Point2> refine_against(const std::vector<Point2>& loop, const Rectangle& rect) {
  std::vector<Point2> out;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = loop[i];
    const Point2 q = loop[(i + 1) % n];
    out.push_back(p);
    std::vector<std::pair<double, Point2>> cuts;
    if (p.x != q.x) {
      for (double xl : {rect.left(), rect.right()}) {
        const double t = (xl - p.x) / (q.x - p.x);
        if (t > 0.0 && t < 1.0) {
          const double y = p.y + t * (q.y - p.y);
          if (y >= rect.bottom() && y <= rect.top()) cuts.push_back({t, {xl, y}});
        }
      }
    }
    if (p.y != q.y) {
      for (double yl : {rect.bottom(), rect.top()}) {
        const double t = (yl - p.y) / (q.y - p.y);
        if (t > 0.0 && t < 1.0) {
          const double x = p.x + t * (q.x - p.x);
          if (x >= rect.left() && x <= rect.right()) cuts.push_back({t, {x, yl}});
        }
      }
    }
    std::sort(cuts.begin(), cuts.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [t, pt] : cuts) {
      if (!(out.back() == pt)) out.push_back(pt);
    }
  }
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

struct ArcEnd {
  double y;
  std::size_t arc;
};

Clip clip_cells(const Region& region, const Rectangle& rect) {
  Clip clip;
  for (const auto& loop : region.loops()) {
    const std::vector<Point2> pts = refine_against(loop, rect);
    const std::size_t n = pts.size();
    std::vector<char> inside(n);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      inside[i] = rect.contains_open(lerp(pts[i], pts[(i + 1) % n], 0.5));
      count += inside[i];
    }
    if (count == 0) continue;
    if (count == n) {
      BoundaryComponent c;
      c.kind = ComponentKind::Loop;
      c.polyline = pts;
      c.polyline.push_back(pts.front());
      clip.components.push_back(std::move(c));
      continue;
    }
    // Start right after an outside sub-segment so runs do not wrap.
    std::size_t start = 0;
    while (inside[start] || !inside[(start + 1) % n]) ++start;
    start = (start + 1) % n;
    for (std::size_t k = 0; k < n;) {
      const std::size_t i = (start + k) % n;
      if (!inside[i]) {
        ++k;
        continue;
      }
      BoundaryComponent c;
      c.kind = ComponentKind::Arc;
      c.polyline.push_back(pts[i]);
      while (k < n && inside[(start + k) % n]) {
        c.polyline.push_back(pts[(start + k + 1) % n]);
        ++k;
      }
      c.attachments = {classify_edge(c.polyline.front(), rect), classify_edge(c.polyline.back(), rect)};
      clip.components.push_back(std::move(c));
    }
  }

  // Pair each arc exit with the next entry met walking along the edge with
  // the region on the left: downward on the left edge, upward on the right.
  std::vector<ArcEnd> left_entries;
  std::vector<ArcEnd> right_entries;
  for (std::size_t i = 0; i < clip.components.size(); ++i) {
    const auto& c = clip.components[i];
    if (c.kind != ComponentKind::Arc) continue;
    if (c.attachments[0] == RectEdge::Left) left_entries.push_back({c.polyline.front().y, i});
    if (c.attachments[0] == RectEdge::Right) right_entries.push_back({c.polyline.front().y, i});
  }
  auto by_y = [](const ArcEnd& l, const ArcEnd& r) { return l.y < r.y; };
  std::sort(left_entries.begin(), left_entries.end(), by_y);
  std::sort(right_entries.begin(), right_entries.end(), by_y);

  const std::size_t nc = clip.components.size();
  std::vector<std::size_t> next(nc, nc);
  for (std::size_t i = 0; i < nc; ++i) {
    const auto& c = clip.components[i];
    if (c.kind != ComponentKind::Arc) continue;
    const double ye = c.polyline.back().y;
    if (c.attachments[1] == RectEdge::Left) {
      auto it = std::upper_bound(left_entries.begin(), left_entries.end(), ArcEnd{ye, 0}, by_y);
      if (it == left_entries.begin()) throw Error(ErrorKind::HypothesisViolated, "region reaches the bottom edge", 3);
      next[i] = (it - 1)->arc;
    } else if (c.attachments[1] == RectEdge::Right) {
      auto it = std::lower_bound(right_entries.begin(), right_entries.end(), ArcEnd{ye, 0}, by_y);
      if (it == right_entries.end()) throw Error(ErrorKind::HypothesisViolated, "region reaches the top edge", 3);
      next[i] = it->arc;
    } else {
      throw Error(ErrorKind::HypothesisViolated, "boundary meets a horizontal edge", 3);
    }
  }

  struct Cycle {
    std::vector<std::size_t> members;
    std::vector<Point2> ring;
    double area = 0.0;
  };
  std::vector<Cycle> cycles;
  std::vector<char> seen(nc, 0);
  for (std::size_t i = 0; i < nc; ++i) {
    if (seen[i]) continue;
    Cycle cy;
    if (clip.components[i].kind == ComponentKind::Loop) {
      seen[i] = 1;
      cy.members = {i};
      cy.ring.assign(clip.components[i].polyline.begin(), clip.components[i].polyline.end() - 1);
    } else {
      std::size_t k = i;
      while (!seen[k]) {
        seen[k] = 1;
        cy.members.push_back(k);
        const auto& line = clip.components[k].polyline;
        cy.ring.insert(cy.ring.end(), line.begin(), line.end());
        k = next[k];
      }
      if (k != i) throw Error(ErrorKind::InvalidArgument, "inconsistent boundary orientation");
    }
    cy.area = signed_area(cy.ring);
    cycles.push_back(std::move(cy));
  }

  std::vector<std::size_t> outer_ids;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (cycles[c].area > 0.0) outer_ids.push_back(c);
  }
  for (std::size_t c : outer_ids) {
    Cell cell;
    cell.members = cycles[c].members;
    cell.outer = cycles[c].ring;
    clip.cells.push_back(std::move(cell));
  }
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (cycles[c].area > 0.0) continue;
    std::size_t best = clip.cells.size();
    double best_area = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < outer_ids.size(); ++k) {
      const auto& oc = cycles[outer_ids[k]];
      if (oc.area < best_area && point_in_ring(cycles[c].ring.front(), oc.ring)) {
        best = k;
        best_area = oc.area;
      }
    }
    if (best == clip.cells.size()) throw Error(ErrorKind::InvalidArgument, "hole boundary outside every component");
    clip.cells[best].members.insert(clip.cells[best].members.end(), cycles[c].members.begin(),
                                    cycles[c].members.end());
    clip.cells[best].holes.push_back(cycles[c].ring);
  }
  for (auto& cell : clip.cells) {
    for (std::size_t m : cell.members) {
      for (RectEdge e : clip.components[m].attachments) {
        cell.touches_left |= e == RectEdge::Left;
        cell.touches_right |= e == RectEdge::Right;
      }
    }
  }
  return clip;
}

// First component (among `candidates`) met by the vertical ray from `seed`.
std::optional<std::size_t> first_vertical_hit(const std::vector<BoundaryComponent>& comps,
                                              const std::vector<std::size_t>& candidates, Point2 seed,
                                              bool upward) {
  std::optional<std::size_t> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t idx : candidates) {
    const auto& line = comps[idx].polyline;
    for (std::size_t k = 0; k + 1 < line.size(); ++k) {
      const Point2 p = line[k];
      const Point2 q = line[k + 1];
      if ((p.x < seed.x && q.x < seed.x) || (p.x > seed.x && q.x > seed.x)) continue;
      double y;
      if (p.x == q.x) {
        y = upward ? std::min(p.y, q.y) : std::max(p.y, q.y);
      } else {
        const double t = (seed.x - p.x) / (q.x - p.x);
        y = p.y + t * (q.y - p.y);
      }
      const double d = upward ? y - seed.y : seed.y - y;
      if (d >= 0.0 && d < best_dist) {
        best_dist = d;
        best = idx;
      }
    }
  }
  return best;
}

bool touches(const Region& region, Point2 e0, Point2 e1) {
  for (const auto& loop : region.loops()) {
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (segments_intersect(loop[i], loop[(i + 1) % n], e0, e1)) return true;
    }
  }
  return false;
}

std::pair<std::size_t, std::size_t> crossing_pair(const std::vector<BoundaryComponent>& comps,
                                                  const std::vector<std::size_t>& members, const Rectangle& rect) {
  const Point2 low{rect.center.x, rect.bottom()};
  const Point2 high{rect.center.x, rect.top()};
  const auto g1 = first_vertical_hit(comps, members, low, true);
  const auto g2 = first_vertical_hit(comps, members, high, false);
  const auto n_cross = std::count_if(members.begin(), members.end(), [&](std::size_t m) { return comps[m].crosses(); });
  if (!g1 || !g2 || *g1 == *g2 || !comps[*g1].crosses() || !comps[*g2].crosses() || n_cross != 2) {
    throw Error(ErrorKind::InvalidArgument, "expected exactly two crossing arcs bounding the seed components");
  }
  return {*g1, *g2};
}

}  // namespace

LambdaDecomposition clip_decompose(const Region& region, const Rectangle& rect) {
  const Point2 bl{rect.left(), rect.bottom()};
  const Point2 br{rect.right(), rect.bottom()};
  const Point2 tl{rect.left(), rect.top()};
  const Point2 tr{rect.right(), rect.top()};
  if (touches(region, bl, br) || touches(region, tl, tr)) {
    throw Error(ErrorKind::HypothesisViolated, "boundary meets a horizontal edge of the rectangle", 3);
  }
  if (!touches(region, bl, tl) || !touches(region, br, tr)) {
    throw Error(ErrorKind::HypothesisViolated, "boundary misses a vertical edge of the rectangle", 2);
  }
  LambdaDecomposition out;
  out.rect = rect;
  out.region = region;
  out.delta1_seed = {rect.center.x, rect.bottom()};
  out.delta2_seed = {rect.center.x, rect.top()};
  if (region.contains(out.delta1_seed) || region.contains(out.delta2_seed)) {
    throw Error(ErrorKind::HypothesisViolated, "a horizontal edge lies inside the region", 3);
  }
  Clip clip = clip_cells(region, rect);
  if (clip.cells.size() != 1) {
    throw Error(ErrorKind::HypothesisViolated,
                "region inside the rectangle has " + std::to_string(clip.cells.size()) + " components", 1);
  }
  out.components = std::move(clip.components);
  std::vector<std::size_t> all(out.components.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::tie(out.gamma1_index, out.gamma2_index) = crossing_pair(out.components, all, rect);
  return out;
}

LambdaDecomposition clip_decompose(const PlanarDomain& domain, const Rectangle& rect) {
  return clip_decompose(Region::from_strip(domain), rect);
}

LambdaDecomposition partition_lambda(LambdaDecomposition decomp, std::span<const LambdaLabel> assignment) {
  if (assignment.size() != decomp.components.size()) {
    throw Error(ErrorKind::BadPartition, "assignment size does not match the number of components");
  }
  for (LambdaLabel l : assignment) {
    if (l == LambdaLabel::Unassigned) throw Error(ErrorKind::BadPartition, "every component needs a class");
  }
  if (assignment[decomp.gamma1_index] != LambdaLabel::Lambda1) {
    throw Error(ErrorKind::BadPartition, "gamma1 must belong to Lambda1");
  }
  if (assignment[decomp.gamma2_index] != LambdaLabel::Lambda2) {
    throw Error(ErrorKind::BadPartition, "gamma2 must belong to Lambda2");
  }
  for (std::size_t i = 0; i < assignment.size(); ++i) decomp.components[i].label = assignment[i];
  return decomp;
}

std::vector<LambdaLabel> natural_partition(const LambdaDecomposition& decomp) {
  std::vector<LambdaLabel> labels(decomp.components.size());
  const auto& g1 = decomp.components[decomp.gamma1_index].polyline;
  const auto& g2 = decomp.components[decomp.gamma2_index].polyline;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i == decomp.gamma1_index) {
      labels[i] = LambdaLabel::Lambda1;
    } else if (i == decomp.gamma2_index) {
      labels[i] = LambdaLabel::Lambda2;
    } else {
      const auto& line = decomp.components[i].polyline;
      labels[i] = polyline_distance(line, g1) <= polyline_distance(line, g2) ? LambdaLabel::Lambda1
                                                                              : LambdaLabel::Lambda2;
    }
  }
  return labels;
}

std::vector<GoodComponent> good_components(const LambdaDecomposition& parent, double a_prime, double H) {
  if (!(H > 0.0) || !(1.0 / H < a_prime) || !(a_prime < parent.rect.a)) {
    throw Error(ErrorKind::BadRectangle, "need 1/H < a' < a");
  }
  const Rectangle inner = parent.rect.with_half_width(a_prime);
  Clip clip = clip_cells(parent.region, inner);
  std::vector<GoodComponent> out;
  for (const Cell& cell : clip.cells) {
    if (!cell.touches_left || !cell.touches_right) continue;
    GoodComponent good;
    LambdaDecomposition& d = good.decomposition;
    d.rect = inner;
    std::vector<std::vector<Point2>> loops{cell.outer};
    loops.insert(loops.end(), cell.holes.begin(), cell.holes.end());
    d.region = Region::from_loops(std::move(loops));
    d.delta1_seed = {inner.center.x, inner.bottom()};
    d.delta2_seed = {inner.center.x, inner.top()};
    for (std::size_t m : cell.members) {
      BoundaryComponent c = clip.components[m];
      // Sample away from the rectangle outline: midpoint of the longest segment.
      std::size_t longest = 0;
      double len = -1.0;
      for (std::size_t k = 0; k + 1 < c.polyline.size(); ++k) {
        const double l = distance(c.polyline[k], c.polyline[k + 1]);
        if (l > len) {
          len = l;
          longest = k;
        }
      }
      const Point2 sample = lerp(c.polyline[longest], c.polyline[std::min(longest + 1, c.polyline.size() - 1)], 0.5);
      const auto owner = parent.component_of(sample);
      if (!owner) throw Error(ErrorKind::InvalidArgument, "inner boundary piece has no parent component");
      c.label = parent.components[*owner].label;
      good.parent_index.push_back(*owner);
      d.components.push_back(std::move(c));
    }
    std::vector<std::size_t> all(d.components.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::tie(d.gamma1_index, d.gamma2_index) = crossing_pair(d.components, all, inner);
    good.order_key = d.components[d.gamma1_index].endpoint_on(RectEdge::Left).y;
    out.push_back(std::move(good));
  }
  if (out.empty()) throw Error(ErrorKind::NoGoodComponent, "no component of the region crosses R_{a',b}");
  std::sort(out.begin(), out.end(),
            [](const GoodComponent& l, const GoodComponent& r) { return l.order_key < r.order_key; });
  return out;
}

}  // namespace hgraph
