#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hgraph/domain.hpp"
#include "hgraph/experiments.hpp"

namespace hgraph::testing {

using CellIndex = std::pair<int, int>;

// Union of closed cells of a column/row grid.  Interior row lines may be
// perturbed in y; column lines stay straight, so the topology of the union is
// the 4-connected topology of the filled cell set.
class CellDomain {
 public:
  CellDomain(std::vector<double> xs, std::vector<double> ys);

  int cols() const { return static_cast<int>(xs_.size()) - 1; }
  int rows() const { return static_cast<int>(ys_.size()) - 1; }
  const std::vector<double>& xs() const { return xs_; }

  bool filled(int c, int r) const;
  void set(int c, int r, bool value = true);
  int filled_count() const;

  Point2 node(int c, int r) const;
  // Moves every node on an interior row line by up to `fraction` of the local row height.
  void jitter(Rng& rng, double fraction);
  // Height of row line r at abscissa x.
  double row_line_y(int r, double x) const;

  // Cell whose open interior holds p; nullopt outside or on a grid line.
  std::optional<CellIndex> locate(Point2 p) const;
  // Membership in the closed union of filled cells.
  bool contains(Point2 p) const;

  // Fills cells until no 2x2 block holds two diagonal cells only.
  int fix_diagonal_pinches();
  // 4-connected components of filled cells with column in [c_lo, c_hi].
  std::vector<std::vector<CellIndex>> components(int c_lo, int c_hi) const;
  bool connected() const { return components(0, cols() - 1).size() == 1; }

  Region region() const;

 private:
  std::size_t node_id(int c, int r) const { return static_cast<std::size_t>(c) * ys_.size() + r; }

  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<double> node_y_;
  std::vector<char> filled_;
};

struct PathCase {
  CellDomain cells;
  Region region;
  Rectangle rect;
};

// Random connected cell union in R = [-1,1]x[-1,1] meeting both vertical edges
// and staying off both horizontal edges.  Outer columns straddle x = +-1.
PathCase random_path_case(Rng& rng);

// Vertical segment or monotone zigzag from the bottom edge to the top edge.
std::vector<Point2> random_transversal_path(Rng& rng, const Rectangle& rect, bool zigzag);

struct MultichannelCase {
  CellDomain cells;
  Region region;
  Rectangle rect;
  double a_prime = 0.0;
  double H = 1.0;
  int first_inner = 1;
  int last_inner = 1;
  int channels = 0;
};

// Horizontal channels crossing R_{a,b}, joined by connector columns that lie
// between a' and a, with dead-end fingers and broken channels that produce
// bad components of the region inside R_{a',b}.  H = 1, a = 1.5, a' = 1.2.
MultichannelCase random_multichannel_case(Rng& rng);

struct CombSpec {
  int channels = 3;
  int inner_columns = 7;
  // Per gap between channel k and k+1: connector on the left, on the right.
  std::vector<std::pair<bool, bool>> connectors;
  // Per gap: finger length attached to the left connector (0 for none).
  std::vector<int> fingers;
};

MultichannelCase comb_case(const CombSpec& spec);

}  // namespace hgraph::testing
