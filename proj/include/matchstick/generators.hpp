#pragma once

#include <cstdint>
#include <vector>

#include "matchstick/graph.hpp"

namespace matchstick {

/// k x k piece of the integer lattice centered at the origin; vertex
/// (i, j) has id j*k + i.
MatchstickGraph gen_grid(int k);

/// Unit direction j*pi/k for j = 0..k-1.
Point zonotope_direction(int k, int j);

/// Rhombic tiling of the regular 2k-gon (k >= 2). Vertex 0 is the center
/// offset point (empty sum); the other vertices are the interval sums
/// v_i + ... + v_j. n = C(k+1,2)+1, e = k^2.
MatchstickGraph gen_zonotope(int k);

struct TriangleFreeConstruction {
  MatchstickGraph graph;
  int base_k = 0;                       // zonotope the construction starts from
  int added = 0;                        // vertices built around the boundary
  std::vector<EdgeId> augmentation;     // edges created by the added vertices
};

/// The triangle-free construction with floor(2n - sqrt(2n - 7/4) - 3/2)
/// edges for every n >= 1.
TriangleFreeConstruction triangle_free_construction(int n);
MatchstickGraph gen_triangle_free(int n);

/// Exact floor(2n - sqrt(2n - 7/4) - 3/2), computed in integers.
std::int64_t triangle_free_edge_target(std::int64_t n);

struct DiskLatticeParams {
  double r = 0.0;
  int n = 0;
  int p = 0;
  int nominal_m = 0;       // floor(n / 2p)
  int m = 0;               // largest strip half-width with |P| <= n
  bool truncated = false;  // |P(1)| > n: first n points of P(1) were used
  double eps = 0.0;
  double delta = 0.0;
  Point a;
  Point b;
  int lattice_points = 0;
  int padding = 0;
};

struct DiskLattice {
  MatchstickGraph graph;
  DiskLatticeParams params;
};

/// Points s*a + t*b with |s+t| <= p, |s-t| <= m inside the disk of radius
/// r about the origin, joined by their a- and b-steps, plus isolated
/// padding vertices with no unit distances. Throws InfeasibleRadius for
/// r < 2.
DiskLattice gen_disk_lattice(double r, int n);

/// `count` congruent rhombi with small angle theta in a row along the
/// direction `tilt`; the rails a_i b_i point in direction tilt + theta.
/// Vertices a_0..a_count then b_0..b_count.
MatchstickGraph gen_rhombus_strip(int count, double theta, double tilt = 0.0);

}  // namespace matchstick
