#pragma once

#include <array>
#include <vector>

#include "girth5/finite_field.hpp"
#include "girth5/graph.hpp"

namespace girth5 {

// Point (or line) of PG(2,q): homogeneous triple normalized so that the
// first nonzero coordinate is 1. Coordinates are field element indices.
struct ProjectivePoint {
  std::array<int, 3> coord{0, 0, 0};

  bool operator==(const ProjectivePoint&) const = default;
  auto operator<=>(const ProjectivePoint&) const = default;
};

inline ProjectivePoint normalize_point(const FiniteField& f, int a, int b,
                                       int c) {
  std::array<int, 3> v{a, b, c};
  for (int i = 0; i < 3; ++i) {
    if (v[i] != 0) {
      int s = f.inv(v[i]);
      for (int j = 0; j < 3; ++j) v[j] = f.mul(v[j], s);
      return {v};
    }
  }
  throw Error("(0,0,0) is not a projective point");
}

// All q^2+q+1 points of PG(2,q) in lexicographic order of the normalized
// triples.
inline std::vector<ProjectivePoint> projective_points(const FiniteField& f) {
  std::vector<ProjectivePoint> pts;
  pts.reserve(f.q * f.q + f.q + 1);
  pts.push_back({{0, 0, 1}});
  for (int c = 0; c < f.q; ++c) pts.push_back({{0, 1, c}});
  for (int b = 0; b < f.q; ++b)
    for (int c = 0; c < f.q; ++c) pts.push_back({{1, b, c}});
  return pts;
}

// Point-line incidence graph of PG(2,q): vertices 0..N-1 are points (part
// X), N..2N-1 are lines (part Y), with N = q^2+q+1. Point (a,b,c) lies on
// line (d,e,f) iff ad+be+cf = 0. (q+1)-regular, girth 6.
inline Graph incidence_graph(int q) {
  FiniteField f = make_field(q);
  auto pts = projective_points(f);
  const int N = static_cast<int>(pts.size());
  GraphBuilder b(2 * N);
  for (int i = 0; i < N; ++i) b.set_part(i, Part::X);
  for (int j = 0; j < N; ++j) b.set_part(N + j, Part::Y);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int dot = 0;
      for (int t = 0; t < 3; ++t)
        dot = f.add(dot, f.mul(pts[i].coord[t], pts[j].coord[t]));
      if (dot == 0) b.add_edge(i, N + j);
    }
  return b.build();
}

}  // namespace girth5
