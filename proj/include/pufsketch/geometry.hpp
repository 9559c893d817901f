#pragma once

#include <cstdint>
#include <vector>

#include "pufsketch/sparse_matrix.hpp"

namespace pufsketch {

enum class GeometryKind { Euclidean, Projective };

/// Points and lines of EG(m,q) or PG(m,q).
///
/// EG points are the q^m coordinate vectors over GF(q) encoded base-q, so
/// point index equals encoding and the origin is point 0. PG points are the
/// scalar classes of nonzero (m+1)-tuples over GF(q); each class is
/// represented by the tuple whose first nonzero coordinate is 1, and points
/// are indexed in increasing encoding order of that representative.
struct Geometry {
  GeometryKind kind = GeometryKind::Euclidean;
  unsigned m = 0;
  unsigned q = 0;
  std::size_t n_points = 0;
  std::vector<std::uint32_t> points;              // encodings of representatives
  std::vector<std::vector<std::uint32_t>> lines;  // sorted point indices
  std::size_t rho = 0;                            // points per line
  std::size_t gamma = 0;                          // lines through each point
  std::size_t n_lines = 0;
};

/// Euclidean geometry EG(m,q): the lines through the origin {alpha a} plus
/// all their translates. Requires m >= 2 and q^m <= 2^16.
Geometry build_eg(unsigned m, unsigned q);

/// Projective geometry PG(m,q): lines through every pair of distinct points.
/// Requires m >= 2.
Geometry build_pg(unsigned m, unsigned q);

/// Line-point incidence: one row per line, one column per point.
SparseBinaryMatrix incidence_matrix(const Geometry& g);

// Counting formulas; the builders check their output against these.
std::size_t eg_points(unsigned m, unsigned q);
std::size_t eg_lines(unsigned m, unsigned q);
std::size_t eg_lines_per_point(unsigned m, unsigned q);
std::size_t pg_points(unsigned m, unsigned q);
std::size_t pg_lines(unsigned m, unsigned q);
std::size_t pg_lines_per_point(unsigned m, unsigned q);

}  // namespace pufsketch
