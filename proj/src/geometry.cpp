#include "pufsketch/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "pufsketch/gf.hpp"

namespace pufsketch {
namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t exact_div(std::uint64_t a, std::uint64_t b) {
  if (b == 0 || a % b != 0) throw std::logic_error("geometry: count formula not integral");
  return a / b;
}

// Coordinate vectors over GF(q) of fixed dimension, encoded base-q.
struct CoordSpace {
  const GaloisField& f;
  unsigned dim;

  std::vector<unsigned> decode(std::uint32_t enc) const {
    std::vector<unsigned> v(dim);
    for (unsigned i = 0; i < dim; ++i) {
      v[i] = enc % f.size();
      enc /= f.size();
    }
    return v;
  }

  std::uint32_t encode(const std::vector<unsigned>& v) const {
    std::uint32_t enc = 0;
    for (unsigned i = dim; i-- > 0;) enc = enc * f.size() + v[i];
    return enc;
  }

  std::uint32_t scale(unsigned alpha, std::uint32_t v) const {
    auto d = decode(v);
    for (auto& x : d) x = f.mul(alpha, x);
    return encode(d);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto da = decode(a);
    const auto db = decode(b);
    for (unsigned i = 0; i < dim; ++i) da[i] = f.add(da[i], db[i]);
    return encode(da);
  }
};

void check_counts(const Geometry& g, std::size_t rho, std::size_t lines,
                  std::size_t gamma) {
  if (g.lines.size() != lines) throw std::logic_error("geometry: line count mismatch");
  std::vector<std::size_t> degree(g.n_points, 0);
  for (const auto& line : g.lines) {
    if (line.size() != rho) throw std::logic_error("geometry: line size mismatch");
    for (std::uint32_t p : line) ++degree[p];
  }
  for (std::size_t d : degree)
    if (d != gamma) throw std::logic_error("geometry: point degree mismatch");
}

}  // namespace

std::size_t eg_points(unsigned m, unsigned q) { return ipow(q, m); }

std::size_t eg_lines(unsigned m, unsigned q) {
  return exact_div(ipow(q, m - 1) * (ipow(q, m) - 1), q - 1);
}

std::size_t eg_lines_per_point(unsigned m, unsigned q) {
  return exact_div(ipow(q, m) - 1, q - 1);
}

std::size_t pg_points(unsigned m, unsigned q) {
  return exact_div(ipow(q, m + 1) - 1, q - 1);
}

std::size_t pg_lines(unsigned m, unsigned q) {
  return exact_div((ipow(q, m + 1) - 1) * (ipow(q, m) - 1),
                   std::uint64_t(q - 1) * (q - 1) * (q + 1));
}

std::size_t pg_lines_per_point(unsigned m, unsigned q) {
  return exact_div(ipow(q, m) - 1, q - 1);
}

Geometry build_eg(unsigned m, unsigned q) {
  if (m < 2) throw std::invalid_argument("build_eg: dimension must be >= 2");
  const GaloisField field = GaloisField::from_order(q);
  const std::uint64_t npts = ipow(q, m);
  if (npts > (1u << 16)) throw std::invalid_argument("build_eg: q^m exceeds 2^16");

  const CoordSpace space{field, m};
  Geometry g;
  g.kind = GeometryKind::Euclidean;
  g.m = m;
  g.q = q;
  g.n_points = static_cast<std::size_t>(npts);
  g.points.resize(g.n_points);
  for (std::uint32_t i = 0; i < g.n_points; ++i) g.points[i] = i;
  g.rho = q;
  g.gamma = eg_lines_per_point(m, q);
  g.n_lines = eg_lines(m, q);

  // One canonical direction per line through the origin: the smallest
  // encoding within the scalar class.
  std::vector<std::uint32_t> directions;
  {
    std::vector<bool> seen(g.n_points, false);
    for (std::uint32_t d = 1; d < g.n_points; ++d) {
      if (seen[d]) continue;
      directions.push_back(d);
      for (unsigned a = 1; a < q; ++a) seen[space.scale(a, d)] = true;
    }
  }

  std::set<std::vector<std::uint32_t>> dedup;
  auto emit = [&](std::vector<std::uint32_t> line) {
    std::sort(line.begin(), line.end());
    if (dedup.insert(line).second) g.lines.push_back(std::move(line));
  };

  // Lines through the origin first, then the parallel translates of each.
  for (std::uint32_t d : directions) {
    std::vector<std::uint32_t> line;
    for (unsigned a = 0; a < q; ++a) line.push_back(space.scale(a, d));
    emit(std::move(line));
  }
  for (std::uint32_t d : directions) {
    std::vector<bool> covered(g.n_points, false);
    for (std::uint32_t base = 0; base < g.n_points; ++base) {
      if (covered[base]) continue;
      std::vector<std::uint32_t> line;
      bool through_origin = false;
      for (unsigned a = 0; a < q; ++a) {
        const std::uint32_t p = space.add(base, space.scale(a, d));
        covered[p] = true;
        through_origin |= (p == 0);
        line.push_back(p);
      }
      if (!through_origin) emit(std::move(line));
    }
  }

  check_counts(g, g.rho, g.n_lines, g.gamma);
  return g;
}

Geometry build_pg(unsigned m, unsigned q) {
  if (m < 2) throw std::invalid_argument("build_pg: dimension must be >= 2");
  const GaloisField field = GaloisField::from_order(q);
  const unsigned dim = m + 1;
  const std::uint64_t total = ipow(q, dim);
  if (total > (1u << 20)) throw std::invalid_argument("build_pg: geometry too large");

  const CoordSpace space{field, dim};
  auto normalize = [&](std::uint32_t enc) {
    auto v = space.decode(enc);
    for (unsigned i = 0; i < dim; ++i) {
      if (v[i] != 0) {
        const unsigned s = field.inv(v[i]);
        for (auto& x : v) x = field.mul(s, x);
        break;
      }
    }
    return space.encode(v);
  };

  Geometry g;
  g.kind = GeometryKind::Projective;
  g.m = m;
  g.q = q;
  g.n_points = pg_points(m, q);
  g.rho = q + 1;
  g.gamma = pg_lines_per_point(m, q);
  g.n_lines = pg_lines(m, q);

  std::vector<std::int32_t> index_of(total, -1);
  for (std::uint32_t enc = 1; enc < total; ++enc) {
    if (normalize(enc) == enc) {
      index_of[enc] = static_cast<std::int32_t>(g.points.size());
      g.points.push_back(enc);
    }
  }
  if (g.points.size() != g.n_points)
    throw std::logic_error("build_pg: point count mismatch");

  std::set<std::vector<std::uint32_t>> dedup;
  for (std::size_t i = 0; i < g.n_points; ++i) {
    for (std::size_t j = i + 1; j < g.n_points; ++j) {
      // The q+1 classes on the line are a_j and a_i + beta a_j.
      std::vector<std::uint32_t> line;
      line.push_back(static_cast<std::uint32_t>(j));
      for (unsigned beta = 0; beta < q; ++beta) {
        const std::uint32_t e =
            normalize(space.add(g.points[i], space.scale(beta, g.points[j])));
        line.push_back(static_cast<std::uint32_t>(index_of[e]));
      }
      std::sort(line.begin(), line.end());
      line.erase(std::unique(line.begin(), line.end()), line.end());
      if (dedup.insert(line).second) g.lines.push_back(std::move(line));
    }
  }

  check_counts(g, g.rho, g.n_lines, g.gamma);
  return g;
}

SparseBinaryMatrix incidence_matrix(const Geometry& g) {
  SparseBinaryMatrix m(0, g.n_points);
  for (const auto& line : g.lines) m.append_row(line);
  return m;
}

}  // namespace pufsketch
