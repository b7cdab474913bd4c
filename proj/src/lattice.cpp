#include "torusmaps/lattice.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace torusmaps {

const char* ring_name(Ring r) {
  return r == Ring::Eisenstein ? "eisenstein" : "gaussian";
}

LatticePoint rotate_once(Ring r, LatticePoint p) {
  if (r == Ring::Eisenstein) return {-p.b, p.a + p.b};  // zeta * (a + b*zeta)
  return {-p.b, p.a};                                   // i * (a + b*i)
}

LatticePoint rotate(Ring r, int k, LatticePoint p) {
  const int n = rotation_order(r);
  k %= n;
  if (k < 0) k += n;
  for (int i = 0; i < k; ++i) p = rotate_once(r, p);
  return p;
}

std::array<LatticePoint, 6> ring_units(Ring r) {
  std::array<LatticePoint, 6> u{};
  LatticePoint p{1, 0};
  for (int k = 0; k < rotation_order(r); ++k) {
    u[k] = p;
    p = rotate_once(r, p);
  }
  return u;
}

int unit_index(Ring r, LatticePoint p) {
  const auto u = ring_units(r);
  for (int k = 0; k < rotation_order(r); ++k)
    if (u[k] == p) return k;
  return -1;
}

std::int64_t det2(LatticePoint u, LatticePoint v) { return u.a * v.b - u.b * v.a; }

std::string to_string(LatticePoint p) {
  std::ostringstream os;
  os << "(" << p.a << "," << p.b << ")";
  return os.str();
}

LatticeMotion motion_identity(Ring r) { return {r, 0, {0, 0}}; }

LatticeMotion make_motion(Ring r, int rot, LatticePoint trans) {
  const int n = rotation_order(r);
  rot %= n;
  if (rot < 0) rot += n;
  return {r, rot, trans};
}

LatticeMotion compose(const LatticeMotion& m1, const LatticeMotion& m2) {
  assert(m1.ring == m2.ring);
  return make_motion(m1.ring, m1.rot + m2.rot, m1.trans + rotate(m1.ring, m1.rot, m2.trans));
}

LatticeMotion inverse(const LatticeMotion& m) {
  return make_motion(m.ring, -m.rot, -rotate(m.ring, -m.rot, m.trans));
}

LatticePoint apply(const LatticeMotion& m, LatticePoint p) {
  return rotate(m.ring, m.rot, p) + m.trans;
}

bool operator==(const LatticeMotion& x, const LatticeMotion& y) {
  return x.ring == y.ring && x.rot == y.rot && x.trans == y.trans;
}

std::string to_string(const LatticeMotion& m) {
  std::ostringstream os;
  os << "rot=" << m.rot << "/" << rotation_order(m.ring) << " trans=" << to_string(m.trans);
  return os.str();
}

LatticePoint burgers_canonical(Ring r, LatticePoint t) {
  LatticePoint best = t;
  LatticePoint cur = t;
  for (int k = 1; k < rotation_order(r); ++k) {
    cur = rotate_once(r, cur);
    if (cur.a < best.a || (cur.a == best.a && cur.b < best.b)) best = cur;
  }
  return best;
}

std::optional<LatticeBasisHNF> lattice_span(const std::vector<LatticePoint>& gens) {
  // Row-reduce over the integers: Euclid on the first coordinate, then gcd of
  // the remaining second coordinates, then normalize to Hermite form.
  std::vector<LatticePoint> rows;
  for (auto g : gens)
    if (!g.is_zero()) rows.push_back(g);
  if (rows.empty()) return std::nullopt;

  LatticePoint u{0, 0};  // the single row with nonzero first coordinate
  std::int64_t d2 = 0;   // gcd of second coordinates of rows with a == 0
  for (auto row : rows) {
    while (row.a != 0) {
      if (u.a == 0) {
        std::swap(u, row);
        continue;
      }
      const std::int64_t q = row.a / u.a;
      row = row - LatticePoint{q * u.a, q * u.b};
      if (row.a != 0) std::swap(u, row);
    }
    if (row.b != 0) d2 = d2 == 0 ? std::llabs(row.b) : [](std::int64_t x, std::int64_t y) {
      while (y) { x %= y; std::swap(x, y); }
      return x;
    }(d2, std::llabs(row.b));
  }
  if (u.a == 0 || d2 == 0) return std::nullopt;  // rank < 2

  if (u.a < 0) u = -u;
  std::int64_t e = u.b % d2;
  if (e < 0) e += d2;
  LatticeBasisHNF basis{{u.a, e}, {0, d2}, u.a * d2};
  return basis;
}

}  // namespace torusmaps
