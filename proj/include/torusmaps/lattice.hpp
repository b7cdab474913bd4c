#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Exact plane isometries over the two rings that carry the regular tilings:
// Eisenstein integers a + b*zeta (zeta = exp(i*pi/3), zeta^2 = zeta - 1) for
// the triangular and hexagonal tilings, Gaussian integers a + b*i for the
// square tiling.  Rotations are restricted to the N-th roots of unity
// (N = 6 or 4), so every quantity in this header is an integer.

namespace torusmaps {

enum class Ring : std::uint8_t { Eisenstein, Gaussian };

constexpr int rotation_order(Ring r) { return r == Ring::Eisenstein ? 6 : 4; }

const char* ring_name(Ring r);

struct LatticePoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.a + q.a, p.b + q.b}; }
  friend LatticePoint operator-(LatticePoint p, LatticePoint q) { return {p.a - q.a, p.b - q.b}; }
  LatticePoint operator-() const { return {-a, -b}; }
  friend bool operator==(LatticePoint p, LatticePoint q) { return p.a == q.a && p.b == q.b; }
  friend bool operator!=(LatticePoint p, LatticePoint q) { return !(p == q); }
  bool is_zero() const { return a == 0 && b == 0; }
};

// Multiplication by the primitive root of unity (zeta resp. i).
LatticePoint rotate_once(Ring r, LatticePoint p);

// Multiplication by the k-th power of the primitive root; k may be negative.
LatticePoint rotate(Ring r, int k, LatticePoint p);

// The N units of the ring in rotation order: rotate(r, k, {1,0}).
std::array<LatticePoint, 6> ring_units(Ring r);  // entries past N are unused

// Index k with unit == rotate(r, k, {1,0}), or -1 if not a unit.
int unit_index(Ring r, LatticePoint p);

std::int64_t det2(LatticePoint u, LatticePoint v);

std::string to_string(LatticePoint p);

// Orientation-preserving lattice motion p |-> zeta^rot * p + trans.
struct LatticeMotion {
  Ring ring = Ring::Eisenstein;
  int rot = 0;  // 0 .. N-1
  LatticePoint trans;

  bool is_identity() const { return rot == 0 && trans.is_zero(); }
  bool is_translation() const { return rot == 0; }
};

LatticeMotion motion_identity(Ring r);
LatticeMotion make_motion(Ring r, int rot, LatticePoint trans);

// compose(m1, m2) applies m2 first, then m1.
LatticeMotion compose(const LatticeMotion& m1, const LatticeMotion& m2);
LatticeMotion inverse(const LatticeMotion& m);
LatticePoint apply(const LatticeMotion& m, LatticePoint p);

bool operator==(const LatticeMotion& x, const LatticeMotion& y);
inline bool operator!=(const LatticeMotion& x, const LatticeMotion& y) { return !(x == y); }

std::string to_string(const LatticeMotion& m);

// Burgers vectors are defined up to multiplication by an N-th root of unity;
// the canonical representative is the rotate of t with lexicographically
// least (a, b).
LatticePoint burgers_canonical(Ring r, LatticePoint t);

// Hermite-form basis of the sublattice generated by the given vectors:
// u = (d1, e), v = (0, d2) with d1, d2 > 0 and 0 <= e < d2.  Empty when the
// generators span less than a rank-2 lattice.
struct LatticeBasisHNF {
  LatticePoint u, v;
  std::int64_t det = 0;  // d1 * d2 = index in Z^2
};
std::optional<LatticeBasisHNF> lattice_span(const std::vector<LatticePoint>& gens);

}  // namespace torusmaps
