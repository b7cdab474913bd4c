#include "torusmaps/canonical.hpp"

#include <algorithm>

namespace torusmaps {

namespace {

// Relabel darts by BFS from `start`, visiting (sigma-or-inverse, twin) in that
// fixed order, then read the transition tables back in label order. The code
// depends only on the isomorphism class and the chosen start/handedness.
std::vector<int> encode_from(const SurfaceMap& m, const std::vector<Dart>& step,
                             Dart start, bool with_signs) {
  const int n = m.dart_count();
  std::vector<int> label(n, -1);
  std::vector<Dart> order;
  order.reserve(n);
  label[start] = 0;
  order.push_back(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Dart d = order[i];
    for (const Dart nb : {step[d], twin(d)}) {
      if (label[nb] < 0) {
        label[nb] = static_cast<int>(order.size());
        order.push_back(nb);
      }
    }
  }
  std::vector<int> code;
  code.reserve(order.size() * (with_signs ? 3 : 2));
  for (const Dart d : order) {
    code.push_back(label[step[d]]);
    code.push_back(label[twin(d)]);
    if (with_signs) code.push_back(m.sign_of_edge(d >> 1) < 0 ? 1 : 0);
  }
  return code;
}

std::vector<Dart> inverse_permutation(const std::vector<Dart>& p) {
  std::vector<Dart> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Dart>(i);
  return inv;
}

}  // namespace

CanonicalForm canonical_form(const SurfaceMap& m, bool include_reflection) {
  validate_map(m);
  if (!is_connected(m)) throw MapError("canonical_form expects a connected map");
  const bool with_signs = m.has_negative_sign();

  std::vector<int> best;
  if (m.edge_count > 0) {
    const std::vector<Dart> sigma_inv = inverse_permutation(m.sigma);
    for (int handed = 0; handed < (include_reflection ? 2 : 1); ++handed) {
      const std::vector<Dart>& step = handed ? sigma_inv : m.sigma;
      for (Dart start = 0; start < m.dart_count(); ++start) {
        std::vector<int> code = encode_from(m, step, start, with_signs);
        if (best.empty() || code < best) best = std::move(code);
      }
    }
  }

  CanonicalForm bytes;
  bytes.reserve(8 + best.size() * 4);
  const auto push32 = [&bytes](std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8)
      bytes.push_back(static_cast<std::uint8_t>((v >> s) & 0xff));
  };
  push32(static_cast<std::uint32_t>(m.edge_count));
  push32(with_signs ? 1u : 0u);
  for (const int v : best) push32(static_cast<std::uint32_t>(v));
  return bytes;
}

bool maps_isomorphic(const SurfaceMap& a, const SurfaceMap& b, bool include_reflection) {
  return canonical_form(a, include_reflection) == canonical_form(b, include_reflection);
}

}  // namespace torusmaps
