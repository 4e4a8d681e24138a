#include "qnc/ansatz.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qnc {

RyRzSpec RyRzSpec::random(int qubits, int blocks, std::uint64_t seed, bool fan_in) {
  RyRzSpec s;
  s.qubits = qubits;
  s.blocks = blocks;
  s.seed = seed;
  s.fan_in = fan_in;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
  s.angles.resize(s.angle_count());
  for (double& a : s.angles) a = uni(rng);
  return s;
}

QCircuit gen_ryrz(const RyRzSpec& spec) {
  if (spec.qubits < 1 || spec.blocks < 0)
    throw std::invalid_argument("gen_ryrz: bad shape");
  if (spec.angles.size() != spec.angle_count())
    throw std::invalid_argument("gen_ryrz: angle count must be 2*m*(blocks+1)");

  const int m = spec.qubits;
  QCircuit c(m, "ryrz_m" + std::to_string(m) + "_b" + std::to_string(spec.blocks));
  std::size_t a = 0;
  auto rotation_pair = [&] {
    for (int q = 0; q < m; ++q) c.add(Gate::ry(q, spec.angles[a + q]));
    for (int q = 0; q < m; ++q) c.add(Gate::rz(q, spec.angles[a + m + q]));
    a += 2 * static_cast<std::size_t>(m);
  };

  rotation_pair();
  for (int b = 0; b < spec.blocks; ++b) {
    if (spec.fan_in) {
      for (int t = 1; t < m; ++t)
        for (int i = 0; i < t; ++i) c.add(Gate::cx(i, t));
    } else {
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) c.add(Gate::cx(i, j));
    }
    rotation_pair();
  }
  return c;
}

}  // namespace qnc
