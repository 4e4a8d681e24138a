#include "qnc/cascade.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qnc {

namespace {

bool is_plain_1q(const Gate& g) {
  return g.arity() == 1 && g.kind != GateKind::Barrier && g.kind != GateKind::Measure;
}

}  // namespace

std::optional<CascadeMatch> check_cascade(const QCircuit& c, const LayeredView& lv,
                                          int start, CascadeDir dir,
                                          const std::vector<char>* consumed) {
  const auto& gs = c.gates();
  if (start < 0 || start >= static_cast<int>(gs.size()) || !gs[start].is_cx())
    throw std::invalid_argument("check_cascade: anchor must be a CX gate");

  const bool inv = dir == CascadeDir::Inverted;
  const Gate& anchor = gs[start];
  const int shared = inv ? anchor.control() : anchor.target();
  const int first = inv ? anchor.target() : anchor.control();

  CascadeMatch m;
  m.anchor = start;
  m.inverted = inv;
  m.target = shared;
  m.ctrls.push_back(first);
  m.skip.push_back(start);

  std::set<int> used = {shared, first};
  std::set<int> off_limits;
  const int max_layer = lv.layer_of[start] + 2 * c.num_qubits();

  for (int gi = start + 1; gi < static_cast<int>(gs.size()); ++gi) {
    if (consumed && (*consumed)[gi]) continue;
    if (lv.layer_of[gi] >= max_layer) break;
    const Gate& g = gs[gi];

    if (g.is_cx()) {
      const int gc = inv ? g.target() : g.control();
      const int gt = inv ? g.control() : g.target();
      if (gc == shared) break;  // anchor re-used in the opposite role
      if (off_limits.count(gc) || off_limits.count(gt)) {
        off_limits.insert(gc);
        off_limits.insert(gt);
        used.insert(gc);
        used.insert(gt);
        continue;
      }
      if (gt == shared && !used.count(gc)) {
        m.ctrls.push_back(gc);
        used.insert(gc);
        m.skip.push_back(gi);
        continue;
      }
      if (gt != shared && gc != shared) {
        off_limits.insert(gc);
        off_limits.insert(gt);
        used.insert(gc);
        used.insert(gt);
        continue;
      }
      break;  // gt == shared with a control already used
    }

    if (is_plain_1q(g)) {
      const int q = g.q[0];
      if (off_limits.count(q)) continue;
      if (q == shared) {
        m.after.push_back(gi);
        m.skip.push_back(gi);
        break;
      }
      if (!used.count(q)) {
        m.before.push_back(gi);
        m.skip.push_back(gi);
      } else {
        m.after.push_back(gi);
        m.skip.push_back(gi);
      }
      continue;
    }

    // Barrier, measure, swap, opaque two-qubit: blocking.
    bool hits_shared = false;
    for (int k = 0; k < g.arity(); ++k) {
      if (g.q[k] == shared) hits_shared = true;
      off_limits.insert(g.q[k]);
      used.insert(g.q[k]);
    }
    if (hits_shared) break;
  }

  if (m.ctrls.size() < 2) return std::nullopt;
  std::sort(m.ctrls.begin(), m.ctrls.end());
  std::sort(m.skip.begin(), m.skip.end());
  return m;
}

std::vector<Gate> nn_decompose(const CascadeMatch& m) {
  if (m.ctrls.size() < 2)
    throw std::invalid_argument("nn_decompose: cascade needs at least two controls");
  const std::vector<int>& q = m.ctrls;  // sorted
  const int t = m.target;
  std::vector<Gate> out;

  auto sweep = [&out](const std::vector<int>& chain, int tgt) {
    // chain runs from the far end toward tgt's neighbor
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      out.push_back(Gate::cx(chain[i], chain[i + 1]));
    out.push_back(Gate::cx(chain.back(), tgt));
  };
  auto unsweep = [&out](const std::vector<int>& chain) {
    for (std::size_t i = chain.size() - 1; i-- > 0;)
      out.push_back(Gate::cx(chain[i], chain[i + 1]));
  };

  if (t > q.back()) {
    sweep(q, t);
    unsweep(q);
  } else if (t < q.front()) {
    std::vector<int> rev(q.rbegin(), q.rend());
    sweep(rev, t);
    unsweep(rev);
  } else {
    // Target strictly inside the sorted interval: gather parity from both
    // sides (2k-2 gates).
    std::vector<int> lo, hi;
    for (int x : q) (x < t ? lo : hi).push_back(x);
    std::vector<int> hi_rev(hi.rbegin(), hi.rend());
    for (std::size_t i = 0; i + 1 < lo.size(); ++i)
      out.push_back(Gate::cx(lo[i], lo[i + 1]));
    for (std::size_t i = 0; i + 1 < hi_rev.size(); ++i)
      out.push_back(Gate::cx(hi_rev[i], hi_rev[i + 1]));
    out.push_back(Gate::cx(lo.back(), t));
    out.push_back(Gate::cx(hi_rev.back(), t));
    for (std::size_t i = hi_rev.size() - 1; i-- > 0;)
      out.push_back(Gate::cx(hi_rev[i], hi_rev[i + 1]));
    for (std::size_t i = lo.size() - 1; i-- > 0;)
      out.push_back(Gate::cx(lo[i], lo[i + 1]));
  }
  return out;
}

std::vector<Gate> replacement_region(const QCircuit& c, const CascadeMatch& m) {
  std::vector<Gate> out;
  for (int gi : m.before) out.push_back(c[gi]);

  std::vector<int> members = m.ctrls;
  members.push_back(m.target);
  std::sort(members.begin(), members.end());

  if (m.inverted)
    for (int q : members) out.push_back(Gate::h(q));
  if (m.ctrls.size() >= 2) {
    for (Gate& g : nn_decompose(m)) out.push_back(std::move(g));
  } else {
    // Degenerate single-CX region: the cascade is one gate, flipped by the
    // walls when inverted.
    out.push_back(Gate::cx(m.ctrls[0], m.target));
  }
  if (m.inverted)
    for (int q : members) out.push_back(Gate::h(q));

  for (int gi : m.after) out.push_back(c[gi]);
  return out;
}

QCircuit invert_cascade_region(const QCircuit& c, const CascadeMatch& m) {
  QCircuit out(c.num_qubits(), c.name());
  if (m.ctrls.empty()) return c;
  std::vector<char> in_region(c.size(), 0);
  for (int gi : m.skip) in_region[gi] = 1;
  bool emitted = false;
  for (std::size_t gi = 0; gi < c.size(); ++gi) {
    if (!in_region[gi]) {
      out.add(c[gi]);
      continue;
    }
    if (!emitted) {
      for (Gate& g : replacement_region(c, m)) out.add(std::move(g));
      emitted = true;
    }
  }
  return out;
}

QCircuit patterns(const QCircuit& c) {
  const LayeredView lv = layers(c);
  std::vector<char> consumed(c.size(), 0);
  QCircuit out(c.num_qubits(), c.name());

  for (std::size_t gi = 0; gi < c.size(); ++gi) {
    if (consumed[gi]) continue;
    const Gate& g = c[gi];
    if (!g.is_cx()) {
      out.add(g);
      continue;
    }

    auto plain = check_cascade(c, lv, static_cast<int>(gi), CascadeDir::Plain, &consumed);
    auto inv = check_cascade(c, lv, static_cast<int>(gi), CascadeDir::Inverted, &consumed);
    const CascadeMatch* best = nullptr;
    if (plain) best = &*plain;
    if (inv && (!best || inv->ctrls.size() > best->ctrls.size())) best = &*inv;

    if (!best) {
      out.add(g);
      continue;
    }
    for (Gate& r : replacement_region(c, *best)) out.add(std::move(r));
    for (int s : best->skip) consumed[s] = 1;
  }
  return out;
}

}  // namespace qnc
