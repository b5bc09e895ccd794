// SPDX-License-Identifier: Apache-2.0
#include "qcsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcsim {

namespace {

constexpr complex_t kI{0.0, 1.0};

ComplexTensor matrix2(complex_t a, complex_t b, complex_t c, complex_t d) {
  return ComplexTensor::matrix(2, 2, {a, b, c, d});
}

bool is_unitary(const ComplexTensor& m, double tol) {
  const std::size_t d = m.extent(0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      complex_t dot = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        dot += std::conj(m[k * d + r]) * m[k * d + c];
      }
      const complex_t expected = r == c ? complex_t(1.0) : complex_t(0.0);
      if (std::abs(dot - expected) > tol) {
        return false;
      }
    }
  }
  return true;
}

} // namespace

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::CP: return "cp";
    case GateKind::SWAP: return "swap";
    case GateKind::U1: return "u1";
    case GateKind::U2: return "u2";
  }
  return "?";
}

bool gate_kind_is_two_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CP:
    case GateKind::SWAP:
    case GateKind::U2:
      return true;
    default:
      return false;
  }
}

bool gate_kind_has_angle(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CP:
      return true;
    default:
      return false;
  }
}

Gate Gate::simple(GateKind kind, std::size_t q) {
  Gate g;
  g.kind = kind;
  g.targets = {q};
  return g;
}

Gate Gate::rx(double theta, std::size_t q) {
  Gate g = simple(GateKind::RX, q);
  g.theta = theta;
  return g;
}

Gate Gate::ry(double theta, std::size_t q) {
  Gate g = simple(GateKind::RY, q);
  g.theta = theta;
  return g;
}

Gate Gate::rz(double theta, std::size_t q) {
  Gate g = simple(GateKind::RZ, q);
  g.theta = theta;
  return g;
}

Gate Gate::cx(std::size_t control, std::size_t target) {
  Gate g;
  g.kind = GateKind::CX;
  g.targets = {control, target};
  return g;
}

Gate Gate::cz(std::size_t a, std::size_t b) {
  Gate g;
  g.kind = GateKind::CZ;
  g.targets = {a, b};
  return g;
}

Gate Gate::cp(double theta, std::size_t a, std::size_t b) {
  Gate g;
  g.kind = GateKind::CP;
  g.targets = {a, b};
  g.theta = theta;
  return g;
}

Gate Gate::swap(std::size_t a, std::size_t b) {
  Gate g;
  g.kind = GateKind::SWAP;
  g.targets = {a, b};
  return g;
}

Gate Gate::u1(ComplexTensor m, std::size_t q) {
  Gate g;
  g.kind = GateKind::U1;
  g.targets = {q};
  g.matrix = std::move(m);
  return g;
}

Gate Gate::u2(ComplexTensor m, std::size_t a, std::size_t b) {
  Gate g;
  g.kind = GateKind::U2;
  g.targets = {a, b};
  g.matrix = std::move(m);
  return g;
}

ComplexTensor Gate::unitary() const {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const double half = theta / 2.0;
  switch (kind) {
    case GateKind::H:
      return matrix2(inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
    case GateKind::X:
      return matrix2(0.0, 1.0, 1.0, 0.0);
    case GateKind::Y:
      return matrix2(0.0, -kI, kI, 0.0);
    case GateKind::Z:
      return matrix2(1.0, 0.0, 0.0, -1.0);
    case GateKind::RX:
      return matrix2(std::cos(half), -kI * std::sin(half),
                     -kI * std::sin(half), std::cos(half));
    case GateKind::RY:
      return matrix2(std::cos(half), -std::sin(half), std::sin(half),
                     std::cos(half));
    case GateKind::RZ:
      return matrix2(std::exp(-kI * half), 0.0, 0.0, std::exp(kI * half));
    case GateKind::CX:
      return ComplexTensor::matrix(4, 4,
                                   {1, 0, 0, 0,  //
                                    0, 1, 0, 0,  //
                                    0, 0, 0, 1,  //
                                    0, 0, 1, 0});
    case GateKind::CZ:
      return ComplexTensor::matrix(4, 4,
                                   {1, 0, 0, 0,  //
                                    0, 1, 0, 0,  //
                                    0, 0, 1, 0,  //
                                    0, 0, 0, -1});
    case GateKind::CP: {
      ComplexTensor m({4, 4});
      m[0] = m[5] = m[10] = 1.0;
      m[15] = std::exp(kI * theta);
      return m;
    }
    case GateKind::SWAP:
      return ComplexTensor::matrix(4, 4,
                                   {1, 0, 0, 0,  //
                                    0, 0, 1, 0,  //
                                    0, 1, 0, 0,  //
                                    0, 0, 0, 1});
    case GateKind::U1:
    case GateKind::U2:
      return matrix;
  }
  throw std::logic_error("unknown gate kind");
}

Circuit::Circuit(std::size_t n_qubits, std::string circuit_name)
    : name(std::move(circuit_name)), n_qubits_(n_qubits) {
  if (n_qubits == 0) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
}

void Circuit::add(Gate gate) { ops_.emplace_back(std::move(gate)); }

void Circuit::add_measure(std::size_t qubit, std::size_t cbit) {
  ops_.emplace_back(Measure{qubit, cbit});
}

void Circuit::add_measure_all() { ops_.emplace_back(MeasureAll{}); }

std::size_t Circuit::n_classical_bits() const {
  std::size_t n = 0;
  for (const CircuitOp& op : ops_) {
    if (const auto* m = std::get_if<Measure>(&op)) {
      n = std::max(n, m->cbit + 1);
    }
  }
  return n;
}

bool Circuit::has_mid_circuit_measurement() const {
  bool seen_measure = false;
  for (const CircuitOp& op : ops_) {
    if (std::holds_alternative<Measure>(op) ||
        std::holds_alternative<MeasureAll>(op)) {
      seen_measure = true;
    } else if (seen_measure) {
      return true;
    }
  }
  return false;
}

void Circuit::validate() const {
  std::vector<bool> written(n_classical_bits(), false);
  for (const CircuitOp& op : ops_) {
    if (const auto* g = std::get_if<Gate>(&op)) {
      const bool two = gate_kind_is_two_qubit(g->kind);
      if (g->targets.size() != (two ? 2u : 1u)) {
        throw std::invalid_argument(std::string("gate arity mismatch for ") +
                                    gate_kind_name(g->kind));
      }
      for (std::size_t q : g->targets) {
        if (q >= n_qubits_) {
          throw std::invalid_argument("gate qubit index out of range");
        }
      }
      if (two && g->targets[0] == g->targets[1]) {
        throw std::invalid_argument("two-qubit gate targets must be distinct");
      }
      if (g->kind == GateKind::U1 || g->kind == GateKind::U2) {
        const std::size_t dim = g->kind == GateKind::U1 ? 2 : 4;
        if (g->matrix.shape() != std::vector<std::size_t>{dim, dim}) {
          throw std::invalid_argument("custom gate matrix has wrong shape");
        }
        if (!is_unitary(g->matrix, 1e-10)) {
          throw std::invalid_argument("custom gate matrix is not unitary");
        }
      }
      if (g->condition) {
        if (g->condition->value != 0 && g->condition->value != 1) {
          throw std::invalid_argument("condition value must be 0 or 1");
        }
        if (g->condition->bit >= written.size() ||
            !written[g->condition->bit]) {
          throw std::invalid_argument(
              "gate condition references a classical bit not yet measured");
        }
      }
    } else if (const auto* m = std::get_if<Measure>(&op)) {
      if (m->qubit >= n_qubits_) {
        throw std::invalid_argument("measure qubit index out of range");
      }
      written[m->cbit] = true;
    }
  }
}

bool Circuit::operator==(const Circuit& other) const {
  if (n_qubits_ != other.n_qubits_ || ops_.size() != other.ops_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const CircuitOp& a = ops_[i];
    const CircuitOp& b = other.ops_[i];
    if (a.index() != b.index()) {
      return false;
    }
    if (const auto* ga = std::get_if<Gate>(&a)) {
      const auto* gb = std::get_if<Gate>(&b);
      if (ga->kind != gb->kind || ga->targets != gb->targets ||
          ga->theta != gb->theta || ga->condition != gb->condition ||
          ga->matrix.shape() != gb->matrix.shape() ||
          ga->matrix.data() != gb->matrix.data()) {
        return false;
      }
    } else if (const auto* ma = std::get_if<Measure>(&a)) {
      const auto* mb = std::get_if<Measure>(&b);
      if (ma->qubit != mb->qubit || ma->cbit != mb->cbit) {
        return false;
      }
    }
  }
  return true;
}

CircuitMetrics metrics(const Circuit& circuit) {
  CircuitMetrics m;

  std::size_t last_gate_pos = 0;
  bool any_gate = false;
  const auto& ops = circuit.ops();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (std::holds_alternative<Gate>(ops[i])) {
      last_gate_pos = i;
      any_gate = true;
    }
  }

  std::vector<std::size_t> qubit_level(circuit.n_qubits(), 0);
  std::vector<std::size_t> cbit_level(circuit.n_classical_bits(), 0);

  auto advance_depth = [&](const std::vector<std::size_t>& qubits,
                           const std::optional<std::size_t>& cbit_read,
                           const std::optional<std::size_t>& cbit_write) {
    std::size_t level = 0;
    for (std::size_t q : qubits) {
      level = std::max(level, qubit_level[q]);
    }
    if (cbit_read && *cbit_read < cbit_level.size()) {
      level = std::max(level, cbit_level[*cbit_read]);
    }
    ++level;
    for (std::size_t q : qubits) {
      qubit_level[q] = level;
    }
    if (cbit_write && *cbit_write < cbit_level.size()) {
      cbit_level[*cbit_write] = level;
    }
    m.depth = std::max(m.depth, level);
  };

  for (std::size_t i = 0; i < ops.size(); ++i) {
    const CircuitOp& op = ops[i];
    if (const auto* g = std::get_if<Gate>(&op)) {
      ++m.total_gates;
      if (g->is_two_qubit()) {
        ++m.two_qubit_gates;
      }
      std::optional<std::size_t> read;
      if (g->condition) {
        read = g->condition->bit;
      }
      advance_depth(g->targets, read, std::nullopt);
    } else if (const auto* meas = std::get_if<Measure>(&op)) {
      const bool mid_circuit = any_gate && i < last_gate_pos;
      if (mid_circuit) {
        ++m.total_gates;
      }
      advance_depth({meas->qubit}, std::nullopt, meas->cbit);
    } else {
      const bool mid_circuit = any_gate && i < last_gate_pos;
      if (mid_circuit) {
        ++m.total_gates;
      }
      std::vector<std::size_t> all(circuit.n_qubits());
      for (std::size_t q = 0; q < all.size(); ++q) {
        all[q] = q;
      }
      advance_depth(all, std::nullopt, std::nullopt);
    }
  }

  if (m.total_gates > 0) {
    m.entanglement_ratio = static_cast<double>(m.two_qubit_gates) /
                           static_cast<double>(m.total_gates);
  }
  return m;
}

Circuit build_ghz(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("GHZ circuit needs at least 2 qubits");
  }
  Circuit c(n, "ghz");
  c.add(Gate::h(0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    c.add(Gate::cx(i, i + 1));
  }
  return c;
}

Circuit build_qft(std::size_t n, const std::optional<std::string>& input_bits,
                  bool include_swaps) {
  if (n < 1) {
    throw std::invalid_argument("QFT circuit needs at least 1 qubit");
  }
  Circuit c(n, "qft");

  if (input_bits) {
    if (input_bits->size() != n) {
      throw std::invalid_argument("input bitstring length must equal qubit count");
    }
    // The string reads like the binary rendering of the prepared integer:
    // leftmost character is the most significant bit (qubit n-1).
    for (std::size_t j = 0; j < n; ++j) {
      const char bit = (*input_bits)[j];
      if (bit != '0' && bit != '1') {
        throw std::invalid_argument("input bitstring must be 0/1");
      }
      if (bit == '1') {
        c.add(Gate::x(n - 1 - j));
      }
    }
  }

  // Little-endian ladder: highest qubit first, controlled phases from the
  // lower qubits. With the terminal swap layer this realizes the DFT on
  // basis labels with qubit 0 as the least significant bit.
  for (std::size_t i = n; i-- > 0;) {
    c.add(Gate::h(i));
    for (std::size_t k = 1; k <= i; ++k) {
      const double angle = std::numbers::pi / static_cast<double>(1ull << k);
      c.add(Gate::cp(angle, i - k, i));
    }
  }

  if (include_swaps) {
    for (std::size_t i = 0; i < n / 2; ++i) {
      c.add(Gate::swap(i, n - 1 - i));
    }
  }
  return c;
}

Circuit build_quantum_volume(std::size_t n, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("quantum volume needs an even qubit count >= 2");
  }
  Circuit c(n, "quantum_volume");
  c.params["seed"] = static_cast<double>(seed);
  Rng rng(seed);
  for (std::size_t layer = 0; layer < n; ++layer) {
    const std::vector<std::size_t> perm = rng.permutation(n);
    for (std::size_t j = 0; j < n / 2; ++j) {
      c.add(Gate::u2(random_unitary(4, rng), perm[2 * j], perm[2 * j + 1]));
    }
  }
  return c;
}

Circuit build_qaoa(std::size_t n, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("QAOA circuit needs at least 2 qubits");
  }
  Circuit c(n, "qaoa");
  Rng rng(seed);
  const double two_pi = 2.0 * std::numbers::pi;
  const double gamma = rng.uniform(0.0, two_pi);
  const double beta = rng.uniform(0.0, two_pi);
  c.params["seed"] = static_cast<double>(seed);
  c.params["gamma"] = gamma;
  c.params["beta"] = beta;

  for (std::size_t q = 0; q < n; ++q) {
    c.add(Gate::h(q));
  }
  // Single layer on the complete graph; each ZZ term is the usual
  // CX - RZ - CX block with a seeded random weight.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double weight = rng.uniform(0.0, two_pi);
      c.add(Gate::cx(i, j));
      c.add(Gate::rz(2.0 * gamma * weight, j));
      c.add(Gate::cx(i, j));
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    c.add(Gate::rx(2.0 * beta, q));
  }
  return c;
}

Circuit build_counterfeit_coin(std::size_t n, std::size_t counterfeit_index) {
  if (n < 3) {
    throw std::invalid_argument("counterfeit coin needs at least 3 qubits");
  }
  if (counterfeit_index + 1 >= n) {
    throw std::invalid_argument("counterfeit index out of range");
  }
  Circuit c(n, "counterfeit_coin");
  c.params["counterfeit_index"] = static_cast<double>(counterfeit_index);
  const std::size_t ancilla = n - 1;
  const Condition if_zero{0, 0};

  for (std::size_t q = 0; q + 1 < n; ++q) {
    c.add(Gate::h(q));
  }
  for (std::size_t q = 0; q + 1 < n; ++q) {
    c.add(Gate::cx(q, ancilla));
  }
  c.add_measure(ancilla, 0);

  auto conditioned = [&](Gate g) {
    g.condition = if_zero;
    return g;
  };
  for (std::size_t q = 0; q + 1 < n; ++q) {
    c.add(conditioned(Gate::h(q)));
  }
  c.add(conditioned(Gate::x(ancilla)));
  c.add(conditioned(Gate::cx(counterfeit_index, ancilla)));
  for (std::size_t q = 0; q + 1 < n; ++q) {
    c.add(conditioned(Gate::h(q)));
  }
  return c;
}

} // namespace qcsim
