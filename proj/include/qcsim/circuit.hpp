// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcsim/tensor.hpp"

namespace qcsim {

enum class GateKind { H, X, Y, Z, RX, RY, RZ, CX, CZ, CP, SWAP, U1, U2 };

const char* gate_kind_name(GateKind kind);
bool gate_kind_is_two_qubit(GateKind kind);
bool gate_kind_has_angle(GateKind kind);

// Classical condition: the gate fires only when classical bit `bit`
// holds `value`.
struct Condition {
  std::size_t bit = 0;
  int value = 0;

  bool operator==(const Condition&) const = default;
};

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<std::size_t> targets;  // 1 or 2 qubit indices
  double theta = 0.0;                // RX / RY / RZ / CP
  ComplexTensor matrix;              // U1: 2x2, U2: 4x4
  std::optional<Condition> condition;

  bool is_two_qubit() const { return targets.size() == 2; }

  // Dense unitary, 2x2 or 4x4. Two-qubit matrices are indexed with
  // targets[0] as the high bit: basis order |t0 t1> = 00, 01, 10, 11.
  ComplexTensor unitary() const;

  static Gate h(std::size_t q) { return simple(GateKind::H, q); }
  static Gate x(std::size_t q) { return simple(GateKind::X, q); }
  static Gate y(std::size_t q) { return simple(GateKind::Y, q); }
  static Gate z(std::size_t q) { return simple(GateKind::Z, q); }
  static Gate rx(double theta, std::size_t q);
  static Gate ry(double theta, std::size_t q);
  static Gate rz(double theta, std::size_t q);
  static Gate cx(std::size_t control, std::size_t target);
  static Gate cz(std::size_t a, std::size_t b);
  static Gate cp(double theta, std::size_t a, std::size_t b);
  static Gate swap(std::size_t a, std::size_t b);
  static Gate u1(ComplexTensor m, std::size_t q);
  static Gate u2(ComplexTensor m, std::size_t a, std::size_t b);

private:
  static Gate simple(GateKind kind, std::size_t q);
};

struct Measure {
  std::size_t qubit = 0;
  std::size_t cbit = 0;
};

struct MeasureAll {};

using CircuitOp = std::variant<Gate, Measure, MeasureAll>;

struct CircuitMetrics {
  std::size_t total_gates = 0;      // N_tot
  std::size_t two_qubit_gates = 0;  // N_2q
  double entanglement_ratio = 0.0;  // N_2q / N_tot
  std::size_t depth = 0;
};

class Circuit {
public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits, std::string name = "");

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<CircuitOp>& ops() const { return ops_; }

  void add(Gate gate);
  void add_measure(std::size_t qubit, std::size_t cbit);
  void add_measure_all();

  // 1 + highest classical bit index written by a Measure, 0 if none.
  std::size_t n_classical_bits() const;

  // True when a measurement is followed by any later gate; such circuits
  // force per-shot re-execution in both backends.
  bool has_mid_circuit_measurement() const;

  // Throws std::invalid_argument on the first violated invariant: gate
  // arity, index bounds, matrix unitarity, condition-before-measure.
  void validate() const;

  bool operator==(const Circuit& other) const;

  std::string name;
  std::map<std::string, double> params;

private:
  std::size_t n_qubits_ = 0;
  std::vector<CircuitOp> ops_;
};

// Gate counts and entanglement ratio. Unitary gates always count toward
// N_tot; measurements count only when mid-circuit, which keeps GHZ at n and
// quantum volume at n^2/2 while the counterfeit-coin circuit lands on 4n-1.
CircuitMetrics metrics(const Circuit& circuit);

Circuit build_ghz(std::size_t n);

Circuit build_qft(std::size_t n,
                  const std::optional<std::string>& input_bits = std::nullopt,
                  bool include_swaps = false);

Circuit build_quantum_volume(std::size_t n, std::uint64_t seed);

Circuit build_qaoa(std::size_t n, std::uint64_t seed);

Circuit build_counterfeit_coin(std::size_t n, std::size_t counterfeit_index);

} // namespace qcsim
