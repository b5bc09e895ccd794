// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcsim/circuit.hpp"
#include "qcsim/rng.hpp"
#include "qcsim/util.hpp"

namespace qcsim {

struct SampleResult {
  std::map<std::string, std::uint64_t> histogram;  // MSB-first outcome keys
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

// Exact 2^n-amplitude simulator. Serves as the correctness oracle for the
// MPS backend. Qubit 0 is the least significant bit of a basis index.
class StateVector {
public:
  StateVector(std::size_t n_qubits,
              std::uint64_t memory_guard_bytes = default_memory_guard());

  static std::uint64_t required_bytes(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<complex_t>& amplitudes() const { return amps_; }
  std::vector<complex_t>& amplitudes() { return amps_; }

  void apply(const Gate& gate);

  // Projective measurement with collapse; records the outcome in the
  // classical register and returns it.
  int measure(std::size_t qubit, std::size_t cbit, Rng& rng);

  double norm() const;

  int classical_bit(std::size_t cbit) const;
  void ensure_classical_bits(std::size_t count);

private:
  void apply_one_qubit(const ComplexTensor& u, std::size_t q);
  void apply_two_qubit(const ComplexTensor& u, std::size_t a, std::size_t b);
  bool condition_holds(const Gate& gate) const;

  std::size_t n_qubits_ = 0;
  std::vector<complex_t> amps_;
  std::vector<int> classical_bits_;  // -1 = unwritten
};

// Executes the full op list (measurements collapse) and returns the state.
StateVector sv_run(const Circuit& circuit, Rng& rng,
                   std::uint64_t memory_guard_bytes = default_memory_guard());

// 1024-shot style sampling of the full register. Circuits without
// mid-circuit measurement are simulated once and sampled from the final
// distribution; conditional circuits re-execute per shot.
SampleResult sv_sample(const Circuit& circuit, std::uint64_t shots,
                       std::uint64_t seed,
                       std::uint64_t memory_guard_bytes = default_memory_guard());

// Exact outcome distribution; rejects circuits with mid-circuit measurement.
std::vector<double> sv_probabilities(
    const Circuit& circuit,
    std::uint64_t memory_guard_bytes = default_memory_guard());

} // namespace qcsim
