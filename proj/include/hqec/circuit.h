// Copyright 2026 The hybridqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hqec/pauli.h"
#include "hqec/state.h"

namespace hqec {

enum class GateKind { H, X, Y, Z, CNOT, CZ, CY };

std::string_view to_string(GateKind kind);
bool is_controlled(GateKind kind);

/// Wires are 1-based. Controlled kinds apply their single-qubit action to
/// `target` when `control` is |1>.
struct Gate {
  GateKind kind;
  std::size_t target;
  std::optional<std::size_t> control;

  /// "CNOT 1 2" (kind, target, control).
  std::string str() const;
  friend bool operator==(const Gate&, const Gate&) = default;
};

/// 2x2 matrix for single-qubit kinds, 4x4 (control = high bit) for
/// controlled kinds.
Eigen::MatrixXcd gate_matrix(GateKind kind);

class Circuit {
 public:
  explicit Circuit(std::size_t wires, std::vector<Gate> gates = {});

  std::size_t num_wires() const { return wires_; }
  const std::vector<Gate>& gates() const { return gates_; }

  Circuit& append(Gate gate);
  Circuit& append(const Circuit& other);
  /// Reversed gate order; every supported kind is self-inverse.
  Circuit inverse() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t wires_;
  std::vector<Gate> gates_;
};

/// Applies the gates in order. Throws DimensionError if the state and
/// circuit sizes differ.
StateVector simulate(const Circuit& c, const StateVector& s);

/// Dense unitary of the whole circuit (columns are images of basis states).
Operator circuit_unitary(const Circuit& c);

/// Text form: header `wires <n>`, then one `<KIND> <target> [<control>]`
/// per line; '#' comments.
std::string serialize_circuit(const Circuit& c);
Circuit parse_circuit(std::string_view text);

/// If `u` equals a Pauli string up to tolerance, returns it (with phase).
std::optional<PauliString> identify_pauli(const Operator& u, double tolerance = kUserTolerance);

/// Wire roles of the [[4,1:1,2]] encoder: wires 1 and 3 start in |0>,
/// wire 2 carries the quantum input, wire 4 the classical bit.
inline constexpr std::size_t kQuantumInputWire = 2;
inline constexpr std::size_t kClassicalInputWire = 4;
inline constexpr std::size_t kAncillaWires[2] = {1, 3};

/// The standard encoder of the [[4,1:1,2]] code, gate for gate.
Circuit encode_circuit();

/// Reference decoder for an error at `location` (1..4), gate for gate as
/// published. The first eight gates are encode_circuit().inverse().
Circuit decode_circuit(std::size_t location);

/// Decoder derived from the encoder: the inverse encoder followed by
/// syndrome-controlled Pauli corrections that undo X, Y and Z at
/// `location`. The syndrome is left on the ancilla wires.
Circuit synthesized_decode_circuit(std::size_t location);

enum class DecoderVariant { kPublished, kSynthesized };
std::string_view to_string(DecoderVariant variant);
Circuit decoder(std::size_t location, DecoderVariant variant);

/// |0>|q>|0>|c> in encoder wire order.
StateVector encoder_input(const StateVector& q, int c);

struct OutputWires {
  std::size_t quantum;
  std::size_t classical;
  friend bool operator==(const OutputWires&, const OutputWires&) = default;
};

/// The first (quantum, classical) wire pair on which `decoder` returns q
/// and c with no error, over q in {0, 1, +, +i} and c in {0, 1}. nullopt
/// if no pair works.
std::optional<OutputWires> discover_output_wires(const Circuit& decoder);

struct RoundTripReport {
  PauliString error;
  std::size_t location = 0;
  std::string input_q;
  int input_c = 0;
  /// <q| rho_wire |q> on the quantum output wire.
  double fidelity_q = 0;
  /// Probability of reading input_c on the classical output wire.
  double classical_probability = 0;
  bool classical_ok = false;
  OutputWires output_wires{kQuantumInputWire, kClassicalInputWire};
  /// False when discover_output_wires failed and the input wires were
  /// used instead.
  bool wires_discovered = false;

  bool passed() const;
};

/// Encode, apply `error`, decode with the variant's circuit for `location`,
/// and read the outputs. `error` must have weight <= 1 and, when nontrivial,
/// act on `location`; `q_name` is one of "0", "1", "+", "-", "+i", "-i".
RoundTripReport roundtrip(std::string_view q_name, int c, const PauliString& error, std::size_t location,
                          DecoderVariant variant = DecoderVariant::kSynthesized);

/// Every single-qubit X/Y/Z error at every location against q in
/// {0, 1, +} and c in {0, 1}: 72 reports ordered by (location, letter, q, c).
std::vector<RoundTripReport> roundtrip_sweep(DecoderVariant variant);

/// Human-readable comparison of the published and synthesized decoders:
/// per location, the differing correction gates and the failing sweep cases.
std::string decoder_discrepancy_report();

}  // namespace hqec
